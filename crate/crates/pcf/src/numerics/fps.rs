use crate::{C64, PcfError};

/// Truncated formal power series in v = 1/u with complex coefficients
/// c0..cK for powers v^0..v^K.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalSeries {
    pub coeffs: Vec<C64>,
}

impl FormalSeries {
    pub fn new(coeffs: Vec<C64>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        FormalSeries { coeffs }
    }

    /// The zero series of order K.
    pub fn zero(order: usize) -> Self {
        FormalSeries { coeffs: vec![C64::new(0.0, 0.0); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient-wise sum, truncated to the smaller order.
    pub fn add(&self, other: &FormalSeries) -> FormalSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        FormalSeries {
            coeffs: (0..n).map(|k| self.coeffs[k] + other.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, other: &FormalSeries) -> FormalSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        FormalSeries {
            coeffs: (0..n).map(|k| self.coeffs[k] - other.coeffs[k]).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &FormalSeries) -> FormalSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![C64::new(0.0, 0.0); n];
        for i in 0..n {
            for j in 0..n - i {
                out[i + j] += self.coeffs[i] * other.coeffs[j];
            }
        }
        FormalSeries { coeffs: out }
    }

    pub fn neg(&self) -> FormalSeries {
        FormalSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// exp of a formal series with zero constant term, via the ODE
/// recurrence e' = e s' (m e_m = sum_{k=1}^{m} k s_k e_{m-k}), which is
/// numerically benign compared with term-by-term exponentiation.
pub fn fps_exp(s: &FormalSeries) -> Result<FormalSeries, PcfError> {
    if s.coeffs[0] != C64::new(0.0, 0.0) {
        return Err(PcfError::NonzeroConstantTerm);
    }
    let n = s.coeffs.len();
    let mut e = vec![C64::new(0.0, 0.0); n];
    e[0] = C64::new(1.0, 0.0);
    for m in 1..n {
        let mut acc = C64::new(0.0, 0.0);
        for k in 1..=m {
            acc += (k as f64) * s.coeffs[k] * e[m - k];
        }
        e[m] = acc / (m as f64);
    }
    Ok(FormalSeries { coeffs: e })
}

/// (cosh s, sinh s) as (exp(s)+exp(-s))/2 and (exp(s)-exp(-s))/2.
pub fn fps_cosh_sinh(s: &FormalSeries) -> Result<(FormalSeries, FormalSeries), PcfError> {
    let ep = fps_exp(s)?;
    let em = fps_exp(&s.neg())?;
    let half = C64::new(0.5, 0.0);
    let cosh = FormalSeries {
        coeffs: ep.coeffs.iter().zip(&em.coeffs).map(|(p, m)| (p + m) * half).collect(),
    };
    let sinh = FormalSeries {
        coeffs: ep.coeffs.iter().zip(&em.coeffs).map(|(p, m)| (p - m) * half).collect(),
    };
    Ok((cosh, sinh))
}
