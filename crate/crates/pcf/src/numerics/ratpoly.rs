use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial with exact rational coefficients, ascending powers.
/// All arithmetic is exact; rounding happens only on conversion to f64.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    pub coeffs: Vec<BigRational>,
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl RationalPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = RationalPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: vec![] }
    }

    pub fn from_i64(coeffs: &[(i64, i64)]) -> Self {
        RationalPoly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        RationalPoly::new(out)
    }

    pub fn mul(&self, other: &RationalPoly) -> RationalPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        RationalPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> RationalPoly {
        if self.coeffs.len() <= 1 {
            return RationalPoly::zero();
        }
        RationalPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * BigRational::from(BigInt::from(k as i64 + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut v = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            v = v * x + c;
        }
        v
    }

    /// Polynomial composed with -x; used by the parity tests.
    pub fn reflect(&self) -> RationalPoly {
        RationalPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }
}

/// Antiderivative P of p with P(lower) = 0.
pub fn poly_int_poly(p: &RationalPoly, lower: &BigRational) -> RationalPoly {
    let mut out = vec![BigRational::zero(); p.coeffs.len() + 1];
    for (k, c) in p.coeffs.iter().enumerate() {
        out[k + 1] = c / BigRational::from(BigInt::from(k as i64 + 1));
    }
    let prim = RationalPoly::new(out);
    let c0 = prim.eval(lower);
    let mut coeffs = prim.coeffs;
    if coeffs.is_empty() {
        coeffs.push(BigRational::zero());
    }
    coeffs[0] = -c0;
    RationalPoly::new(coeffs)
}

/// Correctly-rounded conversion (numerator/denominator can exceed f64
/// range, so naive to_f64 on each is not usable).
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    let num = r.numer().abs();
    let den = r.denom().abs();
    // scale into [2^52, 2^53) and round
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift = 53 - (nb - db); // approximate mantissa alignment
    let (scaled_num, scaled_den) = if shift >= 0 {
        (num << shift as u64, den.clone())
    } else {
        (num.clone(), den << (-shift) as u64)
    };
    let q = &scaled_num / &scaled_den;
    let rem = &scaled_num - &q * &scaled_den;
    // round half to even
    let twice = &rem * BigInt::from(2);
    let mut qi = q.clone();
    if twice > scaled_den || (twice == scaled_den && (&qi % BigInt::from(2)) == BigInt::one()) {
        qi += BigInt::one();
    }
    let mantissa_bits = qi.bits() as i64;
    // qi as f64 is exact when qi < 2^53; it can be 2^53 after rounding up
    let (mut m, mut e) = (qi, -shift);
    if mantissa_bits > 53 {
        m >>= 1;
        e += 1;
    }
    let mf = {
        let digits = m.to_u64_digits();
        match digits.len() {
            0 => 0.0,
            1 => digits[0] as f64,
            _ => unreachable!("mantissa fits 53 bits"),
        }
    };
    sign * mf * (e as f64).exp2()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integral_of_one_from_zero() {
        let p = RationalPoly::from_i64(&[(1, 1)]);
        let q = poly_int_poly(&p, &BigRational::zero());
        assert_eq!(q, RationalPoly::from_i64(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn integral_of_2x_from_one() {
        let p = RationalPoly::from_i64(&[(0, 1), (2, 1)]);
        let q = poly_int_poly(&p, &rat(1, 1));
        // x^2 - 1
        assert_eq!(q, RationalPoly::from_i64(&[(-1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn integral_of_quartic_from_zero() {
        // (p^2-1)^2 = p^4 - 2p^2 + 1 -> b^5/5 - 2b^3/3 + b
        let w = RationalPoly::from_i64(&[(1, 1), (0, 1), (-2, 1), (0, 1), (1, 1)]);
        let q = poly_int_poly(&w, &BigRational::zero());
        assert_eq!(
            q,
            RationalPoly::from_i64(&[(0, 1), (1, 1), (0, 1), (-2, 3), (0, 1), (1, 5)])
        );
    }

    #[test]
    fn exact_roundtrip_f64() {
        assert_eq!(rational_to_f64(&rat(1, 2)), 0.5);
        assert_eq!(rational_to_f64(&rat(-3, 4)), -0.75);
        assert_eq!(rational_to_f64(&rat(1, 3)), 1.0 / 3.0);
        assert_eq!(rational_to_f64(&rat(1105, 10368)), 1105.0 / 10368.0);
        assert_eq!(rational_to_f64(&rat(0, 5)), 0.0);
        // value needing bigint headroom: 10^40 / 3^40
        let big = BigRational::new(
            BigInt::from(10u8).pow(40),
            BigInt::from(3u8).pow(40),
        );
        let expect = (40.0 * (10.0f64).ln() - 40.0 * 3.0f64.ln()).exp();
        let got = rational_to_f64(&big);
        assert!((got - expect).abs() < 1e-10 * expect);
    }

    #[test]
    fn mul_add_derivative_consistency() {
        let p = RationalPoly::from_i64(&[(1, 2), (0, 1), (3, 1)]); // 1/2 + 3x^2
        let q = RationalPoly::from_i64(&[(0, 1), (1, 1)]); // x
        let pq = p.mul(&q); // x/2 + 3x^3
        assert_eq!(pq, RationalPoly::from_i64(&[(0, 1), (1, 2), (0, 1), (3, 1)]));
        let d = pq.derivative(); // 1/2 + 9x^2
        assert_eq!(d, RationalPoly::from_i64(&[(1, 2), (0, 1), (9, 1)]));
    }

    #[test]
    fn reflect_flips_odd_coeffs() {
        let p = RationalPoly::from_i64(&[(1, 1), (2, 1), (3, 1)]);
        let r = p.reflect();
        assert_eq!(r, RationalPoly::from_i64(&[(1, 1), (-2, 1), (3, 1)]));
    }
}
