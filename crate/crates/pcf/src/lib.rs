//! Parabolic cylinder function U(a,z) for real order `a` and complex
//! argument `z`, targeting ~5e-13 relative accuracy over |a| <= 30,
//! |z| <= 30 (DLMF chapter 12 conventions).
//!
//! Four evaluation regimes are combined by [`dispatch::u_pcf`]:
//!
//! * Maclaurin series for small |z| (DLMF 12.4.1),
//! * a stabilized saddle-point integral for moderate |a| (DLMF 12.5.6),
//! * Airy-type uniform asymptotics for large |a|,
//! * the Poincare expansion for large |z| (DLMF 12.9.1),
//!
//! with Schwarz reflection and the connection formula (DLMF 12.2.19)
//! reducing the argument to the first quadrant.

pub mod dispatch;
pub mod integral;
pub mod maclaurin;
pub mod numerics;
pub mod poincare;
pub mod special;
pub mod uniform;
pub mod validate;

use std::fmt;

pub type C64 = num_complex::Complex64;

/// Library-wide error type. Most numerical kernels are total functions;
/// errors are reserved for contract violations and genuine failures.
#[derive(Debug, Clone, PartialEq)]
pub enum PcfError {
    /// Gamma evaluated at a non-positive integer.
    GammaPole(f64),
    /// Result magnitude exceeds the double-precision range.
    Overflow,
    /// Input outside the documented domain of the operation.
    Domain(&'static str),
    /// Iterative scheme failed to reach tolerance.
    NonConvergence(&'static str),
    /// Formal-series operation requires a zero constant term.
    NonzeroConstantTerm,
    /// Map evaluated too close to the turning point for beta/xi.
    SingularMap,
    /// Cauchy-kernel evaluation requested outside the contour.
    OutsideContour,
}

impl fmt::Display for PcfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PcfError::GammaPole(x) => write!(f, "gamma pole at x = {x}"),
            PcfError::Overflow => write!(f, "result overflows double precision"),
            PcfError::Domain(msg) => write!(f, "domain error: {msg}"),
            PcfError::NonConvergence(msg) => write!(f, "failed to converge: {msg}"),
            PcfError::NonzeroConstantTerm => {
                write!(f, "formal series must have zero constant term")
            }
            PcfError::SingularMap => write!(f, "map singular near the turning point"),
            PcfError::OutsideContour => write!(f, "point outside the coefficient contour"),
        }
    }
}

impl std::error::Error for PcfError {}

pub use dispatch::{connection_coefficient, select_method, u_pcf, EvalOptions, EvalResult, MethodTag};
pub use validate::{recurrence_residual, run_sweep, SweepConfig, SweepReport};
