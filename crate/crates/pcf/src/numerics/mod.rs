//! Foundational numeric utilities: truncated formal power series,
//! exact-rational polynomials, and adaptive trapezoid quadrature.

mod fps;
mod quad;
mod ratpoly;

pub use fps::{fps_cosh_sinh, fps_exp, FormalSeries};
pub use quad::{trapezoid_refine, QuadratureResult};
pub use ratpoly::{poly_int_poly, RationalPoly};
