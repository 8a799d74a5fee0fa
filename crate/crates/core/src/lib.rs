//! Exact verification toolkit for double octic Calabi-Yau threefolds.
//!
//! A double octic is the double cover `u^2 = f(x, y, z, t)` of P^3 branched
//! along a union of eight planes. This crate models such arrangements
//! (possibly in a one-parameter family over `(A : B)`), enumerates their
//! singular strata, analyses weighted projective involutions, certifies the
//! hypotheses that make the resolved quotient rigid, and counts points over
//! prime fields to compare Frobenius traces against cusp-form coefficients.
//!
//! The algebra is generic over [`Scalar`]; the aliases below fix the
//! instances used throughout.

pub mod algebra;
pub mod arrangement;
pub mod counting;
pub mod formats;
pub mod involution;
pub mod modforms;
pub mod scalar;

pub use algebra::{Mat4, MPoly, Mobius, RatFunc, Var};
pub use scalar::{Fp, Scalar};

/// Arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;
/// Polynomial with rational coefficients.
pub type QPoly = MPoly<Rat>;
/// Rational function over the rationals.
pub type QRatFunc = RatFunc<Rat>;
/// 4x4 matrix over the parameter ring `Q[A, B]`.
pub type PMatrix = Mat4<QPoly>;
/// 4x4 rational matrix.
pub type QMatrix = Mat4<Rat>;
/// Polynomial over a prime field.
pub type FpPoly = MPoly<Fp>;
