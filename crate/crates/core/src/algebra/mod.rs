//! Exact arithmetic substrate: sparse polynomials, rational functions, 4x4
//! matrices and Mobius maps, generic over a [`Scalar`](crate::Scalar) field.

mod gcd;
pub mod linalg;
pub mod matrix;
pub mod mobius;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod rational;

use thiserror::Error;

pub use matrix::{ExactDiv, Mat4, Ring};
pub use mobius::{FixedPoints, Mobius, NonRationalRoots};
pub use poly::{MPoly, Monomial, Var, VarSet, NVARS};
pub use ratfunc::RatFunc;
pub use rational::{constant_ratio, primitive_integer, squarefree_class, squarefree_part};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("polynomials are not proportional")]
    NotProportional,
    #[error("map is the identity")]
    Degenerate,
    #[error("point is a pole")]
    PoleAtPoint,
    #[error("not a Mobius map: {0}")]
    NotMobius(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
