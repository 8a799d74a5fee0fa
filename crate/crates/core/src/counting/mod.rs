//! Point counts of the singular double octic `u^2 = f` over prime fields.
//!
//! `#X(F_p) = sum over x in P^3(F_p) of (1 + chi(f(x)))`, where `chi` is the
//! quadratic character. Each point of `P^3(F_p)` is visited once through the
//! four affine charts "last nonzero coordinate is 1".

mod cache;
mod kernel;
mod primes;

use thiserror::Error;

pub use cache::{read_cache, write_cache, CachedCount};
pub use kernel::{count_double_cover, count_forms, projective_size, quad_char, CountResult, FpOctic, QuadChar};
pub use primes::{good_primes, is_prime, primes_in, Exclusion, GoodPrimes};

/// Largest supported prime; keeps `p^3` and products of residues in `u64`.
pub const MAX_PRIME: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CountError {
    #[error("p = {0} is not an odd prime below {MAX_PRIME}")]
    UnsupportedPrime(u64),
    #[error("bad reduction at p = {p}: {reason}")]
    BadReduction { p: u64, reason: String },
    #[error("arrangement still depends on A, B")]
    NotSpecialized,
    #[error("cache {path}: {msg}")]
    Cache { path: String, msg: String },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
