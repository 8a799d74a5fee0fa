//! Cusp form coefficients and the trace identity `tr Frob_p = a_p + p b_p`.

mod oracles;
mod splitting;
mod table;

use thiserror::Error;

pub use oracles::{ap_cm_weight4, ap_elliptic, calibrate_cm, cm_trace_raw, primary_gaussian_prime, CmCalibration, EllipticCurveModel};
pub use splitting::{verify_splitting, SplittingReport, SPLITTING_ASSUMPTION};
pub use table::{load_table, parse_table, weil_bound_ok, weil_check, CoefficientTable, WeilReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModformsError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("a_{p} = {a_p} violates the weight {weight} bound a_p^2 <= 4 p^{}", weight - 1)]
    BoundViolation { p: u64, a_p: i64, weight: u32 },
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("bad reduction at p = {0}")]
    BadReduction(u64),
    #[error("singular curve: 4a^3 + 27b^2 = 0")]
    SingularCurve,
    #[error("{have} usable primes, at least {need} are needed")]
    InsufficientPrimes { have: usize, need: usize },
    #[error("no prime p = 1 mod 4 with a nonzero coefficient to calibrate against")]
    NoCalibrationPrime,
    #[error("table value a_{p} = {a_p} is not +-{raw}")]
    CalibrationMismatch { p: u64, a_p: i64, raw: i64 },
}
