use serde::{Deserialize, Serialize};

use super::{CoefficientTable, ModformsError};
use crate::counting::{is_prime, QuadChar};

/// `y^2 = x^3 + a x + b` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticCurveModel {
    pub a: i64,
    pub b: i64,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl EllipticCurveModel {
    pub fn new(a: i64, b: i64) -> Result<Self, ModformsError> {
        let e = EllipticCurveModel {
            a,
            b,
            note: String::new(),
        };
        if e.discriminant_core() == 0 {
            return Err(ModformsError::SingularCurve);
        }
        Ok(e)
    }

    /// `4a^3 + 27b^2`; the discriminant is `-16` times this.
    pub fn discriminant_core(&self) -> i128 {
        4 * (self.a as i128).pow(3) + 27 * (self.b as i128).pow(2)
    }
}

/// `a_p = p + 1 - #E(F_p)` by summing the quadratic character.
pub fn ap_elliptic(e: &EllipticCurveModel, p: u64) -> Result<i64, ModformsError> {
    if p == 2 || !is_prime(p) || e.discriminant_core() % p as i128 == 0 {
        return Err(ModformsError::BadReduction(p));
    }
    let chi = QuadChar::new(p);
    let pi = p as i64;
    let (a, b) = (e.a.rem_euclid(pi) as u64, e.b.rem_euclid(pi) as u64);
    let sum: i64 = (0..p)
        .map(|x| chi.chi((x * x % p * x + a * x + b) % p) as i64)
        .sum();
    // #E = 1 + sum over x of (1 + chi), so a_p = -sum
    Ok(-sum)
}

/// The Gaussian prime `a + bi` above `p = 1 mod 4` with `a` odd and
/// `a + b = 1 mod 4`, up to conjugation (which fixes the real part of its cube).
pub fn primary_gaussian_prime(p: u64) -> Option<(i64, i64)> {
    if p % 4 != 1 || !is_prime(p) {
        return None;
    }
    let mut a = 1i64;
    while (a * a) as u64 <= p {
        let rest = p as i64 - a * a;
        let b = (rest as f64).sqrt().round() as i64;
        let b = (b - 1..=b + 1).find(|c| *c >= 0 && c * c == rest);
        if let Some(b) = b {
            if a % 2 == 1 && b % 2 == 0 {
                let a = if (a + b).rem_euclid(4) == 1 { a } else { -a };
                return Some((a, b));
            }
        }
        a += 1;
    }
    None
}

/// `2 Re(pi^3)` for the primary prime above `p`; 0 when `p = 3 mod 4`.
pub fn cm_trace_raw(p: u64) -> i64 {
    match primary_gaussian_prime(p) {
        Some((a, b)) => 2 * (a * a * a - 3 * a * b * b),
        None => 0,
    }
}

/// The unit by which the weight-4 CM form differs from [`cm_trace_raw`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmCalibration {
    pub label: String,
    pub epsilon: i8,
    /// The reference coefficient the sign was fixed against.
    pub anchor_p: u64,
    pub anchor_ap: i64,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub source: String,
}

impl CmCalibration {
    /// Whether the anchor agrees with the stored sign.
    pub fn consistent(&self) -> bool {
        cm_trace_raw(self.anchor_p) * self.epsilon as i64 == self.anchor_ap && self.anchor_ap != 0
    }
}

/// `a_p` of the weight-4 CM newform with the calibrated sign.
pub fn ap_cm_weight4(p: u64, cal: &CmCalibration) -> i64 {
    cal.epsilon as i64 * cm_trace_raw(p)
}

/// Fix the sign against the first usable prime of a reference table, and
/// confirm it at every other prime of the table.
pub fn calibrate_cm(table: &CoefficientTable) -> Result<CmCalibration, ModformsError> {
    let mut cal: Option<CmCalibration> = None;
    for (&p, &a) in &table.coeffs {
        if p == 2 || table.level % p == 0 {
            continue;
        }
        let raw = cm_trace_raw(p);
        if a.abs() != raw.abs() {
            return Err(ModformsError::CalibrationMismatch { p, a_p: a, raw });
        }
        if raw == 0 {
            continue;
        }
        let eps = if a == raw { 1 } else { -1 };
        match &cal {
            None => {
                cal = Some(CmCalibration {
                    label: table.label.clone(),
                    epsilon: eps,
                    anchor_p: p,
                    anchor_ap: a,
                    source: String::new(),
                })
            }
            Some(c) if c.epsilon != eps => {
                return Err(ModformsError::CalibrationMismatch { p, a_p: a, raw: c.epsilon as i64 * raw })
            }
            Some(_) => {}
        }
    }
    cal.ok_or(ModformsError::NoCalibrationPrime)
}
