//! Chains the individual checks into a rigidity verdict for the quotient of
//! `X_tau0` by the involution.

use std::fmt;

use num_traits::One;

use super::family::{check_family, FamilyCase, IntertwiningMode};
use super::prop1::check_proposition1;
use super::{octic_invariance, InvolutionError};
use crate::algebra::NonRationalRoots;
use crate::arrangement::Violation;
use crate::{PMatrix, QPoly, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skip => "skip",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub check: &'static str,
    pub status: CheckStatus,
    pub witness: String,
    /// The step of the rigidity argument this check supports.
    pub discharges: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Conclusion {
    CertifiedRigidQuotient,
    Refuted(String),
    Incomplete(Vec<String>),
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::CertifiedRigidQuotient => f.write_str("CertifiedRigidQuotient"),
            Conclusion::Refuted(r) => write!(f, "Refuted({r})"),
            Conclusion::Incomplete(m) => write!(f, "Incomplete({})", m.join("; ")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub name: String,
    pub form: String,
    pub tau0: Rat,
    pub lambda: String,
    /// `c` with `M(tau0)^2 = c I`, when the map normalizes.
    pub normalization: Option<Rat>,
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
    pub conclusion: Conclusion,
}

impl Certificate {
    pub fn verdict(&self, check: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.check == check)
    }

    pub fn is_certified(&self) -> bool {
        self.conclusion == Conclusion::CertifiedRigidQuotient
    }
}

/// Names of the checks, as they appear in reports.
pub mod checks {
    pub const FIXED_POINT: &str = "mobius_fixed_point";
    pub const DERIVATIVE: &str = "mobius_derivative";
    pub const INVOLUTION: &str = "involution";
    pub const SYMPLECTIC: &str = "symplectic";
    pub const ADMISSIBILITY: &str = "admissibility";
    pub const INVARIANCE: &str = "octic_invariance";
    pub const PROP1_I: &str = "prop1_i";
    pub const PROP1_II: &str = "prop1_ii";
    pub const PROP1_III: &str = "prop1_iii";
    pub const INTERTWINING: &str = "family_intertwining";
}

use checks::*;

fn discharges(check: &str) -> &'static str {
    match check {
        FIXED_POINT => "tau0 is an isolated fixed point of the parameter symmetry g",
        DERIVATIVE => "phi acts on the one-dimensional deformation space by g'(tau0) = -1, so H^{1,2} has no invariant part",
        INVOLUTION => "phi restricts to an automorphism of order two of X_tau0",
        SYMPLECTIC => "phi preserves the holomorphic 3-form, so the quotient keeps trivial canonical class",
        ADMISSIBILITY => "X_tau0 is a double octic with a crepant resolution",
        INVARIANCE => "phi preserves the branch octic and lifts to the double cover",
        PROP1_I | PROP1_II | PROP1_III => "the fixed locus on the resolution contains no curve of positive genus",
        INTERTWINING => "phi_tau maps X_tau to X_g(tau) across the family",
        _ => "",
    }
}

struct Builder {
    verdicts: Vec<Verdict>,
}

impl Builder {
    fn push(&mut self, check: &'static str, status: CheckStatus, witness: impl Into<String>) {
        self.verdicts.push(Verdict {
            check,
            status,
            witness: witness.into(),
            discharges: discharges(check),
        });
    }

    fn pass_if(&mut self, check: &'static str, ok: bool, witness: impl Into<String>) {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        self.push(check, status, witness);
    }

    fn skip_all(&mut self, checks: &[&'static str], reason: &str) {
        for &c in checks {
            self.push(c, CheckStatus::Skip, reason);
        }
    }
}

fn describe_fixed_points(fc: &FamilyCase, report: &super::FamilyReport) -> String {
    let g_tau0 = match &report.g_at_tau0 {
        Some(v) => v.to_string(),
        None => "infinity".into(),
    };
    let mut s = format!("g = {}, g({}) = {}", fc.g_source, fc.tau0, g_tau0);
    match &report.fixed_points {
        Ok(fp) => {
            let mut pts: Vec<String> = fp.rational.iter().map(|r| r.to_string()).collect();
            if fp.at_infinity {
                pts.push("infinity".into());
            }
            s.push_str(&format!("; rational fixed points {{{}}}", pts.join(", ")));
            match &fp.non_rational {
                Some(NonRationalRoots::NonReal(d)) => {
                    s.push_str(&format!("; non-real fixed points (discriminant {d})"))
                }
                Some(NonRationalRoots::RealIrrational(d)) => {
                    s.push_str(&format!("; irrational fixed points (discriminant {d})"))
                }
                None => {}
            }
        }
        Err(e) => s.push_str(&format!("; {e}")),
    }
    s
}

pub fn certify(fc: &FamilyCase) -> Certificate {
    let report = check_family(fc);
    let fixed = report.tau0_fixed(&fc.tau0);
    let mut b = Builder {
        verdicts: Vec::new(),
    };
    let mut notes = vec![
        "condition (ii) is checked in strict form: no plane through any fourfold point may be invariant".to_string(),
        "condition (iii) allows at most two odd intersection points per fixed line; a fixed line inside a branch plane is a failure".to_string(),
    ];

    b.pass_if(FIXED_POINT, fixed, describe_fixed_points(fc, &report));
    match &report.derivative {
        Ok(d) => b.pass_if(DERIVATIVE, report.derivative_is_minus_one(), format!("g'({}) = {d}", fc.tau0)),
        Err(e) => b.push(DERIVATIVE, CheckStatus::Fail, format!("g'({}): {e}", fc.tau0)),
    }

    let lambda = report.lambda.to_string();
    if report.lambda.is_one() {
        b.push(SYMPLECTIC, CheckStatus::Pass, "lambda = det(M)/c_u = 1 identically in (A, B)");
    } else if let Some(c) = report.lambda.as_constant() {
        b.push(SYMPLECTIC, CheckStatus::Fail, format!("lambda = {c}"));
    } else {
        match &report.lambda_at_tau0 {
            Ok(v) if fixed => b.pass_if(SYMPLECTIC, v.is_one(), format!("lambda = {lambda}; at tau0: lambda = {v}")),
            Ok(_) => b.push(SYMPLECTIC, CheckStatus::Skip, format!("lambda = {lambda}; tau0 is not fixed by g")),
            Err(e) => b.push(SYMPLECTIC, CheckStatus::Fail, format!("lambda = {lambda}; at tau0: {e}")),
        }
    }

    let mut normalization = None;
    let mut normalized = None;
    match &report.involution {
        None => b.push(INVOLUTION, CheckStatus::Skip, "tau0 is not a fixed point of g"),
        Some(Ok(n)) => {
            normalization = Some(n.square_scalar.clone());
            normalized = Some(n.matrix.clone());
            b.push(
                INVOLUTION,
                CheckStatus::Pass,
                format!("M(tau0)^2 = {} I; normalized by 1/{}", n.square_scalar, n.root),
            );
        }
        Some(Err(e)) => b.push(INVOLUTION, CheckStatus::Fail, e.to_string()),
    }

    let geometric = [ADMISSIBILITY, INVARIANCE, PROP1_I, PROP1_II, PROP1_III];
    match &fc.arrangement {
        None => {
            b.skip_all(&geometric, "arrangement equations not supplied");
            b.push(INTERTWINING, CheckStatus::Skip, "arrangement equations not supplied");
        }
        Some(arr) => {
            if !fixed {
                b.skip_all(&geometric, "tau0 is not a fixed point of g");
            } else {
                geometric_checks(&mut b, arr, fc, normalized.as_ref());
            }
            let it = report.intertwining.as_ref().expect("arrangement present");
            let mode = match &it.mode {
                IntertwiningMode::Symbolic => "symbolic in (A, B)".to_string(),
                IntertwiningMode::Sampled(taus) => {
                    let t: Vec<String> = taus.iter().map(|t| t.to_string()).collect();
                    format!("sampled at tau = {}", t.join(", "))
                }
            };
            notes.push(format!("family intertwining checked {mode}"));
            b.pass_if(INTERTWINING, it.ok, format!("{mode}: {}", it.detail));
        }
    }

    let conclusion = conclude(&b.verdicts);
    Certificate {
        name: fc.name.clone(),
        form: fc.form.clone(),
        tau0: fc.tau0.clone(),
        lambda,
        normalization,
        verdicts: b.verdicts,
        notes,
        conclusion,
    }
}

fn geometric_checks(
    b: &mut Builder,
    family: &crate::arrangement::Arrangement,
    fc: &FamilyCase,
    normalized: Option<&crate::QMatrix>,
) {
    let downstream = [INVARIANCE, PROP1_I, PROP1_II, PROP1_III];
    let arr = match family.specialize_tau(&fc.tau0) {
        Ok(a) => a,
        Err(e) => {
            b.push(ADMISSIBILITY, CheckStatus::Fail, format!("specialization at tau0: {e}"));
            b.skip_all(&downstream, "arrangement degenerates at tau0");
            return;
        }
    };
    match arr.admissibility() {
        Ok(rep) if rep.passes() => b.push(ADMISSIBILITY, CheckStatus::Pass, "no sixfold point, no fourfold line"),
        Ok(rep) => {
            let parts: Vec<String> = rep
                .violations
                .iter()
                .map(|v| match v {
                    Violation::PointTooSingular { planes, .. } => {
                        format!("{} planes through a point: {:?}", planes.len(), arr.label_set(planes))
                    }
                    Violation::LineTooSingular { planes, .. } => {
                        format!("{} planes through a line: {:?}", planes.len(), arr.label_set(planes))
                    }
                })
                .collect();
            b.push(ADMISSIBILITY, CheckStatus::Fail, parts.join("; "));
        }
        Err(e) => b.push(ADMISSIBILITY, CheckStatus::Fail, e.to_string()),
    }

    let w = match fc.map.specialize_tau(&fc.tau0) {
        Ok(w) => w,
        Err(e) => {
            b.push(INVARIANCE, CheckStatus::Fail, e.to_string());
            b.skip_all(&downstream[1..], "map degenerates at tau0");
            return;
        }
    };
    let c_u: QPoly = w.u_coeff().clone();
    let m: &PMatrix = w.matrix();
    match octic_invariance(&arr, m, Some(&c_u)) {
        Ok(rep) => {
            let ok = rep.u_consistent == Some(true);
            b.pass_if(INVARIANCE, ok, format!("f(M x) = {} f(x); c_u^2 = {}", rep.kappa, &c_u * &c_u));
        }
        Err(InvolutionError::NotPreserved(msg)) => b.push(INVARIANCE, CheckStatus::Fail, msg),
        Err(e) => b.push(INVARIANCE, CheckStatus::Fail, e.to_string()),
    }

    let Some(n) = normalized else {
        b.skip_all(&downstream[1..], "map does not normalize to an involution at tau0");
        return;
    };
    match check_proposition1(&arr, n) {
        Ok(rep) => {
            b.pass_if(PROP1_I, rep.condition_i(), rep.witness_i());
            b.pass_if(PROP1_II, rep.condition_ii(), rep.witness_ii());
            b.pass_if(PROP1_III, rep.condition_iii(), rep.witness_iii());
        }
        Err(e) => {
            for c in &downstream[1..] {
                b.push(c, CheckStatus::Fail, e.to_string());
            }
        }
    }
}

/// Certified only when every verdict passed. A failed fixed-point check
/// makes the tau0-specific checks meaningless, so it yields `Incomplete`.
pub fn conclude(verdicts: &[Verdict]) -> Conclusion {
    let failed = |name: &str| {
        verdicts
            .iter()
            .any(|v| v.check == name && v.status == CheckStatus::Fail)
    };
    if failed(FIXED_POINT) {
        let mut missing = vec![format!(
            "FixedPointMismatch: {}",
            verdicts.iter().find(|v| v.check == FIXED_POINT).unwrap().witness
        )];
        missing.extend(
            verdicts
                .iter()
                .filter(|v| v.status == CheckStatus::Skip)
                .map(|v| format!("{}: {}", v.check, v.witness)),
        );
        return Conclusion::Incomplete(missing);
    }
    let failures: Vec<String> = verdicts
        .iter()
        .filter(|v| v.status == CheckStatus::Fail)
        .map(|v| format!("{}: {}", v.check, v.witness))
        .collect();
    if !failures.is_empty() {
        return Conclusion::Refuted(failures.join("; "));
    }
    let skipped: Vec<String> = verdicts
        .iter()
        .filter(|v| v.status == CheckStatus::Skip)
        .map(|v| format!("{}: {}", v.check, v.witness))
        .collect();
    if !skipped.is_empty() || verdicts.is_empty() {
        return Conclusion::Incomplete(skipped);
    }
    Conclusion::CertifiedRigidQuotient
}
