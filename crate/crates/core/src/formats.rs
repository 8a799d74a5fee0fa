//! JSON input files (arrangements, family cases, twist cases) and JSON
//! renderings of the reports.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::parse::{parse_param_poly, parse_rational, parse_tau_function};
use crate::algebra::{AlgebraError, Mobius, Var, NVARS};
use crate::arrangement::{AdmissibilityReport, Arrangement, ArrangementError, SingularLocus, Violation};
use crate::counting::{CountResult, Exclusion};
use crate::involution::{Certificate, FamilyCase, InvolutionError, TwistClass, WeightedMap};
use crate::modforms::{EllipticCurveModel, SplittingReport};
use crate::{PMatrix, QPoly, Rat};

/// Marker for arrangement equations that are not part of the repository.
pub const EXTERNAL: &str = "EXTERNAL";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{path}: invalid JSON: {msg}")]
    Json { path: String, msg: String },
    #[error("{field}: {error}")]
    Field { field: String, error: AlgebraError },
    #[error("invalid prime range '{0}', expected lo..hi")]
    PrimeRange(String),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
}

/// A coefficient written as a JSON string (`"A+B"`, `"-1/2"`) or integer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(i64),
    Text(String),
}

impl Coefficient {
    pub fn parse(&self, field: &str) -> Result<QPoly, FormatError> {
        match self {
            Coefficient::Int(n) => Ok(QPoly::from_i64(*n)),
            Coefficient::Text(s) => parse_param_poly(s).map_err(|error| FormatError::Field {
                field: field.to_string(),
                error,
            }),
        }
    }
}

impl From<&str> for Coefficient {
    fn from(s: &str) -> Self {
        Coefficient::Text(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrangementSpec {
    pub name: String,
    pub planes: Vec<[Coefficient; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl ArrangementSpec {
    pub fn build(&self) -> Result<Arrangement, FormatError> {
        let planes = self
            .planes
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut out: [QPoly; 4] = Default::default();
                for (j, c) in row.iter().enumerate() {
                    out[j] = c.parse(&format!("planes[{i}][{j}]"))?;
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>, FormatError>>()?;
        let arr = Arrangement::new(self.name.clone(), planes, self.labels.clone())?;
        Ok(match &self.source {
            Some(s) => arr.with_source(s.clone()),
            None => arr,
        })
    }
}

/// An arrangement given inline, as a path relative to the referring file,
/// or as [`EXTERNAL`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ArrangementRef {
    Inline(ArrangementSpec),
    Reference(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapSpec {
    pub matrix: [[Coefficient; 4]; 4],
    pub u_coeff: Coefficient,
}

impl MapSpec {
    pub fn matrix(&self) -> Result<PMatrix, FormatError> {
        let mut rows: [[QPoly; 4]; 4] = Default::default();
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                rows[i][j] = c.parse(&format!("map.matrix[{i}][{j}]"))?;
            }
        }
        Ok(PMatrix::from_rows(rows))
    }

    pub fn build(&self) -> Result<WeightedMap, FormatError> {
        Ok(WeightedMap::new(self.matrix()?, self.u_coeff.parse("map.u_coeff")?)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub arrangement: ArrangementRef,
    pub map: MapSpec,
    pub g: String,
    pub tau0: String,
    pub form: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f4: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elliptic: Option<EllipticCurveModel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

/// A case file with every reference resolved.
#[derive(Clone, Debug)]
pub struct CaseBundle {
    pub case: FamilyCase,
    pub primes: Option<(u64, u64)>,
    pub f4: Option<PathBuf>,
    pub f2: Option<PathBuf>,
    pub counts: Option<PathBuf>,
    pub elliptic: Option<EllipticCurveModel>,
    pub source: Option<String>,
}

fn io_err(path: &Path, e: impl ToString) -> FormatError {
    FormatError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, FormatError> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    serde_json::from_str(&text).map_err(|e| FormatError::Json {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement, FormatError> {
    let spec: ArrangementSpec = serde_json::from_str(text).map_err(|e| FormatError::Json {
        path: "<input>".into(),
        msg: e.to_string(),
    })?;
    spec.build()
}

pub fn load_arrangement(path: &Path) -> Result<Arrangement, FormatError> {
    read_json::<ArrangementSpec>(path)?.build()
}

/// `None` for [`EXTERNAL`].
pub fn resolve_arrangement(r: &ArrangementRef, base: &Path) -> Result<Option<Arrangement>, FormatError> {
    match r {
        ArrangementRef::Inline(spec) => Ok(Some(spec.build()?)),
        ArrangementRef::Reference(s) if s == EXTERNAL => Ok(None),
        ArrangementRef::Reference(s) => load_arrangement(&base.join(s)).map(Some),
    }
}

/// `"3..97"` to `(3, 97)`, inclusive.
pub fn parse_prime_range(s: &str) -> Result<(u64, u64), FormatError> {
    let err = || FormatError::PrimeRange(s.to_string());
    let (lo, hi) = s.split_once("..").ok_or_else(err)?;
    let lo = lo.trim().parse().map_err(|_| err())?;
    let hi = hi.trim().trim_start_matches('=').parse().map_err(|_| err())?;
    Ok((lo, hi))
}

pub fn load_case(path: &Path) -> Result<CaseBundle, FormatError> {
    let spec: CaseSpec = read_json(path)?;
    let base = base_dir(path);
    let name = spec.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    });
    bundle(spec, name, &base)
}

pub fn bundle(spec: CaseSpec, name: String, base: &Path) -> Result<CaseBundle, FormatError> {
    let field = |f: &str| {
        let f = f.to_string();
        move |error| FormatError::Field { field: f, error }
    };
    let arrangement = resolve_arrangement(&spec.arrangement, base)?;
    let map = spec.map.build()?;
    let g_fn = parse_tau_function(&spec.g).map_err(field("g"))?;
    let g = Mobius::from_ratfunc(&g_fn, Var::S).map_err(field("g"))?;
    let tau0 = parse_rational(&spec.tau0).map_err(field("tau0"))?;
    let primes = spec.primes.as_deref().map(parse_prime_range).transpose()?;
    let rel = |p: &Option<String>| p.as_ref().map(|s| base.join(s));
    Ok(CaseBundle {
        case: FamilyCase {
            name,
            arrangement,
            map,
            g,
            g_source: spec.g.clone(),
            tau0,
            form: spec.form.clone(),
        },
        primes,
        f4: rel(&spec.f4),
        f2: rel(&spec.f2),
        counts: rel(&spec.counts),
        elliptic: spec.elliptic.clone(),
        source: spec.source.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwistSpec {
    #[serde(default)]
    pub name: Option<String>,
    /// Family of the source threefold.
    pub arrangement: ArrangementRef,
    /// Family of the target; defaults to the source family.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_arrangement: Option<ArrangementRef>,
    /// Parameters `(A', B')` of the target as polynomials in `A, B`.
    #[serde(default = "default_params")]
    pub target_params: [Coefficient; 2],
    pub map: MapSpec,
    pub expected: Coefficient,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

fn default_params() -> [Coefficient; 2] {
    ["A".into(), "B".into()]
}

#[derive(Clone, Debug)]
pub struct TwistCase {
    pub name: String,
    pub f_src: QPoly,
    pub f_dst: QPoly,
    pub map: PMatrix,
    pub e: QPoly,
    pub expected: QPoly,
}

/// `Ok(None)` when an arrangement is [`EXTERNAL`].
pub fn load_twist(path: &Path) -> Result<Option<TwistCase>, FormatError> {
    let spec: TwistSpec = read_json(path)?;
    let base = base_dir(path);
    let Some(src) = resolve_arrangement(&spec.arrangement, &base)? else {
        return Ok(None);
    };
    let dst = match &spec.target_arrangement {
        Some(r) => match resolve_arrangement(r, &base)? {
            Some(a) => a,
            None => return Ok(None),
        },
        None => src.clone(),
    };
    let mut images: [Option<QPoly>; NVARS] = Default::default();
    images[Var::A.index()] = Some(spec.target_params[0].parse("target_params[0]")?);
    images[Var::B.index()] = Some(spec.target_params[1].parse("target_params[1]")?);
    Ok(Some(TwistCase {
        name: spec.name.clone().unwrap_or_else(|| src.name().to_string()),
        f_src: src.octic(),
        f_dst: dst.octic().compose(&images),
        map: spec.map.matrix()?,
        e: spec.map.u_coeff.parse("map.u_coeff")?,
        expected: spec.expected.parse("expected")?,
    }))
}

fn point_json(p: &[Rat; 4]) -> Value {
    json!(p.iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

pub fn analysis_json(arr: &Arrangement, locus: &SingularLocus<Rat>, adm: &AdmissibilityReport<Rat>) -> Value {
    let lines: Vec<Value> = locus
        .lines
        .iter()
        .map(|l| {
            json!({
                "basis": [point_json(&l.basis[0]), point_json(&l.basis[1])],
                "planes": arr.label_set(&l.planes),
                "m": l.multiplicity(),
            })
        })
        .collect();
    let points: Vec<Value> = locus
        .points
        .iter()
        .map(|p| {
            json!({
                "point": point_json(&p.point),
                "planes": arr.label_set(&p.planes),
                "q": p.multiplicity(),
                "on_triple_line": p.on_triple_line,
            })
        })
        .collect();
    let violations: Vec<Value> = adm
        .violations
        .iter()
        .map(|v| match v {
            Violation::PointTooSingular { point, planes } => json!({
                "kind": "point", "point": point_json(point), "planes": arr.label_set(planes),
            }),
            Violation::LineTooSingular { basis, planes } => json!({
                "kind": "line",
                "basis": [point_json(&basis[0]), point_json(&basis[1])],
                "planes": arr.label_set(planes),
            }),
        })
        .collect();
    json!({
        "name": arr.name(),
        "planes": arr.labels(),
        "lines": lines,
        "points": points,
        "admissible": adm.passes(),
        "violations": violations,
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    let verdicts: Vec<Value> = c
        .verdicts
        .iter()
        .map(|v| {
            json!({
                "check": v.check,
                "status": v.status.as_str(),
                "witness": v.witness,
                "discharges": v.discharges,
            })
        })
        .collect();
    json!({
        "name": c.name,
        "form": c.form,
        "tau0": c.tau0.to_string(),
        "lambda": c.lambda,
        "normalization": c.normalization.as_ref().map(|r| r.to_string()),
        "verdicts": verdicts,
        "notes": c.notes,
        "conclusion": c.conclusion.to_string(),
        "certified": c.is_certified(),
    })
}

/// Count rows; timings are left out so the output is reproducible.
pub fn counts_json(results: &[CountResult], excluded: &[Exclusion]) -> Value {
    json!({
        "counts": results.iter().map(|r| json!({
            "p": r.p,
            "n_points": r.n_points,
            "character_sum": r.character_sum,
            "zero_count": r.zero_count,
        })).collect::<Vec<_>>(),
        "excluded": excluded.iter().map(|e| json!({"p": e.p, "reason": e.reason})).collect::<Vec<_>>(),
    })
}

pub fn splitting_json(r: &SplittingReport) -> Value {
    json!({
        "primes": r.primes,
        "fit_primes": r.fit_primes(),
        "discrepancies": r.discrepancies.iter().map(|(p, d)| json!({"p": p, "D": d.to_string()})).collect::<Vec<_>>(),
        "q": r.q_string(),
        "integer_fit": r.integer_fit,
        "monic": r.monic,
        "residuals": r.residuals.iter().map(|(p, x)| json!({"p": p, "residual": x.to_string()})).collect::<Vec<_>>(),
        "skipped": r.skipped,
        "pass": r.pass,
        "assumption": crate::modforms::SPLITTING_ASSUMPTION,
    })
}

pub fn twist_json(name: &str, t: &TwistClass, expected: &QPoly, matches: bool) -> Value {
    json!({
        "name": name,
        "mu": t.mu.to_string(),
        "ratio": t.ratio.to_string(),
        "class": t.class.to_string(),
        "expected": expected.to_string(),
        "match": matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangement_round_trip() {
        let text = r#"{"name": "p", "planes": [
            ["A", "B", 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0],
            [0, 0, 0, 1], [1, 1, 1, 1], ["1/2", "-1", 0, 0], [0, 0, "A-B", "B"]
        ]}"#;
        let arr = parse_arrangement(text).unwrap();
        assert!(arr.is_parametric());
        assert_eq!(arr.planes().len(), 8);
    }

    #[test]
    fn malformed_coefficient() {
        let text = r#"{"name": "bad", "planes": [
            ["A+*B", 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0],
            [0, 0, 0, 1], [1, 1, 1, 1], [1, -1, 0, 0], [0, 0, 1, -1]
        ]}"#;
        match parse_arrangement(text) {
            Err(FormatError::Field { field, .. }) => assert_eq!(field, "planes[0][0]"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn prime_ranges() {
        assert_eq!(parse_prime_range("3..97").unwrap(), (3, 97));
        assert_eq!(parse_prime_range("2..=2").unwrap(), (2, 2));
        assert!(parse_prime_range("3-97").is_err());
    }

    #[test]
    fn external_reference() {
        let r: ArrangementRef = serde_json::from_str("\"EXTERNAL\"").unwrap();
        assert!(resolve_arrangement(&r, Path::new(".")).unwrap().is_none());
    }
}
