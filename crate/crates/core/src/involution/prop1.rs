//! Conditions on how an involution meets the singular strata of the branch
//! octic: (i) no singular line is pointwise fixed, (ii) no plane through a
//! fourfold point is invariant, (iii) each fixed line meets the octic with
//! odd multiplicity in at most two points.

use super::fixed::{fixed_locus, FixedLocus};
use super::InvolutionError;
use crate::algebra::linalg::{dot, proportionality};
use crate::arrangement::{restrict_to_line, Arrangement, SingularLine};
use crate::{QMatrix, Rat};

/// Planes through one fourfold point and which of them the map preserves.
#[derive(Clone, Debug, PartialEq)]
pub struct FourfoldCheck {
    pub point: [Rat; 4],
    pub planes: Vec<usize>,
    pub invariant_planes: Vec<usize>,
    pub on_triple_line: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedLineStatus {
    Ok,
    TooManyOddPoints,
    /// The fixed line lies in a branch plane; needs a finer analysis.
    ContainedInBranch,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixedLineCheck {
    /// Two points spanning the line that was restricted to.
    pub line: [[Rat; 4]; 2],
    /// True when the line is a generic line of a fixed plane rather than a
    /// fixed line itself.
    pub in_fixed_plane: bool,
    pub odd_points: usize,
    pub contained_in: Vec<usize>,
    pub status: FixedLineStatus,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Prop1Report {
    pub fixed: FixedLocus,
    /// Singular lines lying in the fixed locus.
    pub fixed_singular_lines: Vec<SingularLine<Rat>>,
    pub fourfold: Vec<FourfoldCheck>,
    pub fixed_lines: Vec<FixedLineCheck>,
    pub labels: Vec<String>,
}

impl Prop1Report {
    pub fn condition_i(&self) -> bool {
        self.fixed_singular_lines.is_empty()
    }

    pub fn condition_ii(&self) -> bool {
        self.fourfold.iter().all(|f| f.invariant_planes.is_empty())
    }

    pub fn condition_iii(&self) -> bool {
        self.fixed_lines.iter().all(|l| l.status == FixedLineStatus::Ok)
    }

    pub fn passes(&self) -> bool {
        self.condition_i() && self.condition_ii() && self.condition_iii()
    }

    fn names(&self, idx: &[usize]) -> String {
        let v: Vec<&str> = idx.iter().map(|&i| self.labels[i].as_str()).collect();
        format!("{{{}}}", v.join(", "))
    }

    pub fn witness_i(&self) -> String {
        if self.condition_i() {
            return "no singular line is pointwise fixed".into();
        }
        let parts: Vec<String> = self
            .fixed_singular_lines
            .iter()
            .map(|l| format!("line of multiplicity {} in planes {}", l.multiplicity(), self.names(&l.planes)))
            .collect();
        format!("fixed: {}", parts.join("; "))
    }

    pub fn witness_ii(&self) -> String {
        if self.fourfold.is_empty() {
            return "no fourfold points".into();
        }
        let bad: Vec<String> = self
            .fourfold
            .iter()
            .filter(|f| !f.invariant_planes.is_empty())
            .map(|f| {
                format!(
                    "point {} (on triple line: {}) has invariant planes {}",
                    fmt_point(&f.point),
                    f.on_triple_line,
                    self.names(&f.invariant_planes)
                )
            })
            .collect();
        if bad.is_empty() {
            format!("{} fourfold points, no invariant planes through them", self.fourfold.len())
        } else {
            bad.join("; ")
        }
    }

    pub fn witness_iii(&self) -> String {
        let parts: Vec<String> = self
            .fixed_lines
            .iter()
            .map(|l| {
                let what = if l.in_fixed_plane {
                    "generic line in fixed plane"
                } else {
                    "fixed line"
                };
                let span = format!("<{}, {}>", fmt_point(&l.line[0]), fmt_point(&l.line[1]));
                match l.status {
                    FixedLineStatus::ContainedInBranch => {
                        format!("{what} {span} lies in branch planes {}", self.names(&l.contained_in))
                    }
                    _ => format!("{what} {span} has {} odd intersection points", l.odd_points),
                }
            })
            .collect();
        parts.join("; ")
    }
}

pub(crate) fn fmt_point(p: &[Rat; 4]) -> String {
    let v: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("({})", v.join(":"))
}

/// Evaluate the three conditions for a specialized arrangement and a
/// normalized involution (`N^2 = I`).
pub fn check_proposition1(arr: &Arrangement, n: &QMatrix) -> Result<Prop1Report, InvolutionError> {
    let fixed = fixed_locus(n)?;
    let normals = arr.normals()?;
    let locus = arr.singular_strata()?;

    let fixed_singular_lines = locus
        .lines
        .iter()
        .filter(|l| fixed.contains_span(&l.basis))
        .cloned()
        .collect();

    let fourfold = locus
        .points_of_multiplicity(4)
        .map(|pt| {
            let invariant_planes = pt
                .planes
                .iter()
                .copied()
                .filter(|&i| proportionality(&normals[i], &n.pull_back(&normals[i])).is_some())
                .collect();
            FourfoldCheck {
                point: pt.point.clone(),
                planes: pt.planes.clone(),
                invariant_planes,
                on_triple_line: pt.on_triple_line,
            }
        })
        .collect();

    let mut fixed_lines = Vec::new();
    for line in fixed.fixed_lines() {
        fixed_lines.push(line_check(&normals, line, false));
    }
    if let FixedLocus::PointPlane { plane_basis, .. } = &fixed {
        fixed_lines.push(line_check(&normals, generic_line_in_plane(&normals, plane_basis), true));
    }

    Ok(Prop1Report {
        fixed,
        fixed_singular_lines,
        fourfold,
        fixed_lines,
        labels: arr.labels().iter().map(|s| s.to_string()).collect(),
    })
}

fn line_check(normals: &[[Rat; 4]], line: [[Rat; 4]; 2], in_fixed_plane: bool) -> FixedLineCheck {
    let d = restrict_to_line(normals, &line[0], &line[1]);
    let odd_points = d.odd_points();
    let status = if !d.contained_in.is_empty() {
        FixedLineStatus::ContainedInBranch
    } else if odd_points > 2 {
        FixedLineStatus::TooManyOddPoints
    } else {
        FixedLineStatus::Ok
    };
    FixedLineCheck {
        line,
        in_fixed_plane,
        odd_points,
        contained_in: d.contained_in,
        status,
    }
}

/// A line in the plane spanned by `basis` that avoids every intersection of
/// two distinct traces of branch planes. If a branch plane is the fixed
/// plane itself, every line in it is contained in the branch locus and the
/// first candidate is returned.
fn generic_line_in_plane(normals: &[[Rat; 4]], basis: &[[Rat; 4]; 3]) -> [[Rat; 4]; 2] {
    let combo = |c: [i64; 3]| -> [Rat; 4] {
        std::array::from_fn(|j| {
            (0..3).fold(Rat::from_integer(0.into()), |acc, k| {
                acc + Rat::from_integer(c[k].into()) * &basis[k][j]
            })
        })
    };
    // traces of the branch planes, as lines in the fixed plane
    let traces: Vec<[Rat; 3]> = normals
        .iter()
        .map(|h| std::array::from_fn(|k| dot(h, &basis[k])))
        .collect();
    let mut distinct: Vec<&[Rat; 3]> = Vec::new();
    for t in traces.iter().filter(|t| t.iter().any(|c| *c != Rat::from_integer(0.into()))) {
        if !distinct.iter().any(|d| proportionality(*d, t).is_some()) {
            distinct.push(t);
        }
    }
    let first = [combo([1, 0, 0]), combo([0, 1, 0])];
    for k in 1..50i64 {
        let p = combo([1, k, k * k]);
        let q = combo([k * k * k, 1, -k]);
        let d = restrict_to_line(normals, &p, &q);
        if !d.contained_in.is_empty() {
            return first;
        }
        if d.points.len() == distinct.len() {
            return [p, q];
        }
    }
    first
}
