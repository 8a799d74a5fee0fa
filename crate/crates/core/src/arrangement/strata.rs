use std::collections::BTreeSet;

use crate::algebra::linalg::{dot, kernel, normalize_projective, rank};
use crate::scalar::Scalar;

/// A line along which at least two planes meet.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularLine<S> {
    /// Reduced row echelon basis of the points on the line.
    pub basis: [[S; 4]; 2],
    /// Indices of every plane containing the line, ascending.
    pub planes: Vec<usize>,
}

impl<S> SingularLine<S> {
    pub fn multiplicity(&self) -> usize {
        self.planes.len()
    }
}

/// A point where at least three planes with independent normals meet.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularPoint<S> {
    /// Representative with first nonzero coordinate 1.
    pub point: [S; 4],
    pub planes: Vec<usize>,
    /// Lies on some line of multiplicity at least 3.
    pub on_triple_line: bool,
}

impl<S> SingularPoint<S> {
    pub fn multiplicity(&self) -> usize {
        self.planes.len()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularLocus<S> {
    pub lines: Vec<SingularLine<S>>,
    pub points: Vec<SingularPoint<S>>,
}

impl<S> SingularLocus<S> {
    pub fn lines_of_multiplicity(&self, m: usize) -> impl Iterator<Item = &SingularLine<S>> {
        self.lines.iter().filter(move |l| l.multiplicity() == m)
    }

    pub fn points_of_multiplicity(&self, q: usize) -> impl Iterator<Item = &SingularPoint<S>> {
        self.points.iter().filter(move |p| p.multiplicity() == q)
    }

    /// Sorted line multiplicities and sorted point multiplicities.
    pub fn signature(&self) -> (Vec<usize>, Vec<usize>) {
        let mut l: Vec<usize> = self.lines.iter().map(|x| x.multiplicity()).collect();
        let mut p: Vec<usize> = self.points.iter().map(|x| x.multiplicity()).collect();
        l.sort_unstable();
        p.sort_unstable();
        (l, p)
    }
}

fn rows<S: Scalar>(normals: &[[S; 4]], idx: &[usize]) -> Vec<Vec<S>> {
    idx.iter().map(|&i| normals[i].to_vec()).collect()
}

/// Enumerate the singular lines and points of an arrangement of distinct
/// planes given by their normal vectors.
pub fn singular_strata<S: Scalar>(normals: &[[S; 4]]) -> SingularLocus<S> {
    let n = normals.len();
    let mut seen_lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut lines = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let pair = rows(normals, &[i, j]);
            if rank(&pair) < 2 {
                // coincident planes; callers reject these upstream
                continue;
            }
            let through: Vec<usize> = (0..n)
                .filter(|&k| k == i || k == j || rank(&rows(normals, &[i, j, k])) == 2)
                .collect();
            if !seen_lines.insert(through.clone()) {
                continue;
            }
            let k = kernel(&pair, 4);
            let basis = [to_arr(&k[0]), to_arr(&k[1])];
            lines.push(SingularLine {
                basis,
                planes: through,
            });
        }
    }
    lines.sort_by(|a, b| a.planes.cmp(&b.planes));

    let mut seen_points: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut points = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let triple = rows(normals, &[i, j, k]);
                if rank(&triple) < 3 {
                    continue;
                }
                let ker = kernel(&triple, 4);
                let point = normalize_projective(&ker[0]).expect("kernel vector is nonzero");
                let through: Vec<usize> = (0..n)
                    .filter(|&l| dot(&normals[l], &point).is_zero())
                    .collect();
                if !seen_points.insert(through.clone()) {
                    continue;
                }
                let on_triple_line = lines
                    .iter()
                    .any(|l| l.multiplicity() >= 3 && l.planes.iter().all(|p| through.contains(p)));
                points.push(SingularPoint {
                    point: to_arr(&point),
                    planes: through,
                    on_triple_line,
                });
            }
        }
    }
    points.sort_by(|a, b| a.planes.cmp(&b.planes));
    SingularLocus { lines, points }
}

fn to_arr<S: Scalar>(v: &[S]) -> [S; 4] {
    [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
}

#[derive(Clone, Debug, PartialEq)]
pub enum Violation<S> {
    /// Six or more planes through one point.
    PointTooSingular { point: [S; 4], planes: Vec<usize> },
    /// Four or more planes containing one line.
    LineTooSingular { basis: [[S; 4]; 2], planes: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibilityReport<S> {
    pub violations: Vec<Violation<S>>,
}

impl<S> AdmissibilityReport<S> {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// No six planes through a point and no four planes through a line.
pub fn admissibility<S: Scalar>(locus: &SingularLocus<S>) -> AdmissibilityReport<S> {
    let mut violations = Vec::new();
    for l in &locus.lines {
        if l.multiplicity() >= 4 {
            violations.push(Violation::LineTooSingular {
                basis: l.basis.clone(),
                planes: l.planes.clone(),
            });
        }
    }
    for p in &locus.points {
        if p.multiplicity() >= 6 {
            violations.push(Violation::PointTooSingular {
                point: p.point.clone(),
                planes: p.planes.clone(),
            });
        }
    }
    AdmissibilityReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{integer_planes, running_example, Arrangement};
    use crate::Rat;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn running_example_triple_line() {
        let arr = running_example();
        let locus = arr.singular_strata().unwrap();
        let triple = locus
            .lines
            .iter()
            .find(|l| l.planes == vec![4, 5, 6])
            .expect("x+y = z+t = 0 is a triple line");
        assert_eq!(triple.multiplicity(), 3);
        assert_eq!(arr.label_set(&triple.planes), vec!["x + y", "z + t", "x + y + z + t"]);
        assert_eq!(
            triple.basis,
            [[r(1), r(-1), r(0), r(0)], [r(0), r(0), r(1), r(-1)]]
        );
    }

    #[test]
    fn coordinate_vertex_multiplicity() {
        let arr = running_example();
        let locus = arr.singular_strata().unwrap();
        let e1 = [r(1), r(0), r(0), r(0)];
        let p = locus.points.iter().find(|p| p.point == e1).unwrap();
        // y, z, t and z+t vanish at (1:0:0:0)
        assert_eq!(p.planes, vec![1, 2, 3, 5]);
        // z, t, z+t share the triple line z = t = 0 through this point
        assert!(p.on_triple_line);
    }

    #[test]
    fn running_example_is_admissible() {
        assert!(running_example().admissibility().unwrap().passes());
    }

    #[test]
    fn four_planes_through_a_line() {
        let arr = Arrangement::new(
            "bad-line",
            integer_planes(&[
                [1, 0, 0, 0],
                [0, 1, 0, 0],
                [1, 1, 0, 0],
                [1, -1, 0, 0],
                [0, 0, 1, 0],
                [0, 0, 0, 1],
                [0, 0, 1, 1],
                [0, 0, 1, -1],
            ]),
            None,
        )
        .unwrap();
        let rep = arr.admissibility().unwrap();
        assert!(!rep.passes());
        assert!(rep.violations.iter().any(|v| matches!(
            v,
            Violation::LineTooSingular { planes, .. } if planes == &vec![0, 1, 2, 3]
        )));
    }

    #[test]
    fn six_planes_through_a_point() {
        let arr = Arrangement::new(
            "bad-point",
            integer_planes(&[
                [1, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, 1, 0],
                [1, 1, 0, 0],
                [0, 1, 1, 0],
                [1, 0, 1, 0],
                [0, 0, 0, 1],
                [1, 1, 1, 1],
            ]),
            None,
        )
        .unwrap();
        let rep = arr.admissibility().unwrap();
        assert!(rep.violations.iter().any(|v| matches!(
            v,
            Violation::PointTooSingular { planes, .. } if planes.len() == 6
        )));
    }

    #[test]
    fn two_generic_planes() {
        let normals = [[r(1), r(2), r(3), r(5)], [r(7), r(-1), r(4), r(2)]];
        let locus = singular_strata(&normals);
        assert_eq!(locus.lines.len(), 1);
        assert_eq!(locus.lines[0].multiplicity(), 2);
        assert!(locus.points.is_empty());
    }
}
