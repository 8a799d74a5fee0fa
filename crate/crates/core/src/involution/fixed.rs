use num_traits::{One, Zero};

use super::InvolutionError;
use crate::algebra::linalg::{kernel, rank, span_contains};
use crate::{QMatrix, Rat};

/// Pointwise fixed set in P^3 of a projective involution.
#[derive(Clone, Debug, PartialEq)]
pub enum FixedLocus {
    /// An isolated point and a plane; `point_eigenvalue` is the sign of the
    /// eigenvalue on the point (the plane carries the opposite sign).
    PointPlane {
        point: [Rat; 4],
        point_eigenvalue: i8,
        /// Normal vector of the fixed plane.
        plane: [Rat; 4],
        plane_basis: [[Rat; 4]; 3],
    },
    /// The +1 and -1 eigenlines.
    TwoLines {
        plus: [[Rat; 4]; 2],
        minus: [[Rat; 4]; 2],
    },
}

impl FixedLocus {
    /// Each component's spanning vectors.
    pub fn components(&self) -> Vec<Vec<[Rat; 4]>> {
        match self {
            FixedLocus::PointPlane {
                point, plane_basis, ..
            } => vec![vec![point.clone()], plane_basis.to_vec()],
            FixedLocus::TwoLines { plus, minus } => vec![plus.to_vec(), minus.to_vec()],
        }
    }

    pub fn fixed_lines(&self) -> Vec<[[Rat; 4]; 2]> {
        match self {
            FixedLocus::TwoLines { plus, minus } => vec![plus.clone(), minus.clone()],
            FixedLocus::PointPlane { .. } => Vec::new(),
        }
    }

    /// Whether the projective span of `vectors` is pointwise fixed.
    pub fn contains_span(&self, vectors: &[[Rat; 4]]) -> bool {
        let sub: Vec<Vec<Rat>> = vectors.iter().map(|v| v.to_vec()).collect();
        self.components().iter().any(|c| {
            let space: Vec<Vec<Rat>> = c.iter().map(|v| v.to_vec()).collect();
            span_contains(&space, &sub)
        })
    }
}

fn to_arr(v: &[Rat]) -> [Rat; 4] {
    [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
}

fn shifted(n: &QMatrix, eigen: &Rat) -> Vec<Vec<Rat>> {
    (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    let e = n.get(i, j).clone();
                    if i == j {
                        e - eigen
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect()
}

/// Eigenspaces of a matrix with `N^2 = I`.
pub fn fixed_locus(n: &QMatrix) -> Result<FixedLocus, InvolutionError> {
    let sq = n.mul(n);
    if !sq.is_identity() {
        return Err(InvolutionError::NotInvolution(sq.to_string()));
    }
    let one = Rat::one();
    let plus = kernel(&shifted(n, &one), 4);
    let minus = kernel(&shifted(n, &-one.clone()), 4);
    debug_assert_eq!(plus.len() + minus.len(), 4);
    match (plus.len(), minus.len()) {
        (2, 2) => Ok(FixedLocus::TwoLines {
            plus: [to_arr(&plus[0]), to_arr(&plus[1])],
            minus: [to_arr(&minus[0]), to_arr(&minus[1])],
        }),
        (1, 3) | (3, 1) => {
            let (point, basis, sign) = if plus.len() == 1 {
                (&plus[0], &minus, 1)
            } else {
                (&minus[0], &plus, -1)
            };
            let normal = kernel(basis, 4);
            debug_assert_eq!(normal.len(), 1);
            let plane_basis = [to_arr(&basis[0]), to_arr(&basis[1]), to_arr(&basis[2])];
            debug_assert_eq!(rank(basis), 3);
            Ok(FixedLocus::PointPlane {
                point: to_arr(point),
                point_eigenvalue: sign,
                plane: to_arr(&normal[0]),
                plane_basis,
            })
        }
        _ => Err(InvolutionError::IdentityMap),
    }
}

/// Whether `n v` is a multiple of `v`.
pub fn is_eigenvector(n: &QMatrix, v: &[Rat; 4]) -> bool {
    let w = n.apply(v);
    crate::algebra::linalg::proportionality(v, &w).is_some() || w.iter().all(Zero::is_zero)
}
