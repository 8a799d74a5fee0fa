use crate::algebra::linalg::dot;
use crate::scalar::Scalar;

/// A point `(s : u)` of the parameterized line `s P + u Q`, normalized so
/// that `u = 1`, or `(1 : 0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LineRoot<S> {
    pub root: [S; 2],
    pub multiplicity: usize,
    /// Planes whose restriction vanishes here.
    pub planes: Vec<usize>,
}

/// The divisor cut on a line by the octic.
#[derive(Clone, Debug, PartialEq)]
pub struct LineDivisor<S> {
    pub points: Vec<LineRoot<S>>,
    /// Planes that contain the line.
    pub contained_in: Vec<usize>,
}

impl<S> LineDivisor<S> {
    /// Number of distinct intersection points with odd multiplicity.
    pub fn odd_points(&self) -> usize {
        self.points.iter().filter(|p| p.multiplicity % 2 == 1).count()
    }

    pub fn degree(&self) -> usize {
        self.points.iter().map(|p| p.multiplicity).sum()
    }
}

/// Restrict each plane to the line through `p` and `q`. A plane `h` becomes
/// the binary form `h(p) s + h(q) u`; its root is `(h(q) : -h(p))`.
pub fn restrict_to_line<S: Scalar>(normals: &[[S; 4]], p: &[S; 4], q: &[S; 4]) -> LineDivisor<S> {
    let mut points: Vec<LineRoot<S>> = Vec::new();
    let mut contained_in = Vec::new();
    for (i, n) in normals.iter().enumerate() {
        let alpha = dot(n, p);
        let beta = dot(n, q);
        if alpha.is_zero() && beta.is_zero() {
            contained_in.push(i);
            continue;
        }
        let root = if alpha.is_zero() {
            [S::one(), S::zero()]
        } else {
            [-(beta / alpha), S::one()]
        };
        match points.iter_mut().find(|r| r.root == root) {
            Some(r) => {
                r.multiplicity += 1;
                r.planes.push(i);
            }
            None => points.push(LineRoot {
                root,
                multiplicity: 1,
                planes: vec![i],
            }),
        }
    }
    LineDivisor {
        points,
        contained_in,
    }
}
