use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::MPoly;
use crate::scalar::Scalar;

/// Commutative ring element, as needed for 4x4 matrix arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Division that is only defined when the quotient exists in the ring.
pub trait ExactDiv: Sized {
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

impl<S: Scalar> ExactDiv for S {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self.clone() / d.clone())
    }
}

impl<C: Scalar> ExactDiv for MPoly<C> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        MPoly::div_exact(self, d)
    }
}

/// A 4x4 matrix; row `i` lists the coefficients of the `i`-th image
/// coordinate, so a map `(x,y,z,t) -> (Ay+Az, ...)` has first row `(0,A,A,0)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat4<T> {
    rows: [[T; 4]; 4],
}

impl<T: Ring> Mat4<T> {
    pub fn from_rows(rows: [[T; 4]; 4]) -> Self {
        Mat4 { rows }
    }

    pub fn identity() -> Self {
        Self::diagonal([T::one(), T::one(), T::one(), T::one()])
    }

    pub fn diagonal(d: [T; 4]) -> Self {
        let mut rows: [[T; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| T::zero()));
        for (i, v) in d.into_iter().enumerate() {
            rows[i][i] = v;
        }
        Mat4 { rows }
    }

    pub fn rows(&self) -> &[[T; 4]; 4] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn map<U: Ring, F: FnMut(&T) -> U>(&self, mut f: F) -> Mat4<U> {
        Mat4 {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| f(&self.rows[i][j]))),
        }
    }

    pub fn try_map<U: Ring, E, F: FnMut(&T) -> Result<U, E>>(&self, mut f: F) -> Result<Mat4<U>, E> {
        let mut out: [[Option<U>; 4]; 4] = Default::default();
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] = Some(f(&self.rows[i][j])?);
            }
        }
        Ok(Mat4 {
            rows: out.map(|r| r.map(|e| e.unwrap())),
        })
    }

    pub fn transpose(&self) -> Self {
        Mat4 {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| self.rows[j][i].clone())),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|e| e.clone() * c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Mat4 {
            rows: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..4).fold(T::zero(), |acc, k| {
                        acc + self.rows[i][k].clone() * other.rows[k][j].clone()
                    })
                })
            }),
        }
    }

    /// `M v` for a column vector (image of a point).
    pub fn apply(&self, v: &[T; 4]) -> [T; 4] {
        std::array::from_fn(|i| {
            (0..4).fold(T::zero(), |acc, k| acc + self.rows[i][k].clone() * v[k].clone())
        })
    }

    /// `h M` for a row vector: the linear form `h` pulled back along the map.
    pub fn pull_back(&self, h: &[T; 4]) -> [T; 4] {
        std::array::from_fn(|j| {
            (0..4).fold(T::zero(), |acc, k| acc + h[k].clone() * self.rows[k][j].clone())
        })
    }

    /// `Some(c)` when the matrix equals `c * I`.
    pub fn as_scalar(&self) -> Option<T> {
        let c = self.rows[0][0].clone();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { c.clone() } else { T::zero() };
                if self.rows[i][j] != expect {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar().map(|c| c.is_one()).unwrap_or(false)
    }
}

impl<T: Ring + ExactDiv> Mat4<T> {
    /// Fraction-free (Bareiss) elimination; every division is exact.
    pub fn det(&self) -> T {
        let mut m = self.rows.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..3 {
            if m[k][k].is_zero() {
                match (k + 1..4).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..4 {
                for j in k + 1..4 {
                    let cross = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                    m[i][j] = cross
                        .div_exact(&prev)
                        .expect("Bareiss division is exact");
                }
                m[i][k] = T::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[3][3].clone();
        if negate {
            -d
        } else {
            d
        }
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Mat4<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "[{}, {}, {}, {}]", row[0], row[1], row[2], row[3])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Var;
    use crate::{PMatrix, QMatrix, QPoly, Rat};

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn identity_det_is_one() {
        assert!(QMatrix::identity().det().is_one());
        assert!(PMatrix::identity().det().is_one());
    }

    #[test]
    fn det_needs_pivoting() {
        let m = QMatrix::from_rows([
            [r(0), r(0), r(0), r(1)],
            [r(0), r(0), r(-1), r(0)],
            [r(0), r(-1), r(0), r(0)],
            [r(1), r(0), r(0), r(0)],
        ]);
        assert_eq!(m.det(), r(1));
    }

    #[test]
    fn singular_det_is_zero() {
        let m = QMatrix::from_rows([
            [r(1), r(2), r(3), r(4)],
            [r(2), r(4), r(6), r(8)],
            [r(0), r(1), r(0), r(0)],
            [r(0), r(0), r(0), r(1)],
        ]);
        assert_eq!(m.det(), r(0));
    }

    #[test]
    fn pull_back_matches_composition() {
        let a = QPoly::var(Var::A);
        let m = PMatrix::from_rows([
            [QPoly::zero(), a.clone(), a.clone(), QPoly::zero()],
            [QPoly::zero(), -a.clone(), QPoly::zero(), QPoly::zero()],
            [a.clone(), a.clone(), QPoly::zero(), QPoly::zero()],
            [QPoly::zero(), QPoly::zero(), QPoly::zero(), QPoly::var(Var::B)],
        ]);
        let h = [QPoly::one(), QPoly::one(), QPoly::zero(), QPoly::zero()];
        // (x + y) after the map: (Ay + Az) + (-Ay) = Az
        let pulled = m.pull_back(&h);
        assert_eq!(pulled, [QPoly::zero(), QPoly::zero(), a, QPoly::zero()]);
    }
}
