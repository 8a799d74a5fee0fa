//! Dense linear algebra over an exact field, sized for P^3 incidence work.

use crate::scalar::Scalar;

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
pub fn rref<S: Scalar>(rows: &[Vec<S>]) -> (Vec<Vec<S>>, Vec<usize>) {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let ncols = m.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = S::one() / m[r][col].clone();
        for e in m[r].iter_mut() {
            *e = e.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..ncols {
                    let sub = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    rref(rows).1.len()
}

/// Basis of `{ v : row . v = 0 for every row }`, in reduced echelon form.
pub fn kernel<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let (red, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<Vec<S>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![S::zero(); ncols];
            v[f] = S::one();
            for (row, &pc) in red.iter().zip(pivots.iter()) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect();
    if basis.is_empty() {
        return basis;
    }
    rref(&basis).0
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Scale so that the first nonzero coordinate is 1.
pub fn normalize_projective<S: Scalar>(v: &[S]) -> Option<Vec<S>> {
    let lead = v.iter().find(|e| !e.is_zero())?.clone();
    Some(v.iter().map(|e| e.clone() / lead.clone()).collect())
}

/// `Some(c)` with `b = c a` when the two vectors are proportional and `a != 0`.
pub fn proportionality<S: Scalar>(a: &[S], b: &[S]) -> Option<S> {
    let i = a.iter().position(|e| !e.is_zero())?;
    let c = b[i].clone() / a[i].clone();
    a.iter()
        .zip(b)
        .all(|(x, y)| c.clone() * x.clone() == *y)
        .then_some(c)
}

/// Whether every vector of `sub` lies in the row span of `space`.
pub fn span_contains<S: Scalar>(space: &[Vec<S>], sub: &[Vec<S>]) -> bool {
    let base = rank(space);
    let mut all = space.to_vec();
    all.extend_from_slice(sub);
    rank(&all) == base
}
