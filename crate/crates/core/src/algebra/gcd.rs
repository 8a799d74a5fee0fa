//! Multivariate gcd by recursive primitive pseudo-remainder sequences.
//!
//! A polynomial is viewed as univariate in one of its variables with
//! coefficients in the ring of the remaining ones; contents are computed
//! recursively. Inputs in this crate have small degree, so the coefficient
//! growth of the primitive PRS is not a concern.

use super::poly::MPoly;
use crate::scalar::Scalar;

fn univ_degree<C: Scalar>(u: &[MPoly<C>]) -> Option<usize> {
    u.iter().rposition(|c| !c.is_zero())
}

fn trim<C: Scalar>(u: &mut Vec<MPoly<C>>) {
    while u.last().map(|c| c.is_zero()).unwrap_or(false) {
        u.pop();
    }
}

/// Pseudo-remainder of `f` by `g` (up to a power of `lc(g)`).
fn pseudo_rem<C: Scalar>(f: &[MPoly<C>], g: &[MPoly<C>]) -> Vec<MPoly<C>> {
    let dg = univ_degree(g).expect("pseudo-division by zero");
    let lg = &g[dg];
    let mut r: Vec<MPoly<C>> = f.to_vec();
    trim(&mut r);
    while let Some(dr) = univ_degree(&r) {
        if dr < dg {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - dg;
        let mut next: Vec<MPoly<C>> = r.iter().map(|c| c * lg).collect();
        for (k, gc) in g.iter().enumerate() {
            next[k + shift] = &next[k + shift] - &(gc * &lr);
        }
        r = next;
        trim(&mut r);
    }
    r
}

fn content<C: Scalar>(u: &[MPoly<C>]) -> MPoly<C> {
    u.iter()
        .filter(|c| !c.is_zero())
        .fold(MPoly::zero(), |acc, c| {
            if acc.is_one() {
                acc
            } else {
                acc.gcd(c)
            }
        })
}

fn primitive_part<C: Scalar>(u: &[MPoly<C>]) -> (MPoly<C>, Vec<MPoly<C>>) {
    let c = content(u);
    if c.is_zero() {
        return (c, Vec::new());
    }
    let pp: Vec<MPoly<C>> = u
        .iter()
        .map(|x| x.div_exact(&c).expect("content divides every coefficient"))
        .collect();
    // The content above only sees polynomial factors; strip the scalar one
    // too, or the PRS accumulates constants.
    let scalars: Vec<&C> = pp.iter().flat_map(|x| x.terms().map(|(_, c)| c)).collect();
    let inv = C::one() / C::normalizer(&scalars);
    (c, pp.iter().map(|x| x.scale(&inv)).collect())
}

impl<C: Scalar> MPoly<C> {
    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        let vars = self.vars().union(other.vars());
        // Prefer a variable present in both, of least degree (the PRS is
        // cheap in short variables); otherwise the gcd lies in the
        // coefficient ring and content recursion handles it.
        let main = vars
            .iter()
            .filter(|&v| self.vars().contains(v) && other.vars().contains(v))
            .min_by_key(|&v| self.degree_in(v).max(other.degree_in(v)))
            .unwrap_or_else(|| vars.iter().next().unwrap());

        let (ca, mut pa) = primitive_part(&self.to_univariate(main));
        let (cb, mut pb) = primitive_part(&other.to_univariate(main));
        let c = ca.gcd(&cb);

        if univ_degree(&pa) < univ_degree(&pb) {
            std::mem::swap(&mut pa, &mut pb);
        }
        while univ_degree(&pb).map(|d| d > 0).unwrap_or(false) {
            let r = pseudo_rem(&pa, &pb);
            pa = pb;
            pb = if r.is_empty() {
                Vec::new()
            } else {
                primitive_part(&r).1
            };
        }
        let g = match univ_degree(&pb) {
            // pb is a nonzero constant in `main`: primitive, so a unit
            Some(0) => Self::one(),
            _ => Self::from_univariate(&primitive_part(&pa).1, main),
        };
        (&c * &g).monic()
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        (self * &other.div_exact(&g).expect("gcd divides")).monic()
    }

    /// Product of the distinct irreducible factors (monic), in characteristic 0.
    pub fn radical(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.clone();
        for v in self.vars().iter() {
            g = g.gcd(&self.derivative(v));
        }
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Monic product of the irreducible factors that occur to an odd power,
    /// in characteristic 0.
    pub fn odd_multiplicity_part(&self) -> Self {
        let mut rest = self.monic();
        let mut radicals = Vec::new();
        while !rest.is_constant() {
            let r = rest.radical();
            rest = rest.div_exact(&r).expect("radical divides");
            radicals.push(r);
        }
        radicals.push(Self::one());
        // Factors of multiplicity exactly k are radicals[k-1] / radicals[k].
        let mut out = Self::one();
        for k in (0..radicals.len() - 1).step_by(2) {
            let exact = radicals[k]
                .div_exact(&radicals[k + 1])
                .expect("radical chain is divisibility-ordered");
            out = &out * &exact;
        }
        out.monic()
    }
}
