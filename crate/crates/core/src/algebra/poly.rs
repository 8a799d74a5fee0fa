use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Number of variables every polynomial ranges over.
pub const NVARS: usize = 7;

/// The fixed variable set, in term-order precedence (x > y > ... > B).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
    T = 3,
    S = 4,
    A = 5,
    B = 6,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Z, Var::T, Var::S, Var::A, Var::B];
    /// Projective coordinates of P^3.
    pub const COORDS: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "z", "t", "s", "A", "B"][self.index()]
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }

    fn bit(self) -> u8 {
        1 << self.index()
    }
}

/// Set of variables as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VarSet(u8);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);
    pub const PARAMS: VarSet = VarSet((1 << 5) | (1 << 6));
    pub const COORDS: VarSet = VarSet(0b1111);

    pub fn of(vars: &[Var]) -> Self {
        VarSet(vars.iter().fold(0, |acc, v| acc | v.bit()))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & v.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(exps: [u16; NVARS]) -> Self {
        Monomial(exps)
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn exponents(&self) -> &[u16; NVARS] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial(m)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(m))
    }

    pub fn vars(&self) -> VarSet {
        VarSet(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0, |acc, (i, _)| acc | (1 << i)),
        )
    }

    /// Split into the part supported on `vars` and the remainder.
    pub fn split(&self, vars: VarSet) -> (Monomial, Monomial) {
        let mut inside = [0; NVARS];
        let mut outside = [0; NVARS];
        for v in Var::ALL {
            if vars.contains(v) {
                inside[v.index()] = self.exp(v);
            } else {
                outside[v.index()] = self.exp(v);
            }
        }
        (Monomial(inside), Monomial(outside))
    }

    fn with_exp(&self, v: Var, e: u16) -> Monomial {
        let mut m = self.0;
        m[v.index()] = e;
        Monomial(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over a [`Scalar`] field in the variables
/// `x, y, z, t, s, A, B`.
///
/// Terms live in a `BTreeMap` keyed by graded-lex monomials with no zero
/// coefficients, so equality is structural.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Default for MPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

pub(crate) fn scalar_from_u64<C: Scalar>(mut n: u64) -> C {
    let mut acc = C::zero();
    let mut base = C::one();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc + base.clone();
        }
        base = base.clone() + base;
        n >>= 1;
    }
    acc
}

pub(crate) fn scalar_from_i64<C: Scalar>(n: i64) -> C {
    let c = scalar_from_u64::<C>(n.unsigned_abs());
    if n < 0 {
        -c
    } else {
        c
    }
}

impl<C: Scalar> MPoly<C> {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(scalar_from_i64(n))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1), C::one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// The value if this polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v) as u32).max()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn vars(&self) -> VarSet {
        self.terms
            .keys()
            .fold(VarSet::EMPTY, |acc, m| acc.union(m.vars()))
    }

    pub fn is_homogeneous_in(&self, vars: VarSet) -> bool {
        let mut degs = self.terms.keys().map(|m| {
            vars.iter().map(|v| m.exp(v) as u32).sum::<u32>()
        });
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => {
                let inv = C::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self, v: Var) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(v);
            (e > 0).then(|| {
                (
                    m.with_exp(v, e - 1),
                    c.clone() * scalar_from_u64::<C>(e as u64),
                )
            })
        }))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(&lm)?;
            let qc = rc.clone() / lc.clone();
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Replace each variable by a polynomial (`None` keeps the variable).
    pub fn compose(&self, images: &[Option<Self>; NVARS]) -> Self {
        let mut power_cache: Vec<Vec<Self>> = vec![Vec::new(); NVARS];
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = [0u16; NVARS];
            let mut term = Self::one();
            for v in Var::ALL {
                let e = m.exp(v) as usize;
                if e == 0 {
                    continue;
                }
                match &images[v.index()] {
                    None => kept[v.index()] = e as u16,
                    Some(img) => {
                        let cache = &mut power_cache[v.index()];
                        if cache.is_empty() {
                            cache.push(Self::one());
                        }
                        while cache.len() <= e {
                            let next = cache.last().unwrap() * img;
                            cache.push(next);
                        }
                        term = &term * &cache[e];
                    }
                }
            }
            out = &out + &term.mul_monomial(&Monomial::new(kept), c);
        }
        out
    }

    pub fn substitute(&self, v: Var, image: &Self) -> Self {
        let mut images: [Option<Self>; NVARS] = Default::default();
        images[v.index()] = Some(image.clone());
        self.compose(&images)
    }

    /// Substitute constants for the listed variables.
    pub fn eval_vars(&self, values: &[(Var, C)]) -> Self {
        let mut images: [Option<Self>; NVARS] = Default::default();
        for (v, c) in values {
            images[v.index()] = Some(Self::constant(c.clone()));
        }
        self.compose(&images)
    }

    /// Full evaluation at a point.
    pub fn eval(&self, point: &[C; NVARS]) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                for _ in 0..m.exp(v) {
                    t = t * point[v.index()].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn map_coeffs<D: Scalar, F: FnMut(&C) -> D>(&self, mut f: F) -> MPoly<D> {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Coefficients as a polynomial in `v`: entry `k` multiplies `v^k`.
    pub fn to_univariate(&self, v: Var) -> Vec<Self> {
        let deg = match self.degree_in(v) {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut coeffs = vec![Self::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            coeffs[e].add_term(m.with_exp(v, 0), c.clone());
        }
        coeffs
    }

    pub fn from_univariate(coeffs: &[Self], v: Var) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            out = &out + &c.mul_monomial(&Monomial::var(v, k as u16), &C::one());
        }
        out
    }

    /// Group terms by their monomial in `vars`; each value is the cofactor
    /// polynomial in the remaining variables.
    pub fn split_by(&self, vars: VarSet) -> BTreeMap<Monomial, Self> {
        let mut out: BTreeMap<Monomial, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(vars);
            out.entry(inside)
                .or_insert_with(Self::zero)
                .add_term(outside, c.clone());
        }
        out
    }
}

impl<C: Scalar> Zero for MPoly<C> {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> One for MPoly<C> {
    fn one() -> Self {
        MPoly::one()
    }
}

impl<C: Scalar> From<Var> for MPoly<C> {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl<'a, C: Scalar> Add<&'a MPoly<C>> for &'a MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: &MPoly<C>) -> MPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a, C: Scalar> Sub<&'a MPoly<C>> for &'a MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: &MPoly<C>) -> MPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a, C: Scalar> Mul<&'a MPoly<C>> for &'a MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: &MPoly<C>) -> MPoly<C> {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<C: Scalar> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<C: Scalar> $tr<MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $method(self, rhs: MPoly<C>) -> MPoly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, C: Scalar> $tr<&'a MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $method(self, rhs: &MPoly<C>) -> MPoly<C> {
                (&self).$method(rhs)
            }
        }
        impl<'a, C: Scalar> $tr<MPoly<C>> for &'a MPoly<C> {
            type Output = MPoly<C>;
            fn $method(self, rhs: MPoly<C>) -> MPoly<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Scalar + fmt::Display> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut cs = c.to_string();
            let negative = cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let is_unit = cs == "1";
            if *m == Monomial::ONE {
                write!(f, "{cs}")?;
            } else if is_unit {
                write!(f, "{m}")?;
            } else if cs.contains('/') {
                write!(f, "({cs})*{m}")?;
            } else {
                write!(f, "{cs}*{m}")?;
            }
        }
        Ok(())
    }
}
