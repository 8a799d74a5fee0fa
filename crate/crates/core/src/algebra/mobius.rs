use std::fmt;

use num_traits::{Signed, Zero};

use super::poly::{Monomial, Var};
use super::rational::rational_sqrt;
use super::AlgebraError;
use crate::{QPoly, QRatFunc, Rat};

/// A fractional linear map `tau -> (a tau + b) / (c tau + d)` with
/// rational coefficients and `ad - bc != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mobius {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

/// What the equation `g(tau) = tau` has beyond its rational roots.
#[derive(Clone, Debug, PartialEq)]
pub enum NonRationalRoots {
    /// Two real irrational roots; carries the discriminant.
    RealIrrational(Rat),
    /// A complex-conjugate pair; carries the (negative) discriminant.
    NonReal(Rat),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixedPoints {
    pub rational: Vec<Rat>,
    pub at_infinity: bool,
    pub non_rational: Option<NonRationalRoots>,
}

impl FixedPoints {
    pub fn contains(&self, tau: &Rat) -> bool {
        self.rational.contains(tau)
    }
}

impl Mobius {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Result<Self, AlgebraError> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(AlgebraError::NotMobius("coefficients are proportional".into()));
        }
        Ok(Mobius { a, b, c, d })
    }

    /// Read a degree-one rational function of `var`.
    pub fn from_ratfunc(g: &QRatFunc, var: Var) -> Result<Self, AlgebraError> {
        let linear = |p: &QPoly| -> Result<(Rat, Rat), AlgebraError> {
            let mut lin = Rat::zero();
            let mut cst = Rat::zero();
            for (m, c) in p.terms() {
                if *m == Monomial::ONE {
                    cst = c.clone();
                } else if *m == Monomial::var(var, 1) {
                    lin = c.clone();
                } else {
                    return Err(AlgebraError::NotMobius(format!(
                        "term {m} is not of degree <= 1 in {}",
                        var.name()
                    )));
                }
            }
            Ok((lin, cst))
        };
        let (a, b) = linear(g.num())?;
        let (c, d) = linear(g.den())?;
        Self::new(a, b, c, d)
    }

    pub fn to_ratfunc(&self, var: Var) -> QRatFunc {
        let t = QPoly::var(var);
        let num = &t.scale(&self.a) + &QPoly::constant(self.b.clone());
        let den = &t.scale(&self.c) + &QPoly::constant(self.d.clone());
        QRatFunc::new(num, den).expect("denominator of a Mobius map is nonzero")
    }

    pub fn determinant(&self) -> Rat {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// `g(tau)`, with `None` standing for the point at infinity.
    pub fn apply(&self, tau: &Rat) -> Option<Rat> {
        let den = &self.c * tau + &self.d;
        if den.is_zero() {
            None
        } else {
            Some((&self.a * tau + &self.b) / den)
        }
    }

    /// Image of the homogeneous point `(A : B)` with `tau = A / B`.
    pub fn apply_homogeneous(&self, pa: &Rat, pb: &Rat) -> (Rat, Rat) {
        (&self.a * pa + &self.b * pb, &self.c * pa + &self.d * pb)
    }

    /// Solve `c tau^2 + (d - a) tau - b = 0`.
    pub fn fixed_points(&self) -> Result<FixedPoints, AlgebraError> {
        if self.is_identity() {
            return Err(AlgebraError::Degenerate);
        }
        let qa = self.c.clone();
        let qb = &self.d - &self.a;
        let qc = -self.b.clone();
        if qa.is_zero() {
            // infinity is fixed; at most one finite fixed point
            let rational = if qb.is_zero() {
                Vec::new()
            } else {
                vec![-qc / qb]
            };
            return Ok(FixedPoints {
                rational,
                at_infinity: true,
                non_rational: None,
            });
        }
        let disc = &qb * &qb - Rat::from_integer(4.into()) * &qa * &qc;
        let two_a = Rat::from_integer(2.into()) * &qa;
        if disc.is_negative() {
            return Ok(FixedPoints {
                rational: Vec::new(),
                at_infinity: false,
                non_rational: Some(NonRationalRoots::NonReal(disc)),
            });
        }
        match rational_sqrt(&disc) {
            Some(root) => {
                let mut rational = vec![(-&qb - &root) / &two_a, (-&qb + &root) / &two_a];
                rational.sort();
                rational.dedup();
                Ok(FixedPoints {
                    rational,
                    at_infinity: false,
                    non_rational: None,
                })
            }
            None => Ok(FixedPoints {
                rational: Vec::new(),
                at_infinity: false,
                non_rational: Some(NonRationalRoots::RealIrrational(disc)),
            }),
        }
    }

    /// `g'(tau) = (ad - bc) / (c tau + d)^2`.
    pub fn derivative(&self, tau: &Rat) -> Result<Rat, AlgebraError> {
        let den = &self.c * tau + &self.d;
        if den.is_zero() {
            return Err(AlgebraError::PoleAtPoint);
        }
        Ok(self.determinant() / (&den * &den))
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}*t + {})/({}*t + {})", self.a, self.b, self.c, self.d)
    }
}
