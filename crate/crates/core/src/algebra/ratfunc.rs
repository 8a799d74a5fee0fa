use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::{MPoly, Var};
use super::AlgebraError;
use crate::scalar::Scalar;

/// Quotient of two polynomials, kept reduced with a monic denominator.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<C> {
    num: MPoly<C>,
    den: MPoly<C>,
}

impl<C: Scalar> RatFunc<C> {
    pub fn new(num: MPoly<C>, den: MPoly<C>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading_coeff().cloned().expect("nonzero denominator");
        let inv = C::one() / lc;
        Ok(RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        RatFunc {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(MPoly::one())
    }

    pub fn from_poly(p: MPoly<C>) -> Self {
        RatFunc {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(MPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MPoly::var(v))
    }

    pub fn num(&self) -> &MPoly<C> {
        &self.num
    }

    pub fn den(&self) -> &MPoly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn as_poly(&self) -> Option<&MPoly<C>> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<C> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Substitute constants; fails if the denominator vanishes.
    pub fn eval_vars(&self, values: &[(Var, C)]) -> Result<Self, AlgebraError> {
        let den = self.den.eval_vars(values);
        if den.is_zero() {
            return Err(AlgebraError::PoleAtPoint);
        }
        Self::new(self.num.eval_vars(values), den)
    }

    pub fn derivative(&self, v: Var) -> Self {
        let n = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        Self::new(n, self.den.pow(2)).expect("denominator squared is nonzero")
    }
}

impl<C: Scalar> From<MPoly<C>> for RatFunc<C> {
    fn from(p: MPoly<C>) -> Self {
        Self::from_poly(p)
    }
}

impl<'a, C: Scalar> Add<&'a RatFunc<C>> for &'a RatFunc<C> {
    type Output = RatFunc<C>;
    fn add(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators")
    }
}

impl<'a, C: Scalar> Sub<&'a RatFunc<C>> for &'a RatFunc<C> {
    type Output = RatFunc<C>;
    fn sub(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        self + &(-rhs)
    }
}

impl<'a, C: Scalar> Mul<&'a RatFunc<C>> for &'a RatFunc<C> {
    type Output = RatFunc<C>;
    fn mul(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl<'a, C: Scalar> Div<&'a RatFunc<C>> for &'a RatFunc<C> {
    type Output = RatFunc<C>;
    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl<C: Scalar> Neg for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn neg(self) -> RatFunc<C> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, QRatFunc};

    fn a() -> QPoly {
        QPoly::var(Var::A)
    }
    fn b() -> QPoly {
        QPoly::var(Var::B)
    }

    #[test]
    fn reduces_common_factors() {
        let r = QRatFunc::new(a() * (a() - b()), QPoly::from_i64(2) * a() * b()).unwrap();
        assert_eq!(r.num(), &(a() - b()).scale(&crate::Rat::new(1.into(), 2.into())));
        assert_eq!(r.den(), &b());
    }

    #[test]
    fn arithmetic_identities() {
        let r = QRatFunc::new(a(), b()).unwrap();
        let s = QRatFunc::new(b(), a() + b()).unwrap();
        assert!((&(&(&r * &s) / &s) - &r).is_zero());
        assert!((&r / &r).is_one());
        let sum = &r + &s;
        assert_eq!(&sum - &s, r);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            QRatFunc::new(a(), QPoly::zero()),
            Err(AlgebraError::ZeroDenominator)
        ));
    }

    #[test]
    fn quotient_rule() {
        let s = QPoly::var(Var::S);
        let g = QRatFunc::new(QPoly::one(), s.clone()).unwrap();
        let d = g.derivative(Var::S);
        assert_eq!(d, QRatFunc::new(QPoly::from_i64(-1), s.pow(2)).unwrap());
    }
}
