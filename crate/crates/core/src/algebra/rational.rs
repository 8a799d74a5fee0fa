//! Operations specific to rational coefficients: integer content, twist
//! classes modulo squares, and proportionality tests.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{MPoly, VarSet};
use super::ratfunc::RatFunc;
use super::AlgebraError;
use crate::scalar::Scalar;
use crate::{QPoly, QRatFunc, Rat};

/// Split `f = c * g` with `g` having coprime integer coefficients and a
/// positive leading coefficient. Returns `(c, g)`; zero maps to `(0, 0)`.
pub fn primitive_integer(f: &QPoly) -> (Rat, QPoly) {
    let Some(lc) = f.leading_coeff() else {
        return (Rat::zero(), QPoly::zero());
    };
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for (_, c) in f.terms() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut content = Rat::new(num_gcd, den_lcm);
    if lc.is_negative() {
        content = -content;
    }
    let inv = content.recip();
    (content, f.scale(&inv))
}

/// Odd-exponent part of `|n|`: the squarefree integer equal to `|n|` modulo
/// squares. Trial division runs to 10^6; a leftover cofactor below 10^18 is
/// then exactly classified (it is a prime, a prime square, or a product of
/// two primes). Larger leftovers are assumed squarefree unless they are
/// perfect squares.
pub fn squarefree_integer(n: &BigInt) -> BigInt {
    let mut rest = n.abs();
    if rest.is_zero() {
        return rest;
    }
    let mut out = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= rest && p <= limit {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        let r = rest.sqrt();
        if &r * &r != rest {
            out *= rest;
        }
    }
    out
}

/// Twist class of a nonzero polynomial modulo nonzero rational squares.
///
/// The result is `sign * n * g` where `g` is the product of the irreducible
/// factors of odd multiplicity (integer-primitive, positive leading
/// coefficient), `n` is the squarefree part of the rational content, and
/// `sign` is the sign of the content.
pub fn squarefree_part(f: &QPoly) -> Result<QPoly, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    // f = lc(f) * odd * h^2 with odd and h monic
    let lead = f.leading_coeff().expect("nonzero").clone();
    let odd = f.monic().odd_multiplicity_part();
    let (odd_content, odd_prim) = primitive_integer(&odd);
    let scalar = &lead * &odd_content;
    let class = squarefree_integer(&(scalar.numer() * scalar.denom()));
    let signed = if scalar.numer().sign() == Sign::Minus {
        -class
    } else {
        class
    };
    Ok(odd_prim.scale(&Rat::from_integer(signed)))
}

/// Twist class of a rational function: `num/den` and `num*den` agree modulo
/// squares.
pub fn squarefree_class(r: &QRatFunc) -> Result<QPoly, AlgebraError> {
    squarefree_part(&(r.num() * r.den()))
}

/// Whether two twist classes agree modulo squares.
pub fn same_square_class(a: &QPoly, b: &QPoly) -> Result<bool, AlgebraError> {
    Ok(squarefree_part(&(a * b))?.is_one())
}

/// Find `mu`, free of `x, y, z, t, s`, with `g = mu * f`.
pub fn constant_ratio<C: Scalar>(f: &MPoly<C>, g: &MPoly<C>) -> Result<RatFunc<C>, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let geometric = VarSet::of(&[
        super::Var::X,
        super::Var::Y,
        super::Var::Z,
        super::Var::T,
        super::Var::S,
    ]);
    let fs = f.split_by(geometric);
    let (key, fc) = fs.iter().next_back().expect("nonzero f");
    let gc = g.split_by(geometric).remove(key).unwrap_or_else(MPoly::zero);
    let mu = RatFunc::new(gc, fc.clone())?;
    if &(g * mu.den()) == &(f * mu.num()) {
        Ok(mu)
    } else {
        Err(AlgebraError::NotProportional)
    }
}

/// Whether a rational number is the square of a rational; returns the
/// nonnegative root.
pub fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rat::new(n, d))
}
