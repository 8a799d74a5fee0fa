//! Scalar fields the exact algebra is generic over.
//!
//! Everything in [`crate::algebra`] works over any type implementing
//! [`Scalar`]: a field with exact equality. The crate uses two instances,
//! arbitrary-precision rationals ([`crate::Rat`]) and prime-field residues
//! ([`Fp`]), the latter for reductions of arrangements modulo good primes.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rat;

/// An exact field element.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// A unit `c` such that dividing every entry of `values` by `c` gives a
    /// canonical scaling; for the rationals this is the signed content, so
    /// the result has coprime integer entries. `values` must contain a
    /// nonzero entry; the last nonzero one is treated as leading.
    fn normalizer(values: &[&Self]) -> Self {
        values
            .iter()
            .rev()
            .find(|v| !v.is_zero())
            .map(|v| (*v).clone())
            .expect("a nonzero value")
    }
}

impl Scalar for Rat {
    fn normalizer(values: &[&Self]) -> Self {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for v in values {
            num = num.gcd(v.numer());
            den = den.lcm(v.denom());
        }
        let lead = values.iter().rev().find(|v| !v.is_zero()).expect("a nonzero value");
        let c = Rat::new(num, den);
        if lead.is_negative() {
            -c
        } else {
            c
        }
    }
}

impl Scalar for Fp {}

/// Residue modulo an odd prime.
///
/// `Zero::zero()` and `One::one()` cannot know the modulus, so they produce
/// *unbound* small integers (modulus 0). An unbound value adopts the modulus
/// of whatever bound value it is combined with. Combining residues of two
/// different primes panics.
#[derive(Clone, Copy)]
pub struct Fp {
    value: i64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let m = modulus as i64;
        Self {
            value: value.rem_euclid(m),
            modulus,
        }
    }

    /// Reduce a rational number; `None` when p divides the denominator.
    pub fn from_rat(r: &Rat, modulus: u64) -> Option<Self> {
        let m = BigInt::from(modulus);
        let num = r.numer().mod_floor(&m).to_i64()?;
        let den = r.denom().mod_floor(&m).to_i64()?;
        if den == 0 {
            return None;
        }
        Some(Self::new(num, modulus) / Self::new(den, modulus))
    }

    /// Canonical representative in `[0, p)`; unbound values are returned raw.
    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn join(self, other: Self) -> (i64, i64, u64) {
        let m = match (self.modulus, other.modulus) {
            (0, m) | (m, 0) => m,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing residues modulo {a} and {b}"),
        };
        if m == 0 {
            (self.value, other.value, 0)
        } else {
            let mi = m as i64;
            (self.value.rem_euclid(mi), other.value.rem_euclid(mi), m)
        }
    }

    fn bound(value: i128, modulus: u64) -> Self {
        if modulus == 0 {
            Self {
                value: i64::try_from(value).expect("unbound residue overflow"),
                modulus: 0,
            }
        } else {
            let m = modulus as i128;
            Self {
                value: value.rem_euclid(m) as i64,
                modulus,
            }
        }
    }

    pub fn inverse(self) -> Option<Self> {
        if self.modulus == 0 {
            return match self.value {
                1 | -1 => Some(self),
                _ => None,
            };
        }
        let m = self.modulus as i64;
        let g = self.value.extended_gcd(&m);
        (g.gcd == 1).then(|| Self::new(g.x, self.modulus))
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} (mod {})", self.value, self.modulus)
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.join(*other);
        a == b
    }
}

impl Eq for Fp {}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (a, b, m) = self.join(rhs);
        Fp::bound(a as i128 + b as i128, m)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let (a, b, m) = self.join(rhs);
        Fp::bound(a as i128 - b as i128, m)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let (a, b, m) = self.join(rhs);
        Fp::bound(a as i128 * b as i128, m)
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        let (a, b, m) = self.join(rhs);
        if m == 0 {
            assert!(b != 0 && a % b == 0, "inexact division of unbound residues");
            return Fp::bound((a / b) as i128, 0);
        }
        let inv = Fp::new(b, m).inverse().expect("division by zero residue");
        Fp::new(a, m) * inv
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::bound(-(self.value as i128), self.modulus)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }
    fn is_zero(&self) -> bool {
        if self.modulus == 0 {
            self.value == 0
        } else {
            self.value.rem_euclid(self.modulus as i64) == 0
        }
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
