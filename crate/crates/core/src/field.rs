//! Exact coefficient fields: the rationals and the two-element field.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a structure is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "GF2")]
    Gf2,
}

impl FieldKind {
    pub fn characteristic(self) -> u64 {
        match self {
            FieldKind::Rational => 0,
            FieldKind::Gf2 => 2,
        }
    }
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Gf2 => write!(f, "GF2"),
        }
    }
}

/// An exact field. All arithmetic is by reference and returns fresh values.
pub trait Field: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    const KIND: FieldKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Parses a coefficient literal (`"-3/4"`, `"2"`, or `"0"`/`"1"` over GF(2)).
    fn parse(s: &str) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `(-1)^k`.
    fn sign(negative: bool) -> Self {
        if negative {
            Self::one().neg()
        } else {
            Self::one()
        }
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.mul(&inv))
    }
}

/// A rational number in lowest terms with positive denominator.
///
/// Small values stay in machine words; anything that would overflow is
/// promoted to an arbitrary-precision fraction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        if num == 0 {
            return Rational(Repr::Small(0, 1));
        }
        let g = {
            let (mut a, mut b) = (num.unsigned_abs(), den.unsigned_abs());
            while b != 0 {
                let t = a % b;
                a = b;
                b = t;
            }
            a as i128
        };
        num /= g;
        den /= g;
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) if n != i64::MIN => Rational(Repr::Small(n, d)),
            _ => Self::from_big(BigRational::new(BigInt::from(num), BigInt::from(den))),
        }
    }

    fn from_big(b: BigRational) -> Self {
        use num_traits::ToPrimitive;
        if let (Some(n), Some(d)) = (b.numer().to_i64(), b.denom().to_i64()) {
            if n != i64::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(Box::new(b)))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer_denom(&self) -> (BigInt, BigInt) {
        match &self.0 {
            Repr::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (b.numer().clone(), b.denom().clone()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }
}

impl Field for Rational {
    const KIND: FieldKind = FieldKind::Rational;

    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    fn from_i64(n: i64) -> Self {
        Rational::new(n, 1)
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    fn add(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if b == d {
                    return Self::from_i128(*a as i128 + *c as i128, *b as i128);
                }
                let g = gcd_u64(b.unsigned_abs(), d.unsigned_abs()) as i128;
                let (b, d) = (*b as i128, *d as i128);
                let num = *a as i128 * (d / g) + *c as i128 * (b / g);
                match (b / g).checked_mul(d) {
                    Some(den) => Self::from_i128(num, den),
                    None => Self::from_big(self.to_big() + other.to_big()),
                }
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small(a, b) => Rational(Repr::Small(-a, *b)),
            Repr::Big(x) => Self::from_big(-(**x).clone()),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(a, b) => Self::from_i128(*b as i128, *a as i128),
            Repr::Big(x) => Self::from_big(x.recip()),
        })
    }

    fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
        if t.contains(['.', 'e', 'E']) {
            return Err(bad());
        }
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Self::from_big(BigRational::new(num, den)))
    }
}

impl Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

/// The field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf2(pub bool);

impl Field for Gf2 {
    const KIND: FieldKind = FieldKind::Gf2;

    fn zero() -> Self {
        Gf2(false)
    }
    fn one() -> Self {
        Gf2(true)
    }
    fn from_i64(n: i64) -> Self {
        Gf2(n.rem_euclid(2) == 1)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn add(&self, other: &Self) -> Self {
        Gf2(self.0 ^ other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Gf2(self.0 ^ other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Gf2(self.0 & other.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn inv(&self) -> Option<Self> {
        self.0.then_some(*self)
    }
    fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "0" => Ok(Gf2(false)),
            "1" => Ok(Gf2(true)),
            other => Err(Error::Parse(format!("invalid GF2 literal {other:?} (expected 0 or 1)"))),
        }
    }
}

impl Debug for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn lowest_terms_and_sign() {
        let q = Rational::new(6, -4);
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(Rational::parse(" -6/4 ").unwrap(), q);
        assert_eq!(Rational::parse("+2").unwrap(), Rational::from_i64(2));
        assert!(Rational::parse("0.5").is_err());
        assert!(Rational::parse("1/0").is_err());
    }

    #[test]
    fn overflow_promotes() {
        let a = Rational::new(i64::MAX, 1);
        let b = a.add(&a);
        assert_eq!(b.to_big(), big(i64::MAX, 1) * BigInt::from(2));
        assert_eq!(b.sub(&a), a);
        let c = a.mul(&a).mul(&a.inv().unwrap());
        assert_eq!(c, a);
    }

    #[test]
    fn gf2_arithmetic() {
        let one = Gf2::one();
        assert!(one.add(&one).is_zero());
        assert_eq!(one.neg(), one);
        assert_eq!(Gf2::from_i64(-3), one);
        assert!(Gf2::zero().inv().is_none());
        assert!(Gf2::parse("2").is_err());
    }

    proptest! {
        #[test]
        fn rational_matches_bigrational(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!(x.add(&y).to_big(), big(a, b) + big(c, d));
            prop_assert_eq!(x.mul(&y).to_big(), big(a, b) * big(c, d));
            prop_assert_eq!(x.sub(&y).to_big(), big(a, b) - big(c, d));
            if c != 0 {
                prop_assert_eq!(x.div(&y).unwrap().to_big(), big(a, b) / big(c, d));
            }
        }
    }
}
