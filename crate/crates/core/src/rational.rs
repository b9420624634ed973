//! Exact rational numbers.
//!
//! Values that fit in a pair of `i64` stay on a machine-word fast path; anything
//! larger is promoted to a [`BigRational`]. The representation is canonical:
//! a value is stored as `Small` whenever it fits, the denominator is positive
//! and numerator and denominator are coprime. Structural equality is therefore
//! value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    // invariant: den > 0, gcd(|num|, den) = 1, num != i64::MIN
    Small { num: i64, den: i64 },
    // invariant: does not fit the small form
    Big(BigRational),
}

/// An exact rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small { num: 0, den: 1 })
    }

    pub fn one() -> Self {
        Rational(Repr::Small { num: 1, den: 1 })
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    /// Builds `num / den`. Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::normalize_big(BigRational::new(num, den))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let neg = (num < 0) != (den < 0);
        let (un, ud) = (num.unsigned_abs(), den.unsigned_abs());
        let g = gcd_u128(un, ud);
        let (un, ud) = (un / g, ud / g);
        if un <= i64::MAX as u128 && ud <= i64::MAX as u128 {
            let n = un as i64;
            return Rational(Repr::Small {
                num: if neg { -n } else { n },
                den: ud as i64,
            });
        }
        let n = BigInt::from(un);
        let n = if neg { -n } else { n };
        Rational(Repr::Big(BigRational::new_raw(n, BigInt::from(ud))))
    }

    fn normalize_big(r: BigRational) -> Self {
        // BigRational::new already reduced; check whether it fits the fast path.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational(Repr::Small { num: n, den: d }),
            _ => Rational(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }

    pub fn is_integer(&self) -> bool {
        matches!(self.0, Repr::Small { den: 1, .. })
            || matches!(&self.0, Repr::Big(b) if b.is_integer())
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        match &self.0 {
            Repr::Small { num, den } => {
                assert!(*num != 0, "division by zero");
                Self::from_i128(*den as i128, *num as i128)
            }
            Repr::Big(b) => Self::normalize_big(b.recip()),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Self::from_integer(n as i64)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Self::normalize_big(r)
    }
}

impl From<&Rational> for BigRational {
    fn from(r: &Rational) -> Self {
        r.to_big()
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: 0, .. }, _) => rhs.clone(),
            (_, Repr::Small { num: 0, .. }) => self.clone(),
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                if b == d {
                    Rational::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    // |a*d| + |c*b| < 2^127 since every factor is below 2^63
                    Rational::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rational::normalize_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: 0, .. }, _) | (_, Repr::Small { num: 0, .. }) => Rational::zero(),
            (Repr::Small { num: 1, den: 1 }, _) => rhs.clone(),
            (_, Repr::Small { num: 1, den: 1 }) => self.clone(),
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                // cross-reduce first so the product stays small when it can
                let g1 = (*a).unsigned_abs().gcd(&(*d as u64)) as i64;
                let g2 = (*c).unsigned_abs().gcd(&(*b as u64)) as i64;
                let n = (*a / g1) as i128 * (*c / g2) as i128;
                let m = (*b / g2) as i128 * (*d / g1) as i128;
                Rational::from_i128(n, m)
            }
            _ => Rational::normalize_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a Rational) -> Rational {
        self * &rhs.recip()
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => Rational(Repr::Small { num: -num, den: *den }),
            Repr::Big(b) => Rational::normalize_big(-b.clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error returned when a string is not of the form `p` or `p/q`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let valid_int = |t: &str| {
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        if !valid_int(n) || d.is_some_and(|d| !valid_int(d) || d.starts_with(['-', '+'])) {
            return Err(err());
        }
        let num: BigInt = n.parse().map_err(|_| err())?;
        let den: BigInt = match d {
            Some(d) => d.parse().map_err(|_| err())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(err());
        }
        Ok(Rational::from_big(num, den))
    }
}
