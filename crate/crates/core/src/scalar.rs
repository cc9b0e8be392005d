//! Exact scalar fields.
//!
//! Everything above this module is generic over [`Field`]. Two fields are
//! provided: arbitrary precision rationals ([`Rational`]) and a prime field
//! [`Fp`] whose modulus is chosen once per process.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// Arbitrary precision rational numbers.
pub type Rational = BigRational;

/// An exact field. Rank decisions made over a `Field` are never approximate.
pub trait Field:
    Num + Neg<Output = Self> + Clone + Eq + std::hash::Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inverse(&self) -> Self;

    /// `self -= a * b`
    fn sub_mul(&mut self, a: &Self, b: &Self);

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self);

    fn mul_ref(&self, other: &Self) -> Self;

    /// Integer value if the element is (the image of) a small integer.
    fn to_int(&self) -> Option<i64>;

    /// Lossless JSON representation: an integer when possible, otherwise a
    /// string such as `"-3/4"`.
    fn to_json(&self) -> serde_json::Value {
        match self.to_int() {
            Some(v) => serde_json::Value::from(v),
            None => serde_json::Value::from(self.to_string()),
        }
    }

    /// Short name used in reports.
    fn field_name() -> String;
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn sub_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self -= a * b;
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += a * b;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn to_int(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn field_name() -> String {
        "rational".to_string()
    }
}

/// Default modulus for the prime field mode.
pub const DEFAULT_PRIME: u64 = 32003;

static MODULUS: AtomicU64 = AtomicU64::new(DEFAULT_PRIME);

/// Errors from [`set_prime`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PrimeError {
    #[error("{0} is not a prime greater than 2")]
    NotOddPrime(u64),
    #[error("prime {0} is too large (must be below 2^31)")]
    TooLarge(u64),
}

/// Selects the modulus used by every [`Fp`] value in this process.
///
/// Must be called before any `Fp` arithmetic happens; values created under a
/// different modulus are meaningless afterwards.
pub fn set_prime(p: u64) -> Result<(), PrimeError> {
    if p >= 1 << 31 {
        return Err(PrimeError::TooLarge(p));
    }
    if p <= 2 || !is_prime(p) {
        return Err(PrimeError::NotOddPrime(p));
    }
    MODULUS.store(p, Ordering::SeqCst);
    Ok(())
}

/// Current prime modulus.
pub fn prime() -> u64 {
    MODULUS.load(Ordering::Relaxed)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of the prime field `Z/pZ`, `p = prime()`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u32);

impl Fp {
    pub fn new(v: i64) -> Self {
        let p = prime() as i64;
        Fp(v.rem_euclid(p) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let p = prime();
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Fp {
    /// Prints the symmetric representative, so `-1` shows as `-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = prime();
        let v = self.0 as u64;
        if v > p / 2 {
            write!(f, "-{}", p - v)
        } else {
            write!(f, "{}", v)
        }
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        Fp(((self.0 as u64 + rhs.0 as u64) % prime()) as u32)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let p = prime();
        Fp(((self.0 as u64 + p - rhs.0 as u64) % p) as u32)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp((self.0 as u64 * rhs.0 as u64 % prime()) as u32)
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inverse()
    }
}

impl Rem for Fp {
    type Output = Fp;
    /// Every nonzero element divides every other, so the remainder is zero.
    fn rem(self, rhs: Fp) -> Fp {
        assert!(rhs.0 != 0, "remainder by zero");
        Fp(0)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.0 == 0 {
            self
        } else {
            Fp((prime() - self.0 as u64) as u32)
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp(1)
    }
}

impl Num for Fp {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl Field for Fp {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn inverse(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(prime() - 2)
    }

    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self = *self - *a * *b;
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self = *self + *a * *b;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        *self * *other
    }

    fn to_int(&self) -> Option<i64> {
        let p = prime();
        let v = self.0 as u64;
        Some(if v > p / 2 {
            -((p - v) as i64)
        } else {
            v as i64
        })
    }

    fn field_name() -> String {
        format!("prime({})", prime())
    }
}

/// Exact rational from an integer numerator and denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Sign of a rational: -1, 0 or 1.
pub fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_helpers() {
        let mut x = Rational::from_i64(3);
        x.sub_mul(&ratio(1, 2), &Rational::from_i64(4));
        assert_eq!(x, Rational::from_i64(1));
        assert_eq!(ratio(6, 4).to_string(), "3/2");
        assert_eq!(ratio(-2, 1).to_int(), Some(-2));
        assert_eq!(ratio(1, 3).to_int(), None);
        assert_eq!(ratio(-1, 3).to_json(), serde_json::json!("-1/3"));
    }

    #[test]
    fn prime_field_arithmetic() {
        // default modulus; tests never change it
        let a = Fp::new(-1);
        assert_eq!(a.to_int(), Some(-1));
        assert_eq!((a * a), Fp::one());
        let x = Fp::new(12345);
        assert_eq!(x * x.inverse(), Fp::one());
        assert_eq!(Fp::new(7) / Fp::new(7), Fp::one());
        assert_eq!(format!("{}", Fp::new(-5)), "-5");
    }

    #[test]
    fn primality() {
        assert!(is_prime(32003));
        assert!(!is_prime(32001));
        assert_eq!(set_prime(2), Err(PrimeError::NotOddPrime(2)));
        assert_eq!(set_prime(15), Err(PrimeError::NotOddPrime(15)));
    }
}
