//! Exact field elements.
//!
//! Two fields are supported: the rationals and prime fields `GF(p)`.
//! Rationals keep an `i64` fast path and fall back to big integers when an
//! intermediate result overflows. Values are always stored normalized so that
//! structural equality coincides with numeric equality.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Default modulus for prime-field runs.
pub const DEFAULT_PRIME: u64 = 32003;

/// The working field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::zero()),
            Field::Prime(p) => Scalar::P(Fp { value: 0, modulus: p }),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::from_i64(v)),
            Field::Prime(p) => Scalar::P(Fp::from_i64(v, p)),
        }
    }

    /// Builds `num / den`. Returns `None` when `den` vanishes in the field.
    pub fn from_fraction(self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        match self {
            Field::Rational => {
                if den.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(Rational::from_big(num.clone(), den.clone())))
                }
            }
            Field::Prime(p) => {
                let n = Fp::from_big(num, p);
                let d = Fp::from_big(den, p);
                if d.value == 0 {
                    None
                } else {
                    Some(Scalar::P(n.mul(d.inv())))
                }
            }
        }
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn is_prime_modulus(p: u64) -> bool {
        if p < 2 {
            return false;
        }
        let mut d = 2u64;
        while d * d <= p {
            if p % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "gf {}", p),
        }
    }
}

/// Residue modulo a prime `modulus < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    fn from_i64(v: i64, p: u64) -> Self {
        let r = v.rem_euclid(p as i64) as u64;
        Fp { value: r, modulus: p }
    }

    fn from_big(v: &BigInt, p: u64) -> Self {
        let m = BigInt::from(p);
        let r = v.mod_floor(&m);
        Fp { value: r.to_u64().unwrap_or(0), modulus: p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn check(self, other: Fp) {
        assert_eq!(self.modulus, other.modulus, "mixed prime fields");
    }

    fn add(self, o: Fp) -> Fp {
        self.check(o);
        Fp { value: (self.value + o.value) % self.modulus, modulus: self.modulus }
    }

    fn sub(self, o: Fp) -> Fp {
        self.check(o);
        Fp { value: (self.value + self.modulus - o.value) % self.modulus, modulus: self.modulus }
    }

    fn mul(self, o: Fp) -> Fp {
        self.check(o);
        Fp { value: (self.value * o.value) % self.modulus, modulus: self.modulus }
    }

    fn neg(self) -> Fp {
        Fp { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp { value: 1 % self.modulus, modulus: self.modulus };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    fn inv(self) -> Fp {
        assert!(self.value != 0, "division by zero in GF({})", self.modulus);
        self.pow(self.modulus - 2)
    }
}

/// Normalized rational number: `gcd(|num|, den) = 1`, `den > 0`, zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(i64, i64),
    Big(Box<(BigInt, BigInt)>),
}

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
        Rational::Small(0, 1)
    }

    pub fn from_i64(v: i64) -> Self {
        Rational::Small(v, 1)
    }

    /// Normalizes an `i128` fraction; `den` must be nonzero.
    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Rational::zero();
        }
        let (num, den) = if den < 0 {
            match (num.checked_neg(), den.checked_neg()) {
                (Some(n), Some(d)) => (n, d),
                _ => return Rational::from_big(BigInt::from(num), BigInt::from(den)),
            }
        } else {
            (num, den)
        };
        let g = gcd_u128(num.unsigned_abs(), den as u128) as i128;
        let (n, d) = (num / g, den / g);
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new((BigInt::from(n), BigInt::from(d)))),
        }
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Rational::zero();
        }
        let g = num.gcd(&den);
        let mut n = num / &g;
        let mut d = den / &g;
        if d.sign() == Sign::Minus {
            n = -n;
            d = -d;
        }
        match (n.to_i64(), d.to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new((n, d))),
        }
    }

    pub fn numer_denom(&self) -> (BigInt, BigInt) {
        match self {
            Rational::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(b) => (b.0.clone(), b.1.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(b) => b.1.is_one(),
        }
    }

    fn add(&self, o: &Rational) -> Rational {
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, o) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                if let Some(n) = a.checked_add(c) {
                    return Rational::from_i128(n, b);
                }
            }
            if let Some(n) = (a * d).checked_add(c * b) {
                return Rational::from_i128(n, b * d);
            }
        }
        let (a, b) = self.numer_denom();
        let (c, d) = o.numer_denom();
        Rational::from_big(a * &d + c * &b, b * d)
    }

    fn mul(&self, o: &Rational) -> Rational {
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, o) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            return Rational::from_i128(a * c, b * d);
        }
        let (a, b) = self.numer_denom();
        let (c, d) = o.numer_denom();
        Rational::from_big(a * c, b * d)
    }

    fn neg(&self) -> Rational {
        match self {
            Rational::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational::Small(m, *d),
                None => Rational::from_big(-BigInt::from(*n), BigInt::from(*d)),
            },
            Rational::Big(b) => Rational::from_big(-b.0.clone(), b.1.clone()),
        }
    }

    fn inv(&self) -> Rational {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Rational::Small(n, d) => Rational::from_i128(*d as i128, *n as i128),
            Rational::Big(b) => Rational::from_big(b.1.clone(), b.0.clone()),
        }
    }

    fn cmp_value(&self, o: &Rational) -> Ordering {
        let (a, b) = self.numer_denom();
        let (c, d) = o.numer_denom();
        (a * d).cmp(&(c * b))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{}", n),
            Rational::Small(n, d) => write!(f, "{}/{}", n, d),
            Rational::Big(b) if b.1.is_one() => write!(f, "{}", b.0),
            Rational::Big(b) => write!(f, "{}/{}", b.0, b.1),
        }
    }
}

/// An element of the working field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    P(Fp),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::P(x) => Field::Prime(x.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::P(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => *r == Rational::Small(1, 1),
            Scalar::P(x) => x.value == 1,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(r) => Scalar::Q(r.inv()),
            Scalar::P(x) => Scalar::P(x.inv()),
        }
    }

    /// Small integer value, if the scalar is a rational integer fitting `i64`
    /// or any prime-field residue (as its least nonnegative representative).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(Rational::Small(n, 1)) => Some(*n),
            Scalar::Q(_) => None,
            Scalar::P(x) => i64::try_from(x.value).ok(),
        }
    }

    /// Total order used only for deterministic tie-breaking.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => a.cmp_value(b),
            (Scalar::P(a), Scalar::P(b)) => a.value.cmp(&b.value),
            _ => panic!("mixed fields"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{}", r),
            Scalar::P(x) => write!(f, "{}", x.value),
        }
    }
}

impl Scalar {
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &'a Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::P(a), Scalar::P(b)) => Scalar::P(a.add(*b)),
            _ => panic!("mixed fields"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &'a Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(&b.neg())),
            (Scalar::P(a), Scalar::P(b)) => Scalar::P(a.sub(*b)),
            _ => panic!("mixed fields"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &'a Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::P(a), Scalar::P(b)) => Scalar::P(a.mul(*b)),
            _ => panic!("mixed fields"),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &'a Scalar) -> Scalar {
        self * &o.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::P(a) => Scalar::P(a.neg()),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Parses `n`, `-n` or `n/d` into the given field.
pub fn parse_scalar(field: Field, text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    field.from_fraction(&num, &den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Field::Rational.from_fraction(&BigInt::from(n), &BigInt::from(d)).unwrap()
    }

    #[test]
    fn rationals_are_normalized() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, -5), Field::Rational.zero());
        assert_eq!(format!("{}", q(-4, 6)), "-2/3");
    }

    #[test]
    fn overflow_promotes_to_big_and_back() {
        let big = Field::Rational.from_i64(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Q(Rational::Big(_))));
        let back = &sq / &big;
        assert_eq!(back, big);
        let sum = &big + &big;
        let half = &sum * &q(1, 2);
        assert_eq!(half, big);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Prime(7);
        let a = f.from_i64(3);
        assert_eq!((&a * &a.inv()), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(parse_scalar(f, "1/2").unwrap(), f.from_i64(4));
        assert!(parse_scalar(f, "1/7").is_none());
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_scalar(Field::Rational, "-3/9").unwrap(), q(-1, 3));
        assert!(parse_scalar(Field::Rational, "1/0").is_none());
        assert!(parse_scalar(Field::Rational, "x").is_none());
    }

    #[test]
    fn primality() {
        assert!(Field::is_prime_modulus(32003));
        assert!(!Field::is_prime_modulus(32001));
    }
}
