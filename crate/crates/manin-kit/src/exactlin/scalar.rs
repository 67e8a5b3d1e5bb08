use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinError;

/// The exact base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rationals, arbitrary precision.
    Rational,
    /// The prime field of the given order (a prime below 2^16).
    Prime(u16),
}

impl Field {
    /// Builds `F_p`, rejecting non-primes.
    pub fn prime(p: u16) -> Result<Field, LinError> {
        if p < 2 || !(2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            return Err(LinError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p as u32,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p as u64),
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    /// The image of an integer in this field.
    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Fp { p, v: n.rem_euclid(p as i64) as u16 },
        }
    }

    /// The image of `num/den`; fails when `den` vanishes in the field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar, LinError> {
        self.int(num).div(&self.int(den))
    }

    /// The image of an arbitrary-precision fraction.
    pub fn big_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar, LinError> {
        match self {
            Field::Rational => {
                if den.is_zero() {
                    return Err(LinError::DivisionByZero);
                }
                Ok(Scalar::Q(BigRational::new(num.clone(), den.clone())))
            }
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let n = num.mod_floor(&m).to_i64().unwrap_or(0);
                let d = den.mod_floor(&m).to_i64().unwrap_or(0);
                self.int(n).div(&self.int(d))
            }
        }
    }

    /// All field elements in a fixed order (0, 1, ..., p-1); `None` over Q.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(|v| Scalar::Fp { p, v }).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element tagged with its field.
///
/// The arithmetic operators panic on mixed fields; the `try_*` methods
/// report the mismatch instead. Matrices validate tags once on
/// construction, so their inner loops use the operators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u16, v: u16 },
}

fn inv_mod(a: u16, p: u16) -> u16 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a as u64, p as u64 - 2, 1u64);
    let m = p as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u16
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), LinError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(LinError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, LinError> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, LinError> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, LinError> {
        self.check(other)?;
        Ok(self * other)
    }

    /// Multiplicative inverse; division by zero is an error.
    pub fn inv(&self) -> Result<Scalar, LinError> {
        match self {
            Scalar::Q(q) if q.is_zero() => Err(LinError::DivisionByZero),
            Scalar::Q(q) => Ok(Scalar::Q(q.recip())),
            Scalar::Fp { v: 0, .. } => Err(LinError::DivisionByZero),
            Scalar::Fp { p, v } => Ok(Scalar::Fp { p: *p, v: inv_mod(*v, *p) }),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, LinError> {
        self.check(other)?;
        Ok(self * &other.inv()?)
    }

    /// `self += a * b`, the inner step of elimination.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::Fp { p, v }, Scalar::Fp { v: x, .. }, Scalar::Fp { v: y, .. }) => {
                *v = ((*v as u32 + *x as u32 * *y as u32) % *p as u32) as u16;
            }
            (Scalar::Q(s), Scalar::Q(x), Scalar::Q(y)) => {
                if !x.is_zero() && !y.is_zero() {
                    *s += x * y;
                }
            }
            (s, a, b) => panic!("field mismatch: {} vs {} vs {}", s.field(), a.field(), b.field()),
        }
    }

    /// Small integer view when the value is one, used for compact printing.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::Fp { v, .. } => Some(*v as i64),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $fp:expr, $q:tt) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a $q b),
                    (Scalar::Fp { p, v: a }, Scalar::Fp { p: p2, v: b }) if p == p2 => {
                        let f: fn(u32, u32, u32) -> u32 = $fp;
                        Scalar::Fp { p: *p, v: f(*a as u32, *b as u32, *p as u32) as u16 }
                    }
                    (a, b) => panic!("field mismatch: {} vs {}", a.field(), b.field()),
                }
            }
        }
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b, p| (a + b) % p, +);
binop!(Sub, sub, |a, b, p| (a + p - b) % p, -);
binop!(Mul, mul, |a, b, p| (a * b) % p, *);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: (*p - *v) % *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Parses `7`, `-3/4` into a field element.
pub fn parse_scalar(field: Field, tok: &str) -> Result<Scalar, LinError> {
    let bad = || LinError::Parse(tok.to_string());
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().map_err(|_| bad())?, d.parse::<BigInt>().map_err(|_| bad())?),
        None => (tok.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if d.is_negative() {
        return field.big_ratio(&-n, &-d);
    }
    field.big_ratio(&n, &d)
}
