use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::interval::{sqrt_int, Interval};
use super::rational::{format_rational, parse_rational, Rational};

/// `a + b·√D` with rational `a`, `b` and squarefree `D`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quad<const D: u32> {
    a: Rational,
    b: Rational,
}

/// Q(√5): pentagon-family squared distances.
pub type Q5 = Quad<5>;
/// The real subring Q(√33) where hexagon-family squared norms live.
pub type Q33 = Quad<33>;

impl<const D: u32> Quad<D> {
    pub fn new(a: Rational, b: Rational) -> Self {
        Quad { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Quad {
            a,
            b: Rational::zero(),
        }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Quad::new(
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
        )
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a - b√D`.
    pub fn conjugate(&self) -> Self {
        Quad {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a² − D·b²` (rational).
    pub fn field_norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(BigInt::from(D)) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.field_norm();
        Some(Quad {
            a: &self.a / &n,
            b: -&self.b / &n,
        })
    }

    /// Exact sign via rational case analysis on `a` and `b`.
    pub fn sign(&self) -> i8 {
        let sa = rsign(&self.a);
        let sb = rsign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: the larger of a² and D·b² decides
        let a2 = &self.a * &self.a;
        let db2 = Rational::from_integer(BigInt::from(D)) * &self.b * &self.b;
        if a2 > db2 {
            sa
        } else {
            sb
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Interval enclosure with width at most `2^(1-precision)·max(1, |x|)`.
    pub fn approx(&self, precision: u32) -> Interval {
        assert!(precision >= 8, "precision must be at least 8 bits");
        if self.b.is_zero() {
            return Interval::point(self.a.clone(), precision);
        }
        let extra = rational_bits(&self.b) + 4;
        let root = sqrt_int(D as u64, precision + extra);
        let bx = root.scale(&self.b);
        let inner = bx.add_rational(&self.a);
        Interval::rounded(inner.lo().clone(), inner.hi().clone(), precision)
    }

    pub fn to_f64(&self) -> f64 {
        self.approx(64).midpoint_f64()
    }
}

fn rsign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Rough bit size of |r| rounded up, used to pick guard bits.
fn rational_bits(r: &Rational) -> u32 {
    let n = r.numer().bits();
    let d = r.denom().bits();
    n.saturating_sub(d) as u32 + 1
}

impl<const D: u32> Ord for Quad<D> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl<const D: u32> PartialOrd for Quad<D> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<const D: u32> fmt::Debug for Quad<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}·√{})", self.a, self.b, D)
    }
}

impl<const D: u32> fmt::Display for Quad<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√{}", self.b, D)
        } else if self.b.is_negative() {
            write!(f, "{} - {}√{}", self.a, -&self.b, D)
        } else {
            write!(f, "{} + {}√{}", self.a, self.b, D)
        }
    }
}

impl<const D: u32> Add for &Quad<D> {
    type Output = Quad<D>;
    fn add(self, o: &Quad<D>) -> Quad<D> {
        Quad {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
}

impl<const D: u32> Sub for &Quad<D> {
    type Output = Quad<D>;
    fn sub(self, o: &Quad<D>) -> Quad<D> {
        Quad {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
}

impl<const D: u32> Mul for &Quad<D> {
    type Output = Quad<D>;
    fn mul(self, o: &Quad<D>) -> Quad<D> {
        let d = Rational::from_integer(BigInt::from(D));
        Quad {
            a: &self.a * &o.a + d * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl<const D: u32> Neg for &Quad<D> {
    type Output = Quad<D>;
    fn neg(self) -> Quad<D> {
        Quad {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<const D: u32> $tr for Quad<D> {
            type Output = Quad<D>;
            fn $m(self, o: Quad<D>) -> Quad<D> {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<const D: u32> Neg for Quad<D> {
    type Output = Quad<D>;
    fn neg(self) -> Quad<D> {
        -&self
    }
}

impl<const D: u32> Serialize for Quad<D> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [format_rational(&self.a), format_rational(&self.b)].serialize(s)
    }
}

impl<'de, const D: u32> Deserialize<'de> for Quad<D> {
    fn deserialize<De: Deserializer<'de>>(d: De) -> Result<Self, De::Error> {
        let [a, b] = <[String; 2]>::deserialize(d)?;
        let a = parse_rational(&a).map_err(serde::de::Error::custom)?;
        let b = parse_rational(&b).map_err(serde::de::Error::custom)?;
        Ok(Quad::new(a, b))
    }
}
