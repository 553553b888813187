use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::interval::{sqrt_int, Interval};
use super::quad::Q33;
use super::rational::{format_rational, parse_rational, rat, Rational};

/// Exact complex number `a + b·i√3 + c·i√11 + d·√33`.
///
/// Basis products: `(i√3)² = −3`, `(i√11)² = −11`, `(√33)² = 33`,
/// `(i√3)(i√11) = −√33`, `(i√3)(√33) = 3·i√11`, `(i√11)(√33) = 11·i√3`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HexC {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl HexC {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        HexC { a, b, c, d }
    }

    pub fn zero() -> Self {
        HexC::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn one() -> Self {
        HexC::from_rational(rat(1, 1))
    }

    pub fn from_rational(a: Rational) -> Self {
        HexC::new(a, Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// Primitive sixth root of unity `(1 + i√3)/2`.
    pub fn omega() -> Self {
        HexC::new(rat(1, 2), rat(1, 2), rat(0, 1), rat(0, 1))
    }

    /// Unit rotor `(5 + i√11)/6`, the rotation by arccos(5/6).
    pub fn rho() -> Self {
        HexC::new(rat(5, 6), rat(0, 1), rat(1, 6), rat(0, 1))
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Complex conjugate: negates the `i√3` and `i√11` parts.
    pub fn conj(&self) -> Self {
        HexC::new(self.a.clone(), -&self.b, -&self.c, self.d.clone())
    }

    /// `|z|² = z·conj(z) = (a² + 3b² + 11c² + 33d²) + (2ad + 2bc)·√33`.
    pub fn norm_sq(&self) -> Q33 {
        let three = rat(3, 1);
        let eleven = rat(11, 1);
        let tt = rat(33, 1);
        let two = rat(2, 1);
        let re = &self.a * &self.a
            + three * &self.b * &self.b
            + eleven * &self.c * &self.c
            + tt * &self.d * &self.d;
        let s = two * (&self.a * &self.d + &self.b * &self.c);
        Q33::new(re, s)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = HexC::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Real part `a + d√33` as an element of Q(√33).
    pub fn re(&self) -> Q33 {
        Q33::new(self.a.clone(), self.d.clone())
    }

    /// Enclosures of the real and imaginary parts.
    pub fn approx_re_im(&self, precision: u32) -> (Interval, Interval) {
        let re = self.re().approx(precision);
        let guard = precision + 8 + bits(&self.b).max(bits(&self.c));
        let s3 = sqrt_int(3, guard).scale(&self.b);
        let s11 = sqrt_int(11, guard).scale(&self.c);
        let im = s3.add(&s11);
        let im = Interval::rounded(im.lo().clone(), im.hi().clone(), precision);
        (re, im)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        let (re, im) = self.approx_re_im(64);
        (re.midpoint_f64(), im.midpoint_f64())
    }
}

fn bits(r: &Rational) -> u32 {
    (r.numer().bits().saturating_sub(r.denom().bits())) as u32 + 1
}

impl fmt::Debug for HexC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HexC({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

impl Add for &HexC {
    type Output = HexC;
    fn add(self, o: &HexC) -> HexC {
        HexC::new(
            &self.a + &o.a,
            &self.b + &o.b,
            &self.c + &o.c,
            &self.d + &o.d,
        )
    }
}

impl Sub for &HexC {
    type Output = HexC;
    fn sub(self, o: &HexC) -> HexC {
        HexC::new(
            &self.a - &o.a,
            &self.b - &o.b,
            &self.c - &o.c,
            &self.d - &o.d,
        )
    }
}

impl Neg for &HexC {
    type Output = HexC;
    fn neg(self) -> HexC {
        HexC::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Mul for &HexC {
    type Output = HexC;
    fn mul(self, o: &HexC) -> HexC {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&o.a, &o.b, &o.c, &o.d);
        let k = |n: i64| Rational::from_integer(BigInt::from(n));
        HexC::new(
            a * e - k(3) * b * f - k(11) * c * g + k(33) * d * h,
            a * f + b * e + k(11) * (c * h + d * g),
            a * g + c * e + k(3) * (b * h + d * f),
            a * h + d * e - (b * g + c * f),
        )
    }
}

impl Add for HexC {
    type Output = HexC;
    fn add(self, o: HexC) -> HexC {
        &self + &o
    }
}

impl Sub for HexC {
    type Output = HexC;
    fn sub(self, o: HexC) -> HexC {
        &self - &o
    }
}

impl Mul for HexC {
    type Output = HexC;
    fn mul(self, o: HexC) -> HexC {
        &self * &o
    }
}

impl Serialize for HexC {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [
            format_rational(&self.a),
            format_rational(&self.b),
            format_rational(&self.c),
            format_rational(&self.d),
        ]
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HexC {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = <[String; 4]>::deserialize(d)?;
        let mut v = Vec::with_capacity(4);
        for p in &parts {
            v.push(parse_rational(p).map_err(serde::de::Error::custom)?);
        }
        let mut it = v.into_iter();
        Ok(HexC::new(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(i: usize) -> HexC {
        let mut v = [rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        v[i] = rat(1, 1);
        let [a, b, c, d] = v;
        HexC::new(a, b, c, d)
    }

    #[test]
    fn multiplication_table() {
        let (i3, i11, s33) = (unit(1), unit(2), unit(3));
        assert_eq!(&i3 * &i3, HexC::from_rational(rat(-3, 1)));
        assert_eq!(&i11 * &i11, HexC::from_rational(rat(-11, 1)));
        assert_eq!(&s33 * &s33, HexC::from_rational(rat(33, 1)));
        assert_eq!(
            &i3 * &i11,
            HexC::new(rat(0, 1), rat(0, 1), rat(0, 1), rat(-1, 1))
        );
        assert_eq!(
            &i3 * &s33,
            HexC::new(rat(0, 1), rat(0, 1), rat(3, 1), rat(0, 1))
        );
        assert_eq!(
            &i11 * &s33,
            HexC::new(rat(0, 1), rat(11, 1), rat(0, 1), rat(0, 1))
        );
    }

    #[test]
    fn rotors_are_units() {
        assert_eq!(HexC::rho().norm_sq(), Q33::from_ints(1, 0));
        assert_eq!(HexC::omega().pow(6), HexC::one());
        assert_ne!(HexC::omega().pow(3), HexC::one());
        assert_eq!(&HexC::rho() * &HexC::rho().conj(), HexC::one());
    }

    #[test]
    fn norm_matches_product_with_conjugate() {
        let z = HexC::new(rat(1, 2), rat(-2, 3), rat(5, 6), rat(1, 7));
        let p = &z * &z.conj();
        assert!(p.b.is_zero() && p.c.is_zero());
        assert_eq!(Q33::new(p.a.clone(), p.d.clone()), z.norm_sq());
    }

    #[test]
    fn re_im_enclosures() {
        let (re, im) = HexC::rho().approx_re_im(64);
        assert!((re.midpoint_f64() - 5.0 / 6.0).abs() < 1e-15);
        assert!((im.midpoint_f64() - 11f64.sqrt() / 6.0).abs() < 1e-15);
    }
}
