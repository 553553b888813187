use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: u32 = 128;
pub const MAX_PRECISION: u32 = 4096;

/// Closed interval `[lo, hi]` with rational (normally dyadic) endpoints.
///
/// Every operation rounds outward to `precision` significant bits relative to
/// `max(1, |endpoint|)`, so the true value is always contained.
#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
    precision: u32,
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:.12e}, {:.12e}]@{}",
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN),
            self.precision
        )
    }
}

/// floor(log2(max(1, |v|))).
fn magnitude_exponent(v: &Rational) -> i64 {
    let n = v.numer().magnitude();
    let d = v.denom().magnitude();
    if n <= d {
        return 0;
    }
    let e = n.bits() as i64 - d.bits() as i64;
    // 2^e·d has the bit length of n; step down when it overshoots
    if (d << e as u64) > *n {
        e - 1
    } else {
        e
    }
}

/// `v` rounded to a multiple of `2^(e - precision - 1)` in the given direction.
fn round_to_grid(v: &Rational, precision: u32, up: bool) -> Rational {
    let s = precision as i64 + 1 - magnitude_exponent(v);
    let (n, d) = (v.numer(), v.denom());
    let (num, den) = if s >= 0 {
        (n << s as u64, d.clone())
    } else {
        (n.clone(), d << (-s) as u64)
    };
    let q = if up {
        num.div_ceil(&den)
    } else {
        num.div_floor(&den)
    };
    if s >= 0 {
        Rational::new(q, BigInt::one() << s as u64)
    } else {
        Rational::from_integer(q << (-s) as u64)
    }
}

pub(crate) fn round_down(v: &Rational, precision: u32) -> Rational {
    round_to_grid(v, precision, false)
}

pub(crate) fn round_up(v: &Rational, precision: u32) -> Rational {
    round_to_grid(v, precision, true)
}

/// Lower and upper bounds on sqrt(r) for r >= 0, each within 2^-bits of the true value.
fn sqrt_bounds(r: &Rational, bits: u32) -> (Rational, Rational) {
    debug_assert!(!r.is_negative());
    let scale = BigInt::one() << (2 * bits as u64);
    let scaled = r * Rational::from_integer(scale);
    let lo_in = scaled.floor().to_integer();
    let hi_in = scaled.ceil().to_integer();
    let s_lo = lo_in.sqrt();
    let mut s_hi = hi_in.sqrt();
    if &s_hi * &s_hi < hi_in {
        s_hi += 1;
    }
    let den = BigInt::one() << bits as u64;
    (Rational::new(s_lo, den.clone()), Rational::new(s_hi, den))
}

/// sqrt(n) for a non-negative rational, as an interval of width about 2^-precision.
pub(crate) fn sqrt_rational(r: &Rational, precision: u32) -> Interval {
    let bits = precision + 2 + magnitude_exponent(r).max(0) as u32 / 2;
    let (lo, hi) = sqrt_bounds(r, bits);
    Interval::rounded(lo, hi, precision)
}

/// sqrt(n) for a small integer, cached per precision rounded up to a
/// multiple of 64 bits.
pub(crate) fn sqrt_int(n: u64, precision: u32) -> Interval {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Interval>>> = OnceLock::new();
    let precision = precision.div_ceil(64) * 64;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(n, precision)) {
        return hit.clone();
    }
    let v = sqrt_rational(&Rational::from_integer(BigInt::from(n)), precision);
    cache.lock().unwrap().insert((n, precision), v.clone());
    v
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational, precision: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi, precision }
    }

    /// Degenerate interval holding an exact rational.
    pub fn point(v: Rational, precision: u32) -> Self {
        Interval {
            lo: v.clone(),
            hi: v,
            precision,
        }
    }

    /// Builds an interval after rounding `lo` down and `hi` up.
    pub fn rounded(lo: Rational, hi: Rational, precision: u32) -> Self {
        let lo = round_down(&lo, precision);
        let hi = round_up(&hi, precision);
        Interval::new(lo, hi, precision)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Certified sign: `Some(±1)` when zero is excluded, `Some(0)` for the exact zero point.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// True when `v` lies strictly outside the interval.
    pub fn excludes(&self, v: &Rational) -> bool {
        !self.contains(v)
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / Rational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    fn prec_with(&self, other: &Interval) -> u32 {
        self.precision.min(other.precision)
    }

    pub fn add(&self, other: &Interval) -> Interval {
        let p = self.prec_with(other);
        Interval::rounded(&self.lo + &other.lo, &self.hi + &other.hi, p)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        let p = self.prec_with(other);
        Interval::rounded(&self.lo - &other.hi, &self.hi - &other.lo, p)
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
            precision: self.precision,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let p = self.prec_with(other);
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().cloned().unwrap();
        let hi = cands.iter().max().cloned().unwrap();
        Interval::rounded(lo, hi, p)
    }

    pub fn scale(&self, k: &Rational) -> Interval {
        let (a, b) = (&self.lo * k, &self.hi * k);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Interval::rounded(lo, hi, self.precision)
    }

    pub fn add_rational(&self, k: &Rational) -> Interval {
        Interval::rounded(&self.lo + k, &self.hi + k, self.precision)
    }

    pub fn square(&self) -> Interval {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        let (mn, mx) = if a <= b { (a, b) } else { (b, a) };
        let lo = if self.lo.is_negative() && self.hi.is_positive() {
            Rational::zero()
        } else {
            mn
        };
        Interval::rounded(lo, mx, self.precision)
    }

    /// Outward-rounded square root. Errors when the lower bound is negative.
    pub fn sqrt(&self) -> Result<Interval> {
        if self.lo.is_negative() {
            return Err(Error::NegativeSqrt(format!("{}", self.lo)));
        }
        let bits = self.precision + 2 + magnitude_exponent(&self.hi).max(0) as u32 / 2;
        let (lo, _) = sqrt_bounds(&self.lo, bits);
        let (_, hi) = sqrt_bounds(&self.hi, bits);
        Ok(Interval::rounded(lo, hi, self.precision))
    }

    /// Ordering against a rational when it is certified, `None` otherwise.
    pub fn cmp_rational(&self, v: &Rational) -> Option<Ordering> {
        if &self.lo > v {
            Some(Ordering::Greater)
        } else if &self.hi < v {
            Some(Ordering::Less)
        } else if &self.lo == v && &self.hi == v {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

/// Evaluates `f` at increasing precision (128, 256, ... 4096 bits) until its
/// sign is certified nonzero. An interval that cannot exclude zero at the
/// maximum precision is an error, never a guess.
pub fn certify_sign<F>(label: &str, mut f: F) -> Result<i8>
where
    F: FnMut(u32) -> Result<Interval>,
{
    let mut precision = DEFAULT_PRECISION;
    loop {
        let iv = f(precision)?;
        match iv.sign() {
            Some(s) if s != 0 => return Ok(s),
            _ => {}
        }
        if precision >= MAX_PRECISION {
            return Err(Error::CannotSeparate {
                target: label.to_string(),
                bits: precision,
            });
        }
        precision *= 2;
    }
}
