//! Exact arithmetic for the two point families.
//!
//! Equalities are decided only in [`Q5`] / [`Q33`]; [`Interval`] is used to
//! certify strict inequalities and to produce drawing coordinates.

mod hexc;
mod interval;
mod quad;
mod rational;

pub use hexc::HexC;
pub use interval::{certify_sign, Interval, DEFAULT_PRECISION, MAX_PRECISION};
pub use quad::{Quad, Q33, Q5};
pub use rational::{format_rational, parse_rational, rat, Rational};

/// A real number in one of the exact fields that can be enclosed by an interval.
pub trait ExactReal: Clone + std::fmt::Debug + PartialEq + Ord + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: Rational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// `None` on division by zero.
    fn checked_div(&self, other: &Self) -> Option<Self>;
    fn signum(&self) -> i8;
    fn approx(&self, precision: u32) -> Interval;
}

impl<const D: u32> ExactReal for Quad<D> {
    fn zero() -> Self {
        Quad::from_rational(Rational::from_integer(0.into()))
    }
    fn one() -> Self {
        Quad::from_rational(Rational::from_integer(1.into()))
    }
    fn from_rational(r: Rational) -> Self {
        Quad::from_rational(r)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self * &inv)
    }
    fn signum(&self) -> i8 {
        self.sign()
    }
    fn approx(&self, precision: u32) -> Interval {
        Quad::approx(self, precision)
    }
}
