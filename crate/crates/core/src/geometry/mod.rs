//! Exact point sets for the pentagon and hexagon families.
//!
//! The two families never mix: every set, sum and distance is parameterized
//! by a [`Family`], so a pentagon point cannot be added to a hexagon point.

mod hex;
mod pent;
mod pointset;

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;
use crate::exactnum::{ExactReal, Interval};

pub use hex::{hex_dist_sq, rotate_hex, HexPoint, Hexagon};
pub use pent::{pent_dist_sq, PentPoint, Pentagon, R_SQ};
pub use pointset::{disk_filter, minkowski_sum, PointSet};

/// A family of exactly represented plane points.
pub trait Family: Send + Sync + 'static {
    type Point: Clone + Ord + Eq + Hash + Debug + Send + Sync;
    type Field: ExactReal;

    /// Short tag used in serialized documents.
    const TAG: &'static str;
    /// Human-readable descriptor of the coordinate field.
    const FIELD: &'static str;

    fn origin() -> Self::Point;
    fn add(p: &Self::Point, q: &Self::Point) -> Self::Point;
    fn dist_sq(p: &Self::Point, q: &Self::Point) -> Self::Field;

    fn norm_sq(p: &Self::Point) -> Self::Field {
        Self::dist_sq(p, &Self::origin())
    }

    /// Enclosures of the Cartesian coordinates. Never used to decide equality.
    fn approx_xy(p: &Self::Point, precision: u32) -> Result<(Interval, Interval)>;

    fn to_f64_xy(p: &Self::Point) -> (f64, f64) {
        match Self::approx_xy(p, 64) {
            Ok((x, y)) => (x.midpoint_f64(), y.midpoint_f64()),
            Err(_) => (f64::NAN, f64::NAN),
        }
    }
}

/// Exact inner product `(p − o)·(q − o)` by polarization.
pub fn dot_about<F: Family>(o: &F::Point, p: &F::Point, q: &F::Point) -> F::Field {
    let a = F::dist_sq(p, o);
    let b = F::dist_sq(q, o);
    let c = F::dist_sq(p, q);
    let half = F::Field::from_rational(crate::exactnum::rat(1, 2));
    a.add(&b).sub(&c).mul(&half)
}

/// Squared chord between a point at squared radius `radius_sq` from a pivot
/// and its image under rotation with the given cosine: `2·r²·(1 − cos)`.
pub fn chord_sq_around_pivot<T: ExactReal>(radius_sq: &T, cos_angle: &T) -> T {
    let two = T::from_rational(crate::exactnum::rat(2, 1));
    two.mul(radius_sq).mul(&T::one().sub(cos_angle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Q33, Q5};

    #[test]
    fn chord_identities_for_the_pentagon_spindle() {
        // 25·R² = (25 + 5√5)/2
        let radius_sq = Q5::new(rat(25, 2), rat(5, 2));
        let cos_unit = Q5::new(rat(95, 100), rat(1, 100));
        let cos_diag = Q5::new(rat(95, 100), rat(-1, 100));
        assert_eq!(
            chord_sq_around_pivot(&radius_sq, &cos_unit),
            Q5::from_ints(1, 0)
        );
        assert_eq!(
            chord_sq_around_pivot(&radius_sq, &cos_diag),
            Q5::new(rat(3, 2), rat(1, 2))
        );
        assert!(chord_sq_around_pivot(&radius_sq, &Q5::from_ints(1, 0)).is_zero());
    }

    #[test]
    fn chord_identity_for_the_hex_spindle() {
        let radius_sq = Q33::from_rational(rat(25, 3));
        let cos = Q33::from_rational(rat(47, 50));
        assert_eq!(
            chord_sq_around_pivot(&radius_sq, &cos),
            Q33::from_ints(1, 0)
        );
        let cos2 = Q33::from_rational(rat(19, 25));
        assert_eq!(
            chord_sq_around_pivot(&radius_sq, &cos2),
            Q33::from_ints(4, 0)
        );
    }
}
