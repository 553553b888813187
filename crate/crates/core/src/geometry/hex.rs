use serde::{Deserialize, Serialize};

use super::pointset::PointSet;
use super::Family;
use crate::error::{Error, Result};
use crate::exactnum::{HexC, Interval, Q33};

/// A hexagon-family point, stored as an exact complex number.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HexPoint {
    pub z: HexC,
}

impl HexPoint {
    pub fn new(z: HexC) -> Self {
        HexPoint { z }
    }
}

impl From<HexC> for HexPoint {
    fn from(z: HexC) -> Self {
        HexPoint { z }
    }
}

pub fn hex_dist_sq(p: &HexPoint, q: &HexPoint) -> Q33 {
    (&p.z - &q.z).norm_sq()
}

/// Marker for the hexagon family (coordinates in Q(i√3, i√11)).
#[derive(Debug, Clone, Copy)]
pub struct Hexagon;

impl Family for Hexagon {
    type Point = HexPoint;
    type Field = Q33;

    const TAG: &'static str = "hexagon";
    const FIELD: &'static str = "Q(i sqrt3, i sqrt11)";

    fn origin() -> HexPoint {
        HexPoint::new(HexC::zero())
    }

    fn add(p: &HexPoint, q: &HexPoint) -> HexPoint {
        HexPoint::new(&p.z + &q.z)
    }

    fn dist_sq(p: &HexPoint, q: &HexPoint) -> Q33 {
        hex_dist_sq(p, q)
    }

    fn norm_sq(p: &HexPoint) -> Q33 {
        p.z.norm_sq()
    }

    fn approx_xy(p: &HexPoint, precision: u32) -> Result<(Interval, Interval)> {
        Ok(p.z.approx_re_im(precision))
    }
}

/// Multiplies every point by a unit rotor.
pub fn rotate_hex(a: &PointSet<Hexagon>, rotor: &HexC) -> Result<PointSet<Hexagon>> {
    if rotor.norm_sq() != Q33::from_ints(1, 0) {
        return Err(Error::NonUnitRotor(format!("{rotor:?}")));
    }
    Ok(PointSet::from_points(
        a.iter().map(|p| HexPoint::new(&p.z * rotor)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn w(k: u32) -> HexPoint {
        HexPoint::new(HexC::omega().pow(k))
    }

    #[test]
    fn wheel_distances() {
        assert_eq!(hex_dist_sq(&w(0), &w(1)), Q33::from_ints(1, 0));
        assert_eq!(hex_dist_sq(&w(0), &w(3)), Q33::from_ints(4, 0));
        let rho = HexPoint::new(HexC::rho());
        assert_eq!(hex_dist_sq(&Hexagon::origin(), &rho), Q33::from_ints(1, 0));
    }

    #[test]
    fn rotation_rejects_non_unit() {
        let set = PointSet::<Hexagon>::from_points([w(0)]);
        let two = HexC::from_rational(rat(2, 1));
        assert!(matches!(
            rotate_hex(&set, &two),
            Err(Error::NonUnitRotor(_))
        ));
        assert_eq!(rotate_hex(&set, &HexC::one()).unwrap(), set);
    }

    #[test]
    fn omega_preserves_the_hexagon() {
        let hexagon = PointSet::<Hexagon>::from_points((0..6).map(w));
        assert_eq!(rotate_hex(&hexagon, &HexC::omega()).unwrap(), hexagon);
    }
}
