use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::Family;
use crate::error::Result;
use crate::exactnum::{rat, Interval, Q5};

/// R² = (5 + √5)/10, the squared circumradius of the unit-side pentagon.
pub const R_SQ: (i64, i64, i64, i64) = (1, 2, 1, 10);

fn r_sq() -> Q5 {
    Q5::new(rat(R_SQ.0, R_SQ.1), rat(R_SQ.2, R_SQ.3))
}

/// A point `Σ n_k·u_k` of the pentagon lattice, where
/// `u_k = R·(sin 2πk/5, cos 2πk/5)`.
///
/// Because `Σ u_k = 0`, multiplicity vectors differing by a multiple of
/// `(1,1,1,1,1)` name the same point; `canon` subtracts the minimum entry.
/// `level` keeps the generator count the point was built with and does not
/// take part in equality.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PentPoint {
    canon: [u32; 5],
    level: u32,
}

impl PentPoint {
    pub fn new(n: [u32; 5]) -> Self {
        let level = n.iter().sum();
        let m = *n.iter().min().unwrap();
        let canon = n.map(|x| x - m);
        PentPoint { canon, level }
    }

    pub fn generator(k: usize) -> Self {
        let mut n = [0; 5];
        n[k % 5] = 1;
        PentPoint::new(n)
    }

    pub fn canonical(&self) -> [u32; 5] {
        self.canon
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_origin(&self) -> bool {
        self.canon == [0; 5]
    }
}

impl PartialEq for PentPoint {
    fn eq(&self, other: &Self) -> bool {
        self.canon == other.canon
    }
}
impl Eq for PentPoint {}

impl Hash for PentPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canon.hash(state);
    }
}

impl Ord for PentPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canon.cmp(&other.canon)
    }
}

impl PartialOrd for PentPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `|Σ c_k u_k|²` for `c = n(p) − n(q)`:
/// `R²·(S₀ + 2S₁·cos72° + 2S₂·cos144°)` with `S_t = Σ_j c_j c_{j+t}`.
pub fn pent_dist_sq(p: &PentPoint, q: &PentPoint) -> Q5 {
    let c: [i64; 5] = std::array::from_fn(|j| p.canon[j] as i64 - q.canon[j] as i64);
    let s = |t: usize| -> i64 { (0..5).map(|j| c[j] * c[(j + t) % 5]).sum() };
    let (s0, s1, s2) = (s(0), s(1), s(2));
    // 2cos72 = (√5 − 1)/2, 2cos144 = −(√5 + 1)/2
    let inner = Q5::new(rat(2 * s0 - s1 - s2, 2), rat(s1 - s2, 2));
    &r_sq() * &inner
}

/// Marker for the pentagon family (field Q(√5)).
#[derive(Debug, Clone, Copy)]
pub struct Pentagon;

impl Family for Pentagon {
    type Point = PentPoint;
    type Field = Q5;

    const TAG: &'static str = "pentagon";
    const FIELD: &'static str = "Q(sqrt5)";

    fn origin() -> PentPoint {
        PentPoint::new([0; 5])
    }

    fn add(p: &PentPoint, q: &PentPoint) -> PentPoint {
        let n = std::array::from_fn(|k| p.canon[k] + q.canon[k]);
        let mut s = PentPoint::new(n);
        s.level = p.level + q.level;
        s
    }

    fn dist_sq(p: &PentPoint, q: &PentPoint) -> Q5 {
        pent_dist_sq(p, q)
    }

    /// x = (√5+1)/4·(n₁ − n₄) + (n₂ − n₃)/2 lies in Q(√5);
    /// y = R·(n₀ + (√5−1)/4·(n₁+n₄) − (√5+1)/4·(n₂+n₃)) needs √R².
    fn approx_xy(p: &PentPoint, precision: u32) -> Result<(Interval, Interval)> {
        let n = p.canon.map(|v| v as i64);
        let x = Q5::new(
            rat(n[1] - n[4], 4) + rat(n[2] - n[3], 2),
            rat(n[1] - n[4], 4),
        );
        let y_inner = Q5::new(
            rat(4 * n[0] - (n[1] + n[4]) - (n[2] + n[3]), 4),
            rat((n[1] + n[4]) - (n[2] + n[3]), 4),
        );
        let guard = precision + 16;
        let r = r_sq().approx(guard).sqrt()?;
        let y = r.mul(&y_inner.approx(guard));
        let y = Interval::rounded(y.lo().clone(), y.hi().clone(), precision);
        Ok((x.approx(precision), y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ExactReal;

    fn d_sq() -> Q5 {
        Q5::new(rat(3, 2), rat(1, 2))
    }

    #[test]
    fn sides_and_diagonals() {
        let g: Vec<_> = (0..5).map(PentPoint::generator).collect();
        for i in 0..5 {
            assert_eq!(pent_dist_sq(&g[i], &g[(i + 1) % 5]), Q5::one());
            assert_eq!(pent_dist_sq(&g[i], &g[(i + 2) % 5]), d_sq());
            assert_eq!(Pentagon::norm_sq(&g[i]), r_sq());
            assert!(pent_dist_sq(&g[i], &g[i]).is_zero());
        }
    }

    #[test]
    fn kernel_vector_is_the_origin() {
        let o = PentPoint::new([1, 1, 1, 1, 1]);
        assert!(o.is_origin());
        assert_eq!(o.level(), 5);
        assert_eq!(o, Pentagon::origin());
        let far = PentPoint::new([5, 0, 0, 0, 0]);
        // 25·R²
        assert_eq!(Pentagon::norm_sq(&far), Q5::new(rat(25, 2), rat(5, 2)));
    }

    #[test]
    fn coordinates_match_trig() {
        let rr = ((5.0 + 5f64.sqrt()) / 10.0).sqrt();
        for k in 0..5 {
            let (x, y) = Pentagon::to_f64_xy(&PentPoint::generator(k));
            let t = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
            assert!((x - rr * t.sin()).abs() < 1e-12, "x mismatch at {k}");
            assert!((y - rr * t.cos()).abs() < 1e-12, "y mismatch at {k}");
        }
    }
}
