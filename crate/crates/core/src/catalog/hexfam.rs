use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{rat, HexC, Q33};
use crate::geometry::{
    disk_filter, minkowski_sum, rotate_hex, Family, HexPoint, Hexagon, PointSet,
};
use crate::graphs::{spindle, SpindledGraph, TwoDistGraph};
use crate::solver::{reduce_preserving, Budget, OrderPolicy, Reduction};

/// Targets `1` and `4` (distances 1 and 2).
pub fn hex_targets() -> (Q33, Q33) {
    (Q33::from_ints(1, 0), Q33::from_ints(4, 0))
}

/// The hexagonal wheel: centre plus the six sixth roots of unity.
pub fn g7() -> PointSet<Hexagon> {
    let mut v = vec![Hexagon::origin()];
    v.extend((0..6).map(|k| HexPoint::new(HexC::omega().pow(k))));
    PointSet::from_points(v)
}

/// The wheel together with its rotations by `±arccos(5/6)` about its centre.
pub fn g19() -> PointSet<Hexagon> {
    let w = g7();
    let rho = HexC::rho();
    let a = rotate_hex(&w, &rho).expect("rho is a unit");
    let b = rotate_hex(&w, &rho.conj()).expect("conj(rho) is a unit");
    w.union(&a).union(&b)
}

/// Closed disk used to cut the hexagon sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexFilter {
    pub center: HexC,
    pub r_sq: Q33,
}

impl Default for HexFilter {
    /// Radius √3 about the common centre of the wheels.
    fn default() -> Self {
        HexFilter {
            center: HexC::zero(),
            r_sq: Q33::from_ints(3, 0),
        }
    }
}

/// `g19 ⊕ g19 ⊕ g7` cut by the default disk, with distance-1 and distance-2 edges.
pub fn g313() -> TwoDistGraph<Hexagon> {
    g313_with(&HexFilter::default())
}

pub fn g313_with(filter: &HexFilter) -> TwoDistGraph<Hexagon> {
    let g = g19();
    let sum = minkowski_sum(&minkowski_sum(&g, &g), &g7());
    let kept = disk_filter(&sum, &HexPoint::new(filter.center.clone()), &filter.r_sq);
    let (t1, t2) = hex_targets();
    TwoDistGraph::from_points(
        kept.into_points(),
        t1,
        t2,
        format!(
            "g19+g19+g7 within |z - c|^2 <= {} of c = {:?}",
            filter.r_sq, filter.center
        ),
    )
}

/// The monochromatic pair `(−1/2, ±5/√12)`, i.e. `−1/2 ± (5/6)·i√3`.
pub fn hex_pair() -> (HexPoint, HexPoint) {
    let p = |s: i64| HexPoint::new(HexC::new(rat(-1, 2), rat(5 * s, 6), rat(0, 1), rat(0, 1)));
    (p(1), p(-1))
}

pub fn hex_pair_indices(g: &TwoDistGraph<Hexagon>) -> Result<(usize, usize)> {
    let (p, q) = hex_pair();
    let find = |x: &HexPoint| {
        g.index_of(x)
            .ok_or_else(|| Error::MissingVertex(format!("{:?}", x.z)))
    };
    Ok((find(&p)?, find(&q)?))
}

/// Result of reducing the hexagon graph around the pair.
#[derive(Debug, Clone)]
pub struct ReducedHex {
    pub graph: TwoDistGraph<Hexagon>,
    pub pair: (usize, usize),
    pub reduction: Reduction,
    /// True when the result has 199 vertices with 870 + 273 edges.
    pub matches_profile: bool,
}

/// Greedy forcing-preserving reduction of [`g313`] around [`hex_pair`] at k = 5.
pub fn g199(policy: OrderPolicy, budget_per_check: Budget) -> Result<ReducedHex> {
    g199_with(&HexFilter::default(), policy, budget_per_check)
}

/// As [`g199`], starting from the sum cut by `filter`.
pub fn g199_with(
    filter: &HexFilter,
    policy: OrderPolicy,
    budget_per_check: Budget,
) -> Result<ReducedHex> {
    let big = g313_with(filter);
    let (u, v) = hex_pair_indices(&big)?;
    let coords: Vec<(f64, f64)> = big.points().iter().map(Hexagon::to_f64_xy).collect();
    let reduction = reduce_preserving(
        big.graph(),
        u,
        v,
        5,
        policy,
        Some(&coords),
        budget_per_check,
    )?;
    let graph = big.induced(&reduction.kept).with_provenance(format!(
        "reduction of g313 around the pair, policy {policy:?}"
    ));
    let matches_profile =
        graph.n() == 199 && graph.graph().e1().len() == 870 && graph.graph().e2().len() == 273;
    Ok(ReducedHex {
        pair: reduction.pair,
        graph,
        reduction,
        matches_profile,
    })
}

/// Which forbidden distance the spindled copies of the pair realize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpindleDistance {
    /// Distance 1, cos = 47/50.
    One,
    /// Distance 2, cos = 19/25.
    Two,
}

/// Two copies of the reduced graph joined at one pair vertex.
pub fn g397(base: &ReducedHex, distance: SpindleDistance) -> Result<SpindledGraph<Hexagon>> {
    let t = match distance {
        SpindleDistance::One => hex_targets().0,
        SpindleDistance::Two => hex_targets().1,
    };
    spindle(&base.graph, base.pair.0, base.pair.1, &t)
}
