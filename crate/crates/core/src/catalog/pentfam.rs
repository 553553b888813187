use crate::error::Result;
use crate::exactnum::{rat, Q5};
use crate::geometry::{minkowski_sum, PentPoint, Pentagon, PointSet};
use crate::graphs::{locate_subgraph, spindle, EdgeGraph, SpindledGraph, TwoDistGraph};

/// Unit edges of the 16-vertex graph, 1-based labels.
pub const G16_E1: [(usize, usize); 28] = [
    (1, 2),
    (1, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 6),
    (4, 7),
    (4, 8),
    (5, 6),
    (5, 8),
    (5, 9),
    (6, 7),
    (6, 10),
    (7, 9),
    (7, 12),
    (7, 13),
    (8, 10),
    (8, 11),
    (8, 13),
    (9, 11),
    (10, 12),
    (11, 12),
    (11, 14),
    (12, 15),
    (13, 14),
    (13, 15),
    (14, 16),
    (15, 16),
];

/// Diagonal-length edges of the 16-vertex graph, 1-based labels.
pub const G16_E2: [(usize, usize); 28] = [
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 6),
    (2, 7),
    (2, 9),
    (3, 5),
    (3, 8),
    (3, 10),
    (4, 9),
    (4, 10),
    (4, 11),
    (4, 12),
    (5, 13),
    (6, 13),
    (7, 10),
    (7, 14),
    (8, 9),
    (8, 15),
    (9, 13),
    (9, 14),
    (10, 13),
    (10, 15),
    (11, 15),
    (11, 16),
    (12, 14),
    (12, 16),
    (14, 15),
];

/// Targets `1` and `d² = (3 + √5)/2`.
pub fn pent_targets() -> (Q5, Q5) {
    (Q5::from_ints(1, 0), Q5::new(rat(3, 2), rat(1, 2)))
}

/// The unit-side pentagon.
pub fn g5() -> PointSet<Pentagon> {
    PointSet::from_points((0..5).map(PentPoint::generator))
}

/// Five-fold Minkowski sum of the pentagon with its distance-1 and
/// distance-d edges.
pub fn g126() -> TwoDistGraph<Pentagon> {
    let g = g5();
    let mut acc = g.clone();
    for _ in 0..4 {
        acc = minkowski_sum(&acc, &g);
    }
    let (t1, t2) = pent_targets();
    TwoDistGraph::from_points(
        acc.into_points(),
        t1,
        t2,
        "g126: five-fold sum of g5".into(),
    )
}

pub fn g126_origin(g: &TwoDistGraph<Pentagon>) -> usize {
    g.index_of(&PentPoint::new([0; 5])).expect("origin present")
}

/// Index of the extreme vertex `5·u_k`.
pub fn g126_extreme(g: &TwoDistGraph<Pentagon>, k: usize) -> usize {
    let mut n = [0; 5];
    n[k % 5] = 5;
    g.index_of(&PentPoint::new(n))
        .expect("extreme vertex present")
}

/// The printed edge lists as a 0-based edge graph.
pub fn g16_pattern() -> EdgeGraph {
    let z = |l: &[(usize, usize)]| -> Vec<(usize, usize)> {
        l.iter().map(|&(a, b)| (a - 1, b - 1)).collect()
    };
    EdgeGraph::new(16, &z(&G16_E1), &z(&G16_E2)).expect("printed lists are consistent")
}

/// Coordinates for the 16-vertex graph found by locating the printed edge
/// lists as an induced subgraph of `g126`, with vertex 1 at the origin and
/// vertex 16 at the extreme vertex `5·u_0`. The edges are then recomputed
/// from the coordinates and must match the printed lists.
pub fn g16() -> Result<TwoDistGraph<Pentagon>> {
    let host = g126();
    let pattern = g16_pattern();
    let anchors = [(0, g126_origin(&host)), (15, g126_extreme(&host, 0))];
    let map = locate_subgraph(&pattern, host.graph(), &anchors, true)?;
    let points: Vec<PentPoint> = map.iter().map(|&h| host.point(h).clone()).collect();
    let (t1, t2) = pent_targets();
    TwoDistGraph::from_parts(
        points,
        t1,
        t2,
        pattern,
        "g16: printed edge lists located in g126 (1 at origin, 16 at 5u0)".into(),
    )
}

/// Two copies of `g16` joined at vertex 1 so the copies of vertex 16 are at distance 1.
pub fn g31() -> Result<SpindledGraph<Pentagon>> {
    spindle(&g16()?, 0, 15, &Q5::from_ints(1, 0))
}

/// As [`g31`] with the copies of vertex 16 at distance d.
pub fn g31_alt() -> Result<SpindledGraph<Pentagon>> {
    spindle(&g16()?, 0, 15, &pent_targets().1)
}
