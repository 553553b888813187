use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::edgegraph::{EdgeGraph, EdgeKind};
use super::twodist::TwoDistGraph;
use crate::error::{Error, Result};
use crate::exactnum::{certify_sign, rat, ExactReal, Interval, DEFAULT_PRECISION};
use crate::geometry::{chord_sq_around_pivot, dot_about, Family};

/// Which copy of which base vertex a spindled vertex is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyRef {
    pub copy: u8,
    pub base: usize,
}

/// Two copies of a base graph sharing one pivot vertex; copy 1 is rotated
/// counterclockwise about the pivot by `arccos(cos)`.
pub struct SpindledGraph<F: Family> {
    base: TwoDistGraph<F>,
    pivot: usize,
    target: usize,
    forbidden_sq: F::Field,
    cos: F::Field,
    graph: EdgeGraph,
    copies: Vec<CopyRef>,
}

impl<F: Family> std::fmt::Debug for SpindledGraph<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpindledGraph")
            .field("pivot", &self.pivot)
            .field("target", &self.target)
            .field("cos", &self.cos)
            .field("n", &self.graph.n())
            .field("edges", &self.graph.edge_count())
            .finish()
    }
}

struct Frame {
    /// Coordinates of `p − pivot`.
    rel: Vec<(Interval, Interval)>,
    sin: Interval,
}

fn frame<F: Family>(
    base: &TwoDistGraph<F>,
    pivot: usize,
    cos: &F::Field,
    precision: u32,
) -> Result<Frame> {
    let guard = precision + 32;
    let (px, py) = F::approx_xy(base.point(pivot), guard)?;
    let rel = base
        .points()
        .iter()
        .map(|p| {
            let (x, y) = F::approx_xy(p, guard)?;
            Ok((x.sub(&px), y.sub(&py)))
        })
        .collect::<Result<Vec<_>>>()?;
    let sin_sq = F::Field::one().sub(&cos.mul(cos));
    let sin = sin_sq.approx(guard).sqrt()?;
    Ok(Frame { rel, sin })
}

/// Enclosure of `|a − R·b|²` for `a = p_i − pivot`, `b = p_j − pivot`.
fn cross_dist(exact_part: &F2, fr: &Frame, i: usize, j: usize, precision: u32) -> Interval {
    let (ax, ay) = &fr.rel[i];
    let (bx, by) = &fr.rel[j];
    let cross = ax.mul(by).sub(&ay.mul(bx));
    let two_s = fr.sin.scale(&rat(2, 1));
    exact_part
        .0
        .add(&two_s.mul(&cross))
        .with_precision(precision)
}

/// Holder for the already-approximated exact part of a cross distance.
struct F2(Interval);

trait WithPrecision {
    fn with_precision(self, p: u32) -> Interval;
}

impl WithPrecision for Interval {
    fn with_precision(self, p: u32) -> Interval {
        Interval::rounded(self.lo().clone(), self.hi().clone(), p)
    }
}

/// Joins two copies of `g` at `pivot`, rotating the second so that the
/// copies of `target` end up at squared distance `forbidden_sq`.
///
/// Pairs of copies of the same base vertex are decided exactly. Every other
/// cross pair is certified away from zero and from both targets by interval
/// arithmetic; failure to separate is an error.
pub fn spindle<F: Family>(
    g: &TwoDistGraph<F>,
    pivot: usize,
    target: usize,
    forbidden_sq: &F::Field,
) -> Result<SpindledGraph<F>> {
    let n = g.n();
    for v in [pivot, target] {
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v, len: n });
        }
    }
    if pivot == target {
        return Err(Error::InvalidSpindle("pivot equals target".into()));
    }
    let radius_sq = g.dist_sq(pivot, target);
    let four = F::Field::from_rational(rat(4, 1));
    if forbidden_sq.signum() <= 0 || forbidden_sq >= &four.mul(&radius_sq) {
        return Err(Error::InvalidSpindle(format!(
            "forbidden distance² {forbidden_sq:?} outside (0, 4·{radius_sq:?})"
        )));
    }
    let two_r = F::Field::from_rational(rat(2, 1)).mul(&radius_sq);
    let cos = F::Field::one().sub(
        &forbidden_sq
            .checked_div(&two_r)
            .expect("radius is positive"),
    );
    let (t1, t2) = g.targets();
    let (t1, t2) = (t1.clone(), t2.clone());
    let zero = F::Field::zero();

    let copy1 = |b: usize| n + if b < pivot { b } else { b - 1 };
    let mut e1: Vec<(usize, usize)> = g.graph().e1().to_vec();
    let mut e2: Vec<(usize, usize)> = g.graph().e2().to_vec();
    let lift = |v: usize| if v == pivot { pivot } else { copy1(v) };
    for &(a, b) in g.graph().e1() {
        e1.push((lift(a), lift(b)));
    }
    for &(a, b) in g.graph().e2() {
        e2.push((lift(a), lift(b)));
    }

    let fr = frame(g, pivot, &cos, DEFAULT_PRECISION)?;
    let others: Vec<usize> = (0..n).filter(|&v| v != pivot).collect();
    let rows: Vec<Result<Vec<(usize, usize, EdgeKind)>>> = others
        .par_iter()
        .map(|&i| {
            let mut found = Vec::new();
            for &j in &others {
                if i == j {
                    let chord = chord_sq_around_pivot(&g.dist_sq(i, pivot), &cos);
                    if chord == t1 {
                        found.push((i, copy1(j), EdgeKind::One));
                    } else if chord == t2 {
                        found.push((i, copy1(j), EdgeKind::Two));
                    }
                    continue;
                }
                let two = F::Field::from_rational(rat(2, 1));
                let exact = g.dist_sq(i, pivot).add(&g.dist_sq(j, pivot)).sub(
                    &two.mul(&cos)
                        .mul(&dot_about::<F>(g.point(pivot), g.point(i), g.point(j))),
                );
                for (t, is_zero) in [(&zero, true), (&t1, false), (&t2, false)] {
                    let shifted = exact.sub(t);
                    let quick = cross_dist(
                        &F2(shifted.approx(DEFAULT_PRECISION)),
                        &fr,
                        i,
                        j,
                        DEFAULT_PRECISION,
                    );
                    if quick.sign().is_some_and(|s| s != 0) {
                        continue;
                    }
                    let label = format!("cross pair ({i},{j}) against {t:?}");
                    let res = certify_sign(&label, |p| {
                        let f = frame(g, pivot, &cos, p)?;
                        Ok(cross_dist(&F2(shifted.approx(p + 32)), &f, i, j, p))
                    });
                    match res {
                        Ok(_) => {}
                        Err(Error::CannotSeparate { .. }) if is_zero => {
                            return Err(Error::CoincidentCopies(i, j));
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
            Ok(found)
        })
        .collect();
    for row in rows {
        for (a, b, k) in row? {
            match k {
                EdgeKind::One => e1.push((a, b)),
                EdgeKind::Two => e2.push((a, b)),
            }
        }
    }
    let graph = EdgeGraph::new(2 * n - 1, &e1, &e2)?;
    let mut copies: Vec<CopyRef> = (0..n).map(|b| CopyRef { copy: 0, base: b }).collect();
    copies.extend(others.iter().map(|&b| CopyRef { copy: 1, base: b }));
    Ok(SpindledGraph {
        base: g.clone(),
        pivot,
        target,
        forbidden_sq: forbidden_sq.clone(),
        cos,
        graph,
        copies,
    })
}

impl<F: Family> SpindledGraph<F> {
    pub fn graph(&self) -> &EdgeGraph {
        &self.graph
    }

    pub fn base(&self) -> &TwoDistGraph<F> {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn cos(&self) -> &F::Field {
        &self.cos
    }

    pub fn forbidden_sq(&self) -> &F::Field {
        &self.forbidden_sq
    }

    pub fn copy_ref(&self, v: usize) -> CopyRef {
        self.copies[v]
    }

    /// Spindled vertex index of a base vertex in the given copy.
    pub fn index_of(&self, copy: u8, base: usize) -> usize {
        if copy == 0 || base == self.pivot {
            base
        } else {
            self.base.n() + if base < self.pivot { base } else { base - 1 }
        }
    }

    /// The designed cross edge between the two copies of `target`.
    pub fn designed_edge(&self) -> (usize, usize) {
        (self.target, self.index_of(1, self.target))
    }

    /// Exact squared length of the designed cross edge.
    pub fn designed_chord_sq(&self) -> F::Field {
        chord_sq_around_pivot(&self.base.dist_sq(self.pivot, self.target), &self.cos)
    }

    /// Vertices of copy `c` in base order (pivot included in both).
    pub fn copy_vertices(&self, c: u8) -> Vec<usize> {
        (0..self.base.n()).map(|b| self.index_of(c, b)).collect()
    }

    /// Drawing coordinates; copy 1 is rotated numerically.
    pub fn coords_f64(&self) -> Vec<(f64, f64)> {
        let base: Vec<(f64, f64)> = self.base.points().iter().map(F::to_f64_xy).collect();
        let (px, py) = base[self.pivot];
        let c = self.cos.approx(64).midpoint_f64();
        let s = (1.0 - c * c).max(0.0).sqrt();
        self.copies
            .iter()
            .map(|r| {
                let (x, y) = base[r.base];
                if r.copy == 0 {
                    (x, y)
                } else {
                    let (dx, dy) = (x - px, y - py);
                    (px + c * dx - s * dy, py + s * dx + c * dy)
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{HexC, Q33};
    use crate::geometry::{HexPoint, Hexagon, PointSet};
    use crate::graphs::{build_edges, is_isomorphic};

    fn wheel() -> TwoDistGraph<Hexagon> {
        let mut v = vec![Hexagon::origin()];
        v.extend((0..6).map(|k| HexPoint::new(HexC::omega().pow(k))));
        build_edges(
            &PointSet::from_points(v),
            &Q33::from_ints(1, 0),
            &Q33::from_ints(4, 0),
        )
    }

    #[test]
    fn moser_style_join() {
        let g = wheel();
        let o = g.index_of(&Hexagon::origin()).unwrap();
        let one = g.index_of(&HexPoint::new(HexC::one())).unwrap();
        let far = g.index_of(&HexPoint::new(-&HexC::one())).unwrap();
        let s = spindle(&g, one, far, &Q33::from_ints(1, 0)).unwrap();
        assert_eq!(s.n(), 13);
        assert_eq!(s.cos(), &Q33::new(rat(7, 8), rat(0, 1)));
        assert_eq!(s.designed_chord_sq(), Q33::from_ints(1, 0));
        let (a, b) = s.designed_edge();
        assert_eq!(s.graph().edge_kind(a, b), Some(EdgeKind::One));
        for c in [0, 1] {
            let sub = s.graph().induced(&s.copy_vertices(c));
            assert_eq!(&sub, g.graph());
            assert!(is_isomorphic(&sub, g.graph()).is_some());
        }
        assert_eq!(s.copy_ref(s.index_of(1, o)), CopyRef { copy: 1, base: o });
    }

    #[test]
    fn rejects_degenerate_parameters() {
        let g = wheel();
        assert!(matches!(
            spindle(&g, 0, 0, &Q33::from_ints(1, 0)),
            Err(Error::InvalidSpindle(_))
        ));
        let one = g.index_of(&HexPoint::new(HexC::one())).unwrap();
        let o = g.index_of(&Hexagon::origin()).unwrap();
        assert!(matches!(
            spindle(&g, o, one, &Q33::from_ints(4, 0)),
            Err(Error::InvalidSpindle(_))
        ));
    }

    #[test]
    fn coincident_copies_are_an_error() {
        // rotating the wheel by 60 degrees about its centre maps it onto itself
        let g = wheel();
        let o = g.index_of(&Hexagon::origin()).unwrap();
        let one = g.index_of(&HexPoint::new(HexC::one())).unwrap();
        assert!(matches!(
            spindle(&g, o, one, &Q33::from_ints(1, 0)),
            Err(Error::CoincidentCopies(_, _))
        ));
    }
}
