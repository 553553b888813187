use rayon::prelude::*;

use super::edgegraph::{EdgeGraph, EdgeKind};
use crate::error::{Error, Result};
use crate::exactnum::{certify_sign, ExactReal};
use crate::geometry::{Family, PointSet};

/// An embedded two-distance graph. Edges are decided by exact equality of
/// squared distances with the targets `t1`, `t2`.
pub struct TwoDistGraph<F: Family> {
    points: Vec<F::Point>,
    t1: F::Field,
    t2: F::Field,
    graph: EdgeGraph,
    provenance: String,
}

impl<F: Family> Clone for TwoDistGraph<F> {
    fn clone(&self) -> Self {
        TwoDistGraph {
            points: self.points.clone(),
            t1: self.t1.clone(),
            t2: self.t2.clone(),
            graph: self.graph.clone(),
            provenance: self.provenance.clone(),
        }
    }
}

impl<F: Family> std::fmt::Debug for TwoDistGraph<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TwoDistGraph")
            .field("family", &F::TAG)
            .field("n", &self.points.len())
            .field("e1", &self.graph.e1().len())
            .field("e2", &self.graph.e2().len())
            .field("provenance", &self.provenance)
            .finish()
    }
}

fn classify<F: Family>(
    p: &F::Point,
    q: &F::Point,
    t1: &F::Field,
    t2: &F::Field,
) -> Option<EdgeKind> {
    let d = F::dist_sq(p, q);
    if &d == t1 {
        Some(EdgeKind::One)
    } else if &d == t2 {
        Some(EdgeKind::Two)
    } else {
        None
    }
}

/// Classifies every vertex pair exactly. Rows are evaluated in parallel and
/// assembled in index order.
pub fn build_edges<F: Family>(
    points: &PointSet<F>,
    t1: &F::Field,
    t2: &F::Field,
) -> TwoDistGraph<F> {
    TwoDistGraph::from_points(
        points.points().to_vec(),
        t1.clone(),
        t2.clone(),
        String::new(),
    )
}

impl<F: Family> TwoDistGraph<F> {
    pub fn from_points(
        points: Vec<F::Point>,
        t1: F::Field,
        t2: F::Field,
        provenance: String,
    ) -> Self {
        assert!(t1 != t2, "targets must differ");
        assert!(
            t1.signum() > 0 && t2.signum() > 0,
            "targets must be positive"
        );
        let rows: Vec<Vec<(usize, usize, EdgeKind)>> = (0..points.len())
            .into_par_iter()
            .map(|i| {
                (i + 1..points.len())
                    .filter_map(|j| {
                        classify::<F>(&points[i], &points[j], &t1, &t2).map(|k| (i, j, k))
                    })
                    .collect()
            })
            .collect();
        let mut e1 = Vec::new();
        let mut e2 = Vec::new();
        for (i, j, k) in rows.into_iter().flatten() {
            match k {
                EdgeKind::One => e1.push((i, j)),
                EdgeKind::Two => e2.push((i, j)),
            }
        }
        let graph = EdgeGraph::new(points.len(), &e1, &e2).expect("classified edges are valid");
        TwoDistGraph {
            points,
            t1,
            t2,
            graph,
            provenance,
        }
    }

    /// Builds from stored edges after checking every listed edge exactly and
    /// every unlisted pair is off-target.
    pub fn from_parts(
        points: Vec<F::Point>,
        t1: F::Field,
        t2: F::Field,
        graph: EdgeGraph,
        provenance: String,
    ) -> Result<Self> {
        if graph.n() != points.len() {
            return Err(Error::Validation(format!(
                "{} vertices but edge graph has {}",
                points.len(),
                graph.n()
            )));
        }
        let rebuilt = TwoDistGraph::from_points(points, t1, t2, provenance);
        if rebuilt.graph != graph {
            return Err(Error::Validation(
                "stored edges disagree with the exact distances".into(),
            ));
        }
        Ok(rebuilt)
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> Self {
        self.provenance = p.into();
        self
    }

    pub fn points(&self) -> &[F::Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &F::Point {
        &self.points[i]
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn graph(&self) -> &EdgeGraph {
        &self.graph
    }

    pub fn targets(&self) -> (&F::Field, &F::Field) {
        (&self.t1, &self.t2)
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn index_of(&self, p: &F::Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn dist_sq(&self, i: usize, j: usize) -> F::Field {
        F::dist_sq(&self.points[i], &self.points[j])
    }

    /// Induced subgraph on `keep`, in that order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        TwoDistGraph {
            points: keep.iter().map(|&i| self.points[i].clone()).collect(),
            t1: self.t1.clone(),
            t2: self.t2.clone(),
            graph: self.graph.induced(keep),
            provenance: self.provenance.clone(),
        }
    }

    /// Re-verifies every edge by exact equality and certifies every non-edge
    /// off both targets by interval separation. Returns the number of
    /// certified non-edge pairs.
    pub fn audit(&self) -> Result<usize> {
        for (a, b, k) in self.graph.edges() {
            let t = match k {
                EdgeKind::One => &self.t1,
                EdgeKind::Two => &self.t2,
            };
            if &self.dist_sq(a, b) != t {
                return Err(Error::Validation(format!("edge ({a},{b}) is off target")));
            }
        }
        let n = self.n();
        let counts: Vec<Result<usize>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut c = 0;
                for j in i + 1..n {
                    if self.graph.is_adjacent(i, j) {
                        continue;
                    }
                    let d = self.dist_sq(i, j);
                    for t in [&self.t1, &self.t2] {
                        let diff = d.sub(t);
                        certify_sign(&format!("pair ({i},{j})"), |p| Ok(diff.approx(p)))?;
                    }
                    c += 1;
                }
                Ok(c)
            })
            .collect();
        counts.into_iter().sum()
    }
}

/// True when every pair in `s` is joined by an edge of either kind.
pub fn clique_check(g: &EdgeGraph, s: &[usize]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, &a)| s[i + 1..].iter().all(|&b| g.is_adjacent(a, b)))
}

/// Sorted unordered pairs of `s` joined by no edge.
pub fn non_edges_within(g: &EdgeGraph, s: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            if a != b && !g.is_adjacent(a, b) {
                out.push((a.min(b), a.max(b)));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, HexC, Q33};
    use crate::geometry::{HexPoint, Hexagon};

    fn pts(v: &[(i64, i64)]) -> PointSet<Hexagon> {
        PointSet::from_points(
            v.iter().map(|&(a, b)| {
                HexPoint::new(HexC::new(rat(a, 1), rat(b, 1), rat(0, 1), rat(0, 1)))
            }),
        )
    }

    #[test]
    fn classifies_exactly() {
        let s = pts(&[(0, 0), (1, 0), (2, 0), (5, 0)]);
        let g = build_edges(&s, &Q33::from_ints(1, 0), &Q33::from_ints(4, 0));
        assert_eq!(g.graph().e1(), &[(0, 1), (1, 2)]);
        assert_eq!(g.graph().e2(), &[(0, 2)]);
        assert_eq!(g.audit().unwrap(), 3);
    }

    #[test]
    fn far_points_have_no_edges() {
        let s = pts(&[(0, 0), (3, 0)]);
        let g = build_edges(&s, &Q33::from_ints(1, 0), &Q33::from_ints(4, 0));
        assert_eq!(g.graph().edge_count(), 0);
    }

    #[test]
    fn from_parts_rejects_wrong_edges() {
        let s = pts(&[(0, 0), (1, 0)]);
        let wrong = EdgeGraph::new(2, &[], &[(0, 1)]).unwrap();
        let r = TwoDistGraph::<Hexagon>::from_parts(
            s.points().to_vec(),
            Q33::from_ints(1, 0),
            Q33::from_ints(4, 0),
            wrong,
            String::new(),
        );
        assert!(matches!(r, Err(Error::Validation(_))));
    }

    #[test]
    fn clique_and_non_edges() {
        let g = EdgeGraph::new(4, &[(0, 1), (1, 2)], &[(0, 2)]).unwrap();
        assert!(clique_check(&g, &[0, 1, 2]));
        assert!(clique_check(&g, &[3]));
        assert!(!clique_check(&g, &[0, 3]));
        assert_eq!(
            non_edges_within(&g, &[0, 1, 2, 3]),
            vec![(0, 3), (1, 3), (2, 3)]
        );
        assert!(non_edges_within(&g, &[0, 1, 2]).is_empty());
    }
}
