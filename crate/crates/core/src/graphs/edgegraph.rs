use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKind {
    /// First target distance (always 1 in the catalog).
    One,
    /// Second target distance (d or 2).
    Two,
}

impl EdgeKind {
    pub fn swapped(self) -> Self {
        match self {
            EdgeKind::One => EdgeKind::Two,
            EdgeKind::Two => EdgeKind::One,
        }
    }
}

/// Combinatorial skeleton of a two-distance graph: `n` vertices and two
/// disjoint, sorted edge lists with `u < v` in every pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeGraph {
    n: usize,
    e1: Vec<(usize, usize)>,
    e2: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, EdgeKind)>>,
}

fn normalize(list: &[(usize, usize)], n: usize) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(list.len());
    for &(a, b) in list {
        for x in [a, b] {
            if x >= n {
                return Err(Error::VertexOutOfRange { index: x, len: n });
            }
        }
        if a == b {
            return Err(Error::Validation(format!("self-loop at {a}")));
        }
        out.push((a.min(b), a.max(b)));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

impl EdgeGraph {
    pub fn new(n: usize, e1: &[(usize, usize)], e2: &[(usize, usize)]) -> Result<Self> {
        let e1 = normalize(e1, n)?;
        let e2 = normalize(e2, n)?;
        let mut adj = vec![Vec::new(); n];
        for (list, kind) in [(&e1, EdgeKind::One), (&e2, EdgeKind::Two)] {
            for &(a, b) in list.iter() {
                adj[a].push((b, kind));
                adj[b].push((a, kind));
            }
        }
        for (v, row) in adj.iter_mut().enumerate() {
            row.sort_unstable();
            if row.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::Validation(format!(
                    "vertex {v} has a pair listed in both edge sets"
                )));
            }
        }
        Ok(EdgeGraph { n, e1, e2, adj })
    }

    pub fn empty(n: usize) -> Self {
        EdgeGraph {
            n,
            e1: Vec::new(),
            e2: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e1(&self) -> &[(usize, usize)] {
        &self.e1
    }

    pub fn e2(&self) -> &[(usize, usize)] {
        &self.e2
    }

    pub fn edge_count(&self) -> usize {
        self.e1.len() + self.e2.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeKind)> + '_ {
        self.e1
            .iter()
            .map(|&(a, b)| (a, b, EdgeKind::One))
            .chain(self.e2.iter().map(|&(a, b)| (a, b, EdgeKind::Two)))
    }

    /// Neighbours of `v` with edge kinds, sorted by neighbour index.
    pub fn neighbors(&self, v: usize) -> &[(usize, EdgeKind)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `(deg_E1, deg_E2)`.
    pub fn degree_pair(&self, v: usize) -> (usize, usize) {
        let ones = self.adj[v]
            .iter()
            .filter(|(_, k)| *k == EdgeKind::One)
            .count();
        (ones, self.adj[v].len() - ones)
    }

    pub fn edge_kind(&self, u: usize, v: usize) -> Option<EdgeKind> {
        let row = &self.adj[u];
        row.binary_search_by(|probe| probe.0.cmp(&v))
            .ok()
            .map(|i| row[i].1)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_kind(u, v).is_some()
    }

    /// Subgraph induced by `keep` (kept in the given order); vertex `i` of
    /// the result is `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> EdgeGraph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut e1 = Vec::new();
        let mut e2 = Vec::new();
        for (a, b, k) in self.edges() {
            let (pa, pb) = (pos[a], pos[b]);
            if pa != usize::MAX && pb != usize::MAX {
                match k {
                    EdgeKind::One => e1.push((pa, pb)),
                    EdgeKind::Two => e2.push((pa, pb)),
                }
            }
        }
        EdgeGraph::new(keep.len(), &e1, &e2).expect("induced subgraph of a valid graph")
    }

    /// The same graph with `u`–`v` added as an edge of the given kind.
    pub fn with_edge(&self, u: usize, v: usize, kind: EdgeKind) -> Result<EdgeGraph> {
        let mut e1 = self.e1.clone();
        let mut e2 = self.e2.clone();
        match kind {
            EdgeKind::One => e1.push((u, v)),
            EdgeKind::Two => e2.push((u, v)),
        }
        EdgeGraph::new(self.n, &e1, &e2)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> EdgeGraph {
        let key = (u.min(v), u.max(v));
        let e1: Vec<_> = self.e1.iter().copied().filter(|&e| e != key).collect();
        let e2: Vec<_> = self.e2.iter().copied().filter(|&e| e != key).collect();
        EdgeGraph::new(self.n, &e1, &e2).expect("edge removal keeps validity")
    }

    /// Exchanges the roles of the two edge sets.
    pub fn swapped(&self) -> EdgeGraph {
        EdgeGraph::new(self.n, &self.e2, &self.e1).expect("swap keeps validity")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> EdgeGraph {
        let map = |l: &[(usize, usize)]| -> Vec<(usize, usize)> {
            l.iter().map(|&(a, b)| (perm[a], perm[b])).collect()
        };
        EdgeGraph::new(self.n, &map(&self.e1), &map(&self.e2)).expect("permutation keeps validity")
    }

    /// Greedy clique: repeatedly takes the highest-degree vertex adjacent to all chosen ones.
    pub fn greedy_clique(&self) -> Vec<usize> {
        let mut best: Vec<usize> = Vec::new();
        for start in 0..self.n {
            let mut clique = vec![start];
            let mut cand: Vec<usize> = self.adj[start].iter().map(|&(u, _)| u).collect();
            while !cand.is_empty() {
                let &pick = cand
                    .iter()
                    .max_by_key(|&&u| {
                        (
                            cand.iter().filter(|&&w| self.is_adjacent(u, w)).count(),
                            std::cmp::Reverse(u),
                        )
                    })
                    .unwrap();
                clique.push(pick);
                cand.retain(|&w| w != pick && self.is_adjacent(pick, w));
            }
            if clique.len() > best.len() {
                best = clique;
            }
        }
        best.sort_unstable();
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            EdgeGraph::new(2, &[(0, 2)], &[]),
            Err(Error::VertexOutOfRange { index: 2, len: 2 })
        ));
        assert!(EdgeGraph::new(2, &[(1, 1)], &[]).is_err());
        assert!(EdgeGraph::new(2, &[(0, 1)], &[(1, 0)]).is_err());
    }

    #[test]
    fn normalizes_and_queries() {
        let g = EdgeGraph::new(4, &[(2, 0), (0, 1), (0, 1)], &[(3, 1)]).unwrap();
        assert_eq!(g.e1(), &[(0, 1), (0, 2)]);
        assert_eq!(g.edge_kind(3, 1), Some(EdgeKind::Two));
        assert_eq!(g.degree_pair(0), (2, 0));
        let sub = g.induced(&[1, 3]);
        assert_eq!(sub.e2(), &[(0, 1)]);
        assert_eq!(g.swapped().e1(), &[(1, 3)]);
        assert_eq!(g.without_edge(1, 0).edge_count(), 2);
    }

    #[test]
    fn greedy_clique_finds_triangle() {
        let g = EdgeGraph::new(5, &[(0, 1), (1, 2), (3, 4)], &[(0, 2)]).unwrap();
        assert_eq!(g.greedy_clique(), vec![0, 1, 2]);
    }
}
