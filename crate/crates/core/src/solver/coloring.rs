use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::cdcl::{Budget, Lit, SolveResult, Solver, SolverStats};
use super::cnf::CnfFormula;
use crate::error::{Error, Result};
use crate::graphs::EdgeGraph;

/// A k-colouring question about a graph.
#[derive(Clone, Debug)]
pub struct ColoringQuery<'a> {
    pub graph: &'a EdgeGraph,
    pub k: usize,
    /// Pairs that must receive different colours.
    pub diff_pairs: Vec<(usize, usize)>,
    /// Fixed colours `(vertex, colour)`.
    pub precolored: Vec<(usize, usize)>,
    /// Fix colours of a clique (or of the first difference pair) when no
    /// precolouring is given.
    pub symmetry_breaking: bool,
}

impl<'a> ColoringQuery<'a> {
    pub fn new(graph: &'a EdgeGraph, k: usize) -> Self {
        ColoringQuery {
            graph,
            k,
            diff_pairs: Vec::new(),
            precolored: Vec::new(),
            symmetry_breaking: true,
        }
    }

    pub fn with_diff_pair(mut self, u: usize, v: usize) -> Self {
        self.diff_pairs.push((u, v));
        self
    }

    pub fn with_precolor(mut self, v: usize, c: usize) -> Self {
        self.precolored.push((v, c));
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::Validation("k must be at least 1".into()));
        }
        let n = self.graph.n();
        for &(a, b) in &self.diff_pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, len: n });
                }
            }
        }
        for (i, &(v, c)) in self.precolored.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, len: n });
            }
            if c >= self.k {
                return Err(Error::BadPrecoloring(format!(
                    "colour {c} of vertex {v} is not below k"
                )));
            }
            for &(w, d) in &self.precolored[i + 1..] {
                if w == v && d != c {
                    return Err(Error::BadPrecoloring(format!("vertex {v} fixed twice")));
                }
                if c == d && (self.graph.is_adjacent(v, w) || self.is_diff(v, w)) {
                    return Err(Error::BadPrecoloring(format!(
                        "vertices {v} and {w} share colour {c} across a constraint"
                    )));
                }
            }
        }
        Ok(())
    }

    fn is_diff(&self, a: usize, b: usize) -> bool {
        self.diff_pairs
            .iter()
            .any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    }

    /// Colour variable `x(v, c)` in DIMACS numbering `v·k + c + 1`.
    pub fn var(&self, v: usize, c: usize) -> i64 {
        (v * self.k + c + 1) as i64
    }

    /// Standard encoding: at-least-one colour per vertex, one conflict clause
    /// per edge and colour, per difference pair and colour, and unit clauses
    /// for the precolouring. At-most-one clauses are omitted.
    pub fn to_cnf(&self) -> CnfFormula {
        let n = self.graph.n();
        let mut f = CnfFormula::new((n * self.k) as u32);
        for v in 0..n {
            f.push((0..self.k).map(|c| self.var(v, c)).collect());
        }
        for (a, b, _) in self.graph.edges() {
            for c in 0..self.k {
                f.push(vec![-self.var(a, c), -self.var(b, c)]);
            }
        }
        for &(a, b) in &self.diff_pairs {
            for c in 0..self.k {
                f.push(vec![-self.var(a, c), -self.var(b, c)]);
            }
        }
        for &(v, c) in &self.precolored {
            f.push(vec![self.var(v, c)]);
        }
        f
    }

    /// Precolouring actually used by the search (explicit, or symmetry breaking).
    pub fn effective_precoloring(&self) -> Vec<(usize, usize)> {
        if !self.precolored.is_empty() || !self.symmetry_breaking {
            return self.precolored.clone();
        }
        if let Some(&(u, v)) = self.diff_pairs.first() {
            if u != v && self.k >= 2 {
                return vec![(u, 0), (v, 1)];
            }
            return Vec::new();
        }
        self.graph
            .greedy_clique()
            .into_iter()
            .take(self.k)
            .enumerate()
            .map(|(c, v)| (v, c))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// A proper colouring, one colour per vertex.
    Colorable(Vec<usize>),
    NotColorable,
    Timeout,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColoringOutcome {
    pub verdict: Verdict,
    pub stats: SolverStats,
    pub runtime_ms: u128,
}

/// Independent checker: every vertex coloured below `k`, no edge or
/// difference pair monochromatic, precolouring respected.
pub fn verify_coloring(
    g: &EdgeGraph,
    k: usize,
    diff_pairs: &[(usize, usize)],
    precolored: &[(usize, usize)],
    colors: &[usize],
) -> bool {
    colors.len() == g.n()
        && colors.iter().all(|&c| c < k)
        && g.e1()
            .iter()
            .chain(g.e2())
            .all(|&(a, b)| colors[a] != colors[b])
        && diff_pairs.iter().all(|&(a, b)| colors[a] != colors[b])
        && precolored.iter().all(|&(v, c)| colors[v] == c)
}

/// Decides whether a proper colouring satisfying the query exists.
pub fn color_decide(q: &ColoringQuery<'_>, budget: Budget) -> Result<ColoringOutcome> {
    q.validate()?;
    let t0 = Instant::now();
    let mut effective = q.clone();
    effective.precolored = q.effective_precoloring();
    effective.validate()?;
    let f = effective.to_cnf();
    let mut s = Solver::new();
    f.load_into(&mut s);
    let verdict = match s.solve_with(&[], budget) {
        SolveResult::Sat(model) => {
            let colors = decode(&model, q.graph.n(), q.k);
            assert!(
                verify_coloring(q.graph, q.k, &q.diff_pairs, &q.precolored, &colors),
                "solver model failed independent verification"
            );
            Verdict::Colorable(colors)
        }
        SolveResult::Unsat => Verdict::NotColorable,
        SolveResult::Unknown => Verdict::Timeout,
    };
    Ok(ColoringOutcome {
        verdict,
        stats: s.stats(),
        runtime_ms: t0.elapsed().as_millis(),
    })
}

/// Picks the first true colour variable of each vertex.
fn decode(model: &[bool], n: usize, k: usize) -> Vec<usize> {
    (0..n)
        .map(|v| (0..k).find(|&c| model[v * k + c]).unwrap_or(0))
        .collect()
}

/// True iff every proper k-colouring gives `u` and `v` the same colour.
/// An exhausted budget is reported as [`Error::Timeout`].
pub fn forces_mono_pair(
    g: &EdgeGraph,
    u: usize,
    v: usize,
    k: usize,
    budget: Budget,
) -> Result<bool> {
    if g.is_adjacent(u, v) {
        return Err(Error::PairIsEdge(u, v));
    }
    let q = ColoringQuery::new(g, k).with_diff_pair(u, v);
    match color_decide(&q, budget)?.verdict {
        Verdict::NotColorable => Ok(true),
        Verdict::Colorable(_) => Ok(false),
        Verdict::Timeout => Err(Error::Timeout),
    }
}

/// Incremental forcing test over vertex subsets of one graph. Each vertex
/// has a selector literal guarding its at-least-one-colour clause, so a
/// deselected vertex is unconstrained and learnt clauses stay valid across
/// queries.
pub struct ForcingOracle {
    solver: Solver,
    n: usize,
    k: usize,
    u: usize,
    v: usize,
    pub calls: u64,
}

impl ForcingOracle {
    pub fn new(g: &EdgeGraph, u: usize, v: usize, k: usize) -> Result<Self> {
        let n = g.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { index: x, len: n });
            }
        }
        if g.is_adjacent(u, v) {
            return Err(Error::PairIsEdge(u, v));
        }
        let x = |a: usize, c: usize| (a * k + c) as u32;
        let sel = |a: usize| (n * k + a) as u32;
        let mut s = Solver::new();
        s.reserve_vars((n * k + n) as u32);
        for a in 0..n {
            let mut cl = vec![Lit::neg(sel(a))];
            cl.extend((0..k).map(|c| Lit::pos(x(a, c))));
            s.add_clause(&cl);
        }
        for (a, b, _) in g
            .edges()
            .chain(std::iter::once((u, v, crate::graphs::EdgeKind::One)))
        {
            for c in 0..k {
                s.add_clause(&[Lit::neg(x(a, c)), Lit::neg(x(b, c))]);
            }
        }
        if k >= 2 {
            s.add_clause(&[Lit::pos(x(u, 0))]);
            s.add_clause(&[Lit::pos(x(v, 1))]);
        }
        Ok(ForcingOracle {
            solver: s,
            n,
            k,
            u,
            v,
            calls: 0,
        })
    }

    /// Whether the subgraph induced by `keep` still forces the pair.
    pub fn forces(&mut self, keep: &[bool], budget: Budget) -> Result<bool> {
        assert_eq!(keep.len(), self.n);
        assert!(keep[self.u] && keep[self.v], "the pair must be kept");
        self.calls += 1;
        let assumptions: Vec<Lit> = (0..self.n)
            .filter(|&a| keep[a])
            .map(|a| Lit::pos((self.n * self.k + a) as u32))
            .collect();
        match self.solver.solve_with(&assumptions, budget) {
            SolveResult::Unsat => Ok(true),
            SolveResult::Sat(_) => Ok(false),
            SolveResult::Unknown => Err(Error::Timeout),
        }
    }

    pub fn stats(&self) -> SolverStats {
        self.solver.stats()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> EdgeGraph {
        EdgeGraph::new(3, &[(0, 1), (1, 2)], &[(0, 2)]).unwrap()
    }

    #[test]
    fn triangle_needs_three_colors() {
        let g = triangle();
        let r = color_decide(&ColoringQuery::new(&g, 2), Budget::unlimited()).unwrap();
        assert_eq!(r.verdict, Verdict::NotColorable);
        let r = color_decide(&ColoringQuery::new(&g, 3), Budget::unlimited()).unwrap();
        assert!(matches!(r.verdict, Verdict::Colorable(_)));
    }

    #[test]
    fn dimacs_shape() {
        let single = EdgeGraph::empty(1);
        let f = ColoringQuery::new(&single, 2).to_cnf();
        assert_eq!(f.to_dimacs(), "p cnf 2 1\n1 2 0\n");
        let edge = EdgeGraph::new(2, &[(0, 1)], &[]).unwrap();
        let f = ColoringQuery::new(&edge, 2).to_cnf();
        assert_eq!(f.clauses.len(), 4);
        assert_eq!(f.num_vars, 4);
    }

    #[test]
    fn precoloring_is_validated() {
        let g = triangle();
        let q = ColoringQuery::new(&g, 3)
            .with_precolor(0, 1)
            .with_precolor(1, 1);
        assert!(matches!(
            color_decide(&q, Budget::unlimited()),
            Err(Error::BadPrecoloring(_))
        ));
        let q = ColoringQuery::new(&g, 3).with_precolor(0, 3);
        assert!(matches!(q.validate(), Err(Error::BadPrecoloring(_))));
        let q = ColoringQuery::new(&g, 3).with_precolor(0, 2);
        match color_decide(&q, Budget::unlimited()).unwrap().verdict {
            Verdict::Colorable(c) => assert_eq!(c[0], 2),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn forcing_on_a_diamond() {
        // two triangles sharing an edge: the tips are forced equal at k = 3
        let g = EdgeGraph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], &[]).unwrap();
        assert!(forces_mono_pair(&g, 0, 3, 3, Budget::unlimited()).unwrap());
        assert!(!forces_mono_pair(&g, 0, 3, 4, Budget::unlimited()).unwrap());
        assert_eq!(
            forces_mono_pair(&g, 0, 1, 3, Budget::unlimited()),
            Err(Error::PairIsEdge(0, 1))
        );
        let mut o = ForcingOracle::new(&g, 0, 3, 3).unwrap();
        assert!(o.forces(&[true; 4], Budget::unlimited()).unwrap());
        assert!(!o
            .forces(&[true, true, false, true], Budget::unlimited())
            .unwrap());
        assert!(o.forces(&[true; 4], Budget::unlimited()).unwrap());
    }
}
