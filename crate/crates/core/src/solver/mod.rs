//! Colouring decisions, forcing checks, enumeration and reduction on top of
//! a small CDCL kernel.

mod cdcl;
mod cnf;
mod coloring;
mod enumerate;
mod proof;
mod reduce;

pub use cdcl::{Budget, Lit, SolveResult, Solver, SolverStats};
pub use cnf::{solve_cnf, CnfFormula, CnfResult};
pub use coloring::{
    color_decide, forces_mono_pair, verify_coloring, ColoringOutcome, ColoringQuery, ForcingOracle,
    Verdict,
};
pub use enumerate::{brute_force_coloring, color_enumerate, for_each_coloring, ENUMERATION_LIMIT};
pub use proof::{replay_g16_proof, ProofReport, ProofStep};
pub use reduce::{deletion_order, reduce_preserving, OrderPolicy, Reduction};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::EdgeGraph;
    use proptest::prelude::*;

    fn small_graph() -> impl Strategy<Value = EdgeGraph> {
        (2usize..9).prop_flat_map(|n| {
            prop::collection::vec((0..n, 0..n, any::<bool>()), 0..20).prop_map(move |es| {
                let mut seen = std::collections::BTreeSet::new();
                let (mut e1, mut e2) = (Vec::new(), Vec::new());
                for (a, b, k) in es {
                    if a != b && seen.insert((a.min(b), a.max(b))) {
                        if k {
                            e1.push((a, b))
                        } else {
                            e2.push((a, b))
                        }
                    }
                }
                EdgeGraph::new(n, &e1, &e2).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn decide_matches_brute_force(g in small_graph(), k in 1usize..5, pair in any::<(u8, u8)>()) {
            let (u, v) = (pair.0 as usize % g.n(), pair.1 as usize % g.n());
            let mut q = ColoringQuery::new(&g, k);
            if u != v {
                q = q.with_diff_pair(u, v);
            }
            let oracle = brute_force_coloring(&g, k, &q.diff_pairs, &[]);
            let got = color_decide(&q, Budget::unlimited()).unwrap();
            match got.verdict {
                Verdict::Colorable(c) => {
                    prop_assert!(oracle.is_some());
                    prop_assert!(verify_coloring(&g, k, &q.diff_pairs, &[], &c));
                }
                Verdict::NotColorable => prop_assert!(oracle.is_none()),
                Verdict::Timeout => prop_assert!(false, "unlimited budget timed out"),
            }
        }

        #[test]
        fn forcing_is_monotone(g in small_graph(), extra in prop::collection::vec((0usize..12, 0usize..12), 0..6)) {
            let (u, v) = (0, g.n() - 1);
            prop_assume!(!g.is_adjacent(u, v));
            if forces_mono_pair(&g, u, v, 3, Budget::unlimited()).unwrap() {
                // supergraph: two more vertices and some extra edges
                let n = g.n() + 2;
                let mut e1: Vec<_> = g.e1().to_vec();
                for (a, b) in extra {
                    let (a, b) = (a % n, b % n);
                    if a != b && (a.min(b), a.max(b)) != (u, v) {
                        e1.push((a, b));
                    }
                }
                let mut e1s: Vec<_> = e1.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
                e1s.sort_unstable();
                e1s.dedup();
                e1s.retain(|p| !g.e2().contains(p));
                let sup = EdgeGraph::new(n, &e1s, g.e2()).unwrap();
                prop_assert!(forces_mono_pair(&sup, u, v, 3, Budget::unlimited()).unwrap());
            }
        }

        #[test]
        fn enumeration_matches_brute_force_existence(g in small_graph(), k in 1usize..4) {
            let all = color_enumerate(&g, k, false).unwrap();
            prop_assert_eq!(all.is_empty(), brute_force_coloring(&g, k, &[], &[]).is_none());
            for c in &all {
                prop_assert!(verify_coloring(&g, k, &[], &[], c));
            }
            let canon = color_enumerate(&g, k, true).unwrap();
            prop_assert!(canon.len() <= all.len());
        }
    }
}
