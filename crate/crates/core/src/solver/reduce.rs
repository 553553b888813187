use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use super::cdcl::{Budget, SolverStats};
use super::coloring::ForcingOracle;
use crate::error::{Error, Result};
use crate::graphs::EdgeGraph;

/// Order in which deletions are attempted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderPolicy {
    /// Farthest from the midpoint of the pair first.
    Periphery,
    /// Lowest degree first.
    AscendingDegree,
    /// Seeded shuffle.
    Random(u64),
}

impl std::str::FromStr for OrderPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "periphery" => Ok(OrderPolicy::Periphery),
            "degree" => Ok(OrderPolicy::AscendingDegree),
            _ => match s.strip_prefix("random") {
                Some(rest) => {
                    let seed = rest.trim_start_matches(':');
                    let seed = if seed.is_empty() {
                        0
                    } else {
                        seed.parse()
                            .map_err(|_| Error::Parse(format!("bad seed in {s}")))?
                    };
                    Ok(OrderPolicy::Random(seed))
                }
                None => Err(Error::Parse(format!("unknown order policy {s}"))),
            },
        }
    }
}

/// Deletion candidates in policy order, the pair excluded. `coords` are
/// drawing coordinates; without them the periphery order falls back to
/// descending graph distance from the pair.
pub fn deletion_order(
    g: &EdgeGraph,
    u: usize,
    v: usize,
    policy: OrderPolicy,
    coords: Option<&[(f64, f64)]>,
) -> Vec<usize> {
    let mut cand: Vec<usize> = (0..g.n()).filter(|&w| w != u && w != v).collect();
    match policy {
        OrderPolicy::Periphery => match coords {
            Some(xy) => {
                let mx = (xy[u].0 + xy[v].0) / 2.0;
                let my = (xy[u].1 + xy[v].1) / 2.0;
                let key = |w: usize| (xy[w].0 - mx).hypot(xy[w].1 - my);
                cand.sort_by(|&a, &b| key(b).total_cmp(&key(a)).then(a.cmp(&b)));
            }
            None => {
                let dist = bfs(g, &[u, v]);
                cand.sort_by_key(|&w| (std::cmp::Reverse(dist[w]), w));
            }
        },
        OrderPolicy::AscendingDegree => cand.sort_by_key(|&w| (g.degree(w), w)),
        OrderPolicy::Random(seed) => {
            cand.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
        }
    }
    cand
}

fn bfs(g: &EdgeGraph, sources: &[usize]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut q = std::collections::VecDeque::new();
    for &s in sources {
        dist[s] = 0;
        q.push_back(s);
    }
    while let Some(x) = q.pop_front() {
        for &(y, _) in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    dist
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Reduction {
    /// Surviving original vertex indices, ascending.
    pub kept: Vec<usize>,
    /// Index of the pair inside the reduced graph.
    pub pair: (usize, usize),
    pub passes: usize,
    pub checks: u64,
    pub stats: SolverStats,
}

/// Greedy single-vertex deletion: walks the policy order, keeps a deletion
/// whenever the pair is still forced, and repeats full passes until one
/// deletes nothing. The result forces the pair and no single vertex can be
/// removed from it without losing that.
pub fn reduce_preserving(
    g: &EdgeGraph,
    u: usize,
    v: usize,
    k: usize,
    policy: OrderPolicy,
    coords: Option<&[(f64, f64)]>,
    budget_per_check: Budget,
) -> Result<Reduction> {
    let mut oracle = ForcingOracle::new(g, u, v, k)?;
    let mut keep = vec![true; g.n()];
    if !oracle.forces(&keep, budget_per_check)? {
        return Err(Error::NotForcing(u, v));
    }
    let order = deletion_order(g, u, v, policy, coords);
    let mut passes = 0;
    loop {
        passes += 1;
        let mut deleted = false;
        for &w in &order {
            if !keep[w] {
                continue;
            }
            keep[w] = false;
            if oracle.forces(&keep, budget_per_check)? {
                deleted = true;
            } else {
                keep[w] = true;
            }
        }
        if !deleted {
            break;
        }
    }
    let kept: Vec<usize> = (0..g.n()).filter(|&w| keep[w]).collect();
    let pos = |x: usize| kept.iter().position(|&w| w == x).unwrap();
    Ok(Reduction {
        pair: (pos(u), pos(v)),
        kept,
        passes,
        checks: oracle.calls,
        stats: oracle.stats(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::forces_mono_pair;

    /// Diamond with a pendant path: only the diamond is needed for forcing.
    fn padded_diamond() -> EdgeGraph {
        EdgeGraph::new(
            6,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)],
            &[],
        )
        .unwrap()
    }

    #[test]
    fn removes_padding_under_every_policy() {
        let g = padded_diamond();
        for p in [
            OrderPolicy::Periphery,
            OrderPolicy::AscendingDegree,
            OrderPolicy::Random(3),
        ] {
            let r = reduce_preserving(&g, 0, 3, 3, p, None, Budget::unlimited()).unwrap();
            assert_eq!(r.kept, vec![0, 1, 2, 3], "{p:?}");
            let sub = g.induced(&r.kept);
            assert!(forces_mono_pair(&sub, r.pair.0, r.pair.1, 3, Budget::unlimited()).unwrap());
        }
    }

    #[test]
    fn rejects_non_forcing_pairs() {
        let g = padded_diamond();
        assert!(matches!(
            reduce_preserving(
                &g,
                0,
                5,
                3,
                OrderPolicy::Periphery,
                None,
                Budget::unlimited()
            ),
            Err(Error::NotForcing(0, 5))
        ));
    }

    #[test]
    fn policy_parsing() {
        assert_eq!(
            "periphery".parse::<OrderPolicy>().unwrap(),
            OrderPolicy::Periphery
        );
        assert_eq!(
            "degree".parse::<OrderPolicy>().unwrap(),
            OrderPolicy::AscendingDegree
        );
        assert_eq!(
            "random:9".parse::<OrderPolicy>().unwrap(),
            OrderPolicy::Random(9)
        );
        assert!("sideways".parse::<OrderPolicy>().is_err());
    }
}
