use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::edgegraph::{EdgeGraph, EdgeKind};

/// Orders of the automorphism groups of an edge-bicoloured graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismReport {
    /// Permutations preserving E1 and E2 separately.
    pub order_color_preserving: BigUint,
    /// Permutations preserving E1 ∪ E2 that map {E1, E2} to itself,
    /// possibly exchanging the two classes.
    pub order_color_permuting: BigUint,
    /// Permutations preserving E1 ∪ E2 with the kinds forgotten.
    pub order_uncolored: BigUint,
}

impl AutomorphismReport {
    pub fn matches(&self, order: u64) -> bool {
        let o = BigUint::from(order);
        self.order_color_preserving == o
            || self.order_color_permuting == o
            || self.order_uncolored == o
    }

    /// Names of the variants whose order equals `order`.
    pub fn matching_variants(&self, order: u64) -> Vec<&'static str> {
        let o = BigUint::from(order);
        [
            ("color-preserving", &self.order_color_preserving),
            ("color-permuting", &self.order_color_permuting),
            ("uncolored", &self.order_uncolored),
        ]
        .into_iter()
        .filter(|(_, x)| **x == o)
        .map(|(n, _)| n)
        .collect()
    }
}

/// Joint colour refinement of `g` under colouring `cg` and `h` under `ch`.
/// New colours are assigned by sorted signature so both sides agree.
/// Returns `false` when the colour histograms diverge.
fn refine(g: &EdgeGraph, cg: &mut Vec<u32>, h: &EdgeGraph, ch: &mut Vec<u32>) -> bool {
    let mut classes = count_classes(cg);
    loop {
        let sig = |gr: &EdgeGraph, c: &[u32], v: usize| -> (u32, Vec<(u32, EdgeKind)>) {
            let mut nb: Vec<(u32, EdgeKind)> =
                gr.neighbors(v).iter().map(|&(u, k)| (c[u], k)).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sg: Vec<_> = (0..g.n()).map(|v| sig(g, cg, v)).collect();
        let sh: Vec<_> = (0..h.n()).map(|v| sig(h, ch, v)).collect();
        let mut ids: BTreeMap<&(u32, Vec<(u32, EdgeKind)>), u32> = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            ids.insert(s, 0);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i as u32;
        }
        let ng: Vec<u32> = sg.iter().map(|s| ids[s]).collect();
        let nh: Vec<u32> = sh.iter().map(|s| ids[s]).collect();
        if histogram(&ng) != histogram(&nh) {
            return false;
        }
        *cg = ng;
        *ch = nh;
        let now = count_classes(cg);
        if now == classes {
            return true;
        }
        classes = now;
    }
}

fn count_classes(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn histogram(c: &[u32]) -> BTreeMap<u32, usize> {
    let mut m = BTreeMap::new();
    for &x in c {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

fn individualize(c: &mut [u32], v: usize) {
    let fresh = c.iter().copied().max().unwrap_or(0) + 1;
    c[v] = fresh;
}

/// First non-singleton class: smallest size, then smallest colour.
fn target_cell(c: &[u32]) -> Option<u32> {
    histogram(c)
        .into_iter()
        .filter(|&(_, n)| n > 1)
        .min_by_key(|&(col, n)| (n, col))
        .map(|(col, _)| col)
}

/// Searches for an isomorphism `g → h` compatible with the colourings.
fn extend(g: &EdgeGraph, cg: &[u32], h: &EdgeGraph, ch: &[u32]) -> Option<Vec<usize>> {
    let mut cg = cg.to_vec();
    let mut ch = ch.to_vec();
    if !refine(g, &mut cg, h, &mut ch) {
        return None;
    }
    match target_cell(&cg) {
        None => {
            let mut by_color = BTreeMap::new();
            for (w, &c) in ch.iter().enumerate() {
                by_color.insert(c, w);
            }
            let map: Vec<usize> = cg.iter().map(|c| by_color[c]).collect();
            let ok = g
                .edges()
                .all(|(a, b, k)| h.edge_kind(map[a], map[b]) == Some(k));
            ok.then_some(map)
        }
        Some(cell) => {
            let v = cg.iter().position(|&c| c == cell).unwrap();
            for w in (0..h.n()).filter(|&w| ch[w] == cell) {
                let mut cg2 = cg.clone();
                let mut ch2 = ch.clone();
                individualize(&mut cg2, v);
                individualize(&mut ch2, w);
                if let Some(m) = extend(g, &cg2, h, &ch2) {
                    return Some(m);
                }
            }
            None
        }
    }
}

fn same_shape(g: &EdgeGraph, h: &EdgeGraph) -> bool {
    g.n() == h.n() && g.e1().len() == h.e1().len() && g.e2().len() == h.e2().len()
}

/// Isomorphism `g → h` preserving edge kinds, if one exists.
pub fn is_isomorphic(g: &EdgeGraph, h: &EdgeGraph) -> Option<Vec<usize>> {
    if !same_shape(g, h) {
        return None;
    }
    extend(g, &vec![0; g.n()], h, &vec![0; h.n()])
}

/// Order of the colour-preserving group as a product of orbit sizes along a
/// stabilizer chain.
fn group_order(g: &EdgeGraph) -> BigUint {
    let mut c = vec![0u32; g.n()];
    let mut order = BigUint::from(1u32);
    loop {
        let mut c2 = c.clone();
        refine(g, &mut c, g, &mut c2);
        let Some(cell) = target_cell(&c) else {
            return order;
        };
        let members: Vec<usize> = (0..g.n()).filter(|&w| c[w] == cell).collect();
        let v = members[0];
        let mut orbit = 1u32;
        let mut fixed = c.clone();
        individualize(&mut fixed, v);
        for &w in &members[1..] {
            let mut cw = c.clone();
            individualize(&mut cw, w);
            if extend(g, &fixed, g, &cw).is_some() {
                orbit += 1;
            }
        }
        order *= orbit;
        c = fixed;
    }
}

/// Exact orders of all three automorphism-group variants.
pub fn automorphism_report(g: &EdgeGraph) -> AutomorphismReport {
    let pres = group_order(g);
    // without edges a swapping map is just a preserving one
    let swap = g.edge_count() > 0 && is_isomorphic(g, &g.swapped()).is_some();
    let perm = if swap { &pres * 2u32 } else { pres.clone() };
    let all: Vec<(usize, usize)> = g.edges().map(|(a, b, _)| (a, b)).collect();
    let flat = EdgeGraph::new(g.n(), &all, &[]).expect("edges of a valid graph");
    AutomorphismReport {
        order_color_preserving: pres,
        order_color_permuting: perm,
        order_uncolored: group_order(&flat),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_edge() {
        let g = EdgeGraph::new(2, &[(0, 1)], &[]).unwrap();
        let r = automorphism_report(&g);
        assert_eq!(r.order_color_preserving, BigUint::from(2u32));
        assert_eq!(r.order_color_permuting, BigUint::from(2u32));
    }

    #[test]
    fn cycles_and_swaps() {
        let c5 = EdgeGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], &[]).unwrap();
        assert!(automorphism_report(&c5).matches(10));
        // pentagon with sides in E1 and diagonals in E2: the swap is realized
        // by the map k -> 2k
        let k5 = EdgeGraph::new(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
            &[(0, 2), (1, 3), (2, 4), (0, 3), (1, 4)],
        )
        .unwrap();
        let r = automorphism_report(&k5);
        assert_eq!(r.order_color_preserving, BigUint::from(10u32));
        assert_eq!(r.order_color_permuting, BigUint::from(20u32));
        assert_eq!(r.order_uncolored, BigUint::from(120u32));
        assert_eq!(r.matching_variants(120), vec!["uncolored"]);
        let empty = EdgeGraph::empty(4);
        assert!(automorphism_report(&empty).matches(24));
    }

    #[test]
    fn isomorphism_respects_kinds() {
        let a = EdgeGraph::new(3, &[(0, 1)], &[(1, 2)]).unwrap();
        let b = EdgeGraph::new(3, &[(1, 2)], &[(0, 2)]).unwrap();
        let m = is_isomorphic(&a, &b).unwrap();
        assert_eq!(b.edge_kind(m[0], m[1]), Some(EdgeKind::One));
        assert!(is_isomorphic(&a, &a.swapped()).is_some());
        let c = EdgeGraph::new(3, &[(0, 1), (1, 2)], &[]).unwrap();
        assert!(is_isomorphic(&a, &c).is_none());
    }

    fn random_graph() -> impl Strategy<Value = EdgeGraph> {
        (3usize..9).prop_flat_map(|n| {
            prop::collection::vec((0..n, 0..n, prop::bool::ANY), 0..14).prop_map(move |es| {
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

    fn brute_order(g: &EdgeGraph) -> u64 {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        loop {
            if g.edges()
                .all(|(a, b, k)| g.edge_kind(perm[a], perm[b]) == Some(k))
            {
                count += 1;
            }
            // next lexicographic permutation
            let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
                return count;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn relabeling_invariance(g in random_graph(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let r1 = automorphism_report(&g);
            let r2 = automorphism_report(&g.permuted(&perm));
            prop_assert_eq!(&r1, &r2);
            prop_assert_eq!(r1.order_color_preserving.clone(), BigUint::from(brute_order(&g)));
            let zero = BigUint::from(0u32);
            prop_assert_eq!(&r1.order_color_permuting % &r1.order_color_preserving, zero.clone());
            prop_assert_eq!(&r1.order_uncolored % &r1.order_color_permuting, zero);
            prop_assert!(is_isomorphic(&g, &g.permuted(&perm)).is_some());
        }
    }
}
