use crate::error::{Error, Result};
use crate::graphs::EdgeGraph;

/// Largest graph accepted by the exhaustive routines.
pub const ENUMERATION_LIMIT: usize = 40;

/// Vertex order: greedy clique first, then repeatedly the vertex with the
/// most already-ordered neighbours (ties by index).
fn search_order(g: &EdgeGraph) -> Vec<usize> {
    let mut order = g.greedy_clique();
    let mut placed = vec![false; g.n()];
    for &v in &order {
        placed[v] = true;
    }
    while order.len() < g.n() {
        let next = (0..g.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = g.neighbors(v).iter().filter(|(u, _)| placed[*u]).count();
                (back, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Calls `visit` with every proper k-colouring (indexed by vertex). With
/// `canonicalize`, only colourings whose colours first appear in increasing
/// order along a fixed vertex order (clique first) are visited, which is one
/// per colour-permutation class. `visit` returns `false` to stop early.
pub fn for_each_coloring<F>(
    g: &EdgeGraph,
    k: usize,
    canonicalize: bool,
    mut visit: F,
) -> Result<u64>
where
    F: FnMut(&[usize]) -> bool,
{
    if g.n() > ENUMERATION_LIMIT {
        return Err(Error::Validation(format!(
            "exhaustive enumeration is limited to {ENUMERATION_LIMIT} vertices"
        )));
    }
    let order = search_order(g);
    let mut colors = vec![usize::MAX; g.n()];
    let mut count = 0u64;
    let mut stop = false;
    rec(
        g,
        k,
        canonicalize,
        &order,
        0,
        0,
        &mut colors,
        &mut count,
        &mut stop,
        &mut visit,
    );
    Ok(count)
}

#[allow(clippy::too_many_arguments)]
fn rec<F: FnMut(&[usize]) -> bool>(
    g: &EdgeGraph,
    k: usize,
    canonical: bool,
    order: &[usize],
    depth: usize,
    used: usize,
    colors: &mut Vec<usize>,
    count: &mut u64,
    stop: &mut bool,
    visit: &mut F,
) {
    if *stop {
        return;
    }
    if depth == order.len() {
        *count += 1;
        if !visit(colors) {
            *stop = true;
        }
        return;
    }
    let v = order[depth];
    let limit = if canonical { (used + 1).min(k) } else { k };
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&(u, _)| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        rec(
            g,
            k,
            canonical,
            order,
            depth + 1,
            used.max(c + 1),
            colors,
            count,
            stop,
            visit,
        );
        colors[v] = usize::MAX;
        if *stop {
            return;
        }
    }
}

/// All proper k-colourings, collected.
pub fn color_enumerate(g: &EdgeGraph, k: usize, canonicalize: bool) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_coloring(g, k, canonicalize, |c| {
        out.push(c.to_vec());
        true
    })?;
    Ok(out)
}

/// Naive oracle over all `k^n` assignments; independent of the SAT kernel.
pub fn brute_force_coloring(
    g: &EdgeGraph,
    k: usize,
    diff_pairs: &[(usize, usize)],
    precolored: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let n = g.n();
    assert!(n <= 14, "brute force is for tiny graphs");
    let total = (k as u64).checked_pow(n as u32).expect("k^n fits in u64");
    let mut colors = vec![0usize; n];
    for code in 0..total {
        let mut x = code;
        for c in colors.iter_mut() {
            *c = (x % k as u64) as usize;
            x /= k as u64;
        }
        let ok = g.edges().all(|(a, b, _)| colors[a] != colors[b])
            && diff_pairs.iter().all(|&(a, b)| colors[a] != colors[b])
            && precolored.iter().all(|&(v, c)| colors[v] == c);
        if ok {
            return Some(colors);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_and_clique() {
        let one = EdgeGraph::empty(1);
        assert_eq!(color_enumerate(&one, 5, true).unwrap().len(), 1);
        assert_eq!(color_enumerate(&one, 5, false).unwrap().len(), 5);
        let mut e = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                e.push((a, b));
            }
        }
        let k5 = EdgeGraph::new(5, &e, &[]).unwrap();
        assert_eq!(color_enumerate(&k5, 5, true).unwrap().len(), 1);
        assert_eq!(color_enumerate(&k5, 5, false).unwrap().len(), 120);
    }

    #[test]
    fn canonical_count_times_permutations() {
        // path on 3 vertices with 3 colours: 3·2·2 = 12 colourings,
        // classes: {a,b,a} (3·2 each) and {a,b,c} (6 each) -> 2 classes
        let p3 = EdgeGraph::new(3, &[(0, 1), (1, 2)], &[]).unwrap();
        assert_eq!(color_enumerate(&p3, 3, false).unwrap().len(), 12);
        assert_eq!(color_enumerate(&p3, 3, true).unwrap().len(), 2);
    }

    #[test]
    fn limit_is_enforced() {
        assert!(color_enumerate(&EdgeGraph::empty(41), 2, true).is_err());
    }

    #[test]
    fn brute_force_basics() {
        let tri = EdgeGraph::new(3, &[(0, 1), (1, 2), (0, 2)], &[]).unwrap();
        assert!(brute_force_coloring(&tri, 2, &[], &[]).is_none());
        assert!(brute_force_coloring(&tri, 3, &[], &[(0, 2)]).is_some());
    }
}
