use super::edgegraph::EdgeGraph;
use crate::error::{Error, Result};

struct Search<'a> {
    pattern: &'a EdgeGraph,
    host: &'a EdgeGraph,
    induced: bool,
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, p: usize, h: usize) -> bool {
        if self.used[h] {
            return false;
        }
        let (p1, p2) = self.pattern.degree_pair(p);
        let (h1, h2) = self.host.degree_pair(h);
        if h1 < p1 || h2 < p2 {
            return false;
        }
        for (q, mq) in self.map.iter().enumerate() {
            let Some(hq) = *mq else { continue };
            let want = self.pattern.edge_kind(p, q);
            let have = self.host.edge_kind(h, hq);
            match want {
                Some(k) if have != Some(k) => return false,
                None if self.induced && have.is_some() => return false,
                _ => {}
            }
        }
        true
    }

    fn candidates(&self, p: usize) -> Vec<usize> {
        // neighbours of an already-mapped pattern neighbour, else every host vertex
        for &(q, _) in self.pattern.neighbors(p) {
            if let Some(hq) = self.map[q] {
                return self.host.neighbors(hq).iter().map(|&(h, _)| h).collect();
            }
        }
        (0..self.host.n()).collect()
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        if self.map[p].is_some() {
            return self.run(depth + 1);
        }
        for h in self.candidates(p) {
            if self.consistent(p, h) {
                self.map[p] = Some(h);
                self.used[h] = true;
                if self.run(depth + 1) {
                    return true;
                }
                self.map[p] = None;
                self.used[h] = false;
            }
        }
        false
    }
}

/// Finds an injective map from pattern vertices to host vertices sending each
/// pattern edge onto a host edge of the same kind and respecting `anchors`
/// (pattern vertex, host vertex). With `induced`, pattern non-edges must also
/// map to host non-edges.
pub fn locate_subgraph(
    pattern: &EdgeGraph,
    host: &EdgeGraph,
    anchors: &[(usize, usize)],
    induced: bool,
) -> Result<Vec<usize>> {
    if pattern.n() > host.n() {
        return Err(Error::NoEmbedding);
    }
    let mut s = Search {
        pattern,
        host,
        induced,
        order: Vec::new(),
        map: vec![None; pattern.n()],
        used: vec![false; host.n()],
    };
    for &(p, h) in anchors {
        if p >= pattern.n() {
            return Err(Error::VertexOutOfRange {
                index: p,
                len: pattern.n(),
            });
        }
        if h >= host.n() {
            return Err(Error::VertexOutOfRange {
                index: h,
                len: host.n(),
            });
        }
        if !s.consistent(p, h) {
            return Err(Error::NoEmbedding);
        }
        s.map[p] = Some(h);
        s.used[h] = true;
    }
    // breadth-first from the anchors so each new vertex has a mapped neighbour
    let mut seen = vec![false; pattern.n()];
    let mut queue: std::collections::VecDeque<usize> = anchors.iter().map(|&(p, _)| p).collect();
    for &p in &queue {
        seen[p] = true;
    }
    loop {
        while let Some(p) = queue.pop_front() {
            s.order.push(p);
            for &(q, _) in pattern.neighbors(p) {
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        match (0..pattern.n())
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
        {
            Some(v) => {
                seen[v] = true;
                queue.push_back(v);
            }
            None => break,
        }
    }
    if s.run(0) {
        Ok(s.map.into_iter().map(|m| m.unwrap()).collect())
    } else {
        Err(Error::NoEmbedding)
    }
}
