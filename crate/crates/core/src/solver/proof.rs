//! Machine check of the five-step argument that vertices 1 and 16 of the
//! 16-vertex pentagon graph share a colour in every 5-colouring.
//!
//! Vertex labels here are the 1-based labels of the printed edge lists.

use serde::{Deserialize, Serialize};

use crate::graphs::{clique_check, non_edges_within, EdgeGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofStep {
    pub id: u8,
    pub claim: String,
    pub pass: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofReport {
    pub steps: Vec<ProofStep>,
}

impl ProofReport {
    pub fn all_pass(&self) -> bool {
        self.steps.iter().all(|s| s.pass)
    }

    pub fn step(&self, id: u8) -> Option<&ProofStep> {
        self.steps.iter().find(|s| s.id == id)
    }
}

const WHITE: usize = 1;
const CLIQUE: [usize; 5] = [1, 2, 3, 5, 6];
const MIDDLE: [usize; 6] = [4, 7, 8, 9, 10, 13];
const PAIRS: [(usize, usize); 3] = [(4, 13), (7, 8), (9, 10)];
const OUTER: [usize; 4] = [11, 12, 14, 15];
const LAST: usize = 16;

fn idx(labels: &[usize]) -> Vec<usize> {
    labels.iter().map(|l| l - 1).collect()
}

fn adj(g: &EdgeGraph, a: usize, b: usize) -> bool {
    g.is_adjacent(a - 1, b - 1)
}

fn labels(pairs: &[(usize, usize)]) -> String {
    let parts: Vec<String> = pairs
        .iter()
        .map(|(a, b)| format!("{{{},{}}}", a + 1, b + 1))
        .collect();
    parts.join(" ")
}

pub fn replay_g16_proof(g: &EdgeGraph) -> ProofReport {
    let mut steps = Vec::new();
    if g.n() != 16 {
        steps.push(ProofStep {
            id: 1,
            claim: "graph has 16 vertices".into(),
            pass: false,
            witness: format!("{} vertices", g.n()),
        });
        return ProofReport { steps };
    }

    let mut cover: Vec<usize> = [
        vec![1],
        vec![2, 3, 5, 6],
        MIDDLE.to_vec(),
        OUTER.to_vec(),
        vec![LAST],
    ]
    .concat();
    cover.sort_unstable();
    let partition = cover == (1..=16).collect::<Vec<_>>();
    steps.push(ProofStep {
        id: 1,
        claim: "{1}, {2,3,5,6}, {4,7,8,9,10,13}, {11,12,14,15}, {16} partition the vertices".into(),
        pass: partition,
        witness: format!("{cover:?}"),
    });

    let clique = clique_check(g, &idx(&CLIQUE));
    steps.push(ProofStep {
        id: 2,
        claim: "{1,2,3,5,6} is a 5-clique".into(),
        pass: clique,
        witness: labels(&non_edges_within(g, &idx(&CLIQUE))),
    });

    let found = non_edges_within(g, &idx(&MIDDLE));
    let expected: Vec<(usize, usize)> = PAIRS.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    // a pair can only be monochromatic in white when each other clique colour
    // is adjacent to one of its endpoints
    let blocked: Vec<String> = PAIRS
        .iter()
        .flat_map(|&(a, b)| {
            CLIQUE
                .iter()
                .filter(|&&c| c != WHITE)
                .filter(move |&&c| !adj(g, a, c) && !adj(g, b, c))
                .map(move |c| format!("{{{a},{b}}} free of {c}"))
        })
        .collect();
    steps.push(ProofStep {
        id: 3,
        claim: "non-edges in {4,7,8,9,10,13} are exactly {4,13} {7,8} {9,10}; each non-white colour appears there at most once".into(),
        pass: found == expected && blocked.is_empty(),
        witness: format!("non-edges: {}; gaps: {}", labels(&found), blocked.join(", ")),
    });

    let uncovered: Vec<String> = PAIRS
        .iter()
        .flat_map(|&(a, b)| {
            OUTER
                .iter()
                .filter(move |&&o| !adj(g, o, a) && !adj(g, o, b))
                .map(move |o| format!("{o} misses {{{a},{b}}}"))
        })
        .collect();
    steps.push(ProofStep {
        id: 4,
        claim: "every vertex of {11,12,14,15} is adjacent to an endpoint of each pair".into(),
        pass: uncovered.is_empty(),
        witness: uncovered.join(", "),
    });

    let outer_clique = clique_check(g, &idx(&OUTER));
    let missing: Vec<usize> = OUTER
        .iter()
        .copied()
        .filter(|&o| !adj(g, o, LAST))
        .collect();
    steps.push(ProofStep {
        id: 5,
        claim: "{11,12,14,15} is a 4-clique adjacent to 16, so 16 is white".into(),
        pass: outer_clique && missing.is_empty(),
        witness: format!(
            "clique gaps: {}; not adjacent to 16: {missing:?}",
            labels(&non_edges_within(g, &idx(&OUTER)))
        ),
    });
    ProofReport { steps }
}
