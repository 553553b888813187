//! Two-distance graphs: typed edge sets over exact point sets.

mod automorphism;
mod edgegraph;
mod locate;
mod spindle;
mod twodist;

pub use automorphism::{automorphism_report, is_isomorphic, AutomorphismReport};
pub use edgegraph::{EdgeGraph, EdgeKind};
pub use locate::locate_subgraph;
pub use spindle::{spindle, CopyRef, SpindledGraph};
pub use twodist::{build_edges, clique_check, non_edges_within, TwoDistGraph};

/// Formats an edge list in the `{i,j}` notation with 1-based labels.
pub fn format_edge_list(edges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = edges
        .iter()
        .map(|(a, b)| format!("{{{},{}}}", a + 1, b + 1))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

/// Parses `{i,j}` pairs with 1-based labels into sorted 0-based pairs.
pub fn parse_edge_list(text: &str) -> crate::Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let cleaned: String = text
        .chars()
        .map(|c| if c.is_ascii_digit() { c } else { ' ' })
        .collect();
    let nums: Vec<usize> = cleaned
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|e| crate::Error::Parse(e.to_string()))
        })
        .collect::<crate::Result<_>>()?;
    if nums.len() % 2 != 0 {
        return Err(crate::Error::Parse("odd number of labels".into()));
    }
    for ch in nums.chunks(2) {
        if ch[0] == 0 || ch[1] == 0 {
            return Err(crate::Error::Parse("labels are 1-based".into()));
        }
        let (a, b) = (ch[0] - 1, ch[1] - 1);
        out.push((a.min(b), a.max(b)));
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_notation_round_trips() {
        let e = parse_edge_list("{{1,2}, {3,1}, {14,16}}").unwrap();
        assert_eq!(e, vec![(0, 1), (0, 2), (13, 15)]);
        assert_eq!(format_edge_list(&e), "{{1,2}, {1,3}, {14,16}}");
        assert!(parse_edge_list("{1,2,3}").is_err());
        assert!(parse_edge_list("{0,2}").is_err());
    }
}
