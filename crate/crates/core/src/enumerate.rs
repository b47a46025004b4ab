//! Exhaustive enumeration of labeled simple graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest order [`enumerate_labeled_graphs`] accepts.
pub const DEFAULT_ENUMERATION_CAP: usize = 7;

/// Iterator over every labeled graph on `n` vertices.
///
/// Graph number `m` has edge `j` present iff bit `j` of `m` is set, where
/// edges are indexed in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
/// Masks are visited in increasing order.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
    connected_only: bool,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            let edges: Vec<_> =
                self.pairs.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(self.n, &edges).expect("pairs are valid");
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices (optionally only the
/// connected ones), refusing orders above `cap`.
pub fn enumerate_labeled_graphs_capped(n: usize, connected_only: bool, cap: usize) -> Result<LabeledGraphs> {
    if n > cap || n > 11 {
        return Err(Error::EnumerationCap { n, cap: cap.min(11) });
    }
    let pairs: Vec<_> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let end = 1u64 << pairs.len();
    Ok(LabeledGraphs { n, pairs, next_mask: 0, end, connected_only })
}

pub fn enumerate_labeled_graphs(n: usize, connected_only: bool) -> Result<LabeledGraphs> {
    enumerate_labeled_graphs_capped(n, connected_only, DEFAULT_ENUMERATION_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::{emit_graph6, parse_graph6};
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled_graphs(0, false).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(2, false).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4, false).unwrap().count(), 64);
    }

    // Independent connectivity check: depth-first search over an edge list.
    fn connected_by_dfs(g: &Graph) -> bool {
        if g.n() == 0 {
            return true;
        }
        let edges: Vec<_> = g.edges().collect();
        let mut seen = vec![false; g.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    #[test]
    fn connected_counts_agree_with_dfs() {
        // 1, 1, 4, 38, 728 connected labeled graphs on 1..=5 vertices.
        for (n, expected) in [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)] {
            let all: Vec<_> = enumerate_labeled_graphs(n, false).unwrap().collect();
            let by_dfs = all.iter().filter(|g| connected_by_dfs(g)).count();
            let filtered = enumerate_labeled_graphs(n, true).unwrap().count();
            assert_eq!(by_dfs, expected);
            assert_eq!(filtered, expected);
        }
    }

    #[test]
    fn each_graph_once_in_mask_order() {
        let all: Vec<_> = enumerate_labeled_graphs(4, false).unwrap().collect();
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 64);
        assert_eq!(all[0].edge_count(), 0);
        assert_eq!(all[1].edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(all[4].edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(all[63], Graph::complete(4).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_labeled_graphs(8, false), Err(Error::EnumerationCap { n: 8, cap: 7 })));
        assert!(enumerate_labeled_graphs_capped(8, false, 8).is_ok());
    }

    #[test]
    fn graph6_round_trip_up_to_seven() {
        for n in 0..=7 {
            for g in enumerate_labeled_graphs(n, false).unwrap() {
                let s = emit_graph6(&g).unwrap();
                let back = parse_graph6(&s).unwrap();
                assert_eq!(back, g);
                assert_eq!(emit_graph6(&back).unwrap(), s);
            }
        }
    }
}
