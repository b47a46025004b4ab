//! k-clique detection over adjacency bitsets.

use std::ops::ControlFlow;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// True iff `g` has `k` pairwise adjacent vertices. `k = 0` is vacuously true.
pub fn contains_clique(g: &Graph, k: usize) -> bool {
    contains_clique_within(g, &g.vertices(), k)
}

/// True iff `g[within]` has a `k`-clique.
pub fn contains_clique_within(g: &Graph, within: &VertexSet, k: usize) -> bool {
    for_each_clique_within(g, within, k, |_| ControlFlow::Break(())).is_break()
}

/// Some `k`-clique of `g[within]`, the lexicographically first one.
pub fn find_clique_within(g: &Graph, within: &VertexSet, k: usize) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = for_each_clique_within(g, within, k, |q| {
        found = Some(q.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Visits every `k`-clique of `g[within]` once, as an ascending vertex slice,
/// in lexicographic order. Stops when `visit` breaks.
pub fn for_each_clique_within<F>(g: &Graph, within: &VertexSet, k: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut stack = Vec::with_capacity(k);
    extend(g, *within, k, &mut stack, &mut visit)
}

fn extend<F>(g: &Graph, candidates: VertexSet, need: usize, stack: &mut Vec<usize>, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if need == 0 {
        return visit(stack);
    }
    let mut remaining = candidates;
    while let Some(v) = remaining.first() {
        if remaining.len() < need {
            break;
        }
        remaining.remove(v);
        let next = remaining & *g.neighbors(v);
        if next.len() + 1 < need {
            continue;
        }
        stack.push(v);
        let flow = extend(g, next, need - 1, stack, visit);
        stack.pop();
        flow?;
    }
    ControlFlow::Continue(())
}
