//! Brute-force reference implementations. They touch the graph only through
//! `n()` and `has_edge`, and enumerate subsets explicitly.

#![allow(dead_code)]

use isolation_core::Graph;

/// All `size`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

pub fn independent(g: &Graph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

pub fn has_clique_among(g: &Graph, pool: &[usize], k: usize) -> bool {
    if k == 0 {
        return true;
    }
    combinations(pool.len(), k).into_iter().any(|idx| {
        let vs: Vec<_> = idx.iter().map(|&i| pool[i]).collect();
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// Vertices neither in `set` nor adjacent to it.
pub fn outside_closed_neighborhood(g: &Graph, set: &[usize]) -> Vec<usize> {
    (0..g.n()).filter(|&v| set.iter().all(|&s| s != v && !g.has_edge(s, v))).collect()
}

pub fn isolating(g: &Graph, k: usize, set: &[usize]) -> bool {
    !has_clique_among(g, &outside_closed_neighborhood(g, set), k)
}

/// Minimum K_k-isolating set by increasing cardinality, lexicographically
/// least witness.
pub fn iota(g: &Graph, k: usize, require_independent: bool) -> (usize, Vec<usize>) {
    for size in 0..=g.n() {
        for set in combinations(g.n(), size) {
            if (!require_independent || independent(g, &set)) && isolating(g, k, &set) {
                return (size, set);
            }
        }
    }
    unreachable!("V(G) isolates")
}

/// Domination number `γ`.
pub fn gamma(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&size| combinations(g.n(), size).iter().any(|set| outside_closed_neighborhood(g, set).is_empty()))
        .unwrap()
}

/// Independent domination number `i`.
pub fn independent_domination(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&size| {
            combinations(g.n(), size)
                .iter()
                .any(|set| independent(g, set) && outside_closed_neighborhood(g, set).is_empty())
        })
        .unwrap()
}

/// No induced `K_{1,r}`: every neighborhood has fewer than `r` independent vertices.
pub fn star_free(g: &Graph, r: usize) -> bool {
    (0..g.n()).all(|v| {
        let nbrs: Vec<_> = (0..g.n()).filter(|&u| g.has_edge(u, v)).collect();
        combinations(nbrs.len(), r).iter().all(|idx| {
            let leaves: Vec<_> = idx.iter().map(|&i| nbrs[i]).collect();
            !independent(g, &leaves)
        })
    })
}
