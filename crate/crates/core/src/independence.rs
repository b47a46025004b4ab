//! Independent sets, independent domination and the star-free threshold.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::isolation::{SolveResult, SolverConfig};
use crate::vertex_set::VertexSet;

pub fn is_independent_set(g: &Graph, set: &VertexSet) -> bool {
    set.iter().all(|v| !g.neighbors(v).intersects(set))
}

/// Repeatedly takes the least available vertex and discards its closed
/// neighborhood. The result is independent and dominating.
pub fn greedy_maximal_independent_set(g: &Graph) -> VertexSet {
    let mut available = g.vertices();
    let mut out = g.empty_set();
    while let Some(v) = available.first() {
        out.insert(v);
        available -= g.closed_neighbors(v);
    }
    out
}

/// A maximum independent set, lexicographically least among them.
pub fn max_independent_set(g: &Graph, config: &SolverConfig) -> Result<VertexSet> {
    if g.n() > config.n_cap {
        return Err(Error::SolverCap { n: g.n(), cap: config.n_cap });
    }
    Ok(max_independent_set_unchecked(g))
}

pub(crate) fn max_independent_set_unchecked(g: &Graph) -> VertexSet {
    let mut best = 0;
    largest_independent(g, g.vertices(), 0, &mut best);
    first_independent_of_size(g, g.empty_set(), g.vertices(), best).expect("size was just attained")
}

fn largest_independent(g: &Graph, pool: VertexSet, size: usize, best: &mut usize) {
    if size + pool.len() <= *best {
        return;
    }
    let Some(v) = pool.first() else {
        *best = size;
        return;
    };
    let mut rest = pool;
    rest.remove(v);
    largest_independent(g, rest - *g.neighbors(v), size + 1, best);
    largest_independent(g, rest, size, best);
}

// Include-first over ascending vertices visits equal-size sets in
// lexicographic order, so the first hit is the least.
fn first_independent_of_size(g: &Graph, chosen: VertexSet, pool: VertexSet, need: usize) -> Option<VertexSet> {
    if need == 0 {
        return Some(chosen);
    }
    if pool.len() < need {
        return None;
    }
    let v = pool.first()?;
    let mut rest = pool;
    rest.remove(v);
    let mut with = chosen;
    with.insert(v);
    first_independent_of_size(g, with, rest - *g.neighbors(v), need - 1)
        .or_else(|| first_independent_of_size(g, chosen, rest, need))
}

/// `i(G)`: a smallest independent dominating set, lexicographically least.
///
/// Depth-first over ascending vertices (include before exclude), deepening on
/// the target size. A branch dies once some undominated vertex has no
/// admissible vertex left in its closed neighborhood.
pub fn min_independent_dominating_set(g: &Graph, config: &SolverConfig) -> Result<SolveResult> {
    if g.n() > config.n_cap {
        return Err(Error::SolverCap { n: g.n(), cap: config.n_cap });
    }
    Ok(min_independent_dominating_set_unchecked(g))
}

pub(crate) fn min_independent_dominating_set_unchecked(g: &Graph) -> SolveResult {
    let mut explored = 0;
    for size in 0..=g.n() {
        let empty = g.empty_set();
        if let Some(witness) = dominate(g, empty, empty, g.vertices(), size, &mut explored) {
            return SolveResult { value: size, witness, explored };
        }
    }
    unreachable!("a maximal independent set dominates")
}

fn dominate(
    g: &Graph,
    chosen: VertexSet,
    dominated: VertexSet,
    pool: VertexSet,
    budget: usize,
    explored: &mut u64,
) -> Option<VertexSet> {
    *explored += 1;
    let open = g.vertices() - dominated;
    if open.is_empty() {
        return Some(chosen);
    }
    if budget == 0 || open.iter().any(|u| !g.closed_neighbors(u).intersects(&pool)) {
        return None;
    }
    let v = pool.first()?;
    let mut rest = pool;
    rest.remove(v);
    let mut with = chosen;
    with.insert(v);
    dominate(g, with, dominated | g.closed_neighbors(v), rest - *g.neighbors(v), budget - 1, explored)
        .or_else(|| dominate(g, chosen, dominated, rest, budget, explored))
}

/// Least `r >= 3` for which `g` is `K_{1,r}`-free, i.e.
/// `max(3, 1 + max_v α(G[N(v)]))`.
pub fn star_free_threshold(g: &Graph) -> usize {
    let widest = (0..g.n())
        .map(|v| max_independent_set_unchecked(&g.induced_subgraph(g.neighbors(v)).0).len())
        .max()
        .unwrap_or(0);
    (widest + 1).max(3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_labeled_graphs;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs).unwrap()
    }

    #[test]
    fn independence_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(!is_independent_set(&k3, &set(3, &[0, 1])));
        assert!(is_independent_set(&k3, &k3.empty_set()));
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_independent_set(&c4, &set(4, &[0, 2])));
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_maximal_independent_set(&Graph::complete(3).unwrap()).to_vec(), vec![0]);
        assert_eq!(greedy_maximal_independent_set(&Graph::empty(3).unwrap()).to_vec(), vec![0, 1, 2]);
        // P4: take 0, drop 1; take 2, drop 3.
        assert_eq!(greedy_maximal_independent_set(&Graph::path(4).unwrap()).to_vec(), vec![0, 2]);
    }

    #[test]
    fn max_independent_examples() {
        let cfg = SolverConfig::default();
        assert_eq!(max_independent_set(&Graph::complete(4).unwrap(), &cfg).unwrap().to_vec(), vec![0]);
        assert_eq!(max_independent_set(&Graph::empty(4).unwrap(), &cfg).unwrap().len(), 4);
        assert_eq!(max_independent_set(&Graph::cycle(5).unwrap(), &cfg).unwrap().to_vec(), vec![0, 2]);
        assert!(max_independent_set(&Graph::empty(40).unwrap(), &cfg).is_err());
    }

    #[test]
    fn independent_domination_examples() {
        let cfg = SolverConfig::default();
        assert_eq!(min_independent_dominating_set(&Graph::empty(4).unwrap(), &cfg).unwrap().value, 4);
        let k5 = min_independent_dominating_set(&Graph::complete(5).unwrap(), &cfg).unwrap();
        assert_eq!((k5.value, k5.witness.to_vec()), (1, vec![0]));
        // i(C7) = ceil(7/3); {0, 2, 4} dominates 1, 3, 5 and (through 0) 6.
        let c7 = min_independent_dominating_set(&Graph::cycle(7).unwrap(), &cfg).unwrap();
        assert_eq!((c7.value, c7.witness.to_vec()), (3, vec![0, 2, 4]));
    }

    fn brute_max_independent(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&m| {
                let s: Vec<_> = (0..g.n()).filter(|&v| m >> v & 1 == 1).collect();
                is_independent_set(g, &set(g.n(), &s))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn max_independent_matches_brute_force() {
        let cfg = SolverConfig::default();
        for n in 0..=6 {
            for g in enumerate_labeled_graphs(n, false).unwrap() {
                let mis = max_independent_set(&g, &cfg).unwrap();
                assert!(is_independent_set(&g, &mis));
                assert_eq!(mis.len(), brute_max_independent(&g));
                assert!(g.closed_neighborhood(&greedy_maximal_independent_set(&g)) == g.vertices());
            }
        }
    }

    #[test]
    fn star_free_examples() {
        assert_eq!(star_free_threshold(&Graph::star(3).unwrap()), 4);
        assert_eq!(star_free_threshold(&Graph::complete(5).unwrap()), 3);
        assert_eq!(star_free_threshold(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(star_free_threshold(&Graph::empty(2).unwrap()), 3);
    }
}
