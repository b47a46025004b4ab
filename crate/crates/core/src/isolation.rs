//! Exact K_k-isolation numbers.
//!
//! A set `S` is K_k-isolating when `G − N[S]` has no `k`-clique. The solver
//! finds the minimum cardinality of such a set (optionally restricted to
//! independent sets) together with the lexicographically least minimum
//! witness, comparing sets as ascending vertex sequences.
//!
//! The search is a bounded hitting-set branching: while `G − N[S]` still
//! holds a `k`-clique `Q`, any completion of `S` must contain a vertex of
//! `N[Q]`, so the search branches over those vertices, picking among the
//! exposed cliques one with the fewest admissible candidates. A candidate
//! that fails is excluded from its later siblings. The optimum is found by
//! iterative deepening on the budget; the canonical witness is then fixed
//! one position at a time, taking the least vertex that still admits a
//! completion using only larger vertices.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::clique::{contains_clique_within, for_each_clique_within};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default largest connected component the exact solver accepts.
pub const DEFAULT_SOLVER_CAP: usize = 30;

/// Default largest `G[A]` for which the auxiliary independent dominating set
/// is computed exactly rather than greedily.
pub const DEFAULT_B_EXACT_THRESHOLD: usize = 20;

// Exposed cliques inspected when choosing where to branch.
const CLIQUE_SCAN_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest connected component (in vertices) the exact search accepts.
    pub n_cap: usize,
    /// Largest auxiliary subproblem solved exactly for the set `B`.
    pub b_exact_threshold: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { n_cap: DEFAULT_SOLVER_CAP, b_exact_threshold: DEFAULT_B_EXACT_THRESHOLD }
    }
}

impl SolverConfig {
    pub fn with_n_cap(n_cap: usize) -> Self {
        SolverConfig { n_cap, ..Self::default() }
    }
}

/// Optimum of one exact solve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    /// Search nodes visited.
    pub explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Variant {
    Any,
    Independent,
}

/// True iff `G − N[S]` contains no `k`-clique.
pub fn is_isolating(g: &Graph, k: usize, set: &VertexSet) -> bool {
    !contains_clique_within(g, &(g.vertices() - g.closed_neighborhood(set)), k)
}

/// `ι_k(G)` with its canonical witness.
pub fn isolation_number(g: &Graph, k: usize, config: &SolverConfig) -> Result<SolveResult> {
    solve(g, k, Variant::Any, config)
}

/// `ι'_k(G)`: the minimum over independent K_k-isolating sets.
pub fn independent_isolation_number(g: &Graph, k: usize, config: &SolverConfig) -> Result<SolveResult> {
    solve(g, k, Variant::Independent, config)
}

fn check_cap(g: &Graph, config: &SolverConfig) -> Result<Vec<VertexSet>> {
    let components = g.components();
    if let Some(big) = components.iter().map(VertexSet::len).max().filter(|&m| m > config.n_cap) {
        return Err(Error::SolverCap { n: big, cap: config.n_cap });
    }
    Ok(components)
}

// Minimum sets of disjoint components combine freely, and the union of
// per-component lexicographically least witnesses is the least union.
fn solve(g: &Graph, k: usize, variant: Variant, config: &SolverConfig) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let components = check_cap(g, config)?;
    let mut witness = g.empty_set();
    let mut explored = 0;
    for comp in &components {
        if comp.len() < k {
            continue;
        }
        let (sub, map) = g.induced_subgraph(comp);
        let mut search = Search::new(&sub, k, variant);
        let local = search.canonical_minimum();
        explored += search.explored;
        witness |= g.lift(&local, &map);
    }
    Ok(SolveResult { value: witness.len(), witness, explored })
}

/// Every minimum K_k-isolating set of `g`, in lexicographic order, up to
/// `limit` sets. The flag reports whether the listing was truncated.
pub fn all_minimum_isolating_sets(
    g: &Graph,
    k: usize,
    config: &SolverConfig,
    limit: usize,
) -> Result<(Vec<VertexSet>, bool)> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if g.n() > config.n_cap {
        return Err(Error::SolverCap { n: g.n(), cap: config.n_cap });
    }
    let mut search = Search::new(g, k, Variant::Any);
    let size = search.optimum();
    let mut out = Vec::new();
    let empty = g.empty_set();
    let flow = search.list_lex(empty, empty, g.vertices(), size, limit, &mut out);
    Ok((out, flow.is_break()))
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    variant: Variant,
    explored: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, variant: Variant) -> Self {
        Search { g, k, variant, explored: 0 }
    }

    /// Admissible vertices once `v` joins the set, given the current pool.
    fn shrink(&self, allowed: VertexSet, v: usize) -> VertexSet {
        let mut next = allowed;
        next.remove(v);
        if self.variant == Variant::Independent {
            next -= *self.g.neighbors(v);
        }
        next
    }

    /// Candidates `N[Q] ∩ allowed` for the exposed clique `Q` minimising
    /// their number, or `None` when nothing is exposed.
    fn branch_candidates(&self, exposed: &VertexSet, allowed: &VertexSet) -> Option<VertexSet> {
        let mut best: Option<VertexSet> = None;
        let mut seen = 0;
        let _ = for_each_clique_within(self.g, exposed, self.k, |clique| {
            let reach = clique.iter().fold(self.g.empty_set(), |acc, &v| acc | self.g.closed_neighbors(v));
            let cands = reach & *allowed;
            if best.is_none_or(|b| cands.len() < b.len()) {
                best = Some(cands);
            }
            seen += 1;
            if cands.len() <= 1 || seen >= CLIQUE_SCAN_LIMIT {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        best
    }

    /// Is there `T ⊆ allowed`, `|T| <= budget`, with `chosen ∪ T` a valid set,
    /// where `covered = N[chosen]`?
    fn completes(&mut self, covered: VertexSet, allowed: VertexSet, budget: usize) -> bool {
        self.explored += 1;
        let exposed = self.g.vertices() - covered;
        let Some(cands) = self.branch_candidates(&exposed, &allowed) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        let mut allowed = allowed;
        for u in cands.iter() {
            let next_covered = covered | self.g.closed_neighbors(u);
            if self.completes(next_covered, self.shrink(allowed, u), budget - 1) {
                return true;
            }
            allowed.remove(u);
        }
        false
    }

    fn optimum(&mut self) -> usize {
        let empty = self.g.empty_set();
        (0..=self.g.n())
            .find(|&c| self.completes(empty, self.g.vertices(), c))
            .expect("the full vertex set (or a maximal independent set) always isolates")
    }

    fn canonical_minimum(&mut self) -> VertexSet {
        let size = self.optimum();
        let mut chosen = self.g.empty_set();
        let mut covered = chosen;
        let mut allowed = self.g.vertices();
        for placed in 0..size {
            let pick = allowed.iter().find_map(|v| {
                let mut next = chosen;
                next.insert(v);
                let next_covered = covered | self.g.closed_neighbors(v);
                let next_allowed = self.shrink(allowed.above(v), v);
                self.completes(next_covered, next_allowed, size - placed - 1).then_some((
                    next,
                    next_covered,
                    next_allowed,
                ))
            });
            (chosen, covered, allowed) = pick.expect("an optimum-size completion exists");
        }
        debug_assert!(is_isolating(self.g, self.k, &chosen));
        chosen
    }

    fn list_lex(
        &mut self,
        chosen: VertexSet,
        covered: VertexSet,
        allowed: VertexSet,
        remaining: usize,
        limit: usize,
        out: &mut Vec<VertexSet>,
    ) -> ControlFlow<()> {
        if remaining == 0 {
            if is_isolating(self.g, self.k, &chosen) {
                if out.len() >= limit {
                    return ControlFlow::Break(());
                }
                out.push(chosen);
            }
            return ControlFlow::Continue(());
        }
        for v in allowed.iter() {
            let mut next = chosen;
            next.insert(v);
            let next_covered = covered | self.g.closed_neighbors(v);
            let next_allowed = self.shrink(allowed.above(v), v);
            if self.completes(next_covered, next_allowed, remaining - 1) {
                self.list_lex(next, next_covered, next_allowed, remaining - 1, limit, out)?;
            }
        }
        ControlFlow::Continue(())
    }
}
