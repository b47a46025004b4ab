//! The minimum-degree peeling sequence through an isolating set.
//!
//! Starting from `S₀ = S`, repeatedly pick the vertex `vᵢ` of minimum degree
//! in `G[Sᵢ₋₁]` (least index on ties), record `xᵢ = deg_{Sᵢ₋₁}(vᵢ)`, and set
//! `Sᵢ = Sᵢ₋₁ ∖ N_{Sᵢ₋₁}[vᵢ]` until nothing is left. The picked vertices are
//! pairwise non-adjacent and their peeled blocks partition `S`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::is_independent_set;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyTrace {
    /// `v₁ … v_ℓ` in pick order.
    pub sequence: Vec<usize>,
    /// `S₀ ⊃ S₁ ⊃ … ⊃ S_ℓ = ∅` (length `ℓ + 1`).
    pub residuals: Vec<VertexSet>,
    /// `xᵢ = deg_{Sᵢ₋₁}(vᵢ)`.
    pub degrees: Vec<usize>,
}

impl GreedyTrace {
    pub fn ell(&self) -> usize {
        self.sequence.len()
    }

    pub fn source(&self) -> &VertexSet {
        &self.residuals[0]
    }

    pub fn sequence_set(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.source().universe());
        for &v in &self.sequence {
            s.insert(v);
        }
        s
    }

    /// `Sᵢ₋₁ ∖ Sᵢ` for each step, i.e. the peeled `N_{Sᵢ₋₁}[vᵢ]`.
    pub fn blocks(&self) -> Vec<VertexSet> {
        self.residuals.windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// `Σ xᵢ(Δ − xᵢ)`.
    pub fn boundary_capacity(&self, delta: usize) -> usize {
        self.degrees.iter().map(|&x| x * delta.saturating_sub(x)).sum()
    }
}

pub fn greedy_sequence(g: &Graph, set: &VertexSet) -> Result<GreedyTrace> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut residual = *set;
    let mut trace = GreedyTrace { sequence: Vec::new(), residuals: vec![residual], degrees: Vec::new() };
    while !residual.is_empty() {
        let (degree, v) = residual.iter().map(|v| (g.degree_in(v, &residual), v)).min().expect("nonempty");
        residual = residual - (g.closed_neighbors(v) & residual);
        trace.sequence.push(v);
        trace.degrees.push(degree);
        trace.residuals.push(residual);
    }
    Ok(trace)
}

/// Vertices outside `S` adjacent to `S` but to none of the sequence vertices.
pub fn boundary_set(g: &Graph, set: &VertexSet, trace: &GreedyTrace) -> VertexSet {
    g.open_neighborhood(set) - *set - g.open_neighborhood(&trace.sequence_set())
}

/// Outcome of checking the structural facts a trace must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    /// `{v₁ … v_ℓ}` is independent in `G`.
    pub sequence_independent: bool,
    /// The blocks `N_{Sᵢ₋₁}[vᵢ]` are disjoint, cover `S`, and `Σ(xᵢ+1) = |S|`.
    pub blocks_partition: bool,
    /// `|A| <= Σ xᵢ(Δ − xᵢ)`.
    pub boundary_within_capacity: bool,
    pub boundary_size: usize,
    pub boundary_capacity: usize,
    /// `ℓ + Σ xᵢ(Δ − xᵢ)`.
    pub degree_sum_bound: usize,
    /// `ι'_k <= ℓ + Σ xᵢ(Δ − xᵢ)`, when the exact `ι'_k` was supplied.
    pub degree_sum_holds: Option<bool>,
}

impl ClaimReport {
    pub fn all_hold(&self) -> bool {
        self.sequence_independent
            && self.blocks_partition
            && self.boundary_within_capacity
            && self.degree_sum_holds.unwrap_or(true)
    }
}

/// Re-derives each fact from `g`, `set` and `trace` without trusting the
/// trace's own bookkeeping beyond its recorded sets.
pub fn check_claims(g: &Graph, set: &VertexSet, trace: &GreedyTrace, exact_independent: Option<usize>) -> ClaimReport {
    let sequence_independent = is_independent_set(g, &trace.sequence_set());

    let blocks = trace.blocks();
    let mut union = g.empty_set();
    let mut disjoint = true;
    let mut steps_ok = trace.residuals.first() == Some(set)
        && trace.residuals.last().is_some_and(VertexSet::is_empty)
        && blocks.len() == trace.ell()
        && trace.degrees.len() == trace.ell();
    for (i, block) in blocks.iter().enumerate() {
        disjoint &= !union.intersects(block);
        union |= *block;
        if let (Some(&v), Some(&x)) = (trace.sequence.get(i), trace.degrees.get(i)) {
            let prev = trace.residuals[i];
            steps_ok &= *block == (g.closed_neighbors(v) & prev) && g.degree_in(v, &prev) == x;
        }
    }
    let degree_total: usize = trace.degrees.iter().map(|x| x + 1).sum();
    let blocks_partition = disjoint && steps_ok && union == *set && degree_total == set.len();

    let delta = g.max_degree();
    let boundary_size = boundary_set(g, set, trace).len();
    let boundary_capacity = trace.boundary_capacity(delta);
    let degree_sum_bound = trace.ell() + boundary_capacity;
    ClaimReport {
        sequence_independent,
        blocks_partition,
        boundary_within_capacity: boundary_size <= boundary_capacity,
        boundary_size,
        boundary_capacity,
        degree_sum_bound,
        degree_sum_holds: exact_independent.map(|value| value <= degree_sum_bound),
    }
}
