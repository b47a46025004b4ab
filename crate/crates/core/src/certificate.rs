//! Constructive independent K_k-isolating sets with machine-checked bounds.
//!
//! Two constructions start from an optimal K_k-isolating set `S`:
//!
//! * **sequence**: peel `S` by the greedy minimum-degree sequence
//!   `v₁ … v_ℓ`; let `A` be the outside neighbours of `S` that miss every
//!   `vᵢ` and `B` an independent dominating set of `G[A]`. Then
//!   `{v₁ … v_ℓ} ∪ B` is independent and K_k-isolating, of size at most
//!   [`sequence_bound`]`(|S|, ℓ, Δ)`.
//! * **star-free**: take a maximum independent `I ⊆ S`, `A = N(S) ∖ N[I]`
//!   and `B` an independent dominating set of `G[A]`. In a `K_{1,r}`-free
//!   graph `I ∪ B` has size at most [`star_free_bound`]`(|S|, r)`.
//!
//! Every certificate is re-verified from scratch with the solver primitives
//! and each link of its inequality chain is recorded separately.

use serde::Serialize;

use crate::bounds::{sequence_bound, star_free_bound, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{
    greedy_maximal_independent_set, is_independent_set, max_independent_set_unchecked,
    min_independent_dominating_set_unchecked, star_free_threshold,
};
use crate::isolation::{all_minimum_isolating_sets, is_isolating, isolation_number, SolverConfig};
use crate::trace::{boundary_set, check_claims, greedy_sequence, ClaimReport, GreedyTrace};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Sequence,
    StarFree,
    /// The optimal isolating set was already independent.
    Direct,
}

/// How `B` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BPolicy {
    Exact,
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub independent: bool,
    pub isolating: bool,
    /// `None` when no bound applies (the optimal isolating set is empty).
    pub within_bound: Option<bool>,
    /// Every intermediate inequality of the construction held.
    pub chain: bool,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.independent && self.isolating && self.within_bound.unwrap_or(true) && self.chain
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// `S = ∅`: nothing to construct.
    Empty,
    Sequence {
        trace: GreedyTrace,
        boundary: VertexSet,
        dominator: VertexSet,
        policy: BPolicy,
    },
    StarFree {
        core: VertexSet,
        boundary: VertexSet,
        dominator: VertexSet,
        policy: BPolicy,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub k: usize,
    pub set: VertexSet,
    /// The optimal isolating set the construction started from.
    pub source: VertexSet,
    pub bound: Option<Rational>,
    pub delta: usize,
    pub ell: Option<usize>,
    pub r: Option<usize>,
    pub provenance: Provenance,
    pub claims: Option<ClaimReport>,
    pub verification: Verification,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        self.verification.is_valid() && self.claims.as_ref().is_none_or(ClaimReport::all_hold)
    }
}

/// Independent dominating set of `G[within]`, in `g`'s labels.
fn dominator(g: &Graph, within: &VertexSet, config: &SolverConfig) -> (VertexSet, BPolicy) {
    let (sub, map) = g.induced_subgraph(within);
    let (local, policy) = if sub.n() <= config.b_exact_threshold {
        (min_independent_dominating_set_unchecked(&sub).witness, BPolicy::Exact)
    } else {
        (greedy_maximal_independent_set(&sub), BPolicy::Greedy)
    };
    (g.lift(&local, &map), policy)
}

fn resolve_source(g: &Graph, k: usize, source: Option<VertexSet>, config: &SolverConfig) -> Result<VertexSet> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    match source {
        Some(s) => {
            if s.universe() != g.n() {
                return Err(Error::InvalidParameter(format!(
                    "set is over {} vertices but the graph has {}",
                    s.universe(),
                    g.n()
                )));
            }
            if !is_isolating(g, k, &s) {
                return Err(Error::NotIsolating { k });
            }
            Ok(s)
        }
        None => Ok(isolation_number(g, k, config)?.witness),
    }
}

fn empty_certificate(g: &Graph, k: usize, kind: CertificateKind, r: Option<usize>) -> Certificate {
    let set = g.empty_set();
    Certificate {
        kind,
        k,
        set,
        source: set,
        bound: None,
        delta: g.max_degree(),
        ell: None,
        r,
        provenance: Provenance::Empty,
        claims: None,
        verification: Verification {
            independent: true,
            isolating: is_isolating(g, k, &set),
            within_bound: None,
            chain: true,
        },
    }
}

/// Sequence construction from `source`, or from the canonical optimal
/// isolating set when `source` is `None`.
pub fn sequence_certificate(
    g: &Graph,
    k: usize,
    source: Option<VertexSet>,
    config: &SolverConfig,
) -> Result<Certificate> {
    let s = resolve_source(g, k, source, config)?;
    if s.is_empty() {
        return Ok(empty_certificate(g, k, CertificateKind::Sequence, None));
    }
    let delta = g.max_degree();
    let trace = greedy_sequence(g, &s)?;
    let ell = trace.ell();
    let boundary = boundary_set(g, &s, &trace);
    let (dominator, policy) = dominator(g, &boundary, config);
    let set = trace.sequence_set() | dominator;
    let bound = sequence_bound(s.len(), ell, delta)?;
    let claims = check_claims(g, &s, &trace, None);

    let size = set.len();
    let chain = size <= ell + dominator.len()
        && dominator.len() <= boundary.len()
        && boundary.len() <= trace.boundary_capacity(delta)
        && Rational::from_integer((ell + trace.boundary_capacity(delta)) as i64) <= bound;
    let verification = Verification {
        independent: is_independent_set(g, &set),
        isolating: is_isolating(g, k, &set),
        within_bound: Some(Rational::from_integer(size as i64) <= bound),
        chain,
    };
    Ok(Certificate {
        kind: CertificateKind::Sequence,
        k,
        set,
        source: s,
        bound: Some(bound),
        delta,
        ell: Some(ell),
        r: None,
        provenance: Provenance::Sequence { trace, boundary, dominator, policy },
        claims: Some(claims),
        verification,
    })
}

/// Sequence construction from whichever optimal isolating set gives the
/// smallest bound (ties to the lexicographically least set). Refuses graphs
/// with more than `limit` optimal isolating sets.
pub fn best_sequence_certificate(g: &Graph, k: usize, config: &SolverConfig, limit: usize) -> Result<Certificate> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let (sets, truncated) = all_minimum_isolating_sets(g, k, config, limit)?;
    if truncated {
        return Err(Error::InvalidParameter(format!(
            "more than {limit} optimal isolating sets; exhaustive mode refused"
        )));
    }
    let mut best: Option<Certificate> = None;
    for s in sets {
        let cert = sequence_certificate(g, k, Some(s), config)?;
        let better = match (&best, cert.bound) {
            (None, _) => true,
            (Some(b), Some(new)) => b.bound.is_some_and(|old| new < old),
            (Some(_), None) => false,
        };
        if better {
            best = Some(cert);
        }
    }
    Ok(best.expect("at least one optimal set exists"))
}

/// Star-free construction with `r` (default: the graph's own threshold).
pub fn star_free_certificate(g: &Graph, k: usize, r: Option<usize>, config: &SolverConfig) -> Result<Certificate> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let r_min = star_free_threshold(g);
    let r = match r {
        Some(r) if r < 3 => return Err(Error::InvalidParameter(format!("r must be at least 3, got {r}"))),
        Some(r) if r < r_min => return Err(Error::StarFreeViolation { r, r_min }),
        Some(r) => r,
        None => r_min,
    };
    let s = resolve_source(g, k, None, config)?;
    if s.is_empty() {
        return Ok(empty_certificate(g, k, CertificateKind::StarFree, Some(r)));
    }
    let bound = star_free_bound(s.len(), r)?;
    let (sub, map) = g.induced_subgraph(&s);
    let core = g.lift(&max_independent_set_unchecked(&sub), &map);

    let (kind, set, boundary, dominator, policy) = if core == s {
        (CertificateKind::Direct, s, g.empty_set(), g.empty_set(), BPolicy::Exact)
    } else {
        let boundary = g.open_neighborhood(&s) - g.closed_neighborhood(&core);
        let (dominator, policy) = dominator(g, &boundary, config);
        (CertificateKind::StarFree, core | dominator, boundary, dominator, policy)
    };

    // Each vertex of S ∖ I has a neighbour in I, which sees no vertex of B,
    // so at most r − 2 vertices of B can hang off it.
    let outside_core = s - core;
    let per_vertex_ok = outside_core.iter().all(|v| (dominator & *g.neighbors(v)).len() <= r - 2);
    let covered_by_outside = dominator.is_subset(&g.open_neighborhood(&outside_core));
    let capacity = core.len() + outside_core.len() * (r - 2);
    let chain = per_vertex_ok
        && covered_by_outside
        && set.len() <= core.len() + dominator.len()
        && dominator.len() <= outside_core.len() * (r - 2)
        && capacity <= bound;
    let verification = Verification {
        independent: is_independent_set(g, &set),
        isolating: is_isolating(g, k, &set),
        within_bound: Some(set.len() <= bound),
        chain,
    };
    Ok(Certificate {
        kind,
        k,
        set,
        source: s,
        bound: Some(Rational::from_integer(bound as i64)),
        delta: g.max_degree(),
        ell: None,
        r: Some(r),
        provenance: Provenance::StarFree { core, boundary, dominator, policy },
        claims: None,
        verification,
    })
}
