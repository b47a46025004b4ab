//! Per-graph evaluation of every bound and structural fact, and the JSON
//! records the command-line tool emits.

use serde::Serialize;

use crate::bounds::{ratio_bound, sequence_bound, star_free_bound, Rational};
use crate::certificate::{
    best_sequence_certificate, sequence_certificate, star_free_certificate, BPolicy, Certificate, Provenance,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{min_independent_dominating_set_unchecked, star_free_threshold};
use crate::isolation::{independent_isolation_number, isolation_number, SolveResult, SolverConfig};
use crate::trace::{check_claims, ClaimReport};
use crate::vertex_set::VertexSet;

/// Slack allowed on the floating-point ratio comparison.
pub const RATIO_TOLERANCE: f64 = 1e-9;

/// Default ceiling on optimal isolating sets examined in exhaustive mode.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl From<Rational> for Fraction {
    fn from(r: Rational) -> Self {
        Fraction { num: *r.numer(), den: *r.denom() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalOptions {
    pub k_min: usize,
    pub k_max: usize,
    /// Take `ℓ` from the optimal isolating set minimising the sequence bound
    /// instead of the canonical one.
    pub exhaustive: bool,
    pub exhaustive_limit: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { k_min: 1, k_max: 3, exhaustive: false, exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT }
    }
}

/// Pass/fail of each inequality for one `k`. `None` means not applicable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Checks {
    /// `ι_k <= ι'_k`.
    pub isolation_le_independent: bool,
    /// `ι_{k+1} <= ι_k` and `ι'_{k+1} <= ι'_k`.
    pub monotone_in_k: bool,
    /// `ι'_k <= −ι_k²/ℓ + ι_k(Δ+2) − ℓΔ`; skipped when `ι_k = 0`.
    pub sequence_bound: Option<bool>,
    /// `ι'_k / ι_k <= Δ − 2√Δ + 2`; skipped when `ι_k = 0`.
    pub ratio_bound: Option<bool>,
    /// `ι'_k <= (r−2)(ι_k−1)+1` at the graph's own threshold `r`.
    pub star_free_bound: Option<bool>,
    /// Trace facts plus `ι'_k <= ℓ + Σ xᵢ(Δ − xᵢ)`.
    pub claims: Option<bool>,
    pub sequence_certificate: bool,
    pub star_free_certificate: bool,
    /// `ι'_1` equals the independent domination number (k = 1 only).
    pub domination_identity: Option<bool>,
}

impl Checks {
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut flag = |ok: bool, name| {
            if !ok {
                out.push(name);
            }
        };
        flag(self.isolation_le_independent, "isolation_le_independent");
        flag(self.monotone_in_k, "monotone_in_k");
        flag(self.sequence_bound.unwrap_or(true), "sequence_bound");
        flag(self.ratio_bound.unwrap_or(true), "ratio_bound");
        flag(self.star_free_bound.unwrap_or(true), "star_free_bound");
        flag(self.claims.unwrap_or(true), "claims");
        flag(self.sequence_certificate, "sequence_certificate");
        flag(self.star_free_certificate, "star_free_certificate");
        flag(self.domination_identity.unwrap_or(true), "domination_identity");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KReport {
    pub k: usize,
    pub iota: usize,
    pub iota_independent: usize,
    pub iota_witness: VertexSet,
    pub iota_independent_witness: VertexSet,
    pub ell: Option<usize>,
    pub sequence_bound: Option<Fraction>,
    pub ratio_bound: f64,
    pub r_min: usize,
    pub star_free_bound: Option<usize>,
    pub claims: Option<ClaimReport>,
    pub sequence_certificate_size: usize,
    pub star_free_certificate_size: usize,
    pub checks: Checks,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph: String,
    pub n: usize,
    pub delta: usize,
    pub blocks: Vec<KReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl BoundReport {
    pub fn pass(&self) -> bool {
        self.blocks.iter().all(|b| b.pass)
    }

    /// `(k, failed check names)` for every failing block.
    pub fn failures(&self) -> Vec<(usize, Vec<&'static str>)> {
        self.blocks.iter().filter(|b| !b.pass).map(|b| (b.k, b.checks.failures())).collect()
    }
}

/// Computes `ι_k`, `ι'_k`, every bound and both certificates for each `k` in
/// `options.k_min..=options.k_max`, and checks every inequality.
pub fn evaluate_graph(g: &Graph, graph_id: &str, config: &SolverConfig, options: &EvalOptions) -> Result<BoundReport> {
    if options.k_min == 0 {
        return Err(Error::ZeroK);
    }
    if options.k_max < options.k_min {
        return Err(Error::InvalidParameter(format!("empty k range {}..={}", options.k_min, options.k_max)));
    }
    let delta = g.max_degree();
    let r_min = star_free_threshold(g);
    let solves: Vec<(SolveResult, SolveResult)> = (options.k_min..=options.k_max + 1)
        .map(|k| Ok((isolation_number(g, k, config)?, independent_isolation_number(g, k, config)?)))
        .collect::<Result<_>>()?;
    // Independent domination runs on the whole graph, so it is gated separately.
    let independent_domination =
        (options.k_min == 1 && g.n() <= config.n_cap).then(|| min_independent_dominating_set_unchecked(g).value);

    let mut blocks = Vec::new();
    for (offset, k) in (options.k_min..=options.k_max).enumerate() {
        let (plain, indep) = &solves[offset];
        let (next_plain, next_indep) = &solves[offset + 1];
        let (iota, iota_ind) = (plain.value, indep.value);

        let seq_cert = if options.exhaustive {
            best_sequence_certificate(g, k, config, options.exhaustive_limit)?
        } else {
            sequence_certificate(g, k, Some(plain.witness), config)?
        };
        let star_cert = star_free_certificate(g, k, Some(r_min), config)?;

        let ell = seq_cert.ell;
        let seq_bound = match ell {
            Some(ell) => Some(sequence_bound(seq_cert.source.len(), ell, delta)?),
            None => None,
        };
        let star_bound = if iota >= 1 { Some(star_free_bound(iota, r_min)?) } else { None };
        let claims = match &seq_cert.provenance {
            Provenance::Sequence { trace, .. } => Some(check_claims(g, &seq_cert.source, trace, Some(iota_ind))),
            _ => None,
        };

        let checks = Checks {
            isolation_le_independent: iota <= iota_ind,
            monotone_in_k: next_plain.value <= iota && next_indep.value <= iota_ind,
            sequence_bound: seq_bound.map(|b| Rational::from_integer(iota_ind as i64) <= b),
            ratio_bound: (iota >= 1).then(|| iota_ind as f64 / iota as f64 <= ratio_bound(delta) + RATIO_TOLERANCE),
            star_free_bound: star_bound.map(|b| iota_ind <= b),
            claims: claims.map(|c| c.all_hold()),
            sequence_certificate: certificate_sound(g, &seq_cert, iota_ind),
            star_free_certificate: certificate_sound(g, &star_cert, iota_ind),
            domination_identity: independent_domination.filter(|_| k == 1).map(|i| i == iota_ind),
        };
        blocks.push(KReport {
            k,
            iota,
            iota_independent: iota_ind,
            iota_witness: plain.witness,
            iota_independent_witness: indep.witness,
            ell,
            sequence_bound: seq_bound.map(Fraction::from),
            ratio_bound: ratio_bound(delta),
            r_min,
            star_free_bound: star_bound,
            claims,
            sequence_certificate_size: seq_cert.set.len(),
            star_free_certificate_size: star_cert.set.len(),
            pass: checks.failures().is_empty(),
            checks,
        });
    }
    Ok(BoundReport { graph: graph_id.to_string(), n: g.n(), delta, blocks, timing_ms: None })
}

/// A certificate is sound when it verifies and is no smaller than the exact
/// optimum it upper-bounds.
fn certificate_sound(g: &Graph, cert: &Certificate, exact_independent: usize) -> bool {
    cert.is_valid() && cert.set.len() >= exact_independent && cert.set.universe() == g.n()
}

/// One certificate as emitted by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateRecord {
    pub graph: String,
    pub k: usize,
    pub kind: crate::certificate::CertificateKind,
    pub vertices: VertexSet,
    pub size: usize,
    pub bound: Option<Fraction>,
    pub delta: usize,
    pub ell: Option<usize>,
    pub r: Option<usize>,
    pub source: VertexSet,
    pub sequence: Option<Vec<usize>>,
    pub boundary: Option<VertexSet>,
    pub dominator: Option<VertexSet>,
    pub b_policy: Option<BPolicy>,
    pub claims: Option<ClaimReport>,
    pub independent: bool,
    pub isolating: bool,
    pub within_bound: Option<bool>,
    pub chain: bool,
    pub valid: bool,
}

impl CertificateRecord {
    pub fn new(graph_id: &str, cert: &Certificate) -> Self {
        let (sequence, boundary, dominator, b_policy) = match &cert.provenance {
            Provenance::Empty => (None, None, None, None),
            Provenance::Sequence { trace, boundary, dominator, policy } => {
                (Some(trace.sequence.clone()), Some(*boundary), Some(*dominator), Some(*policy))
            }
            Provenance::StarFree { core, boundary, dominator, policy } => {
                (Some(core.to_vec()), Some(*boundary), Some(*dominator), Some(*policy))
            }
        };
        CertificateRecord {
            graph: graph_id.to_string(),
            k: cert.k,
            kind: cert.kind,
            vertices: cert.set,
            size: cert.set.len(),
            bound: cert.bound.map(Fraction::from),
            delta: cert.delta,
            ell: cert.ell,
            r: cert.r,
            source: cert.source,
            sequence,
            boundary,
            dominator,
            b_policy,
            claims: cert.claims,
            independent: cert.verification.independent,
            isolating: cert.verification.isolating,
            within_bound: cert.verification.within_bound,
            chain: cert.verification.chain,
            valid: cert.is_valid(),
        }
    }
}
