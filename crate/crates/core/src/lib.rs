//! Exact K_k-isolation numbers, constructive certificates for the independent
//! variant, and the extremal graphs on which the certificate bounds are tight.
//!
//! A vertex set `S` is *K_k-isolating* when `G − N[S]` contains no `k`-clique;
//! `ι_k(G)` is the least size of such a set and `ι'_k(G)` the least size of
//! an independent one. For `k = 1` these are the domination and independent
//! domination numbers.

pub mod bounds;
pub mod certificate;
pub mod clique;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod independence;
pub mod isolation;
pub mod report;
pub mod trace;
pub mod vertex_set;

pub use bounds::{ratio_bound, sequence_bound, sequence_bound_maximum_form, star_free_bound, Rational};
pub use certificate::{
    best_sequence_certificate, sequence_certificate, star_free_certificate, Certificate, CertificateKind,
};
pub use clique::contains_clique;
pub use enumerate::enumerate_labeled_graphs;
pub use error::{Error, Result};
pub use extremal::{gen_gts, gen_hat, gen_tilde, LabeledExtremal};
pub use graph::Graph;
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use independence::{
    greedy_maximal_independent_set, is_independent_set, max_independent_set, min_independent_dominating_set,
    star_free_threshold,
};
pub use isolation::{independent_isolation_number, is_isolating, isolation_number, SolveResult, SolverConfig};
pub use report::{evaluate_graph, BoundReport, EvalOptions};
pub use trace::{boundary_set, check_claims, greedy_sequence, ClaimReport, GreedyTrace};
pub use vertex_set::VertexSet;
