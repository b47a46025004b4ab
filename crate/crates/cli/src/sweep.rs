//! Corpus sweeps: evaluate every bound on every graph, in input order.

use std::io::Write;
use std::time::Instant;

use isolation_core::enumerate::enumerate_labeled_graphs_capped;
use isolation_core::report::KReport;
use isolation_core::{emit_graph6, evaluate_graph, BoundReport, EvalOptions, SolverConfig};
use rayon::prelude::*;

use crate::input::Named;
use crate::CliError;

const CHUNK: usize = 512;

pub struct SweepSettings {
    pub solver: SolverConfig,
    pub eval: EvalOptions,
    pub n_cap: usize,
    pub timing: bool,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub graphs: usize,
    pub instances: usize,
    pub failures: usize,
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "graphs={} instances={} failures={}", self.graphs, self.instances, self.failures)
    }
}

/// Graphs on `1..=n_cap` vertices in enumeration order, produced lazily.
pub fn enumerated(n_cap: usize, connected_only: bool) -> Result<impl Iterator<Item = Named>, CliError> {
    let per_n = (1..=n_cap)
        .map(|n| enumerate_labeled_graphs_capped(n, connected_only, n_cap))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(per_n.into_iter().flatten().map(|graph| {
        let id = emit_graph6(&graph).expect("enumeration stays within graph6 range");
        Named { id, graph }
    }))
}

fn evaluate(named: &Named, settings: &SweepSettings) -> Result<BoundReport, CliError> {
    let started = Instant::now();
    let mut report = evaluate_graph(&named.graph, &named.id, &settings.solver, &settings.eval)
        .map_err(|e| CliError::from_core(e, &named.id))?;
    if settings.timing {
        report.timing_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    Ok(report)
}

pub const CSV_HEADER: &str =
    "graph,n,delta,k,iota,iota_independent,ell,sequence_bound,ratio_bound,r_min,star_free_bound,pass";

fn csv_row(report: &BoundReport, block: &KReport) -> String {
    let opt = |v: Option<String>| v.unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        report.graph,
        report.n,
        report.delta,
        block.k,
        block.iota,
        block.iota_independent,
        opt(block.ell.map(|l| l.to_string())),
        opt(block.sequence_bound.map(|b| format!("{}/{}", b.num, b.den))),
        block.ratio_bound,
        block.r_min,
        opt(block.star_free_bound.map(|b| b.to_string())),
        block.pass,
    )
}

/// Evaluates `graphs` on `pool`, writing one JSON line per
/// graph (and CSV rows when requested) in input order. Stops at the first
/// graph that violates a bound; the returned summary counts exactly the
/// lines written.
pub fn run(
    graphs: impl Iterator<Item = Named>,
    settings: &SweepSettings,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
    mut csv: Option<&mut dyn Write>,
) -> Result<Summary, CliError> {
    let mut summary = Summary::default();
    if let Some(csv) = csv.as_mut() {
        writeln!(csv, "{CSV_HEADER}")?;
    }
    let mut graphs = graphs.peekable();
    while graphs.peek().is_some() {
        let chunk: Vec<Named> = graphs.by_ref().take(CHUNK).collect();
        for named in &chunk {
            if named.graph.n() > settings.n_cap {
                return Err(CliError::Precondition(format!(
                    "{}: {} vertices exceeds the sweep cap {}",
                    named.id,
                    named.graph.n(),
                    settings.n_cap
                )));
            }
        }
        let reports: Vec<Result<BoundReport, CliError>> =
            pool.install(|| chunk.par_iter().map(|g| evaluate(g, settings)).collect());
        for report in reports {
            let report = report?;
            serde_json::to_writer(&mut *out, &report).map_err(std::io::Error::from)?;
            writeln!(out)?;
            if let Some(csv) = csv.as_mut() {
                for block in &report.blocks {
                    writeln!(csv, "{}", csv_row(&report, block))?;
                }
            }
            summary.graphs += 1;
            summary.instances += report.blocks.len();
            let failures = report.failures();
            if !failures.is_empty() {
                summary.failures += failures.len();
                out.flush()?;
                let (k, checks) = &failures[0];
                return Err(CliError::Violation {
                    summary,
                    reproducer: format!(
                        "echo '{}' | isolation-lab sweep --corpus /dev/stdin --k {k} --kmax {k}  # failed: {}",
                        report.graph,
                        checks.join(",")
                    ),
                });
            }
        }
    }
    out.flush()?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use isolation_core::Graph;

    fn named(graphs: Vec<Graph>) -> Vec<Named> {
        graphs.into_iter().map(|graph| Named { id: emit_graph6(&graph).unwrap(), graph }).collect()
    }

    fn pool() -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new().num_threads(2).build().unwrap()
    }

    fn settings(k_max: usize) -> SweepSettings {
        SweepSettings {
            solver: SolverConfig::default(),
            eval: EvalOptions { k_max, ..EvalOptions::default() },
            n_cap: 5,
            timing: false,
        }
    }

    #[test]
    fn small_enumeration_passes_and_counts_lines() {
        let mut out = Vec::new();
        let mut csv = Vec::new();
        let summary = run(enumerated(4, false).unwrap(), &settings(2), &pool(), &mut out, Some(&mut csv)).unwrap();
        let expected_graphs = 1 + 2 + 8 + 64;
        assert_eq!(summary, Summary { graphs: expected_graphs, instances: 2 * expected_graphs, failures: 0 });
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), expected_graphs);
        assert_eq!(String::from_utf8(csv).unwrap().lines().count(), 1 + 2 * expected_graphs);
    }

    #[test]
    fn oversized_graph_is_a_precondition_error() {
        let big = named(vec![Graph::path(6).unwrap()]);
        let err = run(big.into_iter(), &settings(1), &pool(), &mut Vec::new(), None).err().unwrap();
        assert_eq!(err.exit_code(), 3);
    }
}
