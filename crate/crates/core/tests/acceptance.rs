//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion, non-zero exit
//! if any fails. Runs without the libtest harness so the lines are always
//! printed.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use isolation_core::bounds::sequence_bound_maximum_form;
use isolation_core::enumerate::enumerate_labeled_graphs;
use isolation_core::{
    emit_graph6, evaluate_graph, gen_gts, gen_hat, gen_tilde, independent_isolation_number, isolation_number,
    ratio_bound, sequence_bound, star_free_bound, star_free_certificate, star_free_threshold, BoundReport, EvalOptions,
    Graph, Rational, SolverConfig,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Connected graphs on `1..=6` vertices followed by all labeled graphs on `1..=5`.
fn sweep_corpus() -> Vec<Graph> {
    let connected = (1..=6).flat_map(|n| enumerate_labeled_graphs(n, true).unwrap());
    let labeled = (1..=5).flat_map(|n| enumerate_labeled_graphs(n, false).unwrap());
    connected.chain(labeled).collect()
}

fn sweep_reports(corpus: &[Graph]) -> Result<Vec<BoundReport>, String> {
    let cfg = SolverConfig::default();
    let opts = EvalOptions::default();
    corpus
        .iter()
        .map(|g| {
            let id = emit_graph6(g).map_err(|e| e.to_string())?;
            evaluate_graph(g, &id, &cfg, &opts).map_err(|e| format!("{id}: {e}"))
        })
        .collect()
}

fn exhaustive_sweep(reports: &[BoundReport]) -> Outcome {
    let mut checked = 0usize;
    for report in reports {
        if let Some((k, failed)) = report.failures().into_iter().next() {
            return Err(format!("graph {} k={k} failed {failed:?}", report.graph));
        }
        checked += report.blocks.len();
    }
    Ok(format!("{} graphs, {checked} (graph, k) instances, zero failures", reports.len()))
}

fn pair_for(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<(usize, usize), String> {
    let plain = isolation_number(g, k, cfg).map_err(|e| e.to_string())?;
    let indep = independent_isolation_number(g, k, cfg).map_err(|e| e.to_string())?;
    Ok((plain.value, indep.value))
}

fn ratio_instance(t: usize, s: usize, k: usize, expect: (usize, usize, usize, usize)) -> Outcome {
    let (want_iota, want_indep, want_delta, want_ratio) = expect;
    let g = gen_gts(t, s, k).map_err(|e| e.to_string())?.graph;
    let (iota, indep) = pair_for(&g, k, &SolverConfig::default())?;
    let delta = g.max_degree();
    ensure((iota, indep, delta) == (want_iota, want_indep, want_delta), || {
        format!("got iota={iota} iota'={indep} delta={delta}")
    })?;
    let ratio = Rational::new(indep as i64, iota as i64);
    ensure(ratio == Rational::from_integer(want_ratio as i64), || format!("ratio {ratio}"))?;
    // Δ is a perfect square here, so the closed form is an exact integer.
    let root = (delta as f64).sqrt() as i64;
    ensure(root * root == delta as i64, || "delta not a square".into())?;
    let closed = Rational::from_integer(delta as i64 - 2 * root + 2);
    ensure(ratio == closed && ratio_bound(delta) == want_ratio as f64, || format!("closed form {closed}"))?;
    Ok(format!("n={} iota_{k}={iota} iota'_{k}={indep} delta={delta} ratio={ratio}", g.n()))
}

fn star_free_instance() -> Outcome {
    let g = gen_gts(3, 3, 2).map_err(|e| e.to_string())?.graph;
    let cfg = SolverConfig::default();
    let (iota, indep) = pair_for(&g, 2, &cfg)?;
    ensure(star_free_threshold(&g) <= 5, || "graph is not K_{1,5}-free".into())?;
    let bound = star_free_bound(iota, 5).map_err(|e| e.to_string())?;
    ensure((iota, indep, bound) == (3, 7, 7), || format!("got iota={iota} iota'={indep} bound={bound}"))?;
    let cert = star_free_certificate(&g, 2, Some(5), &cfg).map_err(|e| e.to_string())?;
    ensure(cert.is_valid(), || format!("certificate invalid: {:?}", cert.verification))?;
    Ok(format!("iota_2={iota} iota'_2={indep} = (5-2)(3-1)+1, certificate size {}", cert.set.len()))
}

fn disjoint_union_instance() -> Outcome {
    let ex = gen_tilde(2, 2, 2).map_err(|e| e.to_string())?;
    let cfg = SolverConfig::default();
    let parts = ex.graph.components();
    ensure(parts.len() == 2, || format!("{} components", parts.len()))?;
    let (iota, indep) = pair_for(&ex.graph, 2, &cfg)?;
    let mut summed = (0, 0);
    for part in &parts {
        let (sub, _) = ex.graph.induced_subgraph(part);
        let (a, b) = pair_for(&sub, 2, &cfg)?;
        summed = (summed.0 + a, summed.1 + b);
    }
    ensure((iota, indep) == (4, 8) && summed == (4, 8), || {
        format!("got iota={iota} iota'={indep}, per-component sums {summed:?}")
    })?;
    ensure(ex.targets.iota_independent == 8, || "family formula".into())?;
    let trace_ell = isolation_core::greedy_sequence(&ex.graph, &isolation_number(&ex.graph, 2, &cfg).unwrap().witness)
        .map_err(|e| e.to_string())?
        .ell();
    let bound = sequence_bound(4, 2, 4).map_err(|e| e.to_string())?;
    ensure(trace_ell == 2 && bound == Rational::from_integer(8), || format!("ell={trace_ell} bound={bound}"))?;
    ensure(Rational::from_integer(indep as i64) == bound, || "no equality".into())?;
    Ok(format!("iota_2={iota} iota'_2={indep} over {} components, bound(4,2,4)={bound} attained", parts.len()))
}

fn connected_instance() -> Outcome {
    let ex = gen_hat(2, 2, 3, 4).map_err(|e| e.to_string())?;
    ensure(ex.graph.is_connected(), || "not connected".into())?;
    let cfg = SolverConfig::with_n_cap(64);
    let started = Instant::now();
    let iota = isolation_number(&ex.graph, 3, &cfg).map_err(|e| e.to_string())?.value;
    ensure(iota == 4, || format!("iota_3={iota}"))?;
    let indep = independent_isolation_number(&ex.graph, 3, &cfg).map_err(|e| e.to_string())?.value;
    ensure(indep == 8, || format!("iota'_3={indep}"))?;
    Ok(format!("n={} connected, iota_3={iota} iota'_3={indep} ({:.1?})", ex.n, started.elapsed()))
}

fn domination_specialization(corpus: &[Graph], reports: &[BoundReport]) -> Outcome {
    let mut claw_free = 0usize;
    for (g, report) in corpus.iter().zip(reports) {
        let first = &report.blocks[0];
        ensure(first.k == 1, || "sweep does not start at k=1".into())?;
        let gamma = common::gamma(g);
        let ids = common::independent_domination(g);
        ensure(first.iota == gamma && first.iota_independent == ids, || {
            format!("{}: iota_1={} gamma={gamma} iota'_1={} i={ids}", report.graph, first.iota, first.iota_independent)
        })?;
        ensure(first.checks.domination_identity == Some(true), || format!("{}: oracle mismatch", report.graph))?;
        if common::star_free(g, 3) {
            claw_free += 1;
            for block in &report.blocks {
                ensure(block.iota == block.iota_independent, || {
                    format!(
                        "{}: claw-free but iota_{}={} iota'={}",
                        report.graph, block.k, block.iota, block.iota_independent
                    )
                })?;
            }
        }
    }
    Ok(format!(
        "{} graphs agree with brute-force gamma and i; {claw_free} claw-free graphs have iota'=iota",
        corpus.len()
    ))
}

fn algebraic_identity() -> Outcome {
    let mut count = 0;
    for iota in 1..=12 {
        for ell in 1..=iota {
            for delta in 0..=12 {
                let expanded = sequence_bound(iota, ell, delta).map_err(|e| e.to_string())?;
                let folded = sequence_bound_maximum_form(iota, ell, delta).map_err(|e| e.to_string())?;
                let by_hand = Rational::new(-((iota * iota) as i64), ell as i64)
                    + Rational::from_integer((iota * (delta + 2)) as i64 - (ell * delta) as i64);
                ensure(expanded == folded && expanded == by_hand, || {
                    format!("iota={iota} ell={ell} delta={delta}: {expanded} vs {folded}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} parameter triples agree exactly"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |n: usize, title: &str, outcome: Outcome| match &outcome {
        Ok(detail) => println!("[PASS] criterion {n}: {title} -- {detail}"),
        Err(detail) => {
            failed += 1;
            println!("[FAIL] criterion {n}: {title} -- {detail}");
        }
    };

    let started = Instant::now();
    let corpus = sweep_corpus();
    let reports = sweep_reports(&corpus);
    let sweep_time = started.elapsed();
    match &reports {
        Ok(reports) => report(1, "exhaustive small-graph sweep, k in 1..=3", {
            exhaustive_sweep(reports).map(|d| format!("{d} ({sweep_time:.1?})"))
        }),
        Err(e) => report(1, "exhaustive small-graph sweep, k in 1..=3", Err(e.clone())),
    }
    report(2, "G(2,3), k=2 attains the ratio bound", ratio_instance(2, 3, 2, (2, 4, 4, 2)));
    report(3, "G(3,7), k=1 attains the ratio bound", ratio_instance(3, 7, 1, (3, 15, 9, 5)));
    report(4, "G(3,3), k=2, r=5 attains the star-free bound", star_free_instance());
    report(5, "two disjoint copies of G(2,3), k=2", disjoint_union_instance());
    report(6, "path-connected copies of G(2,3), k=3", connected_instance());
    match &reports {
        Ok(reports) => report(7, "k=1 gives domination numbers", domination_specialization(&corpus, reports)),
        Err(e) => report(7, "k=1 gives domination numbers", Err(e.clone())),
    }
    report(8, "expanded and maximum forms of the sequence bound agree", algebraic_identity());

    if failed == 0 {
        println!("acceptance: 8/8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria failed");
        ExitCode::FAILURE
    }
}
