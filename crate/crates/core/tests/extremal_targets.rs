//! Generated extremal graphs attain their stated targets under the exact solver.

use isolation_core::{
    gen_gts, gen_hat, gen_tilde, independent_isolation_number, isolation_number, LabeledExtremal, SolverConfig,
};

fn assert_targets(ex: &LabeledExtremal) {
    let cfg = SolverConfig::with_n_cap(128);
    let k = ex.params.k;
    let iota = isolation_number(&ex.graph, k, &cfg).unwrap().value;
    let indep = independent_isolation_number(&ex.graph, k, &cfg).unwrap().value;
    assert_eq!(
        (iota, indep, ex.graph.max_degree()),
        (ex.targets.iota, ex.targets.iota_independent, ex.targets.max_degree),
        "{:?}",
        ex.params
    );
}

#[test]
fn gts_grid() {
    for t in 1..=3 {
        for s in 1..=4 {
            for k in 1..=3 {
                if let Ok(ex) = gen_gts(t, s, k) {
                    assert_targets(&ex);
                }
            }
        }
    }
}

#[test]
fn tilde_copies() {
    for (t, ell, k) in [(1, 3, 1), (2, 1, 1), (2, 2, 2), (2, 3, 3), (2, 2, 4), (3, 1, 2)] {
        assert_targets(&gen_tilde(t, ell, k).unwrap());
    }
}

#[test]
fn hat_over_path_lengths() {
    for ell in 2..=3 {
        for path_len in 4..=8 {
            let ex = gen_hat(2, ell, 3, path_len).unwrap();
            assert!(ex.graph.is_connected());
            assert_targets(&ex);
        }
    }
    assert_targets(&gen_hat(2, 2, 4, 4).unwrap());
}
