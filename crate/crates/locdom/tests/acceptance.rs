//! End-to-end acceptance checks. Each test prints one `[PASS]`/`[FAIL]`
//! line (visible with `cargo test --test acceptance -- --nocapture`).

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};

use locdom::extremal::construct_extremal;
use locdom::families::{generate, FamilyKind, FamilySpec};
use locdom::graph::Graph;
use locdom::solver::{lambda, lambda_complement, lambda_global};
use locdom::verify::{
    suite_assoc_properties, suite_bipartite_gap, suite_cactus, suite_complement_gap,
    suite_families, suite_global_bounds, suite_global_symmetry, Universe,
};

fn criterion(name: &str, f: impl FnOnce() + UnwindSafe) {
    match catch_unwind(f) {
        Ok(()) => println!("[PASS] {name}"),
        Err(e) => {
            println!("[FAIL] {name}");
            resume_unwind(e);
        }
    }
}

#[test]
fn c1_family_closed_forms() {
    criterion("closed forms match the solver on all named families", || {
        let report = suite_families(2, 12).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        // must include paths/cycles 7..=12, wheels 8..=12, complete 2..=12,
        // stars 4..=12, complete bipartite n <= 12 and bi-stars n <= 12
        assert_eq!(report.checked, 78, "family spec count changed");
    });
}

#[test]
fn c2_complement_gap_exhaustive() {
    criterion("complement gap at most 1 on all connected graphs, n <= 7", || {
        let report = suite_complement_gap(&Universe::connected_up_to(7)).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.checked, 994);
    });
}

#[test]
fn c3_global_bounds_exhaustive() {
    criterion("global sandwich bounds on all connected graphs, n <= 6", || {
        let report = suite_global_bounds(&Universe::connected_up_to(6)).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.checked, 141);
    });
}

#[test]
fn c4_global_symmetry_exhaustive() {
    criterion("global invariant agrees on graph and complement, n <= 6", || {
        let report = suite_global_symmetry(&Universe::connected_up_to(6)).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.checked, 141);
    });
}

#[test]
fn c5_bipartite_gap_exhaustive() {
    criterion("bipartite gap trichotomy on all connected bipartite graphs, n <= 9", || {
        let report = suite_bipartite_gap(&Universe::bipartite_up_to(9)).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert!(report.checked > 100, "only {} graphs", report.checked);
    });
}

#[test]
fn c6_extremal_constructions_certify() {
    criterion("extremal constructions certify across the feasible range", || {
        let cases: Vec<(usize, usize)> = [(3, 6), (3, 7)]
            .into_iter()
            .chain((7..=15).map(|s| (4, s)))
            .chain([(5, 9), (5, 11), (5, 13), (5, 16)])
            .collect();
        for (r, s) in cases {
            let sfg = construct_extremal(r, s).unwrap_or_else(|e| panic!("({r},{s}): {e}"));
            assert_eq!(lambda(&sfg.graph).value, r, "({r},{s})");
            assert_eq!(lambda_complement(&sfg.graph).value, r + 1, "({r},{s})");
        }
    });
}

#[test]
fn c7_associated_graph_properties() {
    criterion("associated-graph properties on every LD-code, n <= 6", || {
        let report =
            suite_assoc_properties(&Universe::connected_up_to(6), 100, 0xACCE97).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.checked, 141);
    });
}

#[test]
fn c8_cactus_identities() {
    criterion("cactus counting identities on 1000 random cacti", || {
        let report = suite_cactus(1000, 0xCAC7).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.checked, 1000);
    });
}

#[test]
fn c9_named_regressions() {
    criterion("named regression values", || {
        let k23 = generate(&FamilySpec::two_param(FamilyKind::CompleteBipartite, 2, 3)).unwrap();
        assert_eq!(lambda(&k23).value, 3);

        let p5 = generate(&FamilySpec::one_param(FamilyKind::Path, 5)).unwrap();
        assert_eq!(lambda(&p5).value, 2);
        assert_eq!(lambda_complement(&p5).value, 2);

        let banner = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        assert_eq!(lambda(&banner).value, 3);
        assert_eq!(lambda_complement(&banner).value, 2);

        let bistar33 = generate(&FamilySpec::two_param(FamilyKind::Bistar, 3, 3)).unwrap();
        assert_eq!(lambda(&bistar33).value, 4);
        assert_eq!(lambda_complement(&bistar33).value, 3);
        assert_eq!(lambda_global(&bistar33).value, 4);
    });
}
