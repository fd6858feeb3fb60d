//! Generates the named graph families and compares the exact solver's
//! three invariants against the closed-form table values.
//!
//! Run with: cargo run --example families

use locdom::families::{generate, FamilyKind, FamilySpec};
use locdom::graph6;
use locdom::solver::{closed_form, lambda, lambda_complement, lambda_global, Invariant};

fn main() {
    let specs = [
        FamilySpec::one_param(FamilyKind::Path, 10),
        FamilySpec::one_param(FamilyKind::Cycle, 10),
        FamilySpec::one_param(FamilyKind::Wheel, 9),
        FamilySpec::one_param(FamilyKind::Complete, 6),
        FamilySpec::one_param(FamilyKind::Star, 7),
        FamilySpec::two_param(FamilyKind::CompleteBipartite, 3, 4),
        FamilySpec::two_param(FamilyKind::Bistar, 3, 4),
    ];
    println!(
        "{:<26} {:>8} {:>8} {:>9} {:>9}",
        "family", "graph6", "lambda", "lam_comp", "lam_glob"
    );
    for spec in specs {
        let g = generate(&spec).unwrap();
        let l = lambda(&g).value;
        let lc = lambda_complement(&g).value;
        let lg = lambda_global(&g).value;
        println!(
            "{:<26} {:>8} {:>8} {:>9} {:>9}",
            spec.to_string(),
            graph6::encode(&g),
            l,
            lc,
            lg
        );
        // every closed form in range must agree with the solver
        for (which, got) in [
            (Invariant::Lambda, l),
            (Invariant::LambdaComplement, lc),
            (Invariant::LambdaGlobal, lg),
        ] {
            let expected = closed_form(&spec, which).unwrap();
            assert_eq!(expected, got, "{spec} {which:?}");
        }
    }
    println!("all closed forms agree with the exact solver");
}
