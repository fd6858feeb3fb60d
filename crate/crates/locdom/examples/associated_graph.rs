//! Builds the edge-labeled graph associated with an LD-set, prints it as
//! DOT, checks its structural properties, and extracts a two-edges-per-
//! label subgraph under three different choice rules.
//!
//! Run with: cargo run --example associated_graph

use locdom::assoc::{build_associated, select_h, ChoiceRule};
use locdom::cactus::is_cactus;
use locdom::extremal::construct_extremal;
use locdom::families::{generate, FamilyKind, FamilySpec};
use locdom::graph::VertexSet;
use locdom::solver::lambda;
use locdom::Result;

fn main() -> Result<()> {
    let g = generate(&FamilySpec::one_param(FamilyKind::Cycle, 7))?;
    let code = lambda(&g).witness;
    println!("C_7, LD-code {code}");

    let a = build_associated(&g, code)?;
    println!(
        "associated graph: {} vertices, {} edges, deg(z) = {}",
        a.order(),
        a.size(),
        a.degree_of_z()
    );
    print!("{}", a.to_dot());

    let report = a.check_properties(200, 7);
    println!("structural properties: {report:?}");
    assert!(report.all_hold());

    for label in code.iter() {
        let edges = a.edges_with_label(label)?;
        println!("label {label}: {} edges", edges.len());
    }

    // on the extremal bipartite graphs every label carries at least two
    // edges, so a two-edges-per-label subgraph H exists — and is a cactus
    let sfg = construct_extremal(3, 6)?;
    let a6 = build_associated(&sfg.graph, sfg.u_side())?;
    println!(
        "G(3,6) with code U: associated graph has {} vertices, {} edges",
        a6.order(),
        a6.size()
    );
    for rule in [
        ChoiceRule::Lexicographic,
        ChoiceRule::Reverse,
        ChoiceRule::Seeded(42),
    ] {
        let h = select_h(&a6, rule)?;
        println!(
            "{rule:?}: H has {} vertices, {} edges, cactus = {}",
            h.graph.order(),
            h.graph.size(),
            is_cactus(&h.graph)
        );
    }

    // the same machinery on an arbitrary non-minimum LD-set
    let s = VertexSet::from_iter([0, 1, 3, 5]);
    let a = build_associated(&g, s)?;
    println!(
        "S = {s}: associated graph has {} vertices at levels {:?}",
        a.order(),
        (0..a.order()).map(|v| a.level(v)).collect::<Vec<_>>()
    );
    Ok(())
}
