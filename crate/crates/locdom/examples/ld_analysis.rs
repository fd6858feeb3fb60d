//! Analyzes candidate vertex sets of a small graph: domination, the
//! locating-dominating property, global LD-sets, and the three exact
//! invariants with witnesses.
//!
//! Run with: cargo run --example ld_analysis

use locdom::graph::{Graph, VertexSet};
use locdom::solver::{all_ld_codes, analyze, lambda, lambda_global, trace};
use locdom::{lambda_complement, Result};

fn main() -> Result<()> {
    // the "banner": a 4-cycle with one pendant vertex
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])?;
    println!("banner graph, edges {:?}", g.edges());

    for s in [
        VertexSet::from_iter([0, 2]),
        VertexSet::from_iter([1, 3]),
        VertexSet::from_iter([1, 3, 4]),
    ] {
        let a = analyze(&g, s);
        println!(
            "S={s}: dominating={} ld={} global={}",
            a.is_dominating, a.is_ld, a.is_global
        );
        for v in g.vertex_set().difference(s).iter() {
            println!("    trace of {v}: {}", trace(&g, s, v));
        }
    }

    let l = lambda(&g);
    let lc = lambda_complement(&g);
    let lg = lambda_global(&g);
    println!("lambda = {} (witness {})", l.value, l.witness);
    println!("lambda of complement = {} (witness {})", lc.value, lc.witness);
    println!("global lambda = {} (witness {})", lg.value, lg.witness);

    let codes = all_ld_codes(&g);
    println!("all {} minimum LD-codes:", codes.len());
    for c in codes {
        println!("    {c}");
    }
    Ok(())
}
