//! Builds bipartite witnesses for the three possible values of the gap
//! between a graph's location-domination number and its complement's:
//! subset-family graphs for +1, bicliques for 0, and bi-stars for -1.
//!
//! Run with: cargo run --example extremal_construction

use locdom::extremal::{
    construct_extremal, construct_gap_minus, construct_gap_zero, feasibility,
};
use locdom::graph6;
use locdom::solver::{lambda, lambda_complement};
use locdom::Result;

fn main() -> Result<()> {
    println!("gap +1 feasibility for r = 4: s in 4..=16 ->");
    for s in 4..=16 {
        print!(" {}", if feasibility(4, s) { s.to_string() } else { "-".into() });
    }
    println!();

    for (r, s) in [(3, 6), (3, 7), (4, 7), (4, 11), (4, 15), (5, 9)] {
        let sfg = construct_extremal(r, s)?;
        let g = &sfg.graph;
        println!(
            "G({r},{s}) = {}: lambda = {}, complement = {}",
            graph6::encode(g),
            lambda(g).value,
            lambda_complement(g).value
        );
        println!(
            "    W-side subsets: {}",
            sfg.w_subsets
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }

    let g = construct_gap_zero(3, 4)?;
    println!(
        "biclique K(3,4): lambda = {}, complement = {}",
        lambda(&g).value,
        lambda_complement(&g).value
    );
    let g = construct_gap_minus(3, 4)?;
    println!(
        "bi-star S(3,4): lambda = {}, complement = {}",
        lambda(&g).value,
        lambda_complement(&g).value
    );
    Ok(())
}
