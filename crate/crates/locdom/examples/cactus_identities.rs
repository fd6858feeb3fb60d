//! Samples random cactus graphs and checks the counting identities that
//! relate order, size, cycle count and component count, plus the
//! tightness characterization for bipartite cacti.
//!
//! Run with: cargo run --example cactus_identities

use locdom::cactus::{
    cactus_stats, is_cactus, random_cactus, tightness_check, CactusParams,
};
use locdom::graph::Graph;
use locdom::Result;

fn main() -> Result<()> {
    let params = CactusParams {
        bipartite: true,
        ..CactusParams::default()
    };
    for seed in 0..8 {
        let g = random_cactus(seed, &params);
        let st = cactus_stats(&g)?;
        assert_eq!(st.order, st.size - st.cy + st.cc);
        assert!(st.ex >= 0, "bipartite cacti have nonnegative excess");
        println!(
            "seed {seed}: n={:<2} m={:<2} components={} cycles={} excess={} tight={}",
            st.order,
            st.size,
            st.cc,
            st.cy,
            st.ex,
            g.is_connected() && tightness_check(&g)?
        );
    }

    // tightness holds exactly when every block is a 4-cycle
    let two_squares = Graph::from_edges(
        7,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 3)],
    )?;
    assert!(is_cactus(&two_squares));
    assert!(tightness_check(&two_squares)?);
    println!("two 4-cycles sharing a vertex: tight");

    let square_with_bridge =
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])?;
    assert!(!tightness_check(&square_with_bridge)?);
    println!("4-cycle plus a pendant edge: not tight");
    Ok(())
}
