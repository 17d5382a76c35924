//! The clique chains, the alternating K_{x,x} blocks and the outercopy.
//!
//! Usage: `cargo run --example constructions`

use outerk::constructions::{kx_chain, kxx_alternating, kxx_alternating_max_crossing, kxx_chain, outercopy};
use outerk::geometry::{is_bipartite, max_crossing};

fn main() -> outerk::Result<()> {
    println!("K_x chains: edges = blocks*C(x,2) - (blocks-1)");
    println!("{:>3} {:>6} {:>5} {:>6} {:>9}", "x", "blocks", "n", "edges", "max_cross");
    for x in [4, 6, 8] {
        for blocks in [1, 2, 5] {
            let g = kx_chain(x, blocks)?;
            println!("{x:>3} {blocks:>6} {:>5} {:>6} {:>9}", g.n(), g.edge_count(), max_crossing(&g));
        }
    }

    println!("\nalternating K_x,x");
    for x in 1..=6 {
        let g = kxx_alternating(x)?;
        println!(
            "x = {x}: {} edges, max crossing {} (formula {})",
            g.edge_count(),
            max_crossing(&g),
            kxx_alternating_max_crossing(x)
        );
    }

    let g = kxx_chain(4, 3)?;
    println!(
        "\nK_4,4 chain of 3: n = {}, {} edges, bipartite {}, max crossing {}",
        g.n(),
        g.edge_count(),
        is_bipartite(&g),
        max_crossing(&g)
    );

    let oc = outercopy(&kx_chain(6, 2)?);
    let (inside, outside) = oc.crossing_counts();
    println!(
        "\noutercopy of a K_6 chain: {} edges ({} inside, {} outside), max multiplicity {}",
        oc.edge_count(),
        inside.len(),
        outside.len(),
        oc.max_multiplicity()
    );
    println!("max crossing on either page: {}", oc.max_crossing());
    println!("{}", oc.to_json());
    Ok(())
}
