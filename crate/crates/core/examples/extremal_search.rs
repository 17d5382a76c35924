//! Exact maximum edge counts for small convex point sets.
//!
//! Usage: `cargo run --release --example extremal_search [max_n] [max_k]`

use std::time::Instant;

use outerk::bounds::{BoundReport, GraphClass};
use outerk::geometry::max_crossing;
use outerk::search::{max_edges_with, SearchMode, SearchOptions};

fn main() -> outerk::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let max_n = args.next().unwrap_or(9);
    let max_k = args.next().unwrap_or(3);

    println!("{:>3} {:>3} {:>6} {:>9} {:>12} {:>9}", "n", "k", "edges", "best_up", "nodes", "ms");
    for n in 4..=max_n {
        for k in 0..=max_k {
            let start = Instant::now();
            let r = max_edges_with(n, k, SearchMode::General, &SearchOptions::default())?;
            let ms = start.elapsed().as_millis();
            let cap = BoundReport::compute(n as u64, k as u64)?
                .best_upper(GraphClass::General)
                .map_or("-".to_string(), |v| format!("{v:.2}"));
            assert!(max_crossing(&r.witness) <= k);
            println!("{n:>3} {k:>3} {:>6} {cap:>9} {:>12} {ms:>9}", r.max_edges, r.nodes_explored);
        }
    }

    let r = max_edges_with(8, 2, SearchMode::BipartiteFree, &SearchOptions::default())?;
    println!("\nbipartite, n = 8, k = 2: {} edges", r.max_edges);
    println!("witness: {}", r.witness.to_json());
    Ok(())
}
