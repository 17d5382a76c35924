//! Upper and lower bounds side by side, as CSV, plus the epsilon term.
//!
//! Usage: `cargo run --example bounds_table [n]`

use outerk::bounds::{epsilon_for, BoundReport, GraphClass};

fn main() -> outerk::Result<()> {
    let n: u64 = std::env::args().nth(1).map_or(1000, |s| s.parse().expect("integer n"));
    let ks = [0u64, 1, 2, 3, 4, 5, 8, 18, 32, 50, 100, 200, 500, 1000];

    let first = BoundReport::compute(n, 0)?;
    let names: Vec<&str> = first.entries.iter().map(|e| e.name.as_str()).collect();
    println!("k,{},best_general,best_bipartite", names.join(","));
    for k in ks {
        let r = BoundReport::compute(n, k)?;
        let cells: Vec<String> = r
            .entries
            .iter()
            .map(|e| e.value.filter(|_| e.valid).map_or(String::new(), |v| format!("{v:.1}")))
            .collect();
        let best = |c| r.best_upper(c).map_or(String::new(), |v| format!("{v:.1}"));
        println!("{k},{},{},{}", cells.join(","), best(GraphClass::General), best(GraphClass::Bipartite));
        assert!(r.violations().is_empty(), "inconsistent bounds at k = {k}");
    }

    println!("\nk,epsilon");
    for k in [3u64, 5, 10, 50, 100, 1000, 5000, 100_000, 1_000_000] {
        println!("{k},{:.6}", epsilon_for(k)?);
    }
    Ok(())
}
