//! Bipartite maxima in the three coloring settings next to the general one.
//!
//! Usage: `cargo run --release --example bipartite [max_n]`

use outerk::bounds::{bipartite_upper, BipartiteVariant};
use outerk::constructions::kxx_alternating;
use outerk::search::{canonical_form, max_edges, SearchMode};

fn main() -> outerk::Result<()> {
    let max_n = std::env::args().nth(1).map_or(9, |s| s.parse().expect("integer n"));
    println!("{:>3} {:>2} {:>8} {:>5} {:>4} {:>4} {:>8}", "n", "k", "general", "free", "cons", "alt", "small_k");
    for n in 4..=max_n {
        for k in 0..=4 {
            let general = max_edges(n, k, SearchMode::General)?.max_edges;
            let free = max_edges(n, k, SearchMode::BipartiteFree)?.max_edges;
            let cons = max_edges(n, k, SearchMode::BipartiteConsecutive)?.max_edges;
            let alt = if n % 2 == 0 {
                max_edges(n, k, SearchMode::BipartiteAlternating)?.max_edges.to_string()
            } else {
                "-".into()
            };
            let small = bipartite_upper(n as u64, k as u64, BipartiteVariant::SmallK)?.value;
            println!("{n:>3} {k:>2} {general:>8} {free:>5} {cons:>4} {alt:>4} {small:>8.2}");
        }
    }

    let r = max_edges(6, 2, SearchMode::BipartiteAlternating)?;
    let k33 = kxx_alternating(3)?;
    println!(
        "\nn = 6, k = 2, alternating: {} edges; witness is the alternating K_3,3: {}",
        r.max_edges,
        canonical_form(&r.witness) == canonical_form(&k33)
    );
    Ok(())
}
