//! Crossing statistics of convex complete graphs and of a graph read from a
//! JSON file.
//!
//! Usage: `cargo run --example crossing_oracle [graph.json]`

use outerk::geometry::{self, Chord, ConvexGraph};

fn binom4(n: usize) -> usize {
    if n < 4 {
        0
    } else {
        n * (n - 1) * (n - 2) * (n - 3) / 24
    }
}

fn main() -> outerk::Result<()> {
    println!("{:>3} {:>8} {:>8} {:>13}", "n", "pairs", "C(n,4)", "max per edge");
    for n in 4..=12 {
        let g = ConvexGraph::complete(n)?;
        println!(
            "{n:>3} {:>8} {:>8} {:>13}",
            geometry::crossing_pairs(&g),
            binom4(n),
            geometry::max_crossing(&g)
        );
    }

    let (a, b) = (Chord::new(0, 2), Chord::new(1, 3));
    println!("\n{a} crosses {b}: {}", geometry::chords_cross(4, a, b)?);
    println!("{a} crosses {}: {}", Chord::new(2, 3), geometry::chords_cross(4, a, Chord::new(2, 3))?);

    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable file");
        let g = ConvexGraph::from_json(&text)?;
        let counts = geometry::crossing_counts(&g);
        println!("\n{path}: n = {}, {} edges", g.n(), g.edge_count());
        for (e, c) in g.edges().iter().zip(&counts) {
            println!("  {e} crosses {c}");
        }
        let (_, degeneracy) = geometry::degeneracy_order(&g);
        let (_, colors) = geometry::greedy_color(&g);
        println!("max crossing {}, degeneracy {degeneracy}, greedy colors {colors}", geometry::max_crossing(&g));
    }
    Ok(())
}
