#![allow(dead_code)]

use outerk::geometry::{Chord, ConvexGraph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// Crossing test straight from the definition: exactly one endpoint of `f`
/// strictly inside the arc `a -> b`.
pub fn interleave(e: (usize, usize), f: (usize, usize)) -> bool {
    let (a, b) = e;
    let (c, d) = f;
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let inside = |v: usize| a < v && v < b;
    inside(c) != inside(d)
}

pub fn pairwise_counts(g: &ConvexGraph) -> Vec<usize> {
    let es: Vec<_> = g.edges().iter().map(|e| e.endpoints()).collect();
    es.iter()
        .map(|&e| es.iter().filter(|&&f| interleave(e, f)).count())
        .collect()
}

pub fn all_chords(n: usize) -> Vec<Chord> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| Chord::new(a, b))).collect()
}

/// Maximal outer k-planar graph grown from a random chord order.
pub fn random_outer_k_planar(n: usize, k: usize, seed: u64) -> ConvexGraph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut chords = all_chords(n);
    chords.shuffle(&mut rng);
    let mut kept: Vec<(usize, usize)> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for c in chords {
        let e = c.endpoints();
        let hits: Vec<usize> = (0..kept.len()).filter(|&i| interleave(kept[i], e)).collect();
        if hits.len() <= k && hits.iter().all(|&i| counts[i] < k) {
            for &i in &hits {
                counts[i] += 1;
            }
            kept.push(e);
            counts.push(hits.len());
        }
    }
    ConvexGraph::from_edges(n, kept).unwrap()
}

/// Arbitrary graph keeping each chord with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> ConvexGraph {
    use rand::Rng;
    let mut rng = StdRng::seed_from_u64(seed);
    let edges: Vec<_> = all_chords(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .map(|c| c.endpoints())
        .collect();
    ConvexGraph::from_edges(n, edges).unwrap()
}

pub fn binom(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
