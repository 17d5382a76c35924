mod common;

use common::{all_chords, interleave, random_outer_k_planar};
use outerk::bounds::{general_upper, GeneralVariant};
use outerk::constructions::{kx_chain, kxx_alternating, kxx_chain};
use outerk::geometry::{is_outer_k_planar, max_crossing, Chord, ConvexGraph};
use outerk::search::{canonical_form, max_edges, max_edges_with, upper_prune, SearchMode, SearchOptions};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const MODES: [SearchMode; 4] = [
    SearchMode::General,
    SearchMode::BipartiteFree,
    SearchMode::BipartiteAlternating,
    SearchMode::BipartiteConsecutive,
];

fn opts(theorem_bounds: bool) -> SearchOptions {
    SearchOptions {
        node_budget: u64::MAX,
        theorem_bounds,
        warm_start: None,
    }
}

fn general(n: usize, k: usize) -> usize {
    max_edges(n, k, SearchMode::General).unwrap().max_edges
}

#[test]
fn monotone_in_n_and_k() {
    for n in 3..=8 {
        for k in 0..=3 {
            let m = general(n, k);
            if n < 8 {
                assert!(general(n + 1, k) >= m, "n = {n}, k = {k}");
            }
            if k < 3 {
                assert!(general(n, k + 1) >= m, "n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn bipartite_never_beats_general() {
    for n in 4..=8 {
        for k in 0..=3 {
            let g = general(n, k);
            for mode in &MODES[1..] {
                if *mode == SearchMode::BipartiteAlternating && n % 2 == 1 {
                    continue;
                }
                let r = max_edges(n, k, *mode).unwrap();
                assert!(r.max_edges <= g, "{mode:?} n = {n}, k = {k}");
                assert!(r.witness.coloring_is_proper());
            }
        }
    }
}

#[test]
fn constructions_are_feasible_incumbents() {
    for x in 3..=7 {
        for blocks in 1..=3 {
            let g = kx_chain(x, blocks).unwrap();
            if g.n() > 10 {
                continue;
            }
            let k = max_crossing(&g);
            assert!(general(g.n(), k) >= g.edge_count(), "x = {x}, blocks = {blocks}");
        }
    }
    for x in 2..=5 {
        let g = kxx_alternating(x).unwrap();
        let k = max_crossing(&g);
        let r = max_edges(g.n(), k, SearchMode::BipartiteAlternating).unwrap();
        assert!(r.max_edges >= g.edge_count());
    }
    let g = kxx_chain(3, 2).unwrap();
    let r = max_edges(g.n(), max_crossing(&g), SearchMode::BipartiteFree).unwrap();
    assert!(r.max_edges >= g.edge_count());
}

#[test]
fn warm_start_is_accepted_and_never_worsens() {
    let g = kx_chain(4, 3).unwrap();
    let o = SearchOptions {
        warm_start: Some(g.clone()),
        ..opts(true)
    };
    let r = max_edges_with(8, 1, SearchMode::General, &o).unwrap();
    assert_eq!(r.max_edges, 16);
    let bad = SearchOptions {
        warm_start: Some(g),
        ..opts(true)
    };
    assert!(max_edges_with(8, 0, SearchMode::General, &bad).is_err());
}

/// Table 1 for k <= 3 and the local variant for every k.
#[test]
fn search_never_exceeds_closed_form_uppers() {
    let mut beaten = Vec::new();
    for n in 3..=9 {
        for k in 0..=5 {
            let m = general(n, k) as f64;
            for v in [GeneralVariant::SmallK, GeneralVariant::Local] {
                if let Ok(ev) = general_upper(n as u64, k as u64, v) {
                    if ev.caveat.is_none() && m > (ev.value + 1e-9).floor() {
                        beaten.push(format!("n = {n}, k = {k}: {m} > {} ({})", ev.value, v.name()));
                    }
                }
            }
        }
    }
    assert!(beaten.is_empty(), "search beats a closed-form upper bound:\n{}", beaten.join("\n"));
}

#[test]
fn repeated_runs_are_identical() {
    for mode in MODES {
        let a = max_edges(8, 2, mode).unwrap();
        let b = max_edges(8, 2, mode).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn theorem_pruning_does_not_change_the_optimum() {
    for mode in MODES {
        for n in 4..=8 {
            if mode == SearchMode::BipartiteAlternating && n % 2 == 1 {
                continue;
            }
            for k in 0..=4 {
                let a = max_edges_with(n, k, mode, &opts(true)).unwrap();
                let b = max_edges_with(n, k, mode, &opts(false)).unwrap();
                assert_eq!(a.max_edges, b.max_edges, "{mode:?} n = {n}, k = {k}");
                assert!(is_outer_k_planar(&a.witness, k));
            }
        }
    }
}

fn feasible(edges: &[(usize, usize)], k: usize) -> bool {
    edges
        .iter()
        .all(|&e| edges.iter().filter(|&&f| interleave(e, f)).count() <= k)
}

/// Best completion of `state` by any subset of `remaining`, by enumeration.
fn subtree_optimum(state: &[(usize, usize)], remaining: &[(usize, usize)], k: usize) -> usize {
    let mut best = 0;
    for mask in 0u32..1 << remaining.len() {
        let mut es = state.to_vec();
        es.extend((0..remaining.len()).filter(|i| mask >> i & 1 == 1).map(|i| remaining[i]));
        if es.len() > best && feasible(&es, k) {
            best = es.len();
        }
    }
    best
}

#[test]
fn upper_prune_is_admissible() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..200 {
        let n = rng.gen_range(4..=8);
        let k = rng.gen_range(0..=4);
        let bipartite = trial % 2 == 1;
        let ok = |c: &Chord| !bipartite || (c.a() + c.b()) % 2 == 1;
        let base = random_outer_k_planar(n, k, rng.gen());
        let state: Vec<Chord> = base.edges().iter().copied().filter(|c| ok(c) && rng.gen_bool(0.5)).collect();
        let mut remaining: Vec<Chord> = all_chords(n)
            .into_iter()
            .filter(|c| ok(c) && !state.contains(c))
            .filter(|_| rng.gen_bool(0.6))
            .collect();
        remaining.truncate(12);
        let bound = upper_prune(n, k, bipartite, &state, &remaining).unwrap();
        let pairs = |cs: &[Chord]| cs.iter().map(|c| c.endpoints()).collect::<Vec<_>>();
        let opt = subtree_optimum(&pairs(&state), &pairs(&remaining), k);
        assert!(bound >= opt, "trial {trial}: n = {n}, k = {k}, bound {bound} < optimum {opt}");
        assert!(bound >= state.len());
    }
}

#[test]
fn upper_prune_uses_closed_forms() {
    let all = all_chords(6);
    assert!(upper_prune(6, 0, false, &[], &all).unwrap() <= 9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn canonical_form_is_dihedral_invariant(p in 0.1f64..0.9, seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let edges: Vec<_> = all_chords(7).into_iter().filter(|_| rng.gen_bool(p)).map(|c| c.endpoints()).collect();
        let g = ConvexGraph::from_edges(7, edges).unwrap();
        let form = canonical_form(&g);
        for _ in 0..50 {
            let h = g.dihedral(rng.gen_range(0..7), rng.gen());
            prop_assert_eq!(&canonical_form(&h), &form);
        }
        let as_graph = ConvexGraph::from_edges(7, form.iter().copied()).unwrap();
        let is_image = (0..7).any(|s| [false, true].iter().any(|&f| g.dihedral(s, f) == as_graph));
        prop_assert!(is_image);
    }
}

#[test]
fn hexagon_minus_one_edge_is_three_plane() {
    let g = ConvexGraph::from_edges(6, all_chords(6).into_iter().map(|c| c.endpoints()).filter(|&e| e != (2, 5)))
        .unwrap();
    assert_eq!(g.edge_count(), 14);
    assert!(is_outer_k_planar(&g, 3));
    assert_eq!(general(6, 3), 14);
}
