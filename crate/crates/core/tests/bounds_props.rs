use outerk::bounds::{
    self, bipartite_upper, crossing_lemma_lower, epsilon_for, general_upper, BipartiteSetting, BipartiteVariant,
    BoundReport, CrossingFlavor, GeneralVariant, Kind,
};
use proptest::prelude::*;
use std::f64::consts::SQRT_2;

#[test]
fn no_upper_bound_falls_below_a_lower_bound() {
    for n in (3..=400).step_by(7) {
        for k in 0..=300 {
            let r = BoundReport::compute(n, k).unwrap();
            assert!(r.violations().is_empty(), "n = {n}, k = {k}: {:?}", r.violations());
        }
    }
}

#[test]
fn epsilon_decreases_to_zero() {
    let mut prev = epsilon_for(3).unwrap();
    for k in 4..=1_000_000u64 {
        let e = epsilon_for(k).unwrap();
        assert!(e < prev, "not decreasing at k = {k}");
        prev = e;
    }
    assert!(prev < 0.003);
    assert!(epsilon_for(2).is_err());
}

proptest! {
    #[test]
    fn epsilon_solves_its_defining_equation(k in 3u64..1_000_000) {
        let e = epsilon_for(k).unwrap();
        let s = (k as f64).sqrt();
        let lhs = (SQRT_2 * k as f64 - 2.0 * s) * e;
        let rhs = 2.5 * SQRT_2 * s - 1.0;
        prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs.max(1.0));
    }

    #[test]
    fn uppers_scale_linearly_in_n(n in 3u64..5000, k in 0u64..500) {
        for v in GeneralVariant::ALL {
            if let (Ok(a), Ok(b)) = (general_upper(n, k, v), general_upper(2 * n, k, v)) {
                prop_assert!(b.value >= a.value);
            }
        }
        for v in BipartiteVariant::ALL {
            if let (Ok(a), Ok(g)) = (bipartite_upper(n, k, v), bipartite_upper(n + 1, k, v)) {
                prop_assert!(g.value >= a.value);
            }
        }
    }

    #[test]
    fn report_entries_are_consistent(n in 3u64..2000, k in 0u64..1000) {
        let r = BoundReport::compute(n, k).unwrap();
        for e in &r.entries {
            prop_assert_eq!(e.valid, e.value.is_some());
            if let Some(v) = e.value {
                prop_assert!(v.is_finite());
            }
        }
        let uppers = r.entries.iter().filter(|e| e.kind == Kind::Upper).count();
        prop_assert_eq!(uppers, 9);
    }

    #[test]
    fn crossing_lemma_thresholds(n in 1u64..500, density in 0.0f64..20.0) {
        let m = (density * n as f64) as u64;
        let outer = crossing_lemma_lower(n, m, CrossingFlavor::Outer);
        prop_assert_eq!(outer.is_ok(), 40 * m >= 171 * n);
        let bip = crossing_lemma_lower(n, m, CrossingFlavor::OuterBipartite);
        prop_assert_eq!(bip.is_ok(), m as f64 >= 3.75 * n as f64);
        if let (Ok(a), Ok(b)) = (outer, bip) {
            prop_assert!(b > a);
        }
    }
}

#[test]
fn small_k_table_at_one_hundred() {
    let expect = [197.0, 246.0, 295.0, 319.0];
    for (k, want) in expect.into_iter().enumerate() {
        let ev = general_upper(100, k as u64, GeneralVariant::SmallK).unwrap();
        assert_eq!(ev.value, want);
        assert!(ev.caveat.is_none());
    }
    let four = general_upper(100, 4, GeneralVariant::SmallK).unwrap();
    assert_eq!(four.value, 344.0);
    assert!(four.caveat.is_some());
    assert!(general_upper(100, 5, GeneralVariant::SmallK).is_err());
}

#[test]
fn bipartite_lowers() {
    // sqrt(2k) = 4 at k = 8: x = 5, blocks of 8 points
    let alt = bounds::bipartite_lower(34, 8, BipartiteSetting::Alternating).unwrap();
    let chain = outerk::constructions::kxx_chain(5, 4).unwrap();
    assert_eq!(chain.n(), 34);
    assert_eq!(alt.value, chain.edge_count() as f64);
    assert!(bounds::bipartite_lower(35, 8, BipartiteSetting::Alternating).is_err());
    assert!(bounds::bipartite_lower(34, 7, BipartiteSetting::Alternating).is_err());
}
