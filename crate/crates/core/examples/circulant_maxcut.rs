//! Exact max-cut of C_n^{1..r} against the spectral and closed-form bounds.
//!
//! Usage: `cargo run --release --example circulant_maxcut`

use outerk::circulant::{
    exact_maxcut, lemma_maxcut_bound, mercer_inner, mercer_min_bound, mohar_bound, xor_sum, CirculantSpec, XorMode,
};

fn main() -> outerk::Result<()> {
    println!("{:>3} {:>2} {:>6} {:>10} {:>9}  witness", "n", "r", "exact", "mohar", "lemma");
    for n in [8, 11, 12, 16, 20] {
        for r in 1..=5 {
            let Ok(spec) = CirculantSpec::new(n, r) else { continue };
            let cut = exact_maxcut(&spec)?;
            let bits: String = cut.sides.iter().map(|b| char::from(b'0' + b)).collect();
            println!(
                "{n:>3} {r:>2} {:>6} {:>10.4} {:>9.1}  {bits}",
                cut.value,
                mohar_bound(&spec),
                lemma_maxcut_bound(&spec, false)
            );
            assert_eq!(xor_sum(&cut.sides, r, XorMode::Cyclic)?, 2 * cut.value);
        }
    }

    println!("\nr, f(r), min over the spectrum");
    for r in [2, 10, 50, 176, 300] {
        println!("{r:>4} {:>10.6} {:>12.4}", mercer_inner(r), mercer_min_bound(r)?);
    }
    Ok(())
}
