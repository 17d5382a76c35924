//! Max-cut machinery for the circulant graph `C_n^{1,...,r}`.
//!
//! Eigenvalues come from the trigonometric formula
//! `lambda_j = 2 * sum_{k=1..r} cos(2*pi*j*k/n) = D_r(2*pi*j/n) - 1`, never from
//! a generic eigensolver. Exact cuts are enumerated with a Gray code.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Parameters of `C_n^{1,...,r}`; requires `1 <= r` and `2r < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CirculantSpec {
    n: usize,
    r: usize,
}

impl CirculantSpec {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r < 1 || 2 * r >= n {
            return Err(Error::invalid(format!(
                "C_n^(1..r) needs 1 <= r and 2r < n, got n = {n}, r = {r}"
            )));
        }
        Ok(CirculantSpec { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `|E| = r * n`.
    pub fn edge_count(&self) -> usize {
        self.r * self.n
    }

    /// Edges `{i, i+d mod n}` for `d = 1..r`, each listed once.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| (1..=self.r).map(move |d| (i, (i + d) % self.n)))
    }
}

/// `D_r(theta) = 1 + 2 * sum_{k=1..r} cos(k*theta)`.
pub fn dirichlet_kernel(r: usize, theta: f64) -> f64 {
    1.0 + 2.0 * (1..=r).map(|k| (k as f64 * theta).cos()).sum::<f64>()
}

/// Closed form `sin((r+1/2)theta) / sin(theta/2)`, undefined at multiples of 2pi.
pub fn dirichlet_closed_form(r: usize, theta: f64) -> Option<f64> {
    let den = (theta / 2.0).sin();
    if den.abs() < 1e-12 {
        return None;
    }
    Some(((r as f64 + 0.5) * theta).sin() / den)
}

/// The `j`-th adjacency eigenvalue; `lambda_0 = 2r` exactly.
pub fn adjacency_eigenvalue(spec: &CirculantSpec, j: usize) -> Result<f64> {
    if j >= spec.n {
        return Err(Error::invalid(format!("eigenvalue index {j} out of range for n = {}", spec.n)));
    }
    if j == 0 {
        return Ok(2.0 * spec.r as f64);
    }
    let n = spec.n;
    // reduce j*k mod n before scaling to keep the angle small
    Ok(2.0 * (1..=spec.r).map(|k| (2.0 * PI * ((j * k) % n) as f64 / n as f64).cos()).sum::<f64>())
}

pub fn adjacency_spectrum(spec: &CirculantSpec) -> Vec<f64> {
    (0..spec.n).map(|j| adjacency_eigenvalue(spec, j).expect("index in range")).collect()
}

/// Largest Laplacian eigenvalue, `max_j (2r - lambda_j)`.
pub fn laplacian_lambda_max(spec: &CirculantSpec) -> f64 {
    let deg = 2.0 * spec.r as f64;
    adjacency_spectrum(spec).into_iter().map(|l| deg - l).fold(0.0, f64::max)
}

/// Spectral cut bound `mc(G) <= n * lambda_max(L) / 4`.
pub fn mohar_bound(spec: &CirculantSpec) -> f64 {
    spec.n as f64 * laplacian_lambda_max(spec) / 4.0
}

/// Lower-bound constant in the minimum of the Dirichlet kernel.
pub const MERCER_C0: f64 = -0.4344;

/// `f(r) = 1/r + C_0 - 8*pi/(2(r+1))`.
pub fn mercer_inner(r: usize) -> f64 {
    let rf = r as f64;
    1.0 / rf + MERCER_C0 - 8.0 * PI / (2.0 * (rf + 1.0))
}

/// Lower bound `min{-5/12, f(r)} * r` on `min_theta D_r(theta)`, for `r >= 2`.
pub fn mercer_min_bound(r: usize) -> Result<f64> {
    if r < 2 {
        return Err(Error::not_applicable("mercer_min_bound", format!("r = {r} < 2")));
    }
    Ok((-5.0f64 / 12.0).min(mercer_inner(r)) * r as f64)
}

/// Smallest r at which the refined spectral cut bound is used.
pub const REFINED_R_MIN: usize = 176;

/// `(5r/8 + 76) n`, or with `refined` the sharper branch: `(5r/8 + 1/4) n`
/// for `r >= 176`, otherwise the trivial `r n`.
pub fn lemma_maxcut_bound(spec: &CirculantSpec, refined: bool) -> f64 {
    let (n, r) = (spec.n as f64, spec.r as f64);
    if !refined {
        return (5.0 * r / 8.0 + 76.0) * n;
    }
    let trivial = r * n;
    if spec.r >= REFINED_R_MIN {
        trivial.min((5.0 * r / 8.0 + 0.25) * n)
    } else {
        trivial
    }
}

/// Largest r for which `(5r/8 + 76) n >= r n`, i.e. the stated bound is no
/// better than the trivial one.
pub fn lemma_trivial_crossover() -> usize {
    // 76 >= 3r/8  <=>  r <= 202
    (0..).take_while(|&r| 8 * 76 >= 3 * r).last().unwrap_or(0)
}

/// A side assignment and the number of edges it cuts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub sides: Vec<u8>,
    pub value: usize,
}

pub fn cut_value(spec: &CirculantSpec, sides: &[u8]) -> Result<usize> {
    if sides.len() != spec.n {
        return Err(Error::invalid(format!(
            "side vector has length {}, expected {}",
            sides.len(),
            spec.n
        )));
    }
    Ok(spec.edges().filter(|&(u, v)| sides[u] != sides[v]).count())
}

pub const EXACT_MAXCUT_MAX_N: usize = 28;

fn mask_cut(spec: &CirculantSpec, mask: u32) -> i64 {
    spec.edges()
        .filter(|&(u, v)| ((mask >> u) ^ (mask >> v)) & 1 == 1)
        .count() as i64
}

/// Key under which smaller means lexicographically smaller side vector
/// (vertex 0 most significant).
fn lex_key(mask: u32, n: usize) -> u32 {
    mask.reverse_bits() >> (32 - n)
}

/// Enumerates the assignments whose top `fixed` free bits equal `prefix`
/// (vertex 0 always on side 0) and returns `(value, mask)` of the best one,
/// ties broken by [`lex_key`].
fn best_in_block(spec: &CirculantSpec, fixed: usize, prefix: u32) -> (i64, u32) {
    let n = spec.n;
    let free = n - 1 - fixed;
    let mut mask = prefix << (1 + free);
    let mut value = mask_cut(spec, mask);
    let mut best = (value, mask);
    let better = |v: i64, m: u32, b: (i64, u32)| v > b.0 || (v == b.0 && lex_key(m, n) < lex_key(b.1, n));
    for i in 1u64..(1u64 << free) {
        let vertex = 1 + i.trailing_zeros() as usize;
        let side = (mask >> vertex) & 1;
        let mut same = 0i64;
        for d in 1..=spec.r {
            for u in [(vertex + d) % n, (vertex + n - d) % n] {
                if (mask >> u) & 1 == side {
                    same += 1;
                }
            }
        }
        // flipping turns `same` neighbours into cut edges and vice versa
        value += 2 * same - 2 * spec.r as i64;
        mask ^= 1 << vertex;
        if better(value, mask, best) {
            best = (value, mask);
        }
    }
    best
}

/// Maximum cut by exhaustive Gray-code enumeration over the `2^(n-1)`
/// assignments with vertex 0 on side 0, split over `workers` blocks (0 picks
/// the rayon default). The witness is the lexicographically smallest optimal
/// side vector regardless of the worker count.
pub fn exact_maxcut_with(spec: &CirculantSpec, workers: usize) -> Result<Cut> {
    let n = spec.n;
    if n > EXACT_MAXCUT_MAX_N {
        return Err(Error::OverBudget {
            what: "exact_maxcut",
            size: n,
            limit: EXACT_MAXCUT_MAX_N,
        });
    }
    let workers = if workers == 0 { rayon::current_num_threads() } else { workers };
    // 2^fixed blocks, at most 4 per worker and never more than the free bits allow
    let fixed = (usize::BITS - (4 * workers).leading_zeros()) as usize;
    let fixed = fixed.min(n - 1).min(12);
    let blocks: Vec<u32> = (0..1u32 << fixed).collect();
    let pick = |a: (i64, u32), b: (i64, u32)| {
        if b.0 > a.0 || (b.0 == a.0 && lex_key(b.1, n) < lex_key(a.1, n)) {
            b
        } else {
            a
        }
    };
    let best = if workers == 1 {
        blocks.iter().map(|&p| best_in_block(spec, fixed, p)).reduce(pick)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
        pool.install(|| blocks.par_iter().map(|&p| best_in_block(spec, fixed, p)).reduce_with(pick))
    }
    .expect("at least one block");
    let sides = (0..n).map(|v| ((best.1 >> v) & 1) as u8).collect();
    Ok(Cut {
        sides,
        value: best.0 as usize,
    })
}

pub fn exact_maxcut(spec: &CirculantSpec) -> Result<Cut> {
    exact_maxcut_with(spec, 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XorMode {
    /// Indices wrap modulo the string length.
    Cyclic,
    /// Offsets falling outside `[0, len)` are dropped.
    Bounded,
}

/// `sum_i sum_{j=-r..r} s_i xor s_{i+j}` over a bit string.
pub fn xor_sum(s: &[u8], r: usize, mode: XorMode) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::invalid("bit string must be non-empty"));
    }
    if r < 1 {
        return Err(Error::invalid("r must be at least 1"));
    }
    if let Some(b) = s.iter().find(|&&b| b > 1) {
        return Err(Error::invalid(format!("bit value {b} is not 0 or 1")));
    }
    let n = s.len() as i64;
    let r = r as i64;
    let mut total = 0;
    for i in 0..n {
        for j in -r..=r {
            let t = i + j;
            let idx = match mode {
                XorMode::Cyclic => t.rem_euclid(n),
                XorMode::Bounded if (0..n).contains(&t) => t,
                XorMode::Bounded => continue,
            };
            total += (s[i as usize] ^ s[idx as usize]) as usize;
        }
    }
    Ok(total)
}

pub fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::invalid(format!("'{other}' is not a bit"))),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, r: usize) -> CirculantSpec {
        CirculantSpec::new(n, r).unwrap()
    }

    fn brute_maxcut(s: &CirculantSpec) -> usize {
        (0u32..1 << s.n())
            .map(|m| {
                let sides: Vec<u8> = (0..s.n()).map(|v| ((m >> v) & 1) as u8).collect();
                cut_value(s, &sides).unwrap()
            })
            .max()
            .unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(CirculantSpec::new(4, 2).is_err());
        assert!(CirculantSpec::new(5, 0).is_err());
        assert!(CirculantSpec::new(5, 2).is_ok());
    }

    #[test]
    fn dirichlet_examples() {
        for r in 0..6 {
            assert_eq!(dirichlet_kernel(r, 0.0), (2 * r + 1) as f64);
        }
        assert!((dirichlet_kernel(1, PI) + 1.0).abs() < 1e-12);
        let v = dirichlet_kernel(3, 2.0 * PI / 7.0);
        assert!(v.abs() < 1e-12);
        assert!((dirichlet_closed_form(3, 2.0 * PI / 7.0).unwrap() - v).abs() < 1e-12);
        assert!(dirichlet_closed_form(3, 0.0).is_none());
    }

    #[test]
    fn eigenvalue_examples() {
        assert!((adjacency_eigenvalue(&spec(6, 1), 3).unwrap() + 2.0).abs() < 1e-12);
        assert_eq!(adjacency_eigenvalue(&spec(6, 1), 0).unwrap(), 2.0);
        let l = adjacency_eigenvalue(&spec(8, 2), 1).unwrap();
        assert!((l - 2f64.sqrt()).abs() < 1e-12);
        assert!(adjacency_eigenvalue(&spec(8, 2), 8).is_err());
    }

    #[test]
    fn laplacian_examples() {
        assert!((laplacian_lambda_max(&spec(6, 1)) - 4.0).abs() < 1e-12);
        assert!((laplacian_lambda_max(&spec(5, 1)) - 3.618033988749895).abs() < 1e-12);
        assert!((laplacian_lambda_max(&spec(9, 2)) - 6.0).abs() < 1e-12);
    }

    #[test]
    fn mohar_examples() {
        assert!((mohar_bound(&spec(6, 1)) - 6.0).abs() < 1e-12);
        assert!((mohar_bound(&spec(5, 1)) - 4.522542485937368).abs() < 1e-12);
        let s = spec(12, 2);
        assert!(mohar_bound(&s) + 1e-9 >= exact_maxcut(&s).unwrap().value as f64);
    }

    #[test]
    fn mercer_examples() {
        assert!((mercer_inner(176) + 0.4997).abs() < 1e-4);
        assert!(mercer_inner(176) > -0.5);
        let b2 = mercer_min_bound(2).unwrap();
        assert!((b2 - 2.0 * mercer_inner(2)).abs() < 1e-12);
        assert!((b2 + 8.246380409572782).abs() < 1e-9);
        assert!(mercer_min_bound(1).is_err());
    }

    #[test]
    fn mercer_inner_increasing() {
        for r in 1..2000 {
            assert!(mercer_inner(r + 1) > mercer_inner(r));
        }
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(lemma_maxcut_bound(&spec(10, 2), false), 772.5);
        assert_eq!(lemma_maxcut_bound(&spec(10, 2), true), 20.0);
        assert_eq!(lemma_maxcut_bound(&spec(1000, 200), true), 125250.0);
        assert_eq!(lemma_trivial_crossover(), 202);
    }

    #[test]
    fn exact_examples() {
        assert_eq!(exact_maxcut(&spec(6, 1)).unwrap().value, 6);
        assert_eq!(exact_maxcut(&spec(5, 1)).unwrap().value, 4);
        assert_eq!(exact_maxcut(&spec(8, 2)).unwrap().value, 12);
        assert!(matches!(exact_maxcut(&spec(29, 2)), Err(Error::OverBudget { .. })));
    }

    #[test]
    fn exact_matches_brute_force() {
        for n in 3..=13 {
            for r in 1..=(n - 1) / 2 {
                let s = spec(n, r);
                let cut = exact_maxcut(&s).unwrap();
                assert_eq!(cut.value, brute_maxcut(&s), "n={n} r={r}");
                assert_eq!(cut_value(&s, &cut.sides).unwrap(), cut.value);
                assert_eq!(cut.sides[0], 0);
            }
        }
    }

    #[test]
    fn exact_witness_is_lexicographically_smallest() {
        for (n, r) in [(6, 1), (8, 2), (11, 3), (12, 2)] {
            let s = spec(n, r);
            let cut = exact_maxcut(&s).unwrap();
            let smallest = (0u32..1 << n)
                .map(|m| (0..n).map(|v| ((m >> v) & 1) as u8).collect::<Vec<u8>>())
                .filter(|sd| cut_value(&s, sd).unwrap() == cut.value)
                .min()
                .unwrap();
            assert_eq!(cut.sides, smallest);
        }
    }

    #[test]
    fn exact_is_independent_of_workers() {
        let s = spec(16, 3);
        let base = exact_maxcut_with(&s, 1).unwrap();
        for w in [2, 3, 4, 8] {
            assert_eq!(exact_maxcut_with(&s, w).unwrap(), base);
        }
    }

    #[test]
    fn xor_examples() {
        assert_eq!(xor_sum(&parse_bits("0101").unwrap(), 1, XorMode::Cyclic).unwrap(), 8);
        for r in 1..4 {
            for m in [XorMode::Cyclic, XorMode::Bounded] {
                assert_eq!(xor_sum(&[0, 0, 0, 0], r, m).unwrap(), 0);
            }
        }
        assert_eq!(xor_sum(&parse_bits("0011").unwrap(), 1, XorMode::Bounded).unwrap(), 2);
        assert!(xor_sum(&[], 1, XorMode::Cyclic).is_err());
        assert!(xor_sum(&[0, 1], 0, XorMode::Cyclic).is_err());
        assert!(parse_bits("01a").is_err());
    }
}
