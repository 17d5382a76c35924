//! Closed-form edge-count bounds for outer k-planar graphs, general and
//! bipartite, together with the crossing-lemma constants they rest on and the
//! `epsilon(k)` solver for the shortest-long-diagonal bound.
//!
//! Every evaluator either returns a value or an explicit
//! [`Error::NotApplicable`]; a variant is never evaluated silently outside its
//! validity window. Values are reals and never floored.

use serde::Serialize;
use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};

/// Threshold standing in for "sufficiently large k" where no explicit cutoff
/// is known.
pub const DEFAULT_K_MIN: u64 = 176;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundConfig {
    /// Smallest k at which the "sufficiently large k" bounds are reported valid.
    pub k_min: u64,
    /// Use `-(2k+5)` instead of `-(2k+6)` in the small-k bipartite bound.
    pub strict_small_k_bip: bool,
}

impl Default for BoundConfig {
    fn default() -> Self {
        BoundConfig {
            k_min: DEFAULT_K_MIN,
            strict_small_k_bip: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Upper,
    Lower,
}

/// Which graphs a bound speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    General,
    Bipartite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Caveat {
    /// Relies on an unproven remark (the k = 4 small-k entry).
    Conditional,
    /// Leading term only; lower-order terms are dropped.
    Asymptotic,
    /// Holds for k above an unspecified threshold; see [`BoundConfig::k_min`].
    SufficientlyLargeK,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub caveat: Option<Caveat>,
}

impl Evaluation {
    fn plain(value: f64) -> Self {
        Evaluation { value, caveat: None }
    }

    fn with(value: f64, caveat: Caveat) -> Self {
        Evaluation {
            value,
            caveat: Some(caveat),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneralVariant {
    Lazy,
    Common,
    Local,
    Direct,
    SmallK,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BipartiteVariant {
    Lazy,
    Common,
    Local,
    SmallK,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BipartiteSetting {
    Alternating,
    Consecutive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingFlavor {
    Outer,
    OuterBipartite,
    MultigraphM2,
    MultigraphM2Bipartite,
}

impl GeneralVariant {
    pub const ALL: [GeneralVariant; 5] = [
        GeneralVariant::Lazy,
        GeneralVariant::Common,
        GeneralVariant::Local,
        GeneralVariant::Direct,
        GeneralVariant::SmallK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneralVariant::Lazy => "lazy",
            GeneralVariant::Common => "common",
            GeneralVariant::Local => "local",
            GeneralVariant::Direct => "direct",
            GeneralVariant::SmallK => "small_k",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }

    fn valid_when(self) -> &'static str {
        match self {
            GeneralVariant::Lazy => "k >= 5",
            GeneralVariant::Common => "k >= 5",
            GeneralVariant::Local => "k >= 0",
            GeneralVariant::Direct => "k >= 3",
            GeneralVariant::SmallK => "k <= 3 (k = 4 conditional)",
        }
    }

    fn source(self) -> &'static str {
        match self {
            GeneralVariant::Lazy => "outercopy + multigraph crossing lemma",
            GeneralVariant::Common => "convex crossing lemma from small-k densities",
            GeneralVariant::Local => "maximum minimum degree",
            GeneralVariant::Direct => "shortest long diagonal",
            GeneralVariant::SmallK => "outercopy + non-homotopic multigraph densities",
        }
    }
}

impl BipartiteVariant {
    pub const ALL: [BipartiteVariant; 4] = [
        BipartiteVariant::Lazy,
        BipartiteVariant::Common,
        BipartiteVariant::Local,
        BipartiteVariant::SmallK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BipartiteVariant::Lazy => "lazy",
            BipartiteVariant::Common => "common",
            BipartiteVariant::Local => "local",
            BipartiteVariant::SmallK => "small_k",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }

    fn valid_when(self) -> &'static str {
        match self {
            BipartiteVariant::Lazy => "k >= 5",
            BipartiteVariant::Common => "k >= 5",
            BipartiteVariant::Local => "k >= k_min (sufficiently large k)",
            BipartiteVariant::SmallK => "k <= 4",
        }
    }

    fn source(self) -> &'static str {
        match self {
            BipartiteVariant::Lazy => "outercopy + bipartite multigraph crossing lemma",
            BipartiteVariant::Common => "bipartite convex crossing lemma",
            BipartiteVariant::Local => "bipartite minimum degree via circulant max-cut",
            BipartiteVariant::SmallK => "maximal outerplanar subgraph face count",
        }
    }
}

fn check_n(n: u64) -> Result<()> {
    if n < 3 {
        return Err(Error::invalid(format!("bounds need n >= 3, got {n}")));
    }
    Ok(())
}

fn sqrt_k(k: u64) -> f64 {
    (k as f64).sqrt()
}

/// Smallest admissible `epsilon(k) = ((5*sqrt2/2)*sqrt(k) - 1) / (sqrt2*k - 2*sqrt(k))`;
/// every larger epsilon satisfies the contradiction inequality of the
/// shortest-long-diagonal argument. Defined for `k > 2`.
pub fn epsilon_for(k: u64) -> Result<f64> {
    if k <= 2 {
        return Err(Error::not_applicable(
            "epsilon_for",
            format!("k = {k}: sqrt2*k - 2*sqrt(k) must be positive (k > 2)"),
        ));
    }
    let s = sqrt_k(k);
    Ok((2.5 * SQRT_2 * s - 1.0) / (SQRT_2 * k as f64 - 2.0 * s))
}

/// Upper bound on the edge count of an outer k-planar graph on `n` vertices.
pub fn general_upper(n: u64, k: u64, variant: GeneralVariant) -> Result<Evaluation> {
    check_n(n)?;
    let nf = n as f64;
    let s = sqrt_k(k);
    let na = |reason: String| Err(Error::not_applicable(format!("general_upper.{}", variant.name()), reason));
    match variant {
        GeneralVariant::Lazy => {
            if k < 5 {
                return na(format!("k = {k} < 5"));
            }
            Ok(Evaluation::plain(2.85 * s * nf))
        }
        GeneralVariant::Common => {
            if k < 5 {
                return na(format!("k = {k} < 5; the small-k table applies"));
            }
            Ok(Evaluation::plain((87723.0 / 16000.0 * k as f64).sqrt() * nf))
        }
        GeneralVariant::Local => Ok(Evaluation::plain((2.0 * (k as f64 + 1.0).sqrt() + 2.0) * nf)),
        GeneralVariant::Direct => {
            let eps = epsilon_for(k)?;
            Ok(Evaluation::plain((SQRT_2 + eps) * s * nf + nf))
        }
        GeneralVariant::SmallK => match k {
            0 => Ok(Evaluation::plain(2.0 * nf - 3.0)),
            1 => Ok(Evaluation::plain(2.5 * nf - 4.0)),
            2 => Ok(Evaluation::plain(3.0 * nf - 5.0)),
            3 => Ok(Evaluation::plain(3.25 * nf - 6.0)),
            4 => Ok(Evaluation::with(3.5 * nf - 6.0, Caveat::Conditional)),
            _ => na(format!("k = {k} > 4")),
        },
    }
}

/// Upper bound on the edge count of a bipartite outer k-planar graph.
pub fn bipartite_upper(n: u64, k: u64, variant: BipartiteVariant) -> Result<Evaluation> {
    bipartite_upper_with(&BoundConfig::default(), n, k, variant)
}

pub fn bipartite_upper_with(cfg: &BoundConfig, n: u64, k: u64, variant: BipartiteVariant) -> Result<Evaluation> {
    check_n(n)?;
    let nf = n as f64;
    let s = sqrt_k(k);
    let na = |reason: String| Err(Error::not_applicable(format!("bipartite_upper.{}", variant.name()), reason));
    match variant {
        BipartiteVariant::Lazy => {
            if k < 5 {
                return na(format!("k = {k} < 5"));
            }
            Ok(Evaluation::plain(2.228 * s * nf))
        }
        BipartiteVariant::Common => {
            if k < 5 {
                return na(format!("k = {k} < 5; the small-k bound applies"));
            }
            Ok(Evaluation::plain((675.0 / 128.0 * k as f64).sqrt() * nf))
        }
        BipartiteVariant::Local => {
            if k < cfg.k_min {
                return na(format!("k = {k} below k_min = {}", cfg.k_min));
            }
            Ok(Evaluation::with(2.0 * (8.0f64 / 11.0).sqrt() * s * nf, Caveat::SufficientlyLargeK))
        }
        BipartiteVariant::SmallK => {
            if k > 4 {
                return na(format!("k = {k} > 4"));
            }
            let kf = k as f64;
            let shift = if cfg.strict_small_k_bip { 2.0 * kf + 5.0 } else { 2.0 * kf + 6.0 };
            Ok(Evaluation::plain(((kf + 3.5) * nf - shift) / 2.0))
        }
    }
}

/// Edge count of the clique-chain construction realized at `(n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChainLower {
    pub value: f64,
    /// Clique size of each block.
    pub x: u64,
    pub blocks: u64,
    /// The k and n actually realized (`<=` the query).
    pub k_used: u64,
    pub n_used: u64,
    /// False when the query had to be rounded down to an admissible pair.
    pub exact: bool,
}

/// Lower bound from chaining convex `K_x` with even `x`, which are
/// `((x-2)/2)^2`-plane. Inadmissible queries fall back to the largest
/// admissible `k' <= k` and `n' <= n` and are flagged `exact = false`.
pub fn general_lower(n: u64, k: u64) -> Result<ChainLower> {
    check_n(n)?;
    let root = (k as f64).sqrt().floor() as u64;
    // guard against rounding in the floor
    let root = (root.saturating_sub(1)..=root + 1).filter(|r| r * r <= k).max().unwrap_or(0);
    if root == 0 {
        return Err(Error::not_applicable(
            "general_lower",
            "k = 0 admits no even clique with x >= 4",
        ));
    }
    let x = 2 * root + 2;
    let blocks = (n - 2) / (x - 2);
    if blocks == 0 {
        return Err(Error::not_applicable(
            "general_lower",
            format!("n = {n} is smaller than one K_{x} block"),
        ));
    }
    let n_used = blocks * (x - 2) + 2;
    let k_used = root * root;
    let value = (blocks * (x * (x - 1) / 2) - (blocks - 1)) as f64;
    Ok(ChainLower {
        value,
        x,
        blocks,
        k_used,
        n_used,
        exact: n_used == n && k_used == k,
    })
}

/// Closed form of the clique-chain count, `n(x+1)/2 - x` with `x = 2*sqrt(k)+2`.
/// Agrees with [`general_lower`] whenever the query is admissible.
pub fn kx_chain_closed_form(n: u64, k: u64) -> f64 {
    let x = 2.0 * sqrt_k(k) + 2.0;
    n as f64 * (x + 1.0) / 2.0 - x
}

/// The commonly quoted simplification `n*sqrt(k) + 3n - 2*sqrt(k)` of the
/// chain count. It overestimates the true count by `1.5n + 2`; reference only,
/// never part of a [`BoundReport`].
pub fn kx_chain_quoted_simplification(n: u64, k: u64) -> f64 {
    let (nf, s) = (n as f64, sqrt_k(k));
    nf * s + 3.0 * nf - 2.0 * s
}

/// Lower bounds for bipartite outer k-planar graphs.
pub fn bipartite_lower(n: u64, k: u64, setting: BipartiteSetting) -> Result<Evaluation> {
    check_n(n)?;
    match setting {
        BipartiteSetting::Alternating => {
            // x = sqrt(2k) + 1 must be an integer
            let two_k = 2 * k;
            let root = (two_k as f64).sqrt().round() as u64;
            if k == 0 || root * root != two_k {
                return Err(Error::not_applicable(
                    "bipartite_lower.alternating",
                    format!("sqrt(2k) is not an integer for k = {k}"),
                ));
            }
            let period = 2 * root; // 2x - 2
            if n < 2 || !(n - 2).is_multiple_of(period) {
                return Err(Error::not_applicable(
                    "bipartite_lower.alternating",
                    format!("n - 2 = {} is not a multiple of {period}", n.saturating_sub(2)),
                ));
            }
            let l = (n - 2) / period;
            Ok(Evaluation::plain((l * (2 * k + 2 * root) + 1) as f64))
        }
        BipartiteSetting::Consecutive => {
            let lead = (k as f64 / 2.0).sqrt().floor();
            if lead < 1.0 {
                return Err(Error::not_applicable(
                    "bipartite_lower.consecutive",
                    format!("floor(sqrt(k/2)) = 0 for k = {k}"),
                ));
            }
            Ok(Evaluation::with(lead * n as f64, Caveat::Asymptotic))
        }
    }
}

/// Validity threshold for the bipartite multiplicity-two crossing lemma, as a
/// multiple of n. No threshold accompanies that constant, so the one of the
/// non-bipartite multigraph lemma is reused.
pub const MULTIGRAPH_M2_BIPARTITE_DENSITY: f64 = 6.77;

/// Lower bounds on the number of crossings of a drawing with `n` vertices and
/// `m` edges.
pub fn crossing_lemma_lower(n: u64, m: u64, flavor: CrossingFlavor) -> Result<f64> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let (nf, mf) = (n as f64, m as f64);
    let cube = mf * mf * mf / (nf * nf);
    let (holds, cond, value) = match flavor {
        CrossingFlavor::Outer => (40.0 * mf >= 171.0 * nf, "m >= 171n/40", 8000.0 / 87723.0 * cube),
        CrossingFlavor::OuterBipartite => (mf >= 3.75 * nf, "m >= 3.75n", 64.0 / 675.0 * cube),
        CrossingFlavor::MultigraphM2 => (mf > 6.77 * nf, "m > 6.77n", cube / (2.0 * 27.48)),
        CrossingFlavor::MultigraphM2Bipartite => (
            mf > MULTIGRAPH_M2_BIPARTITE_DENSITY * nf,
            "m > 6.77n",
            1024.0 / 16875.0 * cube / 2.0,
        ),
    };
    if !holds {
        return Err(Error::not_applicable(
            format!("crossing_lemma_lower.{flavor:?}"),
            format!("density condition {cond} fails for n = {n}, m = {m}"),
        ));
    }
    Ok(value)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MinDegreeBounds {
    /// `2*sqrt(k+1) + 2`
    pub general: f64,
    /// `2*sqrt(8/11)*sqrt(k) + 2`, for sufficiently large k only.
    pub bipartite: f64,
}

pub fn maxmindeg_bound(k: u64) -> MinDegreeBounds {
    MinDegreeBounds {
        general: 2.0 * (k as f64 + 1.0).sqrt() + 2.0,
        bipartite: 2.0 * (8.0f64 / 11.0).sqrt() * sqrt_k(k) + 2.0,
    }
}

/// Color count implied by degeneracy: `floor(2*sqrt(k+1) + 2) + 1`.
pub fn degeneracy_color_bound(k: u64) -> u64 {
    maxmindeg_bound(k).general.floor() as u64 + 1
}

/// The sharper claimed color count `floor(2*sqrt(k+1)) + 1`.
pub fn claimed_color_bound(k: u64) -> u64 {
    (2.0 * (k as f64 + 1.0).sqrt()).floor() as u64 + 1
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub kind: Kind,
    pub class: GraphClass,
    /// `None` when the entry is not applicable at this query.
    pub value: Option<f64>,
    pub valid: bool,
    pub valid_when: String,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<Caveat>,
}

/// All bounds evaluated at one `(n, k)` query.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub k: u64,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn compute(n: u64, k: u64) -> Result<Self> {
        Self::compute_with(&BoundConfig::default(), n, k)
    }

    pub fn compute_with(cfg: &BoundConfig, n: u64, k: u64) -> Result<Self> {
        check_n(n)?;
        let mut entries = Vec::new();
        let mut push = |name: String,
                        kind: Kind,
                        class: GraphClass,
                        res: Result<Evaluation>,
                        valid_when: &str,
                        source: &str| {
            let (value, valid, caveat) = match res {
                Ok(ev) => (Some(ev.value), true, ev.caveat),
                Err(_) => (None, false, None),
            };
            entries.push(BoundEntry {
                name,
                kind,
                class,
                value,
                valid,
                valid_when: valid_when.to_string(),
                source: source.to_string(),
                caveat,
            });
        };
        for v in GeneralVariant::ALL {
            push(
                format!("upper_{}", v.name()),
                Kind::Upper,
                GraphClass::General,
                general_upper(n, k, v),
                v.valid_when(),
                v.source(),
            );
        }
        for v in BipartiteVariant::ALL {
            push(
                format!("bip_upper_{}", v.name()),
                Kind::Upper,
                GraphClass::Bipartite,
                bipartite_upper_with(cfg, n, k, v),
                v.valid_when(),
                v.source(),
            );
        }
        let chain = general_lower(n, k).map(|c| Evaluation::plain(c.value));
        push(
            "lower_kx_chain".into(),
            Kind::Lower,
            GraphClass::General,
            chain,
            "k >= 1, n >= x (rounded down to admissible k', n')",
            "clique chain construction",
        );
        push(
            "bip_lower_alternating".into(),
            Kind::Lower,
            GraphClass::Bipartite,
            bipartite_lower(n, k, BipartiteSetting::Alternating),
            "sqrt(2k) integral, (n-2) divisible by 2*sqrt(2k)",
            "alternating K_{x,x} chain",
        );
        push(
            "bip_lower_consecutive".into(),
            Kind::Lower,
            GraphClass::Bipartite,
            bipartite_lower(n, k, BipartiteSetting::Consecutive),
            "k >= 2 (leading term only)",
            "two-layer construction",
        );
        Ok(BoundReport { n, k, entries })
    }

    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Smallest valid upper bound that applies to graphs of `class`.
    /// General bounds also apply to bipartite graphs.
    pub fn best_upper(&self, class: GraphClass) -> Option<f64> {
        self.entries
            .iter()
            .filter(|e| e.kind == Kind::Upper && e.valid && applies(e.class, class))
            .filter_map(|e| e.value)
            .min_by(f64::total_cmp)
    }

    /// Pairs `(upper, lower)` of valid entries where the upper bound falls
    /// below the lower one. Empty for a consistent bound system.
    pub fn violations(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for lo in self.entries.iter().filter(|e| e.kind == Kind::Lower && e.valid) {
            for up in self.entries.iter().filter(|e| e.kind == Kind::Upper && e.valid) {
                if !applies(up.class, lo.class) {
                    continue;
                }
                if let (Some(u), Some(l)) = (up.value, lo.value) {
                    if u + 1e-9 < l {
                        out.push((up.name.clone(), lo.name.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Whether a bound stated for `bound` graphs constrains graphs of `target`.
fn applies(bound: GraphClass, target: GraphClass) -> bool {
    bound == GraphClass::General || bound == target
}
