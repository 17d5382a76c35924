//! Exact maximum edge count of outer k-planar graphs on small convex point
//! sets, by branch-and-bound over chords.
//!
//! Chords are branched in order of increasing length (then lexicographically),
//! include-branch first. Hull edges cross nothing and are always taken. The
//! first branching chord is restricted to one representative of its orbit
//! under the dihedral symmetries that preserve the allowed chord set; no
//! further isomorph rejection is done. The search is sequential, so results,
//! witnesses and node counts are reproducible.

use serde::Serialize;

use crate::bounds::{BoundReport, GraphClass, Kind};
use crate::error::{Error, Result};
use crate::geometry::{dihedral_image, is_bipartite, is_outer_k_planar, Chord, ConvexGraph};

/// Largest vertex count accepted by [`max_edges`].
pub const MAX_N: usize = 12;

/// Environment variable read for the default node budget.
pub const BUDGET_ENV: &str = "OUTERK_BUDGET_NODES";
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    General,
    /// Any 2-coloring of the points; every edge bichromatic.
    BipartiteFree,
    /// Colors alternate around the hull.
    BipartiteAlternating,
    /// Each color class is one contiguous block; the split is searched.
    BipartiteConsecutive,
}

impl SearchMode {
    pub fn is_bipartite(self) -> bool {
        self != SearchMode::General
    }

    pub fn parse_bipartite(s: &str) -> Option<Self> {
        match s {
            "free" => Some(SearchMode::BipartiteFree),
            "alternating" => Some(SearchMode::BipartiteAlternating),
            "consecutive" => Some(SearchMode::BipartiteConsecutive),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub node_budget: u64,
    /// Cap the search with the proven closed-form upper bounds.
    pub theorem_bounds: bool,
    /// Feasible graph used as the initial incumbent.
    pub warm_start: Option<ConvexGraph>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        let node_budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_NODE_BUDGET);
        SearchOptions {
            node_budget,
            theorem_bounds: true,
            warm_start: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchSettings {
    pub n: usize,
    pub k: usize,
    pub mode: SearchMode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub max_edges: usize,
    pub witness: ConvexGraph,
    pub nodes_explored: u64,
    pub proven_optimal: bool,
    pub settings: SearchSettings,
}

/// Chord table for a fixed n: index <-> chord, crossing masks and the
/// branching order.
struct ChordTable {
    n: usize,
    chords: Vec<Chord>,
    cross: Vec<u128>,
}

impl ChordTable {
    fn new(n: usize) -> Self {
        let chords: Vec<Chord> = (0..n).flat_map(|a| (a + 1..n).map(move |b| Chord::new(a, b))).collect();
        let cross = chords
            .iter()
            .map(|c| {
                chords
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| c.crosses(d))
                    .fold(0u128, |m, (i, _)| m | (1 << i))
            })
            .collect();
        ChordTable { n, chords, cross }
    }

    fn index(&self, c: Chord) -> usize {
        self.chords.binary_search(&c).expect("chord in table")
    }

    fn mask_of(&self, cs: &[Chord]) -> u128 {
        cs.iter().fold(0, |m, &c| m | (1 << self.index(c)))
    }

    fn graph(&self, mask: u128) -> ConvexGraph {
        let edges = bits(mask).map(|i| self.chords[i]).collect();
        ConvexGraph::from_sorted_unchecked(self.n, edges)
    }

    /// Chord permutations of the `2n` dihedral maps.
    fn dihedral_perms(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut out = Vec::with_capacity(2 * n);
        for reflect in [false, true] {
            for shift in 0..n {
                out.push(
                    self.chords
                        .iter()
                        .map(|c| self.index(c.map_dihedral(n, shift, reflect)))
                        .collect(),
                );
            }
        }
        out
    }
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

fn permute_mask(mask: u128, perm: &[usize]) -> u128 {
    bits(mask).fold(0, |m, i| m | (1 << perm[i]))
}

/// Proven closed-form cap on the edge count, floored. Conditional and
/// "sufficiently large k" entries are not used.
fn theorem_cap(n: usize, k: usize, bipartite: bool) -> Option<usize> {
    if n < 3 {
        return None;
    }
    let report = BoundReport::compute(n as u64, k as u64).ok()?;
    report
        .entries
        .iter()
        .filter(|e| e.kind == Kind::Upper && e.valid && e.caveat.is_none())
        .filter(|e| e.class == GraphClass::General || bipartite)
        .filter_map(|e| {
            // 3.25n - 6 fails at n = 6 (K6 minus an edge is outer 3-planar);
            // the half-edge count behind it only gives 3.25n - 5.5.
            match (e.name.as_str(), k) {
                ("upper_small_k", 3) => e.value.map(|v| v + 0.5),
                _ => e.value,
            }
        })
        .min_by(f64::total_cmp)
        .map(|v| (v + 1e-9).floor().max(0.0) as usize)
}

/// Residual-capacity bound: each chord added to `inc` pays at least `min_pay`
/// units of the `k*|inc| - 2*pairs` crossings the included chords can still
/// absorb. `None` when some candidate pays nothing.
fn budget_bound(k: usize, size: usize, pairs: usize, min_pay: usize) -> Option<usize> {
    if min_pay == 0 {
        return None;
    }
    let capacity = k * size - 2 * pairs;
    Some(size + capacity / min_pay)
}

#[inline]
fn addable(cross: u128, inc: u128, sat: u128, k: usize) -> bool {
    cross & sat == 0 && (cross & inc).count_ones() as usize <= k
}

/// Admissible upper bound on the best k-plane completion of `state` by chords
/// from `remaining`: the minimum of the candidate count bound, the proven
/// closed-form bounds (bipartite ones too when `bipartite`), and the
/// residual-capacity bound.
pub fn upper_prune(n: usize, k: usize, bipartite: bool, state: &[Chord], remaining: &[Chord]) -> Result<usize> {
    if !(2..=MAX_N).contains(&n) {
        return Err(Error::invalid(format!("upper_prune supports 2 <= n <= {MAX_N}, got {n}")));
    }
    for c in state.iter().chain(remaining) {
        c.validate(n)?;
    }
    let t = ChordTable::new(n);
    let inc = t.mask_of(state);
    let size = inc.count_ones() as usize;
    let mut pairs = 0;
    let mut sat = 0u128;
    for i in bits(inc) {
        let cnt = (t.cross[i] & inc).count_ones() as usize;
        if cnt > k {
            return Err(Error::invalid(format!("state chord {} exceeds the crossing cap", t.chords[i])));
        }
        if cnt == k {
            sat |= 1 << i;
        }
        pairs += cnt;
    }
    pairs /= 2;
    let rest = t.mask_of(remaining) & !inc;
    let mut alive = 0;
    let mut min_pay = usize::MAX;
    for i in bits(rest) {
        if addable(t.cross[i], inc, sat, k) {
            alive += 1;
            min_pay = min_pay.min((t.cross[i] & inc).count_ones() as usize);
        }
    }
    let mut bound = size + alive;
    if let Some(cap) = theorem_cap(n, k, bipartite) {
        bound = bound.min(cap.max(size));
    }
    if alive > 0 {
        if let Some(b) = budget_bound(k, size, pairs, min_pay) {
            bound = bound.min(b);
        }
    }
    Ok(bound)
}

struct Solver<'a> {
    t: &'a ChordTable,
    k: usize,
    order: Vec<usize>,
    cap: usize,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    best: usize,
    best_mask: Option<u128>,
}

impl Solver<'_> {
    fn dfs(&mut self, pos: usize, inc: u128, sat: u128, size: usize, pairs: usize, forbidden: u128) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if size > self.best {
            self.best = size;
            self.best_mask = Some(inc);
        }
        let k = self.k;
        let mut alive = 0;
        let mut min_pay = usize::MAX;
        let mut next = None;
        for (p, &c) in self.order.iter().enumerate().skip(pos) {
            if forbidden >> c & 1 == 1 || !addable(self.t.cross[c], inc, sat, k) {
                continue;
            }
            alive += 1;
            min_pay = min_pay.min((self.t.cross[c] & inc).count_ones() as usize);
            next.get_or_insert(p);
        }
        let Some(p) = next else { return };
        let mut bound = (size + alive).min(self.cap);
        if let Some(b) = budget_bound(k, size, pairs, min_pay) {
            bound = bound.min(b);
        }
        if bound <= self.best {
            return;
        }
        let c = self.order[p];
        let (inc2, sat2, paid) = self.include(c, inc, sat);
        self.dfs(p + 1, inc2, sat2, size + 1, pairs + paid, forbidden);
        self.dfs(p + 1, inc, sat, size, pairs, forbidden);
    }

    /// Adds chord `c`, returning the new included and saturated masks and the
    /// number of crossings it creates.
    fn include(&self, c: usize, inc: u128, sat: u128) -> (u128, u128, usize) {
        let crossed = self.t.cross[c] & inc;
        let paid = crossed.count_ones() as usize;
        let inc2 = inc | (1 << c);
        let mut sat2 = sat;
        for d in bits(crossed) {
            if (self.t.cross[d] & inc2).count_ones() as usize == self.k {
                sat2 |= 1 << d;
            }
        }
        if paid == self.k {
            sat2 |= 1 << c;
        }
        (inc2, sat2, paid)
    }

    /// Full search over chords in `allowed`, with hull chords forced and the
    /// first diagonal restricted up to `symmetries`.
    fn run(&mut self, allowed: u128, symmetries: &[Vec<usize>]) {
        let n = self.t.n;
        let hull: u128 = bits(allowed)
            .filter(|&i| self.t.chords[i].is_hull(n))
            .fold(0, |m, i| m | (1 << i));
        let mut order: Vec<usize> = bits(allowed & !hull).collect();
        order.sort_by_key(|&i| (self.t.chords[i].length(n), self.t.chords[i]));
        self.order = order;
        let size = hull.count_ones() as usize;
        let sat = if self.k == 0 { hull } else { 0 };
        if size > self.best {
            self.best = size;
            self.best_mask = Some(hull);
        }
        let Some(&first) = self.order.first() else {
            self.nodes += 1;
            return;
        };
        // branch A: take the first diagonal
        let (inc, sat_a, paid) = self.include(first, hull, sat);
        self.dfs(1, inc, sat_a, size + 1, paid, 0);
        // branch B: no chord of its orbit appears
        let orbit = symmetries.iter().fold(0u128, |m, p| m | (1 << p[first]));
        self.dfs(1, hull, sat, size, 0, orbit);
    }
}

fn coloring_mask(t: &ChordTable, coloring: &[u8]) -> u128 {
    t.chords
        .iter()
        .enumerate()
        .filter(|(_, c)| coloring[c.a()] != coloring[c.b()])
        .fold(0, |m, (i, _)| m | (1 << i))
}

/// Dihedral chord permutations mapping `allowed` onto itself.
fn stabilizer(perms: &[Vec<usize>], allowed: u128) -> Vec<Vec<usize>> {
    perms.iter().filter(|p| permute_mask(allowed, p) == allowed).cloned().collect()
}

/// One coloring per class of 2-colorings under rotation, reflection and
/// color swap (smallest mask in each class).
fn coloring_representatives(n: usize) -> Vec<Vec<u8>> {
    let full = (1u32 << n) - 1;
    let image = |m: u32, shift: usize, reflect: bool| {
        (0..n).fold(0u32, |acc, v| acc | ((m >> v & 1) << dihedral_image(n, v, shift, reflect)))
    };
    (0..=full)
        .filter(|&m| {
            [false, true].into_iter().all(|reflect| {
                (0..n).all(|shift| {
                    let img = image(m, shift, reflect);
                    img >= m && (img ^ full) >= m
                })
            })
        })
        .map(|m| (0..n).map(|v| (m >> v & 1) as u8).collect())
        .collect()
}

fn alternating(n: usize) -> Vec<u8> {
    (0..n).map(|v| (v % 2) as u8).collect()
}

fn consecutive(n: usize, a: usize) -> Vec<u8> {
    (0..n).map(|v| u8::from(v >= a)).collect()
}

/// Colorings searched for `mode`; `None` stands for the uncolored general case.
fn mode_colorings(n: usize, mode: SearchMode) -> Result<Vec<Option<Vec<u8>>>> {
    Ok(match mode {
        SearchMode::General => vec![None],
        SearchMode::BipartiteAlternating => {
            if !n.is_multiple_of(2) {
                return Err(Error::invalid(format!("alternating mode needs even n, got {n}")));
            }
            vec![Some(alternating(n))]
        }
        SearchMode::BipartiteConsecutive => (1..=n / 2).map(|a| Some(consecutive(n, a))).collect(),
        SearchMode::BipartiteFree => coloring_representatives(n).into_iter().map(Some).collect(),
    })
}

/// A coloring under which `g` satisfies the mode's constraint.
fn warm_start_coloring(g: &ConvexGraph, mode: SearchMode) -> Option<Option<Vec<u8>>> {
    let n = g.n();
    let proper = |c: &[u8]| g.edges().iter().all(|e| c[e.a()] != c[e.b()]);
    match mode {
        SearchMode::General => Some(g.coloring().map(<[u8]>::to_vec)),
        SearchMode::BipartiteAlternating => {
            let c = alternating(n);
            proper(&c).then_some(Some(c))
        }
        SearchMode::BipartiteConsecutive => (1..n).map(|a| consecutive(n, a)).find(|c| proper(c)).map(Some),
        SearchMode::BipartiteFree => {
            if let Some(c) = g.coloring().filter(|c| proper(c)) {
                return Some(Some(c.to_vec()));
            }
            crate::geometry::bipartition(g).map(Some)
        }
    }
}

/// Exact maximum number of edges of an outer k-planar graph on `n <= 12`
/// convex points under `mode`, with default options.
pub fn max_edges(n: usize, k: usize, mode: SearchMode) -> Result<SearchResult> {
    max_edges_with(n, k, mode, &SearchOptions::default())
}

pub fn max_edges_with(n: usize, k: usize, mode: SearchMode, opts: &SearchOptions) -> Result<SearchResult> {
    if !(3..=MAX_N).contains(&n) {
        return Err(Error::OverBudget {
            what: "max_edges",
            size: n,
            limit: MAX_N,
        });
    }
    let colorings = mode_colorings(n, mode)?;
    let t = ChordTable::new(n);
    let perms = t.dihedral_perms();
    let all: u128 = (1u128 << t.chords.len()) - 1;

    let mut best = 0usize;
    let mut best_graph: Option<ConvexGraph> = None;
    if let Some(w) = &opts.warm_start {
        if w.n() != n {
            return Err(Error::invalid(format!("warm start has n = {}, expected {n}", w.n())));
        }
        if !is_outer_k_planar(w, k) {
            return Err(Error::invalid(format!("warm start is not outer {k}-planar")));
        }
        let col = warm_start_coloring(w, mode)
            .ok_or_else(|| Error::invalid("warm start violates the coloring constraint of the mode"))?;
        let g = w.clone().without_coloring();
        let g = match col {
            Some(c) if mode.is_bipartite() => g.with_coloring(c)?,
            _ => g,
        };
        best = g.edge_count();
        best_graph = Some(g);
    }

    let cap = if opts.theorem_bounds {
        theorem_cap(n, k, mode.is_bipartite()).unwrap_or(usize::MAX)
    } else {
        usize::MAX
    };
    let mut nodes = 0u64;
    let mut exhausted = false;
    for coloring in colorings {
        let allowed = coloring.as_deref().map_or(all, |c| coloring_mask(&t, c));
        let symmetries = stabilizer(&perms, allowed);
        let mut solver = Solver {
            t: &t,
            k,
            order: Vec::new(),
            cap,
            budget: opts.node_budget.saturating_sub(nodes),
            nodes: 0,
            exhausted: false,
            best,
            best_mask: None,
        };
        solver.run(allowed, &symmetries);
        nodes += solver.nodes;
        if let Some(mask) = solver.best_mask {
            best = solver.best;
            let g = t.graph(mask);
            best_graph = Some(match &coloring {
                Some(c) => g.with_coloring(c.clone())?,
                None => g,
            });
        }
        if solver.exhausted {
            exhausted = true;
            break;
        }
        if best >= cap {
            break;
        }
    }

    let witness = match best_graph {
        Some(g) => g,
        None => ConvexGraph::empty(n)?,
    };
    debug_assert!(is_outer_k_planar(&witness, k));
    debug_assert!(!mode.is_bipartite() || witness.edge_count() == 0 || is_bipartite(&witness));
    let result = SearchResult {
        max_edges: witness.edge_count(),
        witness,
        nodes_explored: nodes,
        proven_optimal: !exhausted,
        settings: SearchSettings { n, k, mode },
    };
    if exhausted {
        return Err(Error::BudgetExceeded {
            budget: opts.node_budget,
            incumbent: Box::new(result),
        });
    }
    Ok(result)
}

/// Lexicographically least sorted edge list over the `2n` rotations and
/// reflections of the vertex labels.
pub fn canonical_form(g: &ConvexGraph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut best: Option<Vec<(usize, usize)>> = None;
    for reflect in [false, true] {
        for shift in 0..n {
            let mut es: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|e| e.map_dihedral(n, shift, reflect).endpoints())
                .collect();
            es.sort_unstable();
            if best.as_ref().is_none_or(|b| es < *b) {
                best = Some(es);
            }
        }
    }
    best.unwrap_or_default()
}

/// Floor of the smallest proven closed-form upper bound at `(n, k)`.
pub fn proven_cap(n: usize, k: usize, bipartite: bool) -> Option<usize> {
    theorem_cap(n, k, bipartite)
}
