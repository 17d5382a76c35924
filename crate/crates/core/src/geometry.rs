//! Combinatorial model of straight-line drawings on points in convex position.
//!
//! Vertices are the cyclic positions `0..n`; no coordinates are stored. Two
//! chords of a convex polygon cross exactly when their endpoints strictly
//! interleave in cyclic order, so every geometric question here reduces to
//! integer comparisons.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    a: usize,
    b: usize,
}

impl Chord {
    /// Normalizes the endpoint order. Use [`Chord::checked`] to also validate
    /// against a vertex count.
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Chord { a: u, b: v }
        } else {
            Chord { a: v, b: u }
        }
    }

    pub fn checked(n: usize, u: usize, v: usize) -> Result<Self> {
        let c = Chord::new(u, v);
        c.validate(n)?;
        Ok(c)
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.b >= n {
            return Err(Error::VertexOutOfRange { vertex: self.b, n });
        }
        if self.a == self.b {
            return Err(Error::invalid(format!("loop at vertex {}", self.a)));
        }
        Ok(())
    }

    pub fn shares_endpoint(&self, other: &Chord) -> bool {
        self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b
    }

    /// Crossing predicate without range checks.
    #[inline]
    pub fn crosses(&self, other: &Chord) -> bool {
        let (a, b, c, d) = (self.a, self.b, other.a, other.b);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    /// Number of vertices split off on the smaller side.
    #[inline]
    pub fn length(&self, n: usize) -> usize {
        let d = self.b - self.a;
        (d - 1).min(n - d - 1)
    }

    pub fn is_hull(&self, n: usize) -> bool {
        self.length(n) == 0
    }

    /// Image under the dihedral map `v -> (sign * v + shift) mod n`.
    pub fn map_dihedral(&self, n: usize, shift: usize, reflect: bool) -> Chord {
        let f = |v: usize| dihedral_image(n, v, shift, reflect);
        Chord::new(f(self.a), f(self.b))
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

pub(crate) fn dihedral_image(n: usize, v: usize, shift: usize, reflect: bool) -> usize {
    if reflect {
        (n - v % n + shift) % n
    } else {
        (v + shift) % n
    }
}

/// Chords whose endpoints interleave in cyclic order cross; chords sharing an
/// endpoint never do.
pub fn chords_cross(n: usize, e1: Chord, e2: Chord) -> Result<bool> {
    e1.validate(n)?;
    e2.validate(n)?;
    Ok(e1.crosses(&e2))
}

pub fn chord_length(n: usize, e: Chord) -> Result<usize> {
    e.validate(n)?;
    Ok(e.length(n))
}

/// `n` labelled points in convex position plus a simple edge set and an
/// optional vertex 2-coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexGraph {
    n: usize,
    edges: Vec<Chord>,
    coloring: Option<Vec<u8>>,
}

impl ConvexGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("need at least 2 vertices, got {n}")));
        }
        Ok(ConvexGraph {
            n,
            edges: Vec::new(),
            coloring: None,
        })
    }

    /// Builds a graph, rejecting out-of-range endpoints, loops and duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = ConvexGraph::empty(n)?;
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            let c = Chord::checked(n, u, v)?;
            if !set.insert(c) {
                return Err(Error::invalid(format!("duplicate edge {c}")));
            }
        }
        g.edges = set.into_iter().collect();
        Ok(g)
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Chord>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        ConvexGraph {
            n,
            edges,
            coloring: None,
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        ConvexGraph::from_edges(n, edges)
    }

    /// The convex hull polygon `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("a polygon needs 3 vertices, got {n}")));
        }
        ConvexGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Attaches a vertex 2-coloring. Colors must be 0 or 1; edges are not
    /// required to be bichromatic (see [`ConvexGraph::coloring_is_proper`]).
    pub fn with_coloring(mut self, coloring: Vec<u8>) -> Result<Self> {
        if coloring.len() != self.n {
            return Err(Error::invalid(format!(
                "coloring has {} entries for {} vertices",
                coloring.len(),
                self.n
            )));
        }
        if let Some(c) = coloring.iter().find(|&&c| c > 1) {
            return Err(Error::invalid(format!("color {c} is not 0 or 1")));
        }
        self.coloring = Some(coloring);
        Ok(self)
    }

    pub fn without_coloring(mut self) -> Self {
        self.coloring = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges sorted lexicographically.
    pub fn edges(&self) -> &[Chord] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn coloring(&self) -> Option<&[u8]> {
        self.coloring.as_deref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&Chord::new(u, v)).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.a] += 1;
            deg[e.b] += 1;
        }
        deg
    }

    /// True when a coloring is attached and every edge is bichromatic.
    pub fn coloring_is_proper(&self) -> bool {
        match &self.coloring {
            Some(c) => self.edges.iter().all(|e| c[e.a] != c[e.b]),
            None => false,
        }
    }

    /// Relabels vertices by `v -> perm[v]`; the coloring follows its vertices.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from n"));
        }
        let mut g = ConvexGraph::from_edges(self.n, self.edges.iter().map(|e| (perm[e.a], perm[e.b])))?;
        if let Some(c) = &self.coloring {
            let mut nc = vec![0; self.n];
            for (v, &col) in c.iter().enumerate() {
                nc[perm[v]] = col;
            }
            g.coloring = Some(nc);
        }
        Ok(g)
    }

    /// Image under a rotation by `shift`, preceded by a reflection if asked.
    pub fn dihedral(&self, shift: usize, reflect: bool) -> Self {
        let perm: Vec<usize> = (0..self.n)
            .map(|v| dihedral_image(self.n, v, shift, reflect))
            .collect();
        self.relabel(&perm).expect("dihedral maps are permutations")
    }

    /// Subgraph induced by the vertices in `keep`, relabelled in cyclic order.
    pub fn induced(&self, keep: &[usize]) -> Result<Self> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.a] != usize::MAX && index[e.b] != usize::MAX)
            .map(|e| (index[e.a], index[e.b]));
        ConvexGraph::from_edges(keep.len(), edges)
    }
}

/// Per-edge crossing counts, aligned with [`ConvexGraph::edges`].
///
/// An edge `{a,b}` is crossed by exactly the edges with one endpoint strictly
/// inside `(a,b)` and the other strictly outside `[a,b]`; both counts come from
/// a 2D prefix sum over the adjacency matrix, so this runs in `O(n^2 + m)`.
pub fn crossing_counts(g: &ConvexGraph) -> Vec<usize> {
    let n = g.n;
    // prefix[i][j] = number of ordered pairs (u,v) with u < i, v < j, {u,v} in E
    let w = n + 1;
    let mut prefix = vec![0u32; w * w];
    let mut adj = vec![0u32; n * n];
    for e in &g.edges {
        adj[e.a * n + e.b] = 1;
        adj[e.b * n + e.a] = 1;
    }
    for i in 0..n {
        for j in 0..n {
            prefix[(i + 1) * w + j + 1] =
                adj[i * n + j] + prefix[i * w + j + 1] + prefix[(i + 1) * w + j] - prefix[i * w + j];
        }
    }
    let rect = |r0: usize, r1: usize, c0: usize, c1: usize| -> u32 {
        // rows [r0, r1), cols [c0, c1)
        if r0 >= r1 || c0 >= c1 {
            return 0;
        }
        prefix[r1 * w + c1] + prefix[r0 * w + c0] - prefix[r0 * w + c1] - prefix[r1 * w + c0]
    };
    g.edges
        .iter()
        .map(|e| {
            let inside = (e.a + 1, e.b);
            (rect(inside.0, inside.1, 0, e.a) + rect(inside.0, inside.1, e.b + 1, n)) as usize
        })
        .collect()
}

pub fn max_crossing(g: &ConvexGraph) -> usize {
    crossing_counts(g).into_iter().max().unwrap_or(0)
}

/// Number of unordered crossing pairs.
pub fn crossing_pairs(g: &ConvexGraph) -> usize {
    crossing_counts(g).iter().sum::<usize>() / 2
}

pub fn is_outer_k_planar(g: &ConvexGraph, k: usize) -> bool {
    max_crossing(g) <= k
}

pub fn hull_edges(g: &ConvexGraph) -> Vec<Chord> {
    g.edges.iter().copied().filter(|e| e.is_hull(g.n)).collect()
}

/// Repeatedly removes a minimum-degree vertex (smallest index on ties).
/// Returns the removal order and the largest degree seen at removal time.
pub fn degeneracy_order(g: &ConvexGraph) -> (Vec<usize>, usize) {
    let adj = g.adjacency();
    let mut deg = g.degrees();
    let mut removed = vec![false; g.n];
    let mut order = Vec::with_capacity(g.n);
    let mut degeneracy = 0;
    for _ in 0..g.n {
        let v = (0..g.n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        degeneracy = degeneracy.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for &u in &adj[v] {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    (order, degeneracy)
}

/// First-fit coloring along the reverse degeneracy order. Uses at most
/// `degeneracy + 1` colors.
pub fn greedy_color(g: &ConvexGraph) -> (Vec<usize>, usize) {
    let adj = g.adjacency();
    let (order, _) = degeneracy_order(g);
    let mut color = vec![usize::MAX; g.n];
    let mut used = Vec::new();
    for &v in order.iter().rev() {
        used.clear();
        used.extend(adj[v].iter().map(|&u| color[u]).filter(|&c| c != usize::MAX));
        used.sort_unstable();
        used.dedup();
        let c = used
            .iter()
            .enumerate()
            .find(|&(i, &c)| i != c)
            .map(|(i, _)| i)
            .unwrap_or(used.len());
        color[v] = c;
    }
    let count = color.iter().map(|&c| c + 1).max().unwrap_or(0);
    (color, count)
}

/// A proper 2-coloring if the graph is bipartite (BFS; components start at
/// their smallest vertex with color 0).
pub fn bipartition(g: &ConvexGraph) -> Option<Vec<u8>> {
    let adj = g.adjacency();
    let mut color = vec![u8::MAX; g.n];
    let mut queue = VecDeque::new();
    for s in 0..g.n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

pub fn is_bipartite(g: &ConvexGraph) -> bool {
    bipartition(g).is_some()
}

/// Wire form: `{"n": int, "edges": [[a,b],...], "coloring": [0|1,...]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coloring: Option<Vec<u8>>,
}

impl Serialize for ConvexGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|e| [e.a, e.b]).collect(),
            coloring: self.coloring.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConvexGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        let g = ConvexGraph::from_edges(raw.n, raw.edges.iter().map(|e| (e[0], e[1])))
            .map_err(serde::de::Error::custom)?;
        match raw.coloring {
            Some(c) => g.with_coloring(c).map_err(serde::de::Error::custom),
            None => Ok(g),
        }
    }
}

impl ConvexGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::invalid(format!("graph JSON: {e}")))
    }
}
