//! Generators for the explicit extremal constructions: concatenation along a
//! hull edge, chains of convex cliques, alternating complete bipartite graphs
//! and their chains, and the two-page outercopy multigraph.

use crate::error::{Error, Result};
use crate::geometry::{crossing_counts, hull_edges, Chord, ConvexGraph};

/// Orientation `(s, t)` of a hull edge with `t = s + 1 (mod n)`.
fn orient_hull(e: Chord) -> (usize, usize) {
    if e.b() == e.a() + 1 {
        (e.a(), e.b())
    } else {
        (e.b(), e.a())
    }
}

fn require_hull(g: &ConvexGraph, e: Chord, which: &str) -> Result<()> {
    e.validate(g.n())?;
    if !hull_edges(g).contains(&e) {
        return Err(Error::invalid(format!("{which} edge {e} is not a hull edge of its graph")));
    }
    Ok(())
}

/// Glues `g2` onto `g1` by identifying hull edge `e2` of `g2` with hull edge
/// `e1` of `g1`.
///
/// The vertices of `g2` other than the endpoints of `e2` are inserted as a
/// contiguous arc between the endpoints of `e1`; the smaller endpoint of `e2`
/// is identified with the smaller endpoint of `e1`. The shared edge is kept
/// once. If both inputs carry a coloring, the coloring of `g2` is flipped when
/// needed so that the identified endpoints agree; inconsistent colorings are
/// rejected. Crossing counts of all edges are preserved since the two halves
/// are separated by the identified edge.
pub fn concatenate(g1: &ConvexGraph, e1: Chord, g2: &ConvexGraph, e2: Chord) -> Result<ConvexGraph> {
    require_hull(g1, e1, "first")?;
    require_hull(g2, e2, "second")?;
    let (n1, n2) = (g1.n(), g2.n());
    let (s, t) = orient_hull(e1);
    // lower endpoint to lower endpoint
    let (img_s, img_t) = if s == e1.a() { (e2.a(), e2.b()) } else { (e2.b(), e2.a()) };

    let inserted = n2 - 2;
    let n = n1 + inserted;
    let relabel1 = |v: usize| if v <= s { v } else { v + inserted };

    let mut relabel2 = vec![usize::MAX; n2];
    relabel2[img_s] = s;
    relabel2[img_t] = relabel1(t);
    // walk g2's boundary from img_s away from img_t
    let step_back = img_t == (img_s + 1) % n2;
    let mut v = img_s;
    for i in 0..inserted {
        v = if step_back { (v + n2 - 1) % n2 } else { (v + 1) % n2 };
        relabel2[v] = s + 1 + i;
    }

    let mut edges: Vec<Chord> = g1
        .edges()
        .iter()
        .map(|e| Chord::new(relabel1(e.a()), relabel1(e.b())))
        .chain(g2.edges().iter().map(|e| Chord::new(relabel2[e.a()], relabel2[e.b()])))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let g = ConvexGraph::from_sorted_unchecked(n, edges);

    match (g1.coloring(), g2.coloring()) {
        (Some(c1), Some(c2)) => {
            let flip = if c2[img_s] == c1[s] && c2[img_t] == c1[t] {
                0
            } else if c2[img_s] != c1[s] && c2[img_t] != c1[t] {
                1
            } else {
                return Err(Error::invalid(
                    "colorings disagree on the identified edge under both orientations",
                ));
            };
            let mut col = vec![0u8; n];
            for (v, &c) in c1.iter().enumerate() {
                col[relabel1(v)] = c;
            }
            for (v, &c) in c2.iter().enumerate() {
                col[relabel2[v]] = c ^ flip;
            }
            g.with_coloring(col)
        }
        _ => Ok(g),
    }
}

/// Appends copies of `block` one after another, each glued to a hull edge of
/// the previous copy, starting from hull edge `{0,1}` of the block.
fn chain_of(block: &ConvexGraph, copies: usize) -> Result<ConvexGraph> {
    let x = block.n();
    let mut g = block.clone();
    // the newest copy occupies s, s+1, ..., s+x-1 after gluing at {s, s+1}
    for s in (x - 2..).take(copies - 1) {
        g = concatenate(&g, Chord::new(s, s + 1), block, Chord::new(0, 1))?;
    }
    Ok(g)
}

/// `K_x || K_x || ... || K_x` with `blocks` copies.
///
/// `n = blocks*(x-2) + 2` and the edge count is `blocks*C(x,2) - (blocks-1)`.
/// For even `x` the result is outer `((x-2)/2)^2`-planar.
pub fn kx_chain(x: usize, blocks: usize) -> Result<ConvexGraph> {
    if x < 3 {
        return Err(Error::invalid(format!("clique size must be at least 3, got {x}")));
    }
    if blocks < 1 {
        return Err(Error::invalid("need at least one block"));
    }
    chain_of(&ConvexGraph::complete(x)?, blocks)
}

/// `K_{x,x}` on `2x` points whose colors alternate around the hull.
pub fn kxx_alternating(x: usize) -> Result<ConvexGraph> {
    if x < 1 {
        return Err(Error::invalid("x must be at least 1"));
    }
    let n = 2 * x;
    let edges = (0..n).flat_map(|a| (a + 1..n).filter(move |b| (b - a) % 2 == 1).map(move |b| (a, b)));
    ConvexGraph::from_edges(n, edges)?.with_coloring((0..n).map(|v| (v % 2) as u8).collect())
}

/// The largest per-edge crossing count of the alternating `K_{x,x}`.
pub fn kxx_alternating_max_crossing(x: usize) -> usize {
    let half = x.saturating_sub(1);
    2 * (half / 2) * half.div_ceil(2)
}

/// Chain of `l` alternating `K_{x,x}` blocks glued along bichromatic hull
/// edges; the result carries a proper 2-coloring.
pub fn kxx_chain(x: usize, l: usize) -> Result<ConvexGraph> {
    if x < 2 {
        return Err(Error::invalid(format!("x must be at least 2, got {x}")));
    }
    if l < 1 {
        return Err(Error::invalid("need at least one block"));
    }
    chain_of(&kxx_alternating(x)?, l)
}

/// Two-page multigraph: every edge of the base drawn inside the hull, plus a
/// second copy of every diagonal drawn outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterCopyGraph {
    base: ConvexGraph,
    outside: Vec<Chord>,
}

pub fn outercopy(g: &ConvexGraph) -> OuterCopyGraph {
    let outside = g.edges().iter().copied().filter(|e| !e.is_hull(g.n())).collect();
    OuterCopyGraph {
        base: g.clone(),
        outside,
    }
}

impl OuterCopyGraph {
    pub fn base(&self) -> &ConvexGraph {
        &self.base
    }

    pub fn inside_edges(&self) -> &[Chord] {
        self.base.edges()
    }

    pub fn outside_edges(&self) -> &[Chord] {
        &self.outside
    }

    pub fn edge_count(&self) -> usize {
        self.base.edge_count() + self.outside.len()
    }

    /// Largest number of parallel copies of any vertex pair.
    pub fn max_multiplicity(&self) -> usize {
        if !self.outside.is_empty() {
            2
        } else {
            usize::from(self.base.edge_count() > 0)
        }
    }

    /// Crossing counts for the inside and outside pages. Edges on the same
    /// page cross iff their endpoints interleave; edges on different pages
    /// never cross.
    pub fn crossing_counts(&self) -> (Vec<usize>, Vec<usize>) {
        let inside = crossing_counts(&self.base);
        let outer = ConvexGraph::from_sorted_unchecked(self.base.n(), self.outside.clone());
        (inside, crossing_counts(&outer))
    }

    pub fn max_crossing(&self) -> usize {
        let (a, b) = self.crossing_counts();
        a.into_iter().chain(b).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pairs = |es: &[Chord]| es.iter().map(|e| [e.a(), e.b()]).collect::<Vec<_>>();
        serde_json::json!({
            "n": self.base.n(),
            "inside_edges": pairs(self.inside_edges()),
            "outside_edges": pairs(&self.outside),
            "edge_count": self.edge_count(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{is_bipartite, is_outer_k_planar, max_crossing};

    #[test]
    fn triangle_pair_is_square_with_diagonal() {
        let t = ConvexGraph::complete(3).unwrap();
        let g = concatenate(&t, Chord::new(1, 2), &t, Chord::new(0, 1)).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 5);
        assert!(is_outer_k_planar(&g, 0));
    }

    #[test]
    fn k4_pair() {
        let k4 = ConvexGraph::complete(4).unwrap();
        let g = concatenate(&k4, Chord::new(0, 3), &k4, Chord::new(2, 3)).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 11);
        assert_eq!(max_crossing(&g), 1);
    }

    #[test]
    fn triangle_chain_counts() {
        for b in 1..8 {
            let g = kx_chain(3, b).unwrap();
            assert_eq!(g.n(), b + 2);
            assert_eq!(g.edge_count(), 2 * b + 1);
            assert_eq!(max_crossing(&g), 0);
        }
    }

    #[test]
    fn concatenate_rejects_diagonal() {
        let k4 = ConvexGraph::complete(4).unwrap();
        assert!(concatenate(&k4, Chord::new(0, 2), &k4, Chord::new(0, 1)).is_err());
        assert!(concatenate(&k4, Chord::new(0, 1), &k4, Chord::new(1, 3)).is_err());
        let c = ConvexGraph::from_edges(4, [(0, 2)]).unwrap();
        // {0,1} is a hull position but not an edge of the graph
        assert!(concatenate(&k4, Chord::new(0, 1), &c, Chord::new(0, 1)).is_err());
    }

    #[test]
    fn kx_chain_examples() {
        let g = kx_chain(4, 1).unwrap();
        assert_eq!((g.n(), g.edge_count(), max_crossing(&g)), (4, 6, 1));
        let g = kx_chain(4, 3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 16));
        assert_eq!(2 * g.edge_count(), 5 * g.n() - 8);
        let g = kx_chain(6, 2).unwrap();
        assert_eq!((g.n(), g.edge_count(), max_crossing(&g)), (10, 29, 4));
    }

    #[test]
    fn kxx_examples() {
        let g = kxx_alternating(1).unwrap();
        assert_eq!((g.edge_count(), max_crossing(&g)), (1, 0));
        let g = kxx_alternating(3).unwrap();
        assert_eq!((g.edge_count(), max_crossing(&g)), (9, 2));
        let g = kxx_alternating(4).unwrap();
        assert_eq!((g.edge_count(), max_crossing(&g)), (16, 4));

        let g = kxx_chain(3, 4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (18, 33));
        assert!(g.coloring_is_proper() && is_bipartite(&g));
        assert!(is_outer_k_planar(&g, 2));
        let g = kxx_chain(2, 5).unwrap();
        assert_eq!((g.n(), g.edge_count(), max_crossing(&g)), (12, 16, 0));
    }

    #[test]
    fn outercopy_examples() {
        let oc = outercopy(&ConvexGraph::cycle(5).unwrap());
        assert!(oc.outside_edges().is_empty());
        assert_eq!(oc.edge_count(), 5);
        let oc = outercopy(&ConvexGraph::complete(4).unwrap());
        assert_eq!(oc.edge_count(), 8);
        assert_eq!(oc.max_multiplicity(), 2);
        let oc = outercopy(&kx_chain(4, 2).unwrap());
        assert!(oc.max_crossing() <= 1);
    }

    #[test]
    fn coloring_conflict_is_rejected() {
        let a = ConvexGraph::from_edges(3, [(0, 1)]).unwrap().with_coloring(vec![0, 1, 0]).unwrap();
        let b = ConvexGraph::from_edges(3, [(0, 1)]).unwrap().with_coloring(vec![0, 0, 1]).unwrap();
        assert!(concatenate(&a, Chord::new(0, 1), &b, Chord::new(0, 1)).is_err());
    }
}
