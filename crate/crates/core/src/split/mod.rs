//! Split graphs of cornerations.
//!
//! The split graph `S(L, K)` has the corners of `L` as vertices. Two
//! corners sharing a map edge are joined by an old edge, and every corner of
//! `K` joins the two corners of `L` containing its darts by a new edge.

mod expect;
mod graph6;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::corn::{all_j_corners, j_complement, CornError, Corner, Corneration, Width};
use crate::flagmap::{EdgeId, FlagMap, VertexId};
use crate::symmetry::SymGroup;

pub use expect::{cubic_filter, expectation, measure, CubicLine, CubicReport, Expectation, Measurement};
pub use graph6::{from_graph6, graph6, sparse6, Graph6Error};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SplitError {
    #[error("corner {0} of K is also in L")]
    KIntersectsL(Corner),
    #[error("{kind} needs width {allowed}, got j = {j} at valence {q}")]
    WidthOutOfRange {
        kind: SplitKind,
        allowed: &'static str,
        j: usize,
        q: usize,
    },
    #[error("operation needs a uniform corneration on a map of uniform valence")]
    NotUniform,
    #[error("the group does not preserve K")]
    KNotInvariant,
    #[error(transparent)]
    Corneration(#[from] CornError),
}

/// The four named choices of `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitKind {
    /// The `j`-complement of `L`.
    A,
    /// All wedges.
    B,
    /// Interior boundary wedges of corners of `L`.
    Ci,
    /// Exterior boundary wedges of corners of `L`.
    Cx,
}

impl SplitKind {
    pub const ALL: [SplitKind; 4] = [SplitKind::A, SplitKind::B, SplitKind::Ci, SplitKind::Cx];
}

impl fmt::Display for SplitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SplitKind::A => "A",
            SplitKind::B => "B",
            SplitKind::Ci => "Ci",
            SplitKind::Cx => "Cx",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for SplitKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(SplitKind::A),
            "B" | "b" => Ok(SplitKind::B),
            "Ci" | "ci" => Ok(SplitKind::Ci),
            "Cx" | "cx" => Ok(SplitKind::Cx),
            _ => Err(format!("unknown split kind {s:?}; expected A, B, Ci or Cx")),
        }
    }
}

/// Where an edge of a split graph comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeOrigin {
    /// The map edge shared by the two corners.
    Old(EdgeId),
    /// The corner of `K` joining them.
    New(Corner),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitGraph {
    corners: Vec<Corner>,
    k: Vec<Corner>,
    // Keyed by vertex pairs `(a, b)` with `a < b`.
    edges: BTreeMap<(usize, usize), Vec<EdgeOrigin>>,
}

impl SplitGraph {
    /// The vertices: corners of `L` in sorted order.
    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    /// The corner set `K` the graph was built from.
    pub fn k(&self) -> &[Corner] {
        &self.k
    }

    pub fn n_vertices(&self) -> usize {
        self.corners.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges with every origin they arise from.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &[EdgeOrigin])> {
        self.edges.iter().map(|(&(a, b), o)| (a, b, &o[..]))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains_key(&(a.min(b), a.max(b)))
    }

    pub fn neighbours(&self, x: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == x {
                    Some(b)
                } else if b == x {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_vertices()];
        for &(a, b) in self.edges.keys() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// The common degree, if the graph is regular.
    pub fn valence(&self) -> Option<usize> {
        let deg = self.degrees();
        match deg.first() {
            Some(&d) if deg.iter().all(|&x| x == d) => Some(d),
            _ => None,
        }
    }

    fn components_of(&self, nodes: &[usize]) -> usize {
        let set: HashSet<usize> = nodes.iter().copied().collect();
        let mut seen: HashSet<usize> = HashSet::new();
        let mut count = 0;
        for &s in nodes {
            if !seen.insert(s) {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for y in self.neighbours(x) {
                    if set.contains(&y) && seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.n_vertices()).collect();
        self.components_of(&all) <= 1
    }

    /// Adjacency lists, for export.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_vertices()];
        for &(a, b) in self.edges.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// Builds `S(L, K)`. An old and a new edge on the same pair of corners are
/// kept as one edge with both origins.
pub fn split(map: &FlagMap, l: &Corneration, k: &[Corner]) -> Result<SplitGraph, SplitError> {
    let mut k: Vec<Corner> = k.to_vec();
    k.sort();
    k.dedup();
    if let Some(c) = k.iter().find(|c| l.contains(c)) {
        return Err(SplitError::KIntersectsL(*c));
    }
    let mut edges: BTreeMap<(usize, usize), Vec<EdgeOrigin>> = BTreeMap::new();
    let mut add = |a: usize, b: usize, o: EdgeOrigin| {
        debug_assert_ne!(a, b);
        edges.entry((a.min(b), a.max(b))).or_default().push(o);
    };
    for e in map.edges() {
        let d = map.dart_of(e.0);
        let d2 = map.opposite_dart(d);
        add(l.index_of(d), l.index_of(d2), EdgeOrigin::Old(e));
    }
    for c in &k {
        let (d1, d2) = c.darts();
        add(l.index_of(d1), l.index_of(d2), EdgeOrigin::New(*c));
    }
    for o in edges.values_mut() {
        o.sort();
    }
    Ok(SplitGraph {
        corners: l.corners().to_vec(),
        k,
        edges,
    })
}

fn uniform(map: &FlagMap, l: &Corneration) -> Result<(usize, usize), SplitError> {
    let q = map.uniform_valence().ok_or(SplitError::NotUniform)?;
    match l.width() {
        Width::Uniform(j) => Ok((q, j)),
        Width::Mixed => Err(SplitError::NotUniform),
    }
}

/// The corner set `K` of a named construction.
pub fn k_set(map: &FlagMap, l: &Corneration, kind: SplitKind) -> Result<Vec<Corner>, SplitError> {
    let (q, j) = uniform(map, l)?;
    let range = |ok: bool, allowed: &'static str| {
        if ok {
            Ok(())
        } else {
            Err(SplitError::WidthOutOfRange { kind, allowed, j, q })
        }
    };
    let wedge = |w| {
        let (a, b) = map.wedge_darts(w);
        Corner::new(map, a, b)
    };
    let mut k = match kind {
        SplitKind::A => {
            range(2 * j < q, "j < q/2")?;
            j_complement(map, l)?.corners().to_vec()
        }
        SplitKind::B => {
            range(2 <= j && 2 * j <= q, "2 <= j <= q/2")?;
            all_j_corners(map, 1)?
        }
        SplitKind::Ci | SplitKind::Cx => {
            range(2 <= j && 2 * j < q, "2 <= j < q/2")?;
            let mut out = Vec::new();
            for c in l.corners() {
                let ws = if kind == SplitKind::Ci {
                    c.interior_boundary_wedges(map)?
                } else {
                    c.exterior_boundary_wedges(map)?
                };
                for w in ws {
                    out.push(wedge(w)?);
                }
            }
            out
        }
    };
    k.sort();
    k.dedup();
    Ok(k)
}

/// `S(L, K)` for one of the named choices of `K`.
pub fn split_named(map: &FlagMap, l: &Corneration, kind: SplitKind) -> Result<SplitGraph, SplitError> {
    split(map, l, &k_set(map, l, kind)?)
}

pub fn graph_a(map: &FlagMap, l: &Corneration) -> Result<SplitGraph, SplitError> {
    split_named(map, l, SplitKind::A)
}

pub fn graph_b(map: &FlagMap, l: &Corneration) -> Result<SplitGraph, SplitError> {
    split_named(map, l, SplitKind::B)
}

pub fn graph_ci(map: &FlagMap, l: &Corneration) -> Result<SplitGraph, SplitError> {
    split_named(map, l, SplitKind::Ci)
}

pub fn graph_cx(map: &FlagMap, l: &Corneration) -> Result<SplitGraph, SplitError> {
    split_named(map, l, SplitKind::Cx)
}

/// Wedges that are an interior boundary wedge of one corner of `L` and an
/// exterior boundary wedge of another.
pub fn boundary_overlap(map: &FlagMap, l: &Corneration) -> Result<Vec<Corner>, SplitError> {
    let ki: BTreeSet<Corner> = k_set(map, l, SplitKind::Ci)?.into_iter().collect();
    Ok(k_set(map, l, SplitKind::Cx)?
        .into_iter()
        .filter(|c| ki.contains(c))
        .collect())
}

/// Checks that the corners of `L` at every map vertex induce a connected
/// subgraph; otherwise returns the first vertex where they do not.
pub fn is_locally_connected(map: &FlagMap, s: &SplitGraph) -> Result<(), VertexId> {
    let mut at: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (i, c) in s.corners.iter().enumerate() {
        at.entry(c.vertex()).or_default().push(i);
    }
    for v in map.vertices() {
        let nodes = at.get(&v).map(Vec::as_slice).unwrap_or(&[]);
        if s.components_of(nodes) > 1 {
            return Err(v);
        }
    }
    Ok(())
}

/// Checks that `g` preserves `K`, acts on the split graph by automorphisms
/// and is transitive on its vertices.
pub fn verify_vertex_transitive(map: &FlagMap, s: &SplitGraph, g: &SymGroup) -> Result<bool, SplitError> {
    let index: BTreeMap<Corner, usize> = s.corners.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let k: BTreeSet<Corner> = s.k.iter().copied().collect();
    for &gi in g.generators() {
        let sym = g.element(gi);
        if s.k.iter().any(|c| !k.contains(&c.image(map, sym))) {
            return Err(SplitError::KNotInvariant);
        }
        let mut image = Vec::with_capacity(s.corners.len());
        for c in &s.corners {
            match index.get(&c.image(map, sym)) {
                Some(&i) => image.push(i),
                None => return Ok(false),
            }
        }
        if s.edges.keys().any(|&(a, b)| !s.has_edge(image[a], image[b])) {
            return Ok(false);
        }
    }
    let labels = g.orbit_labels_by(s.corners.len(), |sym, i| index[&s.corners[i].image(map, sym)]);
    Ok(labels.iter().all(|&l| l == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build;
    use crate::corn::{aut_of_corneration, enumerate_transitive_cornerations};
    use crate::symmetry::automorphism_group;

    fn straight(map: &FlagMap) -> Corneration {
        let q = map.uniform_valence().unwrap();
        Corneration::new(map, all_j_corners(map, q / 2).unwrap()).unwrap()
    }

    #[test]
    fn old_edges_only() {
        let m = build::torus_grid(4, 4).unwrap();
        let l = straight(&m);
        let s = split(&m, &l, &[]).unwrap();
        assert_eq!(s.n_vertices(), 32);
        assert_eq!(s.n_edges(), 32);
        assert_eq!(s.valence(), Some(2));
        assert!(s.edges().all(|(_, _, o)| matches!(o, [EdgeOrigin::Old(_)])));
    }

    #[test]
    fn straight_b_on_valence_four() {
        let m = build::torus_grid(4, 4).unwrap();
        let s = graph_b(&m, &straight(&m)).unwrap();
        assert_eq!(s.valence(), Some(3));
        assert!(is_locally_connected(&m, &s).is_ok());
        let g = automorphism_group(&m);
        assert!(verify_vertex_transitive(&m, &s, &g).unwrap());
    }

    #[test]
    fn k_must_avoid_l() {
        let m = build::torus_grid(4, 4).unwrap();
        let l = straight(&m);
        let c = l.corners()[3];
        assert_eq!(split(&m, &l, &[c]), Err(SplitError::KIntersectsL(c)));
    }

    #[test]
    fn width_ranges() {
        let m = build::torus_grid(4, 4).unwrap();
        let l = straight(&m);
        for kind in [SplitKind::A, SplitKind::Ci, SplitKind::Cx] {
            assert!(matches!(
                split_named(&m, &l, kind),
                Err(SplitError::WidthOutOfRange { .. })
            ));
        }
        let wedges = crate::corn::named::face_class(&m, false).unwrap();
        assert!(matches!(
            graph_b(&m, &wedges),
            Err(SplitError::WidthOutOfRange { j: 1, q: 4, .. })
        ));
        assert!(graph_a(&m, &wedges).is_ok());
    }

    #[test]
    fn group_must_preserve_k() {
        let m = build::torus_grid(4, 4).unwrap();
        let l = crate::corn::named::face_class(&m, false).unwrap();
        let s = graph_a(&m, &l).unwrap();
        let aut = automorphism_group(&m);
        assert_eq!(
            verify_vertex_transitive(&m, &s, &aut),
            Err(SplitError::KNotInvariant)
        );
        let g = aut_of_corneration(&m, &aut, &l);
        assert!(verify_vertex_transitive(&m, &s, &g).unwrap());
    }

    #[test]
    fn a_graph_of_wedges() {
        // q = 4, j = 1 = q/4: valence 3; gcd(4, 1) = 1: locally connected.
        let m = build::torus_grid(4, 4).unwrap();
        for t in enumerate_transitive_cornerations(&m, 1).unwrap() {
            let s = graph_a(&m, &t.corneration).unwrap();
            assert_eq!(s.valence(), Some(3));
            assert!(is_locally_connected(&m, &s).is_ok());
            assert!(s.is_connected());
        }
    }

    fn transitive(m: &FlagMap, j: usize) -> Vec<crate::corn::TransitiveCorneration> {
        enumerate_transitive_cornerations(m, j)
            .unwrap()
            .into_iter()
            .filter(|t| t.transitive)
            .collect()
    }

    #[test]
    fn cubic_examples_on_valence_eight() {
        let m = crate::ops::opposite(&build::torus_grid(4, 4).unwrap()).unwrap();
        for (j, kind) in [(2, SplitKind::Ci), (3, SplitKind::Cx)] {
            let ts = transitive(&m, j);
            assert!(!ts.is_empty());
            for t in ts {
                let r = cubic_filter(&m, &t.corneration).unwrap();
                assert!(r.cubic().contains(&kind), "{r}");
                let line = r.lines.iter().find(|l| l.kind == kind).unwrap();
                assert!(line.predicted && line.agrees());
            }
        }
    }

    #[test]
    fn cubic_straight_valence_four() {
        let m = build::torus_grid(4, 4).unwrap();
        let r = cubic_filter(&m, &straight(&m)).unwrap();
        assert_eq!(r.cubic(), vec![SplitKind::B]);
        // The B line reads j = q/4, which fails at j = q/2 = 2.
        assert!(!r.lines[1].agrees());
    }

    #[test]
    fn measured_valences_on_valence_eight() {
        // On opp({4,4}_{4,0}) no old edges merge; new edges at one vertex
        // may. See `expectation` for the stated values.
        let m = crate::ops::opposite(&build::torus_grid(4, 4).unwrap()).unwrap();
        let cases = [
            (1, SplitKind::A, 4, true),
            (2, SplitKind::A, 3, false),
            (2, SplitKind::B, 4, true),
            (2, SplitKind::Ci, 3, false),
            (2, SplitKind::Cx, 4, true),
            (3, SplitKind::A, 4, true),
            (3, SplitKind::B, 5, true),
            (3, SplitKind::Ci, 4, true),
            (3, SplitKind::Cx, 3, false),
        ];
        for (j, kind, valence, local) in cases {
            for t in transitive(&m, j) {
                let s = split_named(&m, &t.corneration, kind).unwrap();
                assert!(s.edges().all(|(_, _, o)| o.len() == 1 || o.iter().all(|x| matches!(x, EdgeOrigin::New(_)))));
                assert_eq!(s.valence(), Some(valence), "j={j} {kind}");
                assert_eq!(is_locally_connected(&m, &s).is_ok(), local, "j={j} {kind}");
                assert!(verify_vertex_transitive(&m, &s, &t.aut).unwrap());
            }
        }
    }

    #[test]
    fn straight_b_on_simple_valence_six() {
        let m = build::torus_triangular(4).unwrap();
        let s = graph_b(&m, &straight(&m)).unwrap();
        assert_eq!(s.valence(), Some(4));
        assert!(is_locally_connected(&m, &s).is_ok());
    }

    #[test]
    fn locally_connected_implies_connected() {
        let m = crate::ops::opposite(&build::torus_grid(4, 4).unwrap()).unwrap();
        for j in 1..=3 {
            for t in transitive(&m, j) {
                for kind in SplitKind::ALL {
                    if let Ok(s) = split_named(&m, &t.corneration, kind) {
                        if is_locally_connected(&m, &s).is_ok() {
                            assert!(s.is_connected());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn boundary_wedges_overlap_for_even_width() {
        let m = crate::ops::opposite(&build::torus_grid(4, 4).unwrap()).unwrap();
        for j in 2..=3 {
            for t in transitive(&m, j) {
                let both = boundary_overlap(&m, &t.corneration).unwrap();
                let n = k_set(&m, &t.corneration, SplitKind::B).unwrap().len();
                assert_eq!(both.len(), if j == 2 { n / 2 } else { 0 });
            }
        }
    }
}
