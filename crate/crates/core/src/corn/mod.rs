//! Corners and cornerations.
//!
//! A corner is a pair of darts at one vertex. With the darts at positions
//! `a` and `a + s` of the rotation, it separates `s` consecutive wedges from
//! the other `q - s`; its width is `j = min(s, q - s)` and, unless it is
//! straight (`j = q/2`), the `j` wedges on the short side form its
//! interior. A corneration is a set of corners containing every dart
//! exactly once.

mod circuits;
mod enumerate;
mod faces;
mod local;
pub mod named;
mod symodd;
mod transfer;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::flagmap::{DartId, EdgeId, FlagMap, VertexId, WedgeId};
use crate::symmetry::SymGroup;

pub use circuits::{circuits_of, corneration_of, Circuit, CircuitDecomposition, CircuitError};
pub use enumerate::{
    aut_of_corneration, enumerate_invariant_cornerations, enumerate_transitive_cornerations,
    enumerate_transitive_with, exact_cover, TransitiveCorneration,
};
pub(crate) use faces::pattern_of_word;
pub use faces::{face_patterns, face_word, FaceConfiguration, FacePattern, FacePatterns};
pub use local::{local_corneration, LocalClass, LocalCorneration};
pub use symodd::{symmetric_cornerations_from_coloring, ColouredPair};
pub use transfer::{transfer_hole, transfer_petrie, HoleTransfer};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CornError {
    #[error("{0} is not a dart of the map")]
    UnknownDart(DartId),
    #[error("darts {0} and {1} are at different vertices")]
    DifferentVertices(DartId, DartId),
    #[error("a corner needs two distinct darts, got {0} twice")]
    SameDart(DartId),
    #[error("width {j} is out of range for valence {q}")]
    WidthOutOfRange { j: usize, q: usize },
    #[error("operation needs a map of uniform valence")]
    NonUniformValence,
    #[error("corners have different widths")]
    WidthMismatch,
    #[error("straight corners have no interior side")]
    StraightCornerHasNoSide,
    #[error("straight cornerations have no complement")]
    StraightHasNoComplement,
    #[error("corner set is not a corneration: {0}")]
    NotACorneration(CoverDefect),
    #[error("group is not a group of automorphisms of this map")]
    GroupNotSubgroup,
    #[error("not a wedge corneration")]
    NotWedgeCorneration,
    #[error("valence {0} is odd")]
    OddValence(usize),
    #[error("the map is not face-bipartite")]
    NotFaceBipartite,
    #[error("no subgroup acts half-reflexibly on the map or its Petrie dual")]
    NoHalfReflexiveGroup,
    #[error("the group is not transitive on the corneration")]
    NotTransitive,
    #[error(transparent)]
    Symmetry(#[from] crate::symmetry::SymmetryError),
    #[error(transparent)]
    Operator(#[from] crate::ops::OpError),
}

/// Why a corner set fails to be a corneration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverDefect {
    Uncovered(DartId),
    CoveredTwice(DartId),
}

impl fmt::Display for CoverDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverDefect::Uncovered(d) => write!(f, "dart {d} is in no corner"),
            CoverDefect::CoveredTwice(d) => write!(f, "dart {d} is in more than one corner"),
        }
    }
}

/// An unordered pair of darts at one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    darts: (DartId, DartId),
    vertex: VertexId,
    width: usize,
    q: usize,
    // Position of the dart where the interior begins; the interior wedges
    // are at positions start, ..., start + width - 1. For straight corners
    // this is the smaller of the two positions.
    start: usize,
}

impl Corner {
    pub fn new(map: &FlagMap, a: DartId, b: DartId) -> Result<Self, CornError> {
        for d in [a, b] {
            if d.0 >= map.n_flags() || map.dart_of(d.0) != d {
                return Err(CornError::UnknownDart(d));
            }
        }
        if a == b {
            return Err(CornError::SameDart(a));
        }
        let vertex = map.dart_vertex(a);
        if map.dart_vertex(b) != vertex {
            return Err(CornError::DifferentVertices(a, b));
        }
        let q = map.valence(vertex);
        let (pa, pb) = (map.dart_position(a), map.dart_position(b));
        let s = (pb + q - pa) % q;
        let (width, start) = if 2 * s < q {
            (s, pa)
        } else if 2 * s > q {
            (q - s, pb)
        } else {
            (s, pa.min(pb))
        };
        Ok(Corner {
            darts: (a.min(b), a.max(b)),
            vertex,
            width,
            q,
            start,
        })
    }

    /// The corner formed by the darts at positions `a` and `b` around `v`.
    pub fn at_positions(map: &FlagMap, v: VertexId, a: usize, b: usize) -> Result<Self, CornError> {
        let rot = map.rotation_at_vertex(v);
        let q = rot.len();
        Corner::new(map, rot[a % q], rot[b % q])
    }

    pub fn vertex(&self) -> VertexId {
        self.vertex
    }

    pub fn darts(&self) -> (DartId, DartId) {
        self.darts
    }

    pub fn contains(&self, d: DartId) -> bool {
        self.darts.0 == d || self.darts.1 == d
    }

    /// The other dart of the corner.
    pub fn other(&self, d: DartId) -> DartId {
        if self.darts.0 == d {
            self.darts.1
        } else {
            self.darts.0
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn valence(&self) -> usize {
        self.q
    }

    pub fn is_straight(&self) -> bool {
        2 * self.width == self.q
    }

    pub fn is_wedge(&self) -> bool {
        self.width == 1
    }

    pub fn edges(&self, map: &FlagMap) -> (EdgeId, EdgeId) {
        (map.dart_edge(self.darts.0), map.dart_edge(self.darts.1))
    }

    /// Rotation positions of the two darts, interior side first.
    pub fn positions(&self) -> (usize, usize) {
        (self.start, (self.start + self.width) % self.q)
    }

    /// The `j` wedges on the interior side; empty for straight corners.
    pub fn interior_wedges(&self, map: &FlagMap) -> Vec<WedgeId> {
        if self.is_straight() {
            return Vec::new();
        }
        let ws = map.wedges_at_vertex(self.vertex);
        (0..self.width).map(|k| ws[(self.start + k) % self.q]).collect()
    }

    /// The (up to four) wedges containing one of the two darts.
    pub fn boundary_wedges(&self, map: &FlagMap) -> Vec<WedgeId> {
        let ws = map.wedges_at_vertex(self.vertex);
        let q = self.q;
        let (a, b) = self.positions();
        let mut out: Vec<WedgeId> = [a + q - 1, a, b + q - 1, b]
            .into_iter()
            .map(|p| ws[p % q])
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The boundary wedges inside the interior, one at each dart (equal when
    /// the corner is a wedge).
    pub fn interior_boundary_wedges(&self, map: &FlagMap) -> Result<[WedgeId; 2], CornError> {
        if self.is_straight() {
            return Err(CornError::StraightCornerHasNoSide);
        }
        let ws = map.wedges_at_vertex(self.vertex);
        Ok([ws[self.start], ws[(self.start + self.width - 1) % self.q]])
    }

    /// The boundary wedges outside the interior, one at each dart.
    pub fn exterior_boundary_wedges(&self, map: &FlagMap) -> Result<[WedgeId; 2], CornError> {
        if self.is_straight() {
            return Err(CornError::StraightCornerHasNoSide);
        }
        let ws = map.wedges_at_vertex(self.vertex);
        let q = self.q;
        Ok([ws[(self.start + q - 1) % q], ws[(self.start + self.width) % q]])
    }

    /// The flag of dart `d` lying in the interior boundary wedge at `d`.
    fn interior_flag(&self, map: &FlagMap, d: DartId) -> Result<usize, CornError> {
        let [wa, wb] = self.interior_boundary_wedges(map)?;
        let w = if map.dart_position(d) == self.start { wa } else { wb };
        let x = d.0;
        Ok(if map.wedge_of(x) == w { x } else { map.r2()[x] })
    }

    /// The image of this corner under an automorphism.
    pub fn image(&self, map: &FlagMap, g: &crate::symmetry::MapSymmetry) -> Corner {
        Corner::new(
            map,
            map.dart_of(g.apply(self.darts.0 .0)),
            map.dart_of(g.apply(self.darts.1 .0)),
        )
        .expect("automorphisms map corners to corners")
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} {} {}}}", self.darts.0, self.vertex, self.darts.1)
    }
}

/// How two corners of equal width meet along a shared edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alignment {
    Convex,
    Inflection,
    NotAligned,
}

/// Alignment of two corners at different vertices sharing an edge: convex
/// when their interior wedges at that edge lie on the same side of it.
/// If the corners share more than one edge, the one of smallest id is used.
pub fn alignment(map: &FlagMap, c1: &Corner, c2: &Corner) -> Result<Alignment, CornError> {
    if c1.width != c2.width {
        return Err(CornError::WidthMismatch);
    }
    if c1.is_straight() || c2.is_straight() {
        return Err(CornError::StraightCornerHasNoSide);
    }
    if c1.vertex == c2.vertex {
        return Ok(Alignment::NotAligned);
    }
    let mut shared: Vec<(EdgeId, DartId, DartId)> = Vec::new();
    for d1 in [c1.darts.0, c1.darts.1] {
        for d2 in [c2.darts.0, c2.darts.1] {
            if map.dart_edge(d1) == map.dart_edge(d2) {
                shared.push((map.dart_edge(d1), d1, d2));
            }
        }
    }
    shared.sort();
    let Some(&(_, d1, d2)) = shared.first() else {
        return Ok(Alignment::NotAligned);
    };
    // r0 carries a flag to the other end of its edge on the same side.
    let x = c1.interior_flag(map, d1)?;
    let y = c2.interior_flag(map, d2)?;
    Ok(if map.r0()[x] == y {
        Alignment::Convex
    } else {
        Alignment::Inflection
    })
}

/// All corners of width exactly `j`. Requires `1 <= j <= q/2` at every
/// vertex.
pub fn all_j_corners(map: &FlagMap, j: usize) -> Result<Vec<Corner>, CornError> {
    let min_q = map
        .vertices()
        .into_iter()
        .map(|v| map.valence(v))
        .min()
        .unwrap_or(0);
    if j == 0 || 2 * j > min_q {
        return Err(CornError::WidthOutOfRange { j, q: min_q });
    }
    let mut out = Vec::new();
    for v in map.vertices() {
        let q = map.valence(v);
        let count = if 2 * j == q { q / 2 } else { q };
        for a in 0..count {
            out.push(Corner::at_positions(map, v, a, a + j)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Checks that every dart lies in exactly one corner, returning the first
/// offending dart otherwise.
pub fn is_corneration(map: &FlagMap, corners: &[Corner]) -> Result<(), CoverDefect> {
    let mut count = vec![0u8; map.n_flags()];
    for c in corners {
        for d in [c.darts.0, c.darts.1] {
            count[d.0] = count[d.0].saturating_add(1);
        }
    }
    for d in map.darts() {
        match count[d.0] {
            1 => {}
            0 => return Err(CoverDefect::Uncovered(d)),
            _ => return Err(CoverDefect::CoveredTwice(d)),
        }
    }
    Ok(())
}

/// The width of a corneration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Width {
    Uniform(usize),
    Mixed,
}

impl fmt::Display for Width {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Width::Uniform(j) => write!(f, "{j}"),
            Width::Mixed => f.write_str("mixed"),
        }
    }
}

/// A set of corners covering every dart exactly once, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corneration {
    corners: Vec<Corner>,
    // Corner index for each dart, indexed by the dart's flag id.
    of_dart: Vec<u32>,
}

impl Corneration {
    pub fn new(map: &FlagMap, mut corners: Vec<Corner>) -> Result<Self, CornError> {
        corners.sort();
        corners.dedup();
        is_corneration(map, &corners).map_err(CornError::NotACorneration)?;
        let mut of_dart = vec![u32::MAX; map.n_flags()];
        for (i, c) in corners.iter().enumerate() {
            of_dart[c.darts.0 .0] = i as u32;
            of_dart[c.darts.1 .0] = i as u32;
        }
        Ok(Corneration { corners, of_dart })
    }

    /// Builds corners from dart pairs first.
    pub fn from_pairs(map: &FlagMap, pairs: &[(DartId, DartId)]) -> Result<Self, CornError> {
        let corners = pairs
            .iter()
            .map(|&(a, b)| Corner::new(map, a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Corneration::new(map, corners)
    }

    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn contains(&self, c: &Corner) -> bool {
        self.corners.binary_search(c).is_ok()
    }

    /// Whether the corner on these darts belongs to the corneration.
    pub fn contains_pair(&self, a: DartId, b: DartId) -> bool {
        self.of_dart
            .get(a.0)
            .is_some_and(|&i| i != u32::MAX && self.corners[i as usize].contains(b))
    }

    /// `L(d)`: the corner containing dart `d`.
    pub fn corner_of(&self, d: DartId) -> &Corner {
        &self.corners[self.index_of(d)]
    }

    pub fn index_of(&self, d: DartId) -> usize {
        self.of_dart[d.0] as usize
    }

    pub fn width(&self) -> Width {
        match self.corners.first() {
            Some(c) if self.corners.iter().all(|x| x.width == c.width) => Width::Uniform(c.width),
            _ => Width::Mixed,
        }
    }

    pub fn is_uniform(&self) -> bool {
        matches!(self.width(), Width::Uniform(_))
    }

    pub fn dart_pairs(&self) -> Vec<(DartId, DartId)> {
        self.corners.iter().map(|c| c.darts).collect()
    }

    /// The corners at vertex `v`.
    pub fn at_vertex(&self, v: VertexId) -> Vec<Corner> {
        self.corners.iter().filter(|c| c.vertex == v).copied().collect()
    }

    /// Whether `g` maps the corneration onto itself.
    pub fn is_preserved_by(&self, map: &FlagMap, g: &crate::symmetry::MapSymmetry) -> bool {
        self.corners.iter().all(|c| {
            let (a, b) = c.darts;
            self.contains_pair(map.dart_of(g.apply(a.0)), map.dart_of(g.apply(b.0)))
        })
    }

    /// Orbits of `g` on the corners, as lists of corner indices.
    pub fn orbits(&self, map: &FlagMap, g: &SymGroup) -> Vec<Vec<usize>> {
        let labels = g.orbit_labels_by(self.corners.len(), |s, i| {
            let (a, b) = self.corners[i].darts;
            let a2 = map.dart_of(s.apply(a.0));
            debug_assert!(self.contains_pair(a2, map.dart_of(s.apply(b.0))));
            self.index_of(a2)
        });
        crate::perm::classes(&labels)
    }

    /// Whether `g` (which must preserve the corneration) is transitive on
    /// its corners.
    pub fn is_transitive_under(&self, map: &FlagMap, g: &SymGroup) -> bool {
        self.orbits(map, g).len() == 1
    }
}

/// The `j`-complement: every `j`-corner not in `L`. Itself a corneration.
pub fn j_complement(map: &FlagMap, l: &Corneration) -> Result<Corneration, CornError> {
    let Width::Uniform(j) = l.width() else {
        return Err(CornError::WidthMismatch);
    };
    if l.corners.iter().any(Corner::is_straight) {
        return Err(CornError::StraightHasNoComplement);
    }
    let rest = all_j_corners(map, j)?
        .into_iter()
        .filter(|c| !l.contains(c))
        .collect();
    Corneration::new(map, rest)
}

/// Lengths of the alternation cycles at `v`: starting from a corner of `L`,
/// step to the other `j`-corner through its far dart, alternating between
/// `L` and its complement, until the start returns.
pub fn alternation_cycles(map: &FlagMap, l: &Corneration, v: VertexId) -> Result<Vec<usize>, CornError> {
    let Width::Uniform(j) = l.width() else {
        return Err(CornError::WidthMismatch);
    };
    let rot = map.rotation_at_vertex(v);
    let q = rot.len();
    if 2 * j >= q {
        return Err(CornError::StraightHasNoComplement);
    }
    let mut seen = vec![false; q];
    let mut out = Vec::new();
    let index: HashMap<DartId, usize> = rot.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    for start in 0..q {
        if seen[start] {
            continue;
        }
        // Orient so that the walk follows the corner of L at `start`.
        let c = l.corner_of(rot[start]);
        let other = index[&c.other(rot[start])];
        let step = if (start + j) % q == other { j } else { q - j };
        let mut p = start;
        let mut len = 0;
        loop {
            seen[p] = true;
            p = (p + step) % q;
            len += 1;
            if p == start {
                break;
            }
        }
        out.push(len);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build;
    use crate::flagmap::order_mod;

    fn straight(map: &FlagMap) -> Corneration {
        let q = map.uniform_valence().unwrap();
        Corneration::new(map, all_j_corners(map, q / 2).unwrap()).unwrap()
    }

    #[test]
    fn corner_counts() {
        assert_eq!(all_j_corners(&build::cube(), 1).unwrap().len(), 24);
        let t = build::torus_grid(4, 4).unwrap();
        assert_eq!(all_j_corners(&t, 2).unwrap().len(), 32);
        assert_eq!(all_j_corners(&t, 1).unwrap().len(), 64);
        assert!(matches!(
            all_j_corners(&t, 3),
            Err(CornError::WidthOutOfRange { j: 3, q: 4 })
        ));
    }

    #[test]
    fn corner_geometry() {
        let m = build::dipole(10).unwrap();
        let v = m.vertices()[0];
        let c = Corner::at_positions(&m, v, 7, 4).unwrap();
        assert_eq!(c.width(), 3);
        assert_eq!(c.positions(), (4, 7));
        let ws = m.wedges_at_vertex(v);
        assert_eq!(c.interior_wedges(&m), vec![ws[4], ws[5], ws[6]]);
        assert_eq!(c.interior_boundary_wedges(&m).unwrap(), [ws[4], ws[6]]);
        assert_eq!(c.exterior_boundary_wedges(&m).unwrap(), [ws[3], ws[7]]);
        assert_eq!(c.boundary_wedges(&m).len(), 4);
        let wide = Corner::at_positions(&m, v, 1, 8).unwrap();
        assert_eq!((wide.width(), wide.positions()), (3, (8, 1)));
        let s = Corner::at_positions(&m, v, 2, 7).unwrap();
        assert!(s.is_straight());
        assert!(s.interior_wedges(&m).is_empty());
        assert_eq!(
            s.interior_boundary_wedges(&m),
            Err(CornError::StraightCornerHasNoSide)
        );
    }

    #[test]
    fn corner_errors() {
        let m = build::dipole(4).unwrap();
        let rot0 = m.rotation_at_vertex(m.vertices()[0]).to_vec();
        let rot1 = m.rotation_at_vertex(m.vertices()[1]).to_vec();
        assert_eq!(
            Corner::new(&m, rot0[0], rot0[0]),
            Err(CornError::SameDart(rot0[0]))
        );
        assert!(matches!(
            Corner::new(&m, rot0[0], rot1[0]),
            Err(CornError::DifferentVertices(..))
        ));
        assert!(matches!(
            Corner::new(&m, DartId(1), rot0[0]),
            Err(CornError::UnknownDart(_))
        ));
    }

    #[test]
    fn straight_corners_form_a_corneration() {
        let m = build::torus_grid(4, 4).unwrap();
        let l = straight(&m);
        assert_eq!(l.width(), Width::Uniform(2));
        assert_eq!(l.len(), 32);
    }

    #[test]
    fn all_wedges_of_a_4_valent_map_cover_twice() {
        let m = build::antiprism(4).unwrap();
        let wedges = all_j_corners(&m, 1).unwrap();
        assert!(matches!(
            is_corneration(&m, &wedges),
            Err(CoverDefect::CoveredTwice(_))
        ));
        assert!(matches!(is_corneration(&m, &[]), Err(CoverDefect::Uncovered(_))));
    }

    #[test]
    fn complement_is_an_involution() {
        let m = crate::ops::opposite(&build::torus_grid(4, 4).unwrap()).unwrap();
        let l = named::face_class(&m, false).unwrap();
        let k = j_complement(&m, &l).unwrap();
        assert_eq!(k.len(), l.len());
        assert!(l.corners().iter().all(|c| !k.contains(c)));
        assert_eq!(j_complement(&m, &k).unwrap(), l);
        assert_eq!(
            j_complement(&build::torus_grid(4, 4).unwrap(), &straight(&build::torus_grid(4, 4).unwrap())),
            Err(CornError::StraightHasNoComplement)
        );
    }

    #[test]
    fn alternation_period_is_additive_order() {
        let m = build::dipole(12).unwrap();
        let v = m.vertices()[0];
        for j in [1, 3, 5] {
            let corners: Vec<Corner> = (0..6)
                .map(|i| Corner::at_positions(&m, v, 2 * i, 2 * i + j).unwrap())
                .chain({
                    let w = m.vertices()[1];
                    (0..6).map(move |i| (w, i))
                }.map(|(w, i)| Corner::at_positions(&m, w, 2 * i, 2 * i + j).unwrap()))
                .collect();
            let l = Corneration::new(&m, corners).unwrap();
            let cycles = alternation_cycles(&m, &l, v).unwrap();
            assert!(cycles.iter().all(|&k| k == order_mod(j as i64, 12)), "j={j}");
        }
    }

    #[test]
    fn face_wedges_are_convex_petrie_wedges_inflect() {
        let m = build::cube();
        let f = m.faces()[0];
        let flags = m.face_flags(f);
        let x = flags[0];
        let w1 = m.wedge_of(x);
        let w2 = m.wedge_of(m.r0()[x]);
        let corner = |w: WedgeId| {
            let (a, b) = m.wedge_darts(w);
            Corner::new(&m, a, b).unwrap()
        };
        assert_eq!(alignment(&m, &corner(w1), &corner(w2)).unwrap(), Alignment::Convex);
        // Across the edge on the other side: the wedge of r0 r2 x.
        let w3 = m.wedge_of(m.r0()[m.r2()[x]]);
        assert_eq!(alignment(&m, &corner(w1), &corner(w3)).unwrap(), Alignment::Inflection);
        // A wedge at the far side of the face shares no edge.
        let far = m.wedge_of(m.r0()[m.r1()[m.r0()[m.r1()[x]]]]);
        assert_eq!(alignment(&m, &corner(w1), &corner(far)).unwrap(), Alignment::NotAligned);
    }
}
