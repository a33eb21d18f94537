//! Maps as flag systems.
//!
//! A map is a finite set of flags together with three fixed-point-free
//! involutions `r0`, `r1`, `r2`. Every incidence cell is an orbit of a
//! subgroup generated by two of them (or by one):
//!
//! | cell   | generators     |
//! |--------|----------------|
//! | vertex | `r1`, `r2`     |
//! | edge   | `r0`, `r2`     |
//! | face   | `r0`, `r1`     |
//! | dart   | `r2`           |
//! | wedge  | `r1`           |
//!
//! Cells are named by the smallest flag they contain, so ids are stable and
//! independent of traversal order.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::perm::{classes, gcd, orbit_labels, two_colour};

macro_rules! cell_id {
    ($(#[$m:meta])* $name:ident, $prefix:literal) => {
        $(#[$m])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub usize);

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }
    };
}

cell_id!(
    /// A vertex, named by its smallest flag.
    VertexId, "v"
);
cell_id!(
    /// An edge, named by its smallest flag.
    EdgeId, "e"
);
cell_id!(
    /// A face, named by its smallest flag.
    FaceId, "f"
);
cell_id!(
    /// A dart (vertex-edge incidence), named by the smaller of its two flags.
    DartId, "d"
);
cell_id!(
    /// A wedge (two consecutive edges of a face at a vertex), named by the
    /// smaller of its two flags.
    WedgeId, "w"
);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellKind {
    Vertex,
    Edge,
    Face,
    Dart,
    Wedge,
}

impl CellKind {
    pub const ALL: [CellKind; 5] = [
        CellKind::Vertex,
        CellKind::Edge,
        CellKind::Face,
        CellKind::Dart,
        CellKind::Wedge,
    ];

    /// Indices of the involutions generating this kind of cell.
    pub fn generators(self) -> &'static [usize] {
        match self {
            CellKind::Vertex => &[1, 2],
            CellKind::Edge => &[0, 2],
            CellKind::Face => &[0, 1],
            CellKind::Dart => &[2],
            CellKind::Wedge => &[1],
        }
    }
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CellKind::Vertex => "vertex",
            CellKind::Edge => "edge",
            CellKind::Face => "face",
            CellKind::Dart => "dart",
            CellKind::Wedge => "wedge",
        };
        f.write_str(s)
    }
}

/// One orbit of flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub kind: CellKind,
    pub id: usize,
    pub flags: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeDefect {
    /// `r0 r2` fixes a flag, so the edge has fewer than four flags.
    Collapsed,
    /// Both ends of the edge lie at the same vertex.
    Loop,
}

impl fmt::Display for EdgeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeDefect::Collapsed => f.write_str("r0 r2 has a fixed point"),
            EdgeDefect::Loop => f.write_str("the edge is a loop"),
        }
    }
}

/// The first violated flag-system axiom, with a witness flag.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("a map needs at least one flag")]
    Empty,
    #[error("r{generator} has {len} entries, expected {expected}")]
    LengthMismatch {
        generator: usize,
        len: usize,
        expected: usize,
    },
    #[error("r{generator} sends flag {flag} to {image}, which is out of range")]
    OutOfRange {
        generator: usize,
        flag: usize,
        image: usize,
    },
    #[error("r{generator} is not an involution at flag {flag}")]
    NotInvolution { generator: usize, flag: usize },
    #[error("r{generator} fixes flag {flag}")]
    FixedPoint { generator: usize, flag: usize },
    #[error("r0 and r2 do not commute at flag {flag}")]
    R0R2NotCommuting { flag: usize },
    #[error("edge through flag {flag} is degenerate: {defect}")]
    EdgeDegenerate { flag: usize, defect: EdgeDefect },
    #[error("flag {flag} is not reachable from flag 0")]
    Disconnected { flag: usize },
}

/// Checks the flag-system axioms for three candidate involutions.
pub fn validate(r: [&[usize]; 3]) -> Result<(), ValidationError> {
    let n = r[0].len();
    if n == 0 {
        return Err(ValidationError::Empty);
    }
    for (i, ri) in r.iter().enumerate() {
        if ri.len() != n {
            return Err(ValidationError::LengthMismatch {
                generator: i,
                len: ri.len(),
                expected: n,
            });
        }
        if let Some((flag, &image)) = ri.iter().enumerate().find(|(_, &y)| y >= n) {
            return Err(ValidationError::OutOfRange {
                generator: i,
                flag,
                image,
            });
        }
    }
    for (i, ri) in r.iter().enumerate() {
        if let Some(flag) = (0..n).find(|&f| ri[ri[f]] != f) {
            return Err(ValidationError::NotInvolution { generator: i, flag });
        }
        if let Some(flag) = (0..n).find(|&f| ri[f] == f) {
            return Err(ValidationError::FixedPoint { generator: i, flag });
        }
    }
    let (r0, r1, r2) = (r[0], r[1], r[2]);
    if let Some(flag) = (0..n).find(|&f| r0[r2[f]] != r2[r0[f]]) {
        return Err(ValidationError::R0R2NotCommuting { flag });
    }
    if let Some(flag) = (0..n).find(|&f| r0[r2[f]] == f) {
        return Err(ValidationError::EdgeDegenerate {
            flag,
            defect: EdgeDefect::Collapsed,
        });
    }
    let all = orbit_labels(n, &[r0, r1, r2]);
    if let Some(flag) = (0..n).find(|&f| all[f] != 0) {
        return Err(ValidationError::Disconnected { flag });
    }
    let vertex = orbit_labels(n, &[r1, r2]);
    if let Some(flag) = (0..n).find(|&f| vertex[f] == vertex[r0[f]]) {
        return Err(ValidationError::EdgeDegenerate {
            flag,
            defect: EdgeDefect::Loop,
        });
    }
    Ok(())
}

/// `|a|_n`: the additive order of `a` in `Z_n`, i.e. `n / gcd(n, a)`.
pub fn order_mod(a: i64, n: usize) -> usize {
    assert!(n >= 1, "modulus must be positive");
    let a = a.rem_euclid(n as i64) as usize;
    n / gcd(n, a)
}

/// The underlying multigraph of a map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub endpoints: BTreeMap<EdgeId, (VertexId, VertexId)>,
}

impl Skeleton {
    /// True when no two edges share both end-vertices.
    pub fn is_simple(&self) -> bool {
        let mut seen: Vec<_> = self.endpoints.values().copied().collect();
        seen.sort();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus {
    /// Number of handles.
    Orientable(usize),
    /// Number of cross-caps.
    NonOrientable(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Topology {
    pub euler: i64,
    pub orientable: bool,
    pub genus: Genus,
}

/// A finite map given by its flags and the involutions `r0`, `r1`, `r2`.
///
/// Values are immutable once built; construction validates the axioms and
/// precomputes the cell labelling and the rotation at every vertex.
#[derive(Clone)]
pub struct FlagMap {
    name: Option<String>,
    r: [Vec<usize>; 3],
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
    face_of: Vec<usize>,
    // Position of a dart (resp. the wedge following it) in its vertex
    // rotation, indexed by the dart's (resp. wedge's) id.
    dart_pos: Vec<usize>,
    wedge_pos: Vec<usize>,
    rotation: BTreeMap<VertexId, Rotation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Rotation {
    darts: Vec<DartId>,
    wedges: Vec<WedgeId>,
}

impl PartialEq for FlagMap {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.r == other.r
    }
}

impl Eq for FlagMap {}

impl fmt::Debug for FlagMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagMap")
            .field("name", &self.name)
            .field("flags", &self.n_flags())
            .field("vertices", &self.rotation.len())
            .finish()
    }
}

impl FlagMap {
    pub fn new(r0: Vec<usize>, r1: Vec<usize>, r2: Vec<usize>) -> Result<Self, ValidationError> {
        validate([&r0, &r1, &r2])?;
        let n = r0.len();
        let vertex_of = orbit_labels(n, &[&r1, &r2]);
        let edge_of = orbit_labels(n, &[&r0, &r2]);
        let face_of = orbit_labels(n, &[&r0, &r1]);

        let mut dart_pos = vec![usize::MAX; n];
        let mut wedge_pos = vec![usize::MAX; n];
        let mut rotation = BTreeMap::new();
        for f0 in 0..n {
            if vertex_of[f0] != f0 {
                continue;
            }
            // Walk h -> r2 r1 h from the smallest flag; each step moves to the
            // next dart, and h together with r1 h is the wedge in between.
            let mut darts = Vec::new();
            let mut wedges = Vec::new();
            let mut h = f0;
            loop {
                let d = h.min(r2[h]);
                let w = h.min(r1[h]);
                dart_pos[d] = darts.len();
                wedge_pos[w] = wedges.len();
                darts.push(DartId(d));
                wedges.push(WedgeId(w));
                h = r2[r1[h]];
                if h == f0 {
                    break;
                }
            }
            rotation.insert(VertexId(f0), Rotation { darts, wedges });
        }

        Ok(FlagMap {
            name: None,
            r: [r0, r1, r2],
            vertex_of,
            edge_of,
            face_of,
            dart_pos,
            wedge_pos,
            rotation,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The name, or `"unnamed"`.
    pub fn label(&self) -> &str {
        self.name.as_deref().unwrap_or("unnamed")
    }

    pub fn n_flags(&self) -> usize {
        self.r[0].len()
    }

    /// The involution `r_i`.
    pub fn r(&self, i: usize) -> &[usize] {
        &self.r[i]
    }

    pub fn r0(&self) -> &[usize] {
        &self.r[0]
    }

    pub fn r1(&self) -> &[usize] {
        &self.r[1]
    }

    pub fn r2(&self) -> &[usize] {
        &self.r[2]
    }

    /// Id of the cell of the given kind containing `flag`.
    pub fn cell_of(&self, kind: CellKind, flag: usize) -> usize {
        match kind {
            CellKind::Vertex => self.vertex_of[flag],
            CellKind::Edge => self.edge_of[flag],
            CellKind::Face => self.face_of[flag],
            CellKind::Dart => flag.min(self.r[2][flag]),
            CellKind::Wedge => flag.min(self.r[1][flag]),
        }
    }

    pub fn vertex_of(&self, flag: usize) -> VertexId {
        VertexId(self.vertex_of[flag])
    }

    pub fn edge_of(&self, flag: usize) -> EdgeId {
        EdgeId(self.edge_of[flag])
    }

    pub fn face_of(&self, flag: usize) -> FaceId {
        FaceId(self.face_of[flag])
    }

    pub fn dart_of(&self, flag: usize) -> DartId {
        DartId(flag.min(self.r[2][flag]))
    }

    pub fn wedge_of(&self, flag: usize) -> WedgeId {
        WedgeId(flag.min(self.r[1][flag]))
    }

    /// The orbit partition for `kind`, ordered by id.
    pub fn cells(&self, kind: CellKind) -> Vec<Cell> {
        let labels: Vec<usize> = (0..self.n_flags()).map(|f| self.cell_of(kind, f)).collect();
        classes(&labels)
            .into_iter()
            .map(|flags| Cell {
                kind,
                id: flags[0],
                flags,
            })
            .collect()
    }

    fn ids(&self, kind: CellKind) -> Vec<usize> {
        (0..self.n_flags())
            .filter(|&f| self.cell_of(kind, f) == f)
            .collect()
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.rotation.keys().copied().collect()
    }

    pub fn edges(&self) -> Vec<EdgeId> {
        self.ids(CellKind::Edge).into_iter().map(EdgeId).collect()
    }

    pub fn faces(&self) -> Vec<FaceId> {
        self.ids(CellKind::Face).into_iter().map(FaceId).collect()
    }

    pub fn darts(&self) -> Vec<DartId> {
        self.ids(CellKind::Dart).into_iter().map(DartId).collect()
    }

    pub fn wedges(&self) -> Vec<WedgeId> {
        self.ids(CellKind::Wedge).into_iter().map(WedgeId).collect()
    }

    pub fn n_vertices(&self) -> usize {
        self.rotation.len()
    }

    pub fn n_edges(&self) -> usize {
        self.n_flags() / 4
    }

    pub fn n_faces(&self) -> usize {
        self.ids(CellKind::Face).len()
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.rotation[&v].darts.len()
    }

    /// Number of wedges (equivalently, of boundary-walk steps) of a face.
    pub fn face_length(&self, f: FaceId) -> usize {
        self.face_flags(f).len() / 2
    }

    /// The common valence, if all vertices have the same one.
    pub fn uniform_valence(&self) -> Option<usize> {
        let mut it = self.rotation.values().map(|r| r.darts.len());
        let q = it.next()?;
        it.all(|x| x == q).then_some(q)
    }

    pub fn face_flags(&self, f: FaceId) -> Vec<usize> {
        (0..self.n_flags()).filter(|&x| self.face_of[x] == f.0).collect()
    }

    /// Darts around `v` in rotation order: start at the smallest flag of the
    /// vertex and step with `r2 r1`. Any rotation or reversal of this
    /// sequence is an equally valid numbering.
    pub fn rotation_at_vertex(&self, v: VertexId) -> &[DartId] {
        &self.rotation[&v].darts
    }

    /// Wedges around `v`; wedge `k` lies between darts `k` and `k + 1`.
    pub fn wedges_at_vertex(&self, v: VertexId) -> &[WedgeId] {
        &self.rotation[&v].wedges
    }

    pub fn dart_vertex(&self, d: DartId) -> VertexId {
        self.vertex_of(d.0)
    }

    pub fn dart_edge(&self, d: DartId) -> EdgeId {
        self.edge_of(d.0)
    }

    pub fn dart_position(&self, d: DartId) -> usize {
        self.dart_pos[d.0]
    }

    pub fn wedge_vertex(&self, w: WedgeId) -> VertexId {
        self.vertex_of(w.0)
    }

    pub fn wedge_position(&self, w: WedgeId) -> usize {
        self.wedge_pos[w.0]
    }

    pub fn wedge_face(&self, w: WedgeId) -> FaceId {
        self.face_of(w.0)
    }

    /// The two darts of a wedge.
    pub fn wedge_darts(&self, w: WedgeId) -> (DartId, DartId) {
        let a = self.dart_of(w.0);
        let b = self.dart_of(self.r[1][w.0]);
        (a.min(b), a.max(b))
    }

    /// The dart at the other end of the same edge.
    pub fn opposite_dart(&self, d: DartId) -> DartId {
        self.dart_of(self.r[0][d.0])
    }

    pub fn skeleton(&self) -> Skeleton {
        let edges = self.edges();
        let endpoints = edges
            .iter()
            .map(|&e| {
                let a = self.vertex_of(e.0);
                let b = self.vertex_of(self.r[0][e.0]);
                (e, (a.min(b), a.max(b)))
            })
            .collect();
        Skeleton {
            vertices: self.vertices(),
            edges,
            endpoints,
        }
    }

    /// Euler characteristic, orientability and genus.
    ///
    /// Orientable exactly when the flag graph (flags joined by each `r_i`)
    /// is bipartite.
    pub fn topology(&self) -> Topology {
        let euler = self.n_vertices() as i64 - self.n_edges() as i64 + self.n_faces() as i64;
        let orientable =
            two_colour(self.n_flags(), |f| [self.r[0][f], self.r[1][f], self.r[2][f]]).is_some();
        let genus = if orientable {
            Genus::Orientable(((2 - euler) / 2) as usize)
        } else {
            Genus::NonOrientable((2 - euler) as usize)
        };
        Topology {
            euler,
            orientable,
            genus,
        }
    }

    /// A proper 2-colouring of the faces (adjacent across an edge), keyed by
    /// face id; `false` is the colour of the face containing flag 0.
    pub fn face_bipartition(&self) -> Option<BTreeMap<FaceId, bool>> {
        self.cell_bipartition(CellKind::Face, 2)
            .map(|m| m.into_iter().map(|(k, v)| (FaceId(k), v)).collect())
    }

    /// A proper 2-colouring of the skeleton, keyed by vertex id.
    pub fn vertex_bipartition(&self) -> Option<BTreeMap<VertexId, bool>> {
        self.cell_bipartition(CellKind::Vertex, 0)
            .map(|m| m.into_iter().map(|(k, v)| (VertexId(k), v)).collect())
    }

    pub fn is_face_bipartite(&self) -> bool {
        self.face_bipartition().is_some()
    }

    pub fn is_vertex_bipartite(&self) -> bool {
        self.vertex_bipartition().is_some()
    }

    // Cells of `kind` are adjacent when `r_across` moves a flag from one to
    // the other.
    fn cell_bipartition(&self, kind: CellKind, across: usize) -> Option<BTreeMap<usize, bool>> {
        let ids = self.ids(kind);
        let mut slot = vec![usize::MAX; self.n_flags()];
        for (i, &c) in ids.iter().enumerate() {
            slot[c] = i;
        }
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); ids.len()];
        for f in 0..self.n_flags() {
            members[slot[self.cell_of(kind, f)]].push(f);
        }
        let colours = two_colour(ids.len(), |i| {
            members[i]
                .iter()
                .map(|&f| slot[self.cell_of(kind, self.r[across][f])])
                .collect::<Vec<_>>()
        })?;
        Some(ids.into_iter().zip(colours).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build;

    #[test]
    fn order_mod_examples() {
        assert_eq!(order_mod(3, 12), 4);
        assert_eq!(order_mod(0, 7), 1);
        assert_eq!(order_mod(5, 12), 12);
        assert_eq!(order_mod(-3, 12), 4);
    }

    #[test]
    fn identity_r0_has_fixed_points() {
        let id = vec![0, 1, 2, 3];
        let sw = vec![1, 0, 3, 2];
        let err = FlagMap::new(id, sw.clone(), sw).unwrap_err();
        assert_eq!(err, ValidationError::FixedPoint { generator: 0, flag: 0 });
    }

    #[test]
    fn non_involution_is_reported() {
        let cyc = vec![1, 2, 3, 0];
        let sw = vec![1, 0, 3, 2];
        let err = FlagMap::new(sw.clone(), cyc, sw).unwrap_err();
        assert!(matches!(err, ValidationError::NotInvolution { generator: 1, .. }));
    }

    #[test]
    fn two_disjoint_squares_are_disconnected() {
        let sq = build::torus_grid(3, 3).unwrap();
        let n = sq.n_flags();
        let dbl = |p: &[usize]| -> Vec<usize> {
            p.iter().copied().chain(p.iter().map(|&x| x + n)).collect()
        };
        let err = FlagMap::new(dbl(sq.r0()), dbl(sq.r1()), dbl(sq.r2())).unwrap_err();
        assert_eq!(err, ValidationError::Disconnected { flag: n });
    }

    #[test]
    fn single_edge_with_collapsed_flags() {
        // r0 = r2 makes r0 r2 the identity.
        let a = vec![1, 0, 3, 2];
        let b = vec![2, 3, 0, 1];
        let err = FlagMap::new(a.clone(), b, a).unwrap_err();
        assert!(matches!(
            err,
            ValidationError::EdgeDegenerate {
                defect: EdgeDefect::Collapsed,
                ..
            }
        ));
    }

    #[test]
    fn loops_are_rejected() {
        // One vertex of valence 2 with a loop: r0 swaps the two darts of the
        // same vertex.
        let r2 = vec![1, 0, 3, 2];
        let r1 = vec![3, 2, 1, 0];
        let r0 = vec![2, 3, 0, 1];
        let err = FlagMap::new(r0, r1, r2).unwrap_err();
        assert!(matches!(
            err,
            ValidationError::EdgeDegenerate {
                defect: EdgeDefect::Loop,
                ..
            }
        ));
    }

    #[test]
    fn cube_cells() {
        let cube = build::cube();
        assert_eq!(cube.n_flags(), 48);
        let v = cube.cells(CellKind::Vertex);
        assert_eq!(v.len(), 8);
        assert!(v.iter().all(|c| c.flags.len() == 6));
        let d = cube.cells(CellKind::Dart);
        assert_eq!(d.len(), 24);
        assert!(d.iter().all(|c| c.flags.len() == 2));
        assert_eq!(cube.cells(CellKind::Wedge).len(), 24);
        for v in cube.vertices() {
            assert_eq!(cube.valence(v), 3);
            assert_eq!(cube.rotation_at_vertex(v).len(), 3);
        }
        for f in cube.faces() {
            assert_eq!(cube.face_length(f), 4);
        }
        let sk = cube.skeleton();
        assert_eq!((sk.vertices.len(), sk.edges.len()), (8, 12));
        assert!(sk.is_simple());
        let t = cube.topology();
        assert_eq!(t.euler, 2);
        assert!(t.orientable);
        assert_eq!(t.genus, Genus::Orientable(0));
    }

    #[test]
    fn cube_is_not_face_bipartite() {
        assert!(build::cube().face_bipartition().is_none());
        assert!(build::cube().is_vertex_bipartite());
    }

    #[test]
    fn theta_has_parallel_edges() {
        let theta = build::dipole(3).unwrap();
        let sk = theta.skeleton();
        assert_eq!(sk.vertices.len(), 2);
        assert_eq!(sk.edges.len(), 3);
        let ends: Vec<_> = sk.endpoints.values().collect();
        assert!(ends.iter().all(|&&e| e == *ends[0]));
        assert!(!sk.is_simple());
    }

    #[test]
    fn cells_partition_flags_and_ids_are_minima() {
        let m = build::antiprism(5).unwrap();
        for kind in CellKind::ALL {
            let cells = m.cells(kind);
            let mut seen = vec![false; m.n_flags()];
            for c in &cells {
                assert_eq!(c.id, *c.flags.iter().min().unwrap());
                for &f in &c.flags {
                    assert!(!seen[f]);
                    seen[f] = true;
                    assert_eq!(m.cell_of(kind, f), c.id);
                }
            }
            assert!(seen.into_iter().all(|s| s));
        }
        assert_eq!(m.cells(CellKind::Wedge).len(), m.n_flags() / 2);
    }

    #[test]
    fn rotation_consistency() {
        let m = build::torus_grid(4, 5).unwrap();
        for v in m.vertices() {
            let rot = m.rotation_at_vertex(v);
            let wedges = m.wedges_at_vertex(v);
            assert_eq!(rot.len(), 4);
            for (k, &w) in wedges.iter().enumerate() {
                let (a, b) = m.wedge_darts(w);
                let expect = {
                    let x = rot[k];
                    let y = rot[(k + 1) % rot.len()];
                    (x.min(y), x.max(y))
                };
                assert_eq!((a, b), expect);
                assert_eq!(m.wedge_position(w), k);
            }
            for (k, &d) in rot.iter().enumerate() {
                assert_eq!(m.dart_position(d), k);
                assert_eq!(m.dart_vertex(d), v);
            }
        }
    }

    #[test]
    fn antiprism_face_lengths() {
        let m = build::antiprism(4).unwrap();
        let mut lens: Vec<_> = m.faces().into_iter().map(|f| m.face_length(f)).collect();
        lens.sort();
        assert_eq!(lens, [vec![3; 8], vec![4; 2]].concat());
        assert!(m.vertices().into_iter().all(|v| m.valence(v) == 4));
        // Triangles pointing up share edges with the top square, those
        // pointing down with the bottom one: the faces split into two
        // classes of five.
        let colours = m.face_bipartition().unwrap();
        assert_eq!(colours.values().filter(|&&c| c).count(), 5);
    }

    #[test]
    fn torus_is_face_bipartite() {
        let m = build::torus_grid(4, 4).unwrap();
        let colours = m.face_bipartition().unwrap();
        assert_eq!(colours.values().filter(|&&c| c).count(), 8);
        let t = m.topology();
        assert_eq!((t.euler, t.genus), (0, Genus::Orientable(1)));
    }
}
