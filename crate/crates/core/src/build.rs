//! Constructors for maps: a general rotation-system builder and the named
//! families used throughout the crate (torus grids, antiprisms, dipoles,
//! platonic examples).
//!
//! Rotation systems number darts `0..2E`; darts `2k` and `2k + 1` are the
//! two ends of edge `k`. Dart `x` becomes the flags `2x` and `2x + 1`, so its
//! canonical id in the resulting [`FlagMap`] is `DartId(2x)`.

use thiserror::Error;

use crate::flagmap::{DartId, FlagMap, ValidationError};
use crate::ops;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("inconsistent rotation system: {0}")]
    InconsistentRotation(String),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

/// Cyclic dart order at every vertex, plus a twist flag per edge.
///
/// With no twisted edges the result is orientable and the rotations are
/// read as all running the same way around their vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    pub rotations: Vec<Vec<usize>>,
    pub twisted: Vec<bool>,
}

impl RotationSystem {
    pub fn untwisted(rotations: Vec<Vec<usize>>) -> Self {
        let n_darts: usize = rotations.iter().map(Vec::len).sum();
        RotationSystem {
            rotations,
            twisted: vec![false; n_darts / 2],
        }
    }

    /// Rotation system of a simple graph from cyclically ordered neighbour
    /// lists. Edge `{u, v}` gets the index of its first appearance when
    /// scanning vertices in order; its dart `2k` sits at the smaller end.
    pub fn from_neighbours(neighbours: &[Vec<usize>]) -> Result<Self, BuildError> {
        use std::collections::HashMap;
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut rotations = Vec::with_capacity(neighbours.len());
        for (u, list) in neighbours.iter().enumerate() {
            let mut rot = Vec::with_capacity(list.len());
            for &v in list {
                if v == u || v >= neighbours.len() {
                    return Err(BuildError::InconsistentRotation(format!(
                        "vertex {u} lists invalid neighbour {v}"
                    )));
                }
                let key = (u.min(v), u.max(v));
                let next = index.len();
                let k = *index.entry(key).or_insert(next);
                rot.push(if u < v { 2 * k } else { 2 * k + 1 });
            }
            rotations.push(rot);
        }
        Ok(RotationSystem::untwisted(rotations))
    }

    pub fn n_darts(&self) -> usize {
        self.rotations.iter().map(Vec::len).sum()
    }

    pub fn build(&self) -> Result<FlagMap, BuildError> {
        let n_darts = self.n_darts();
        if n_darts == 0 {
            return Err(BuildError::InconsistentRotation("no darts".into()));
        }
        if !n_darts.is_multiple_of(2) {
            return Err(BuildError::InconsistentRotation(
                "odd number of darts".into(),
            ));
        }
        if self.twisted.len() != n_darts / 2 {
            return Err(BuildError::InconsistentRotation(format!(
                "{} twist flags for {} edges",
                self.twisted.len(),
                n_darts / 2
            )));
        }
        let mut seen = vec![false; n_darts];
        for rot in &self.rotations {
            if rot.is_empty() {
                return Err(BuildError::InconsistentRotation(
                    "vertex with empty rotation".into(),
                ));
            }
            for &d in rot {
                if d >= n_darts || seen[d] {
                    return Err(BuildError::InconsistentRotation(format!(
                        "dart {d} is out of range or repeated"
                    )));
                }
                seen[d] = true;
            }
        }

        // Flag 2d is on the side of d facing the next dart of the rotation,
        // flag 2d + 1 on the side facing the previous one.
        let n = 2 * n_darts;
        let mut r0 = vec![0; n];
        let mut r1 = vec![0; n];
        let mut r2 = vec![0; n];
        for rot in &self.rotations {
            for (i, &d) in rot.iter().enumerate() {
                let next = rot[(i + 1) % rot.len()];
                r1[2 * d] = 2 * next + 1;
                r1[2 * next + 1] = 2 * d;
            }
        }
        for d in 0..n_darts {
            r2[2 * d] = 2 * d + 1;
            r2[2 * d + 1] = 2 * d;
            let p = d ^ 1;
            if self.twisted[d / 2] {
                r0[2 * d] = 2 * p;
                r0[2 * d + 1] = 2 * p + 1;
            } else {
                r0[2 * d] = 2 * p + 1;
                r0[2 * d + 1] = 2 * p;
            }
        }
        Ok(FlagMap::new(r0, r1, r2)?)
    }
}

/// Builds a map from a rotation system.
pub fn from_rotation_system(rs: &RotationSystem) -> Result<FlagMap, BuildError> {
    rs.build()
}

/// Canonical id of dart `x` of a rotation system in the built map.
pub fn dart_id(x: usize) -> DartId {
    DartId(2 * x)
}

fn grid_edges(rows: usize, cols: usize) -> (impl Fn(usize, usize) -> usize, impl Fn(usize, usize) -> usize) {
    let h = move |r: usize, c: usize| 2 * ((r % rows) * cols + c % cols);
    let v = move |r: usize, c: usize| 2 * ((r % rows) * cols + c % cols) + 1;
    (h, v)
}

/// Rotation system of the `rows × cols` quadrangulation of the torus.
///
/// Vertex `(r, c)` has index `r * cols + c`. The horizontal edge from
/// `(r, c)` to `(r, c + 1)` has index `2 (r cols + c)`, the vertical edge from
/// `(r, c)` to `(r + 1, c)` index `2 (r cols + c) + 1`; in both the first dart
/// sits at `(r, c)`. Rotation order is right, down, left, up.
pub fn torus_grid_rotations(rows: usize, cols: usize) -> Result<RotationSystem, BuildError> {
    if rows < 2 || cols < 2 {
        return Err(BuildError::DegenerateParameters(format!(
            "torus grid needs at least 2 rows and 2 columns, got {rows}x{cols}"
        )));
    }
    let (h, v) = grid_edges(rows, cols);
    let mut rotations = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            rotations.push(vec![
                2 * h(r, c),
                2 * v(r, c),
                2 * h(r, c + cols - 1) + 1,
                2 * v(r + rows - 1, c) + 1,
            ]);
        }
    }
    Ok(RotationSystem::untwisted(rotations))
}

/// The 4-valent `rows × cols` grid on the torus. `torus_grid(4, 4)` is the
/// regular map `{4,4}_{4,0}`.
pub fn torus_grid(rows: usize, cols: usize) -> Result<FlagMap, BuildError> {
    Ok(torus_grid_rotations(rows, cols)?
        .build()?
        .with_name(format!("torus-{rows}x{cols}")))
}

/// The `n`-antiprism on the sphere: two `n`-gons joined by a band of `2n`
/// triangles. Top vertices are `0..n`, bottom vertices `n..2n`.
pub fn antiprism(n: usize) -> Result<FlagMap, BuildError> {
    if n < 3 {
        return Err(BuildError::DegenerateParameters(format!(
            "antiprism needs n >= 3, got {n}"
        )));
    }
    let t = |i: usize| i % n;
    let b = |i: usize| n + i % n;
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|i| vec![t(i + 1), b(i), b(i + n - 1), t(i + n - 1)])
        .chain((0..n).map(|i| vec![b(i + n - 1), t(i), t(i + 1), b(i + 1)]))
        .collect();
    Ok(RotationSystem::from_neighbours(&neighbours)?
        .build()?
        .with_name(format!("antiprism-{n}")))
}

/// The 6-valent `n × n` triangulation of the torus, `{3,6}_{n,0}`.
/// Vertex `(r, c)` has index `r * n + c`.
pub fn torus_triangular(n: usize) -> Result<FlagMap, BuildError> {
    if n < 3 {
        return Err(BuildError::DegenerateParameters(format!(
            "triangular torus needs n >= 3, got {n}"
        )));
    }
    let at = |r: usize, c: usize| (r % n) * n + c % n;
    let neighbours: Vec<Vec<usize>> = (0..n * n)
        .map(|x| {
            let (r, c) = (x / n + n, x % n + n);
            vec![
                at(r, c + 1),
                at(r + 1, c),
                at(r + 1, c - 1),
                at(r, c - 1),
                at(r - 1, c),
                at(r - 1, c + 1),
            ]
        })
        .collect();
    Ok(RotationSystem::from_neighbours(&neighbours)?
        .build()?
        .with_name(format!("torus-3-6-{n}")))
}

/// Two vertices joined by `q` parallel edges, embedded in the sphere.
pub fn dipole(q: usize) -> Result<FlagMap, BuildError> {
    if q < 2 {
        return Err(BuildError::DegenerateParameters(format!(
            "dipole needs at least 2 edges, got {q}"
        )));
    }
    let top: Vec<usize> = (0..q).map(|k| 2 * k).collect();
    let bottom: Vec<usize> = (0..q).rev().map(|k| 2 * k + 1).collect();
    Ok(RotationSystem::untwisted(vec![top, bottom])
        .build()?
        .with_name(format!("dipole-{q}")))
}

/// The tetrahedron, as `K4` with four triangular faces.
pub fn tetrahedron() -> FlagMap {
    let neighbours = vec![vec![1, 2, 3], vec![2, 0, 3], vec![3, 0, 1], vec![1, 0, 2]];
    RotationSystem::from_neighbours(&neighbours)
        .and_then(|rs| rs.build())
        .expect("tetrahedron rotation system is valid")
        .with_name("tetrahedron")
}

pub fn octahedron() -> FlagMap {
    antiprism(3)
        .expect("3-antiprism is valid")
        .with_name("octahedron")
}

/// The cube, built as the dual of the octahedron.
pub fn cube() -> FlagMap {
    ops::dual(&octahedron())
        .expect("dual of the octahedron is valid")
        .with_name("cube")
}

/// Corners of the alternating wedge corneration of a torus grid built by
/// [`torus_grid`]: every square contributes the two wedges at one of its
/// vertical edges, the left edge in even rows and the right edge in odd
/// rows. Needs an even number of rows.
pub fn torus_alternating_corners(
    rows: usize,
    cols: usize,
) -> Result<Vec<(DartId, DartId)>, BuildError> {
    let rs = torus_grid_rotations(rows, cols)?;
    if !rows.is_multiple_of(2) {
        return Err(BuildError::DegenerateParameters(format!(
            "alternating corneration needs an even number of rows, got {rows}"
        )));
    }
    let mut out = Vec::with_capacity(2 * rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let [right, down, left, up] = rs.rotations[r * cols + c][..] else {
                unreachable!()
            };
            let pair = |a: usize, b: usize| {
                let (a, b) = (dart_id(a), dart_id(b));
                (a.min(b), a.max(b))
            };
            if r % 2 == 0 {
                out.push(pair(down, right));
                out.push(pair(up, left));
            } else {
                out.push(pair(down, left));
                out.push(pair(up, right));
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagmap::Genus;

    fn counts(m: &FlagMap) -> (usize, usize, usize) {
        (m.n_vertices(), m.n_edges(), m.n_faces())
    }

    #[test]
    fn torus_counts() {
        let m = torus_grid(4, 4).unwrap();
        assert_eq!(counts(&m), (16, 32, 16));
        assert_eq!(m.n_flags(), 128);
        assert_eq!(counts(&torus_grid(4, 5).unwrap()), (20, 40, 20));
        let m = torus_grid(3, 3).unwrap();
        assert_eq!(counts(&m), (9, 18, 9));
        assert_eq!(m.topology().euler, 0);
        assert!(m.faces().into_iter().all(|f| m.face_length(f) == 4));
    }

    #[test]
    fn torus_rejects_thin_grids() {
        assert!(matches!(
            torus_grid(1, 4),
            Err(BuildError::DegenerateParameters(_))
        ));
        assert!(torus_grid(2, 2).is_ok());
    }

    #[test]
    fn antiprism_counts() {
        for n in 3..=8 {
            let m = antiprism(n).unwrap();
            assert_eq!(counts(&m), (2 * n, 4 * n, 2 * n + 2));
            assert_eq!(m.topology().genus, Genus::Orientable(0));
        }
        assert!(antiprism(2).is_err());
    }

    #[test]
    fn platonic() {
        assert_eq!(counts(&tetrahedron()), (4, 6, 4));
        assert_eq!(counts(&octahedron()), (6, 12, 8));
        assert_eq!(counts(&cube()), (8, 12, 6));
    }

    #[test]
    fn dipole_is_a_sphere() {
        let m = dipole(5).unwrap();
        assert_eq!(counts(&m), (2, 5, 5));
        assert!(m.faces().into_iter().all(|f| m.face_length(f) == 2));
    }

    #[test]
    fn rotation_system_errors() {
        let empty = RotationSystem::untwisted(vec![]);
        assert!(matches!(
            empty.build(),
            Err(BuildError::InconsistentRotation(_))
        ));
        let repeated = RotationSystem::untwisted(vec![vec![0, 0], vec![1, 1]]);
        assert!(matches!(
            repeated.build(),
            Err(BuildError::InconsistentRotation(_))
        ));
        let looped = RotationSystem::untwisted(vec![vec![0, 1]]);
        assert!(matches!(looped.build(), Err(BuildError::Invalid(_))));
    }

    #[test]
    fn twisted_edge_gives_projective_plane() {
        // A dipole with three edges, one of them twisted: V=2, E=3, F=2.
        let rs = RotationSystem {
            rotations: vec![vec![0, 2, 4], vec![5, 3, 1]],
            twisted: vec![true, false, false],
        };
        let m = rs.build().unwrap();
        let t = m.topology();
        assert!(!t.orientable);
        assert_eq!(t.euler, 1);
        assert_eq!(t.genus, Genus::NonOrientable(1));
    }

    #[test]
    fn built_rotation_matches_input() {
        let rs = torus_grid_rotations(3, 4).unwrap();
        let m = rs.build().unwrap();
        for rot in &rs.rotations {
            let v = m.dart_vertex(dart_id(rot[0]));
            let got = m.rotation_at_vertex(v);
            let want: Vec<DartId> = rot.iter().map(|&x| dart_id(x)).collect();
            let q = want.len();
            let shift = (0..q).find(|&s| got[s] == want[0]).unwrap();
            let fwd = (0..q).all(|i| got[(shift + i) % q] == want[i]);
            let bwd = (0..q).all(|i| got[(shift + q - i) % q] == want[i]);
            assert!(fwd || bwd);
        }
    }
}
