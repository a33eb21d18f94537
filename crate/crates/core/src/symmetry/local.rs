//! Local action of a vertex stabilizer on the darts around the vertex.
//!
//! Positions `0..q` follow [`FlagMap::rotation_at_vertex`]. A stabilizer
//! element acts as a rotation `rho^a: i -> i + a` or a reflection
//! `mu_f: i -> f - i`.

use std::fmt;

use crate::flagmap::{FlagMap, VertexId};

use super::SymGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalActionKind {
    /// Half-dihedral: the even rotations and the odd reflections.
    HD,
    /// Half-cyclic: the even rotations only.
    HC,
    /// Quarter-dihedral: rotations by multiples of 4 and the reflections
    /// `mu_f` with `f` in one odd class mod 4.
    QD,
    Other,
}

impl fmt::Display for LocalActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LocalActionKind::HD => "HD",
            LocalActionKind::HC => "HC",
            LocalActionKind::QD => "QD",
            LocalActionKind::Other => "Other",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalAction {
    pub vertex: VertexId,
    pub q: usize,
    /// Distinct permutations of dart positions induced by the stabilizer.
    pub perms: Vec<Vec<usize>>,
    /// `a` for every `rho^a` present.
    pub rotations: Vec<usize>,
    /// `f` for every `mu_f` present.
    pub reflections: Vec<usize>,
    pub kind: LocalActionKind,
}

impl LocalAction {
    pub fn order(&self) -> usize {
        self.perms.len()
    }
}

/// The stabilizer `G_v` as a permutation group on dart positions at `v`,
/// tagged by type.
pub fn local_action_group(map: &FlagMap, g: &SymGroup, v: VertexId) -> LocalAction {
    let rot = map.rotation_at_vertex(v);
    let q = rot.len();
    let mut perms: Vec<Vec<usize>> = g
        .elements()
        .iter()
        .filter(|s| map.vertex_of(s.apply(v.0)) == v)
        .map(|s| {
            rot.iter()
                .map(|d| map.dart_position(map.dart_of(s.apply(d.0))))
                .collect()
        })
        .collect();
    perms.sort();
    perms.dedup();

    let mut rotations = Vec::new();
    let mut reflections = Vec::new();
    let mut dihedral = true;
    for p in &perms {
        let a = p[0];
        if (0..q).all(|i| p[i] == (a + i) % q) {
            rotations.push(a);
        } else if (0..q).all(|i| p[i] == (a + q - i) % q) {
            reflections.push(a);
        } else {
            dihedral = false;
        }
    }
    rotations.sort_unstable();
    reflections.sort_unstable();

    let kind = if dihedral {
        classify(q, &rotations, &reflections)
    } else {
        LocalActionKind::Other
    };
    LocalAction {
        vertex: v,
        q,
        perms,
        rotations,
        reflections,
        kind,
    }
}

fn classify(q: usize, rotations: &[usize], reflections: &[usize]) -> LocalActionKind {
    let multiples = |step: usize| -> Vec<usize> { (0..q).step_by(step).collect() };
    if !q.is_multiple_of(2) || rotations != multiples(2) {
        if q.is_multiple_of(4) && rotations == multiples(4) {
            for a in [1, 3] {
                let want: Vec<usize> = (a..q).step_by(4).collect();
                if reflections == want {
                    return LocalActionKind::QD;
                }
            }
        }
        return LocalActionKind::Other;
    }
    if reflections.is_empty() {
        return LocalActionKind::HC;
    }
    let odd: Vec<usize> = (1..q).step_by(2).collect();
    if reflections == odd {
        LocalActionKind::HD
    } else {
        LocalActionKind::Other
    }
}
