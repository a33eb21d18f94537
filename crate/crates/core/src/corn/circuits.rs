//! Circuit decompositions and their correspondence with cornerations.
//!
//! A circuit is stored as the dart sequence `out_0, in_0, out_1, in_1, ...`
//! where `out_i` and `in_i` are the two ends of its `i`-th edge and `in_i`
//! sits at the vertex where the next edge leaves. Consecutive edges
//! `in_i, out_{i+1}` form the corners of the matching corneration.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::flagmap::{DartId, EdgeId, FlagMap, VertexId};

use super::{CornError, Corner, Corneration};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircuitError {
    #[error("a circuit needs at least two edges")]
    CircuitTooShort,
    #[error("{0} is not a dart of the map")]
    UnknownDart(DartId),
    #[error("circuit is not closed at dart {0}")]
    NotClosed(DartId),
    #[error("edge {0} is used more than once")]
    RepeatedEdge(EdgeId),
    #[error("edge {0} is in no circuit")]
    MissingEdge(EdgeId),
}

/// A closed walk with no repeated edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Circuit {
    darts: Vec<DartId>,
}

impl Circuit {
    /// The circuit leaving along the darts `outs` in order. Each edge is
    /// traversed from `outs[i]` to its opposite dart, which must sit at the
    /// vertex of `outs[i + 1]`.
    pub fn new(map: &FlagMap, outs: &[DartId]) -> Result<Self, CircuitError> {
        if outs.len() < 2 {
            return Err(CircuitError::CircuitTooShort);
        }
        let mut darts = Vec::with_capacity(2 * outs.len());
        let mut edges = BTreeSet::new();
        for (i, &d) in outs.iter().enumerate() {
            if d.0 >= map.n_flags() || map.dart_of(d.0) != d {
                return Err(CircuitError::UnknownDart(d));
            }
            if !edges.insert(map.dart_edge(d)) {
                return Err(CircuitError::RepeatedEdge(map.dart_edge(d)));
            }
            let back = map.opposite_dart(d);
            let next = outs[(i + 1) % outs.len()];
            if map.dart_vertex(back) != map.dart_vertex(next) {
                return Err(CircuitError::NotClosed(back));
            }
            darts.push(d);
            darts.push(back);
        }
        Ok(Circuit::canonical(darts))
    }

    // Least dart sequence over the starting edge and the direction.
    fn canonical(darts: Vec<DartId>) -> Self {
        let n = darts.len();
        let mut reversed = darts.clone();
        reversed.reverse();
        let best = (0..n)
            .step_by(2)
            .flat_map(|s| {
                let a: Vec<DartId> = (0..n).map(|i| darts[(s + i) % n]).collect();
                let b: Vec<DartId> = (0..n).map(|i| reversed[(s + i) % n]).collect();
                [a, b]
            })
            .min()
            .expect("circuits are nonempty");
        Circuit { darts: best }
    }

    /// Interleaved dart sequence `out_0, in_0, out_1, in_1, ...`.
    pub fn darts(&self) -> &[DartId] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn edges(&self, map: &FlagMap) -> Vec<EdgeId> {
        self.darts.iter().step_by(2).map(|&d| map.dart_edge(d)).collect()
    }

    /// The vertex each edge leaves from, in order.
    pub fn vertices(&self, map: &FlagMap) -> Vec<VertexId> {
        self.darts.iter().step_by(2).map(|&d| map.dart_vertex(d)).collect()
    }

    /// Consecutive edge pairs as dart pairs `(in_i, out_{i+1})`.
    pub fn turns(&self) -> impl Iterator<Item = (DartId, DartId)> + '_ {
        let n = self.darts.len();
        (0..n)
            .step_by(2)
            .map(move |i| (self.darts[i + 1], self.darts[(i + 2) % n]))
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.darts.iter().step_by(2).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Circuits partitioning the edges of a map, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitDecomposition {
    circuits: Vec<Circuit>,
}

impl CircuitDecomposition {
    pub fn new(map: &FlagMap, mut circuits: Vec<Circuit>) -> Result<Self, CircuitError> {
        let mut used = vec![false; map.n_flags()];
        for c in &circuits {
            for e in c.edges(map) {
                if std::mem::replace(&mut used[e.0], true) {
                    return Err(CircuitError::RepeatedEdge(e));
                }
            }
        }
        if let Some(e) = map.edges().into_iter().find(|e| !used[e.0]) {
            return Err(CircuitError::MissingEdge(e));
        }
        circuits.sort();
        Ok(CircuitDecomposition { circuits })
    }

    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    /// Circuit lengths in edges, ascending.
    pub fn lengths(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.circuits.iter().map(Circuit::len).collect();
        out.sort_unstable();
        out
    }
}

/// The circuits traced by a corneration: leave along a dart, cross its
/// edge, and continue along the other dart of the corner reached.
pub fn circuits_of(map: &FlagMap, l: &Corneration) -> CircuitDecomposition {
    let mut seen = vec![false; map.n_flags()];
    let mut circuits = Vec::new();
    for d0 in map.darts() {
        if seen[d0.0] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = d0;
        loop {
            let back = map.opposite_dart(d);
            seen[d.0] = true;
            seen[back.0] = true;
            darts.push(d);
            darts.push(back);
            d = l.corner_of(back).other(back);
            if d == d0 {
                break;
            }
        }
        circuits.push(Circuit::canonical(darts));
    }
    circuits.sort();
    CircuitDecomposition { circuits }
}

/// The corneration made of all turns of the circuits.
pub fn corneration_of(map: &FlagMap, c: &CircuitDecomposition) -> Result<Corneration, CornError> {
    let corners = c
        .circuits
        .iter()
        .flat_map(Circuit::turns)
        .map(|(a, b)| Corner::new(map, a, b))
        .collect::<Result<Vec<_>, _>>()?;
    Corneration::new(map, corners)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build;
    use crate::corn::{all_j_corners, named};

    #[test]
    fn straight_lines_of_the_torus() {
        let m = build::torus_grid(4, 4).unwrap();
        let l = Corneration::new(&m, all_j_corners(&m, 2).unwrap()).unwrap();
        let c = circuits_of(&m, &l);
        assert_eq!(c.lengths(), vec![4; 8]);
        assert_eq!(corneration_of(&m, &c).unwrap(), l);
    }

    #[test]
    fn face_class_circuits_are_faces() {
        let m = build::torus_grid(4, 4).unwrap();
        let l = named::face_class(&m, true).unwrap();
        let c = circuits_of(&m, &l);
        assert_eq!(c.lengths(), vec![4; 8]);
        let colours = m.face_bipartition().unwrap();
        for circuit in c.circuits() {
            let faces: BTreeSet<_> = circuit
                .darts()
                .iter()
                .step_by(2)
                .flat_map(|&d| [m.face_of(d.0), m.face_of(m.r2()[d.0])])
                .filter(|f| colours[f])
                .collect();
            assert_eq!(faces.len(), 1);
        }
    }

    #[test]
    fn theta_two_circuits() {
        // Three parallel edges; pair edges 0 and 1 at both ends, leaving
        // edge 2 alone, which cannot close up.
        let m = build::dipole(3).unwrap();
        let a = m.rotation_at_vertex(m.vertices()[0]).to_vec();
        let circuit = Circuit::new(&m, &[a[0], m.opposite_dart(a[1])]).unwrap();
        assert_eq!(circuit.len(), 2);
        assert!(matches!(
            CircuitDecomposition::new(&m, vec![circuit.clone()]),
            Err(CircuitError::MissingEdge(_))
        ));
        assert_eq!(Circuit::new(&m, &[a[0]]), Err(CircuitError::CircuitTooShort));
        assert_eq!(
            Circuit::new(&m, &[a[0], a[1]]),
            Err(CircuitError::NotClosed(m.opposite_dart(a[0])))
        );
    }

    #[test]
    fn doubled_edges_on_the_four_dipole() {
        let m = build::dipole(4).unwrap();
        let top = m.rotation_at_vertex(m.vertices()[0]).to_vec();
        let c1 = Circuit::new(&m, &[top[0], m.opposite_dart(top[1])]).unwrap();
        let c2 = Circuit::new(&m, &[top[2], m.opposite_dart(top[3])]).unwrap();
        let dec = CircuitDecomposition::new(&m, vec![c1, c2]).unwrap();
        let l = corneration_of(&m, &dec).unwrap();
        assert_eq!(l.len(), 4);
        // Each parallel pair is paired at both of its endpoints.
        assert!(l.contains_pair(top[0], top[1]));
        assert!(l.contains_pair(m.opposite_dart(top[0]), m.opposite_dart(top[1])));
        assert_eq!(circuits_of(&m, &l), dec);
    }

    #[test]
    fn canonical_form_ignores_start_and_direction() {
        let m = build::torus_grid(3, 3).unwrap();
        let l = Corneration::new(&m, all_j_corners(&m, 2).unwrap()).unwrap();
        for c in circuits_of(&m, &l).circuits() {
            let outs: Vec<DartId> = c.darts().iter().step_by(2).copied().collect();
            let mut rotated = outs.clone();
            rotated.rotate_left(1);
            assert_eq!(&Circuit::new(&m, &rotated).unwrap(), c);
            let ins: Vec<DartId> = c.darts().iter().skip(1).step_by(2).rev().copied().collect();
            assert_eq!(&Circuit::new(&m, &ins).unwrap(), c);
        }
    }
}
