//! Symmetry-type graphs of transitive cornerations.
//!
//! A diagram has one node per orbit of flags and, for each colour `i`, an
//! involution `s_i` on the nodes induced by `r_i`; a fixed point of `s_i` is
//! a semiedge. Nodes whose flags lie in corners of the corneration are
//! drawn as boxes, the others as ovals.

mod table;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::corn::{face_patterns, CornError, Corneration, FacePattern, Width};
use crate::flagmap::FlagMap;
use crate::perm::orbit_labels;
use crate::symmetry::{local_action_group, LocalActionKind, SymGroup};

pub use table::{canonical_diagrams, classify, Classification, TableRow, TABLE};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymtypeError {
    #[error("the group does not preserve the corneration")]
    GroupDoesNotPreserveL,
    #[error("the group is not transitive on the corneration")]
    NotTransitive,
    #[error("diagram involution {colour} is not an involution on {nodes} nodes")]
    BadInvolution { colour: usize, nodes: usize },
    #[error(transparent)]
    Corneration(#[from] CornError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Box,
    Oval,
}

/// One end of a diagram edge. A semiedge is a dart that is its own inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramDart {
    pub beg: usize,
    pub inv: usize,
    pub colour: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    shapes: Vec<Shape>,
    s: [Vec<usize>; 3],
}

/// A broken rule of a valid symmetry-type graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Not connected, or not 2 or 4 nodes.
    NodeCount(usize),
    Disconnected,
    /// A colour-2 semiedge at this node.
    TwoSemiedge(usize),
    /// A colour-2 edge between nodes of equal shape.
    TwoSameShape(usize),
    /// A colour-1 edge between nodes of different shape.
    OneChangesShape(usize),
    /// Two boxes not joined by a colour-1 edge.
    BoxesNotOneAdjacent(usize, usize),
    /// The 0-2 walk of length 4 from this node does not close.
    ZeroTwoOpen(usize),
}

impl Violation {
    /// Number of the rule broken, `1..=5`.
    pub fn rule(self) -> u8 {
        match self {
            Violation::NodeCount(_) | Violation::Disconnected => 1,
            Violation::TwoSemiedge(_) | Violation::TwoSameShape(_) => 2,
            Violation::OneChangesShape(_) => 3,
            Violation::BoxesNotOneAdjacent(..) => 4,
            Violation::ZeroTwoOpen(_) => 5,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule {}: ", self.rule())?;
        match self {
            Violation::NodeCount(n) => write!(f, "{n} nodes"),
            Violation::Disconnected => write!(f, "not connected"),
            Violation::TwoSemiedge(x) => write!(f, "2-semiedge at node {x}"),
            Violation::TwoSameShape(x) => write!(f, "2-edge at node {x} keeps the shape"),
            Violation::OneChangesShape(x) => write!(f, "1-edge at node {x} changes the shape"),
            Violation::BoxesNotOneAdjacent(a, b) => write!(f, "boxes {a} and {b} not 1-adjacent"),
            Violation::ZeroTwoOpen(x) => write!(f, "0-2 walk from node {x} is open"),
        }
    }
}

impl Diagram {
    pub fn new(shapes: Vec<Shape>, s: [Vec<usize>; 3]) -> Result<Self, SymtypeError> {
        let n = shapes.len();
        for (colour, p) in s.iter().enumerate() {
            if p.len() != n || p.iter().any(|&y| y >= n) || (0..n).any(|x| p[p[x]] != x) {
                return Err(SymtypeError::BadInvolution { colour, nodes: n });
            }
        }
        Ok(Diagram { shapes, s })
    }

    pub fn node_count(&self) -> usize {
        self.shapes.len()
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    /// The involution of colour `i`.
    pub fn s(&self, i: usize) -> &[usize] {
        &self.s[i]
    }

    /// Every dart, ordered by colour then node: dart `3 x + i` leaves node
    /// `x` along colour `i`.
    pub fn darts(&self) -> Vec<DiagramDart> {
        let n = self.node_count();
        (0..n)
            .flat_map(|x| {
                (0..3).map(move |i| DiagramDart {
                    beg: x,
                    inv: 3 * self.s[i][x] + i,
                    colour: i,
                })
            })
            .collect()
    }

    /// Number of components of the subdiagram with the given colours.
    pub fn components(&self, colours: &[usize]) -> usize {
        let gens: Vec<&[usize]> = colours.iter().map(|&i| &self.s[i][..]).collect();
        let labels = orbit_labels(self.node_count(), &gens);
        labels.iter().enumerate().filter(|&(x, &l)| x == l).count()
    }

    /// The diagram of the Petrie dual: `s0` becomes `s0 s2`.
    pub fn petrie(&self) -> Diagram {
        let [s0, s1, s2] = &self.s;
        let t0: Vec<usize> = (0..self.node_count()).map(|x| s0[s2[x]]).collect();
        Diagram {
            shapes: self.shapes.clone(),
            s: [t0, s1.clone(), s2.clone()],
        }
    }

    /// Shape word read around a face from node `x`, boxes as `true`.
    pub fn face_word(&self, x: usize) -> Vec<bool> {
        let mut out = Vec::new();
        let mut y = x;
        loop {
            out.push(self.shapes[y] == Shape::Box);
            y = self.s[0][self.s[1][y]];
            if y == x {
                return out;
            }
        }
    }

    /// The smallest relabelling under all node permutations.
    pub fn canonical(&self) -> Diagram {
        permutations(self.node_count())
            .into_iter()
            .map(|p| self.relabel(&p))
            .min()
            .expect("at least one permutation")
    }

    // Node `x` becomes `p[x]`.
    fn relabel(&self, p: &[usize]) -> Diagram {
        let n = self.node_count();
        let mut inv = vec![0; n];
        for (x, &y) in p.iter().enumerate() {
            inv[y] = x;
        }
        let shapes = (0..n).map(|y| self.shapes[inv[y]]).collect();
        let s = [0, 1, 2].map(|i| (0..n).map(|y| p[self.s[i][inv[y]]]).collect());
        Diagram { shapes, s }
    }

    pub fn attributes(&self) -> DiagramAttributes {
        let patterns = (0..self.node_count())
            .map(|x| crate::corn::pattern_of_word(&self.face_word(x)))
            .collect();
        DiagramAttributes {
            node_count: self.node_count(),
            v_orbits: self.components(&[1, 2]),
            e_orbits: self.components(&[0, 2]),
            f_orbits: self.components(&[0, 1]),
            patterns,
            local_type: self.local_type(),
        }
    }

    /// Local type read off the `{1, 2}`-component of node 0.
    pub fn local_type(&self) -> LocalActionKind {
        let labels = orbit_labels(self.node_count(), &[&self.s[1], &self.s[2]]);
        let comp: Vec<usize> = (0..self.node_count()).filter(|&x| labels[x] == labels[0]).collect();
        let one_semiedges = comp.iter().filter(|&&x| self.s[1][x] == x).count();
        match (comp.len(), one_semiedges) {
            (2, 2) => LocalActionKind::HD,
            (4, 2) => LocalActionKind::QD,
            (4, 0) => LocalActionKind::HC,
            _ => LocalActionKind::Other,
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn rec(p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = p.iter().position(|&x| x == usize::MAX) else {
            out.push(p.clone());
            return;
        };
        p[i] = i;
        rec(p, out);
        for j in i + 1..p.len() {
            if p[j] == usize::MAX {
                p[i] = j;
                p[j] = i;
                rec(p, out);
                p[j] = usize::MAX;
            }
        }
        p[i] = usize::MAX;
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; n], &mut out);
    out
}

/// Orbit counts, face patterns and local type of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramAttributes {
    pub node_count: usize,
    pub v_orbits: usize,
    pub e_orbits: usize,
    pub f_orbits: usize,
    pub patterns: BTreeSet<FacePattern>,
    pub local_type: LocalActionKind,
}

impl DiagramAttributes {
    pub fn pattern_string(&self) -> String {
        self.patterns
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for DiagramAttributes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V={} E={} F={} pattern={} local={}",
            self.v_orbits,
            self.e_orbits,
            self.f_orbits,
            self.pattern_string(),
            self.local_type
        )
    }
}

/// Checks the five rules a symmetry-type graph of a transitive corneration
/// obeys, reporting the first one broken.
pub fn satisfies_diagram_constraints(d: &Diagram) -> Result<(), Violation> {
    let n = d.node_count();
    if n != 2 && n != 4 {
        return Err(Violation::NodeCount(n));
    }
    if d.components(&[0, 1, 2]) != 1 {
        return Err(Violation::Disconnected);
    }
    let [s0, s1, s2] = &d.s;
    for x in 0..n {
        if s2[x] == x {
            return Err(Violation::TwoSemiedge(x));
        }
        if d.shapes[s2[x]] == d.shapes[x] {
            return Err(Violation::TwoSameShape(x));
        }
    }
    for x in 0..n {
        if d.shapes[s1[x]] != d.shapes[x] {
            return Err(Violation::OneChangesShape(x));
        }
    }
    let boxes: Vec<usize> = (0..n).filter(|&x| d.shapes[x] == Shape::Box).collect();
    for &a in &boxes {
        for &b in &boxes {
            if a < b && s1[a] != b {
                return Err(Violation::BoxesNotOneAdjacent(a, b));
            }
        }
    }
    for x in 0..n {
        if s0[s2[s0[s2[x]]]] != x {
            return Err(Violation::ZeroTwoOpen(x));
        }
    }
    Ok(())
}

/// Every valid diagram up to isomorphism, in canonical order.
pub fn enumerate_valid_diagrams() -> Vec<Diagram> {
    let mut found = BTreeSet::new();
    for n in [2usize, 4] {
        let invs = involutions(n);
        for mask in 0..(1u32 << n) {
            let shapes: Vec<Shape> = (0..n)
                .map(|x| if mask >> x & 1 == 1 { Shape::Oval } else { Shape::Box })
                .collect();
            for s0 in &invs {
                for s1 in &invs {
                    for s2 in &invs {
                        let d = Diagram {
                            shapes: shapes.clone(),
                            s: [s0.clone(), s1.clone(), s2.clone()],
                        };
                        if satisfies_diagram_constraints(&d).is_ok() {
                            found.insert(d.canonical());
                        }
                    }
                }
            }
        }
    }
    found.into_iter().collect()
}

/// A node bijection from `a` to `b` preserving shapes and all three
/// involutions, if one exists.
pub fn diagram_isomorphic(a: &Diagram, b: &Diagram) -> Option<Vec<usize>> {
    if a.node_count() != b.node_count() {
        return None;
    }
    permutations(a.node_count())
        .into_iter()
        .find(|p| &a.relabel(p) == b)
}

/// The symmetry-type graph of `l` under `g`.
///
/// For width `j > 1` the corners of `l` are the wedges of the `j`-hole map,
/// so the quotient is taken of the hole involutions `r0`,
/// `r1 (r2 r1)^(j-1)`, `r2` on the same flags.
pub fn symmetry_type_graph(map: &FlagMap, g: &SymGroup, l: &Corneration) -> Result<Diagram, SymtypeError> {
    let Width::Uniform(j) = l.width() else {
        return Err(CornError::WidthMismatch.into());
    };
    if l.corners().first().is_some_and(|c| c.is_straight()) {
        return Err(CornError::StraightCornerHasNoSide.into());
    }
    if !g.elements().iter().all(|s| l.is_preserved_by(map, s)) {
        return Err(SymtypeError::GroupDoesNotPreserveL);
    }
    let n = map.n_flags();
    let (r1, r2) = (map.r1(), map.r2());
    let hole_r1: Vec<usize> = (0..n)
        .map(|x| {
            let mut y = x;
            for _ in 1..j {
                y = r2[r1[y]];
            }
            r1[y]
        })
        .collect();
    let gens: [&[usize]; 3] = [map.r0(), &hole_r1, r2];

    let labels = g.orbit_labels_by(n, |s, x| s.apply(x));
    let mut node_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if labels[x] == x {
            node_of[x] = reps.len();
            reps.push(x);
        }
    }
    for x in 0..n {
        node_of[x] = node_of[labels[x]];
    }
    let shapes = reps
        .iter()
        .map(|&x| {
            let (a, b) = (map.dart_of(x), map.dart_of(hole_r1[x]));
            if l.contains_pair(a, b) {
                Shape::Box
            } else {
                Shape::Oval
            }
        })
        .collect();
    let s = [0, 1, 2].map(|i| reps.iter().map(|&x| node_of[gens[i][x]]).collect());
    Ok(Diagram { shapes, s })
}

/// Attributes of `l` under `g` computed on the map: orbit counts from the
/// diagram, face patterns from the corneration itself for wedges (from the
/// diagram otherwise), and the local type from the vertex stabilizer.
pub fn map_attributes(
    map: &FlagMap,
    g: &SymGroup,
    l: &Corneration,
    d: &Diagram,
) -> Result<DiagramAttributes, SymtypeError> {
    let mut attrs = d.attributes();
    if l.width() == Width::Uniform(1) {
        attrs.patterns = face_patterns(map, l)?.letters();
    }
    let v = map.vertices()[0];
    attrs.local_type = local_action_group(map, g, v).kind;
    Ok(attrs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_node(s0: [usize; 2]) -> Diagram {
        Diagram::new(
            vec![Shape::Box, Shape::Oval],
            [s0.to_vec(), vec![0, 1], vec![1, 0]],
        )
        .unwrap()
    }

    #[test]
    fn twelve_diagrams() {
        let all = enumerate_valid_diagrams();
        assert_eq!(all.len(), 12);
        assert_eq!(all.iter().filter(|d| d.node_count() == 2).count(), 2);
        for (i, a) in all.iter().enumerate() {
            assert!(satisfies_diagram_constraints(a).is_ok());
            for b in &all[i + 1..] {
                assert!(diagram_isomorphic(a, b).is_none());
            }
        }
    }

    #[test]
    fn rule_witnesses() {
        let three = Diagram::new(
            vec![Shape::Box, Shape::Oval, Shape::Oval],
            [vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2]],
        )
        .unwrap();
        assert_eq!(satisfies_diagram_constraints(&three).unwrap_err().rule(), 1);
        let semi = Diagram::new(
            vec![Shape::Box, Shape::Oval],
            [vec![1, 0], vec![0, 1], vec![0, 1]],
        )
        .unwrap();
        assert_eq!(
            satisfies_diagram_constraints(&semi),
            Err(Violation::TwoSemiedge(0))
        );
        let apart = Diagram::new(
            vec![Shape::Box, Shape::Box, Shape::Oval, Shape::Oval],
            [vec![0, 1, 2, 3], vec![0, 1, 3, 2], vec![2, 3, 0, 1]],
        )
        .unwrap();
        assert_eq!(
            satisfies_diagram_constraints(&apart),
            Err(Violation::BoxesNotOneAdjacent(0, 1))
        );
        let open = Diagram::new(
            vec![Shape::Box, Shape::Box, Shape::Oval, Shape::Oval],
            [vec![1, 0, 2, 3], vec![1, 0, 2, 3], vec![2, 3, 0, 1]],
        )
        .unwrap();
        assert_eq!(satisfies_diagram_constraints(&open).unwrap_err().rule(), 5);
        assert!(matches!(
            Diagram::new(vec![Shape::Box], [vec![0], vec![0], vec![1]]),
            Err(SymtypeError::BadInvolution { colour: 2, .. })
        ));
    }

    #[test]
    fn petrie_swaps_the_two_node_diagrams() {
        let a = two_node([0, 1]);
        let f = two_node([1, 0]);
        assert_eq!(a.attributes().f_orbits, 2);
        assert_eq!(f.attributes().f_orbits, 1);
        assert!(diagram_isomorphic(&a.petrie(), &f).is_some());
        assert!(diagram_isomorphic(&a, &f).is_none());
        assert_eq!(diagram_isomorphic(&a, &a), Some(vec![0, 1]));
        assert_eq!(a.darts().len(), 6);
        assert_eq!(a.darts()[0], DiagramDart { beg: 0, inv: 0, colour: 0 });
    }

    #[test]
    fn involution_counts() {
        assert_eq!(involutions(2).len(), 2);
        assert_eq!(involutions(4).len(), 10);
        assert_eq!(permutations(4).len(), 24);
    }
}
