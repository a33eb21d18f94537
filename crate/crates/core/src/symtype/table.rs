//! The table of transitive corneration groups and classification against it.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::corn::{Corneration, FacePattern};
use crate::flagmap::FlagMap;
use crate::symmetry::{LocalActionKind, SymGroup};

use super::{
    diagram_isomorphic, enumerate_valid_diagrams, map_attributes, symmetry_type_graph, Diagram,
    DiagramAttributes, SymtypeError,
};

/// One row of the table, as printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub letter: char,
    pub v_orbits: usize,
    pub e_orbits: usize,
    pub f_orbits: usize,
    pub patterns: &'static [FacePattern],
    pub local_type: LocalActionKind,
}

use FacePattern::{A, B, C, D, E};
use LocalActionKind::{HC, HD, QD};

const fn row(
    letter: char,
    v_orbits: usize,
    e_orbits: usize,
    f_orbits: usize,
    patterns: &'static [FacePattern],
    local_type: LocalActionKind,
) -> TableRow {
    TableRow {
        letter,
        v_orbits,
        e_orbits,
        f_orbits,
        patterns,
        local_type,
    }
}

pub const TABLE: [TableRow; 12] = [
    row('a', 1, 1, 2, &[A, E], HD),
    row('b', 1, 1, 1, &[A, E], HC),
    row('c', 1, 2, 2, &[A, E], HC),
    row('d', 1, 1, 2, &[A, E], QD),
    row('e', 1, 2, 3, &[A, E], QD),
    row('f', 1, 1, 1, &[B], HD),
    row('g', 1, 1, 1, &[B], HC),
    row('h', 1, 2, 2, &[B], HC),
    row('i', 1, 1, 1, &[B], QD),
    row('j', 1, 2, 2, &[B], QD),
    row('k', 1, 2, 2, &[C, E], QD),
    row('l', 1, 2, 1, &[D], HC),
];

impl TableRow {
    /// Number of the five attribute columns where `attrs` differs.
    pub fn mismatches(&self, attrs: &DiagramAttributes) -> usize {
        let patterns: BTreeSet<FacePattern> = self.patterns.iter().copied().collect();
        [
            self.v_orbits == attrs.v_orbits,
            self.e_orbits == attrs.e_orbits,
            self.f_orbits == attrs.f_orbits,
            patterns == attrs.patterns,
            self.local_type == attrs.local_type,
        ]
        .iter()
        .filter(|ok| !**ok)
        .count()
    }

    pub fn matches(&self, attrs: &DiagramAttributes) -> bool {
        self.mismatches(attrs) == 0
    }
}

/// The valid diagrams, each with the table row it stands for.
///
/// A diagram takes the row whose attributes it matches exactly; each
/// remaining diagram takes the unique remaining row it matches in all but
/// one column. Panics if the diagrams do not pair off one to one with the rows.
pub fn canonical_diagrams() -> &'static [(char, Diagram)] {
    static LABELLED: OnceLock<Vec<(char, Diagram)>> = OnceLock::new();
    LABELLED.get_or_init(|| {
        let diagrams = enumerate_valid_diagrams();
        assert_eq!(diagrams.len(), TABLE.len(), "expected one valid diagram per table row");
        let mut out: Vec<(char, Diagram)> = Vec::new();
        let mut rest = Vec::new();
        for d in diagrams {
            let attrs = d.attributes();
            match TABLE.iter().find(|r| r.matches(&attrs)) {
                Some(r) => out.push((r.letter, d)),
                None => rest.push(d),
            }
        }
        let taken: BTreeSet<char> = out.iter().map(|(c, _)| *c).collect();
        for d in rest {
            let attrs = d.attributes();
            let near: Vec<char> = TABLE
                .iter()
                .filter(|r| !taken.contains(&r.letter) && r.mismatches(&attrs) == 1)
                .map(|r| r.letter)
                .collect();
            match near[..] {
                [c] => out.push((c, d)),
                _ => panic!("diagram with attributes {attrs} has no unique near row"),
            }
        }
        out.sort_by_key(|(c, _)| *c);
        let letters: BTreeSet<char> = out.iter().map(|(c, _)| *c).collect();
        assert_eq!(letters.len(), TABLE.len(), "two diagrams took the same row");
        out
    })
}

/// Result of classifying a transitive corneration.
#[derive(Clone, Debug)]
pub struct Classification {
    /// Row of the valid diagram isomorphic to the symmetry-type graph.
    pub row: Option<char>,
    pub attributes: DiagramAttributes,
    pub diagram: Diagram,
    /// The attributes equal the printed row in every column.
    pub matches_table: bool,
}

/// Classifies `l` under a group `g` transitive on it.
pub fn classify(map: &FlagMap, g: &SymGroup, l: &Corneration) -> Result<Classification, SymtypeError> {
    let diagram = symmetry_type_graph(map, g, l)?;
    if !l.is_transitive_under(map, g) {
        return Err(SymtypeError::NotTransitive);
    }
    let attributes = map_attributes(map, g, l, &diagram)?;
    let row = canonical_diagrams()
        .iter()
        .find(|(_, d)| diagram_isomorphic(&diagram, d).is_some())
        .map(|(c, _)| *c);
    let matches_table = row.is_some_and(|c| {
        TABLE
            .iter()
            .find(|r| r.letter == c)
            .is_some_and(|r| r.matches(&attributes))
    });
    Ok(Classification {
        row,
        attributes,
        diagram,
        matches_table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_gets_one_diagram() {
        let labelled = canonical_diagrams();
        let letters: String = labelled.iter().map(|(c, _)| *c).collect();
        assert_eq!(letters, "abcdefghijkl");
    }

    #[test]
    fn rows_differing_from_the_diagrams() {
        // The orbit counts of these three rows disagree with every valid
        // diagram; each differs from its diagram in the face column only.
        let mut off = Vec::new();
        for (c, d) in canonical_diagrams() {
            let attrs = d.attributes();
            let r = TABLE.iter().find(|r| r.letter == *c).unwrap();
            if !r.matches(&attrs) {
                assert_eq!(r.mismatches(&attrs), 1);
                assert_ne!(r.f_orbits, attrs.f_orbits);
                off.push((*c, attrs.f_orbits));
            }
        }
        assert_eq!(off, vec![('b', 2), ('h', 1), ('j', 1)]);
    }

    #[test]
    fn table_tuples_are_distinct() {
        for (i, a) in TABLE.iter().enumerate() {
            for b in &TABLE[i + 1..] {
                assert!(
                    (a.v_orbits, a.e_orbits, a.f_orbits, a.patterns, a.local_type)
                        != (b.v_orbits, b.e_orbits, b.f_orbits, b.patterns, b.local_type)
                );
            }
        }
    }
}
