//! Reflexible, half-reflexible and face-reflexible maps.

use crate::flagmap::FlagMap;

use super::{automorphism_group, SymGroup, SymmetryError};

/// Whether `Aut(map)` is transitive on flags.
pub fn is_reflexible(map: &FlagMap) -> bool {
    automorphism_group(map).is_flag_transitive()
}

/// `g` acts half-reflexibly: it is not flag-transitive, yet every face
/// stabilizer is transitive on the flags of its face. Since a symmetry
/// taking one flag of a face to another fixes that face, this is the same
/// as every face lying inside a single flag orbit.
pub fn is_half_reflexible(map: &FlagMap, g: &SymGroup) -> bool {
    if g.is_flag_transitive() {
        return false;
    }
    let labels = g.orbit_labels_by(map.n_flags(), |s, x| s.apply(x));
    (0..map.n_flags()).all(|x| labels[x] == labels[map.r0()[x]] && labels[x] == labels[map.r1()[x]])
}

/// A subgroup of `Aut(map)` acting half-reflexibly, if there is one.
///
/// For reflexible maps this is decided by face-bipartiteness: the
/// colour-preserving symmetries of a face 2-colouring form the group, and
/// without such a colouring none exists. Otherwise the subgroups of index
/// at most 2 are scanned.
pub fn is_face_reflexible(map: &FlagMap, bound: usize) -> Result<Option<SymGroup>, SymmetryError> {
    let aut = automorphism_group(map);
    if aut.is_flag_transitive() {
        let Some(colours) = map.face_bipartition() else {
            return Ok(None);
        };
        let base = colours[&map.face_of(0)];
        let g = aut.filter(|s| colours[&map.face_of(s.apply(0))] == base);
        debug_assert!(is_half_reflexible(map, &g));
        return Ok(Some(g));
    }
    Ok(aut
        .subgroups_up_to_index(2, bound)?
        .into_iter()
        .find(|g| is_half_reflexible(map, g)))
}
