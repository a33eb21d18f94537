//! Symmetric cornerations of odd width from a two-colouring of flags.

use crate::flagmap::FlagMap;
use crate::ops;
use crate::symmetry::{is_face_reflexible, SymGroup, DEFAULT_GROUP_BOUND};

use super::{all_j_corners, CornError, Corneration};

/// The pair of cornerations built from a half-reflexible group.
#[derive(Clone, Debug)]
pub struct ColouredPair {
    /// Corners whose interior boundary wedges lie in the orbit of flag 0.
    pub red: Corneration,
    pub green: Corneration,
    /// The half-reflexible group used, acting on the map or its Petrie dual.
    pub group: SymGroup,
    /// Whether the group was found on the Petrie dual.
    pub via_petrie: bool,
}

/// Builds two symmetric `j`-cornerations from a subgroup of `Aut(map)`
/// acting half-reflexibly on the map or on its Petrie dual.
///
/// The two flag orbits of such a group colour every wedge. For odd `j` both
/// interior boundary wedges of a `j`-corner have the same colour, and the
/// corners of each colour form a corneration.
pub fn symmetric_cornerations_from_coloring(map: &FlagMap, j: usize) -> Result<ColouredPair, CornError> {
    let q = map.uniform_valence().ok_or(CornError::NonUniformValence)?;
    if q % 2 != 0 {
        return Err(CornError::OddValence(q));
    }
    if j.is_multiple_of(2) || 2 * j >= q {
        return Err(CornError::WidthOutOfRange { j, q });
    }
    let (group, via_petrie) = match is_face_reflexible(map, DEFAULT_GROUP_BOUND)? {
        Some(g) => (g, false),
        None => {
            let p = ops::petrie(map)?;
            match is_face_reflexible(&p, DEFAULT_GROUP_BOUND)? {
                Some(g) => (g, true),
                None => return Err(CornError::NoHalfReflexiveGroup),
            }
        }
    };
    let labels = group.orbit_labels_by(map.n_flags(), |s, x| s.apply(x));
    let red_label = labels[0];
    let mut red = Vec::new();
    let mut green = Vec::new();
    for c in all_j_corners(map, j)? {
        let [w, _] = c.interior_boundary_wedges(map)?;
        if labels[w.0] == red_label {
            red.push(c);
        } else {
            green.push(c);
        }
    }
    Ok(ColouredPair {
        red: Corneration::new(map, red)?,
        green: Corneration::new(map, green)?,
        group,
        via_petrie,
    })
}
