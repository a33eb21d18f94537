//! Moving cornerations along operators that keep the darts.

use crate::flagmap::{DartId, FlagMap};
use crate::ops::{self, OperatorResult};

use super::{CornError, Corneration, Width};

/// Reads `l` as a corneration of `target`, a map on the same flags with
/// the same `r1` and `r2`, such as the Petrie dual. Widths are unchanged.
pub fn transfer_petrie(target: &FlagMap, l: &Corneration) -> Result<Corneration, CornError> {
    Corneration::from_pairs(target, &l.dart_pairs())
}

/// A corneration carried to the components of a hole operator.
#[derive(Clone, Debug)]
pub struct HoleTransfer {
    pub result: OperatorResult,
    /// One wedge corneration per component.
    pub cornerations: Vec<Corneration>,
}

/// Carries a `j`-uniform corneration to `hole(map, j)`, where its corners
/// become wedges.
pub fn transfer_hole(map: &FlagMap, l: &Corneration, j: usize) -> Result<HoleTransfer, CornError> {
    if l.width() != Width::Uniform(j) {
        return Err(CornError::WidthMismatch);
    }
    let result = ops::hole(map, j)?;
    let mut pairs: Vec<Vec<(DartId, DartId)>> = vec![Vec::new(); result.maps.len()];
    for c in l.corners() {
        let (a, b) = c.darts();
        let (ca, xa) = result.correspondence[a.0];
        let (cb, xb) = result.correspondence[b.0];
        debug_assert_eq!(ca, cb, "a corner stays inside one component");
        let m = &result.maps[ca];
        pairs[ca].push((m.dart_of(xa), m.dart_of(xb)));
    }
    let cornerations = result
        .maps
        .iter()
        .zip(&pairs)
        .map(|(m, p)| Corneration::from_pairs(m, p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HoleTransfer {
        result,
        cornerations,
    })
}
