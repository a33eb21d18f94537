//! The shape of a corneration around one vertex.

use std::collections::BTreeSet;
use std::fmt;

use crate::flagmap::{FlagMap, VertexId};

use super::{CornError, Corneration};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalClass {
    /// Some numbering puts the corners at `c_0, c_2, c_4, ...`.
    StandardOdd,
    /// Some numbering puts the corners at `c_i` with `i mod 4` in `{0, 3}`.
    StandardEven,
    Other,
}

impl fmt::Display for LocalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LocalClass::StandardOdd => "standard-odd",
            LocalClass::StandardEven => "standard-even",
            LocalClass::Other => "other",
        };
        f.write_str(s)
    }
}

/// `L_v` written in the rotation numbering at `v`: corner `(i, i + j)` is
/// recorded as `i`, the position its interior starts at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCorneration {
    pub vertex: VertexId,
    pub q: usize,
    pub j: usize,
    pub starts: Vec<usize>,
    pub straight: bool,
    pub class: LocalClass,
}

/// Classifies `L_v` against the standard local cornerations, trying all
/// `2q` renumberings of the darts at `v`.
pub fn local_corneration(map: &FlagMap, l: &Corneration, v: VertexId) -> Result<LocalCorneration, CornError> {
    let corners = l.at_vertex(v);
    let q = map.valence(v);
    let j = match l.width() {
        super::Width::Uniform(j) => j,
        super::Width::Mixed => return Err(CornError::WidthMismatch),
    };
    let mut starts: Vec<usize> = corners.iter().map(|c| c.positions().0).collect();
    starts.sort_unstable();
    let straight = 2 * j == q;
    let pairs: Vec<(usize, usize)> = corners.iter().map(|c| c.positions()).collect();
    let class = classify(q, j, &pairs);
    Ok(LocalCorneration {
        vertex: v,
        q,
        j,
        starts,
        straight,
        class,
    })
}

fn pair_set(q: usize, j: usize, starts: impl Iterator<Item = usize>) -> BTreeSet<(usize, usize)> {
    starts
        .map(|i| {
            let (a, b) = (i % q, (i + j) % q);
            (a.min(b), a.max(b))
        })
        .collect()
}

pub(super) fn classify(q: usize, j: usize, pairs: &[(usize, usize)]) -> LocalClass {
    let odd = pair_set(q, j, (0..q).step_by(2));
    let even = if q.is_multiple_of(4) {
        Some(pair_set(q, j, (0..q).filter(|i| i % 4 == 0 || i % 4 == 3)))
    } else {
        None
    };
    for shift in 0..q {
        for flip in [false, true] {
            let renumbered: BTreeSet<(usize, usize)> = pairs
                .iter()
                .map(|&(a, b)| {
                    let f = |x: usize| {
                        if flip {
                            (shift + q - x) % q
                        } else {
                            (shift + x) % q
                        }
                    };
                    let (a, b) = (f(a), f(b));
                    (a.min(b), a.max(b))
                })
                .collect();
            if q.is_multiple_of(2) && renumbered == odd {
                return LocalClass::StandardOdd;
            }
            if even.as_ref() == Some(&renumbered) {
                return LocalClass::StandardEven;
            }
        }
    }
    LocalClass::Other
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corners(q: usize, j: usize, starts: &[usize]) -> Vec<(usize, usize)> {
        starts.iter().map(|&i| (i % q, (i + j) % q)).collect()
    }

    #[test]
    fn standard_forms() {
        assert_eq!(classify(8, 1, &corners(8, 1, &[0, 2, 4, 6])), LocalClass::StandardOdd);
        assert_eq!(classify(8, 1, &corners(8, 1, &[1, 3, 5, 7])), LocalClass::StandardOdd);
        assert_eq!(classify(8, 3, &corners(8, 3, &[0, 2, 4, 6])), LocalClass::StandardOdd);
        assert_eq!(classify(8, 2, &corners(8, 2, &[0, 3, 4, 7])), LocalClass::StandardEven);
        assert_eq!(classify(8, 2, &corners(8, 2, &[1, 4, 5, 0])), LocalClass::StandardEven);
        assert_eq!(classify(12, 2, &corners(12, 2, &[0, 1, 4, 5, 8, 9])), LocalClass::StandardEven);
    }

    #[test]
    fn reflected_numbering_is_found() {
        // The mirror image of c_0, c_3, c_4, c_7 at q = 8, j = 2.
        let mirrored: Vec<(usize, usize)> = corners(8, 2, &[0, 3, 4, 7])
            .into_iter()
            .map(|(a, b)| ((8 - a) % 8, (8 - b) % 8))
            .collect();
        assert_eq!(classify(8, 2, &mirrored), LocalClass::StandardEven);
    }

    #[test]
    fn other_forms() {
        let wedges = vec![(0, 1), (2, 3), (4, 5), (7, 6)];
        assert_eq!(classify(8, 1, &wedges), LocalClass::StandardOdd);
        // Every 2-corneration at q = 8 is standard; at q = 12 with j = 3
        // three consecutive starts are not.
        assert_eq!(classify(8, 2, &corners(8, 2, &[0, 1, 4, 5])), LocalClass::StandardEven);
        assert_eq!(classify(12, 3, &corners(12, 3, &[0, 1, 2, 6, 7, 8])), LocalClass::Other);
    }
}
