//! Map operators acting on the involutions of a flag system, and
//! isomorphism testing.
//!
//! All operators keep the flag set: flag `x` of the input is flag `x` of the
//! output (for [`hole`], after splitting into components, see
//! [`OperatorResult::correspondence`]).

use thiserror::Error;

use crate::flagmap::{FlagMap, ValidationError};
use crate::perm::orbit_labels;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OpError {
    #[error("operator produced an invalid map: {0}")]
    DegenerateResult(#[from] ValidationError),
    #[error("hole operator needs uniform valence")]
    NonUniformValence,
    #[error("width {j} is out of range for valence {q}")]
    WidthOutOfRange { j: usize, q: usize },
}

fn derived_name(op: &str, m: &FlagMap) -> Option<String> {
    m.name().map(|n| format!("{op}({n})"))
}

fn rebuild(name: Option<String>, r0: Vec<usize>, r1: Vec<usize>, r2: Vec<usize>) -> Result<FlagMap, OpError> {
    let m = FlagMap::new(r0, r1, r2)?;
    Ok(match name {
        Some(n) => m.with_name(n),
        None => m,
    })
}

/// Swaps `r0` and `r2`, exchanging vertices and faces.
pub fn dual(m: &FlagMap) -> Result<FlagMap, OpError> {
    rebuild(
        derived_name("dual", m),
        m.r2().to_vec(),
        m.r1().to_vec(),
        m.r0().to_vec(),
    )
}

/// Replaces `r0` by `r0 r2`. The skeleton is unchanged and the faces of the
/// result are the Petrie paths of the input.
pub fn petrie(m: &FlagMap) -> Result<FlagMap, OpError> {
    let r0: Vec<usize> = (0..m.n_flags()).map(|x| m.r0()[m.r2()[x]]).collect();
    rebuild(
        derived_name("petrie", m),
        r0,
        m.r1().to_vec(),
        m.r2().to_vec(),
    )
}

/// `dual(petrie(dual(m)))`.
pub fn opposite(m: &FlagMap) -> Result<FlagMap, OpError> {
    let out = dual(&petrie(&dual(m)?)?)?;
    Ok(match derived_name("opp", m) {
        Some(n) => out.with_name(n),
        None => out,
    })
}

/// Result of an operator that may disconnect the map.
#[derive(Clone, Debug)]
pub struct OperatorResult {
    pub maps: Vec<FlagMap>,
    /// For each original flag, its component and its flag in that component.
    pub correspondence: Vec<(usize, usize)>,
}

impl OperatorResult {
    pub fn is_connected(&self) -> bool {
        self.maps.len() == 1
    }
}

/// The `j`-th hole operator: `r1` becomes `r1 (r2 r1)^(j-1)`.
///
/// Each vertex of valence `q` splits into `gcd(j, q)` vertices of valence
/// `q / gcd(j, q)`; the result may fall apart into several maps, which are
/// returned in order of their smallest original flag.
pub fn hole(m: &FlagMap, j: usize) -> Result<OperatorResult, OpError> {
    let q = m.uniform_valence().ok_or(OpError::NonUniformValence)?;
    if j == 0 || j >= q {
        return Err(OpError::WidthOutOfRange { j, q });
    }
    let n = m.n_flags();
    let (r0, r1, r2) = (m.r0(), m.r1(), m.r2());
    let new_r1: Vec<usize> = (0..n)
        .map(|x| {
            let mut y = x;
            for _ in 1..j {
                y = r2[r1[y]];
            }
            r1[y]
        })
        .collect();

    let labels = orbit_labels(n, &[r0, &new_r1, r2]);
    let mut roots: Vec<usize> = Vec::new();
    let mut correspondence = vec![(0, 0); n];
    let mut sizes: Vec<usize> = Vec::new();
    let mut comp_of_root = vec![usize::MAX; n];
    for x in 0..n {
        let root = labels[x];
        if comp_of_root[root] == usize::MAX {
            comp_of_root[root] = roots.len();
            roots.push(root);
            sizes.push(0);
        }
        let c = comp_of_root[root];
        correspondence[x] = (c, sizes[c]);
        sizes[c] += 1;
    }

    let mut maps = Vec::with_capacity(roots.len());
    for (c, &size) in sizes.iter().enumerate() {
        let mut p = [vec![0; size], vec![0; size], vec![0; size]];
        for x in (0..n).filter(|&x| correspondence[x].0 == c) {
            let local = correspondence[x].1;
            for (i, g) in [r0, &new_r1[..], r2].into_iter().enumerate() {
                p[i][local] = correspondence[g[x]].1;
            }
        }
        let [a, b, d] = p;
        let name = m.name().map(|nm| {
            if roots.len() == 1 {
                format!("hole{j}({nm})")
            } else {
                format!("hole{j}({nm})#{c}")
            }
        });
        maps.push(rebuild(name, a, b, d)?);
    }
    Ok(OperatorResult {
        maps,
        correspondence,
    })
}

// Extends `0 -> image` to a map of flags commuting with all three
// involutions, or returns None if that is inconsistent.
pub(crate) fn propagate(a: &FlagMap, b: &FlagMap, image: usize) -> Option<Vec<usize>> {
    let n = a.n_flags();
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    phi[0] = image;
    used[image] = true;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for i in 0..3 {
            let y = a.r(i)[x];
            let want = b.r(i)[phi[x]];
            if phi[y] == usize::MAX {
                if used[want] {
                    return None;
                }
                phi[y] = want;
                used[want] = true;
                stack.push(y);
            } else if phi[y] != want {
                return None;
            }
        }
    }
    Some(phi)
}

/// A flag bijection `phi` with `phi(r_i x) = r'_i phi(x)`, if one exists.
/// The candidate image of flag 0 is tried in increasing order, so the
/// returned bijection is the one with the smallest image of flag 0.
pub fn is_isomorphic(a: &FlagMap, b: &FlagMap) -> Option<Vec<usize>> {
    if a.n_flags() != b.n_flags()
        || a.n_vertices() != b.n_vertices()
        || a.n_faces() != b.n_faces()
    {
        return None;
    }
    (0..b.n_flags()).find_map(|g| propagate(a, b, g))
}

/// Componentwise isomorphism of two lists of maps, as a matching found by
/// trying components in order.
pub fn lists_isomorphic(a: &[FlagMap], b: &[FlagMap]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut taken = vec![false; b.len()];
    for x in a {
        match (0..b.len()).find(|&i| !taken[i] && is_isomorphic(x, &b[i]).is_some()) {
            Some(i) => taken[i] = true,
            None => return false,
        }
    }
    true
}
