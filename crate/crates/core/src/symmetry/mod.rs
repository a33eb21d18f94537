//! Automorphism groups of maps, as explicit lists of flag permutations.
//!
//! An automorphism commutes with `r0`, `r1`, `r2`, so it is determined by
//! the image of any single flag and at most `n_flags` of them exist. Groups
//! are therefore stored as element lists indexed by the image of flag 0,
//! which turns multiplication into a table lookup.

mod local;
mod reflex;
mod subgroups;

use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

pub use local::{local_action_group, LocalAction, LocalActionKind};
pub use reflex::{is_face_reflexible, is_half_reflexible, is_reflexible};
pub use subgroups::DEFAULT_GROUP_BOUND;

use crate::flagmap::{CellKind, FlagMap};
use crate::ops::propagate;
use crate::perm::classes;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("group of order {order} exceeds the search bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },
    #[error("permutation is not an automorphism of the map")]
    NotAnAutomorphism,
}

/// A map automorphism, as the image of every flag.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MapSymmetry(Arc<[usize]>);

impl MapSymmetry {
    /// Checks that `image` commutes with the three involutions of `map`.
    pub fn new(map: &FlagMap, image: Vec<usize>) -> Result<Self, SymmetryError> {
        let n = map.n_flags();
        if image.len() != n || image.iter().any(|&y| y >= n) {
            return Err(SymmetryError::NotAnAutomorphism);
        }
        let commutes = (0..3).all(|i| (0..n).all(|x| image[map.r(i)[x]] == map.r(i)[image[x]]));
        if !commutes {
            return Err(SymmetryError::NotAnAutomorphism);
        }
        Ok(MapSymmetry(image.into()))
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, flag: usize) -> usize {
        self.0[flag]
    }

    pub fn is_identity(&self) -> bool {
        self.0.first() == Some(&0)
    }
}

impl fmt::Debug for MapSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MapSymmetry(0 -> {})", self.0[0])
    }
}

/// A group of automorphisms of one map.
#[derive(Clone)]
pub struct SymGroup {
    n_flags: usize,
    // Sorted by image of flag 0, so the identity comes first.
    elements: Vec<MapSymmetry>,
    by_image0: Vec<u32>,
    generators: OnceLock<Vec<usize>>,
}

const ABSENT: u32 = u32::MAX;

impl fmt::Debug for SymGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymGroup")
            .field("order", &self.order())
            .field("n_flags", &self.n_flags)
            .finish()
    }
}

impl PartialEq for SymGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n_flags == other.n_flags && self.by_image0 == other.by_image0
    }
}

impl Eq for SymGroup {}

impl SymGroup {
    /// Builds a group from a list of automorphisms that is already closed
    /// under composition. Closure is checked in debug builds.
    pub fn from_elements(n_flags: usize, mut elements: Vec<MapSymmetry>) -> Self {
        elements.sort_by_key(|g| g.0[0]);
        elements.dedup_by_key(|g| g.0[0]);
        let mut by_image0 = vec![ABSENT; n_flags];
        for (i, g) in elements.iter().enumerate() {
            by_image0[g.0[0]] = i as u32;
        }
        let group = SymGroup {
            n_flags,
            elements,
            by_image0,
            generators: OnceLock::new(),
        };
        debug_assert!(
            group.order() > 512 || group.is_closed(),
            "element list is not a group"
        );
        group
    }

    pub fn trivial(n_flags: usize) -> Self {
        SymGroup::from_elements(n_flags, vec![MapSymmetry((0..n_flags).collect())])
    }

    fn is_closed(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.lookup(self.product_image0(a, b)).is_some()))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn n_flags(&self) -> usize {
        self.n_flags
    }

    pub fn elements(&self) -> &[MapSymmetry] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &MapSymmetry {
        &self.elements[i]
    }

    /// Index of the element sending flag 0 to `image0`.
    pub fn lookup(&self, image0: usize) -> Option<usize> {
        match self.by_image0[image0] {
            ABSENT => None,
            i => Some(i as usize),
        }
    }

    pub fn contains(&self, g: &MapSymmetry) -> bool {
        self.lookup(g.0[0]).is_some_and(|i| self.elements[i] == *g)
    }

    fn product_image0(&self, a: usize, b: usize) -> usize {
        self.elements[a].0[self.elements[b].0[0]]
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.lookup(self.product_image0(a, b))
            .expect("group is closed under composition")
    }

    pub fn inverse(&self, a: usize) -> usize {
        let g = &self.elements[a].0;
        let pre = g.iter().position(|&y| y == 0).expect("permutation");
        self.lookup(pre).expect("group is closed under inverses")
    }

    /// True when every flag is in one orbit; for automorphism groups this
    /// is the same as having order `n_flags`.
    pub fn is_flag_transitive(&self) -> bool {
        self.order() == self.n_flags
    }

    /// Element indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut out = vec![0];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(a) = queue.pop_front() {
            for &s in gens {
                let b = self.compose(a, s);
                if !seen[b] {
                    seen[b] = true;
                    out.push(b);
                    queue.push_back(b);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// A generating set, chosen greedily in element order: each element not
    /// yet generated is added.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut gens = Vec::new();
            let mut inside = vec![false; self.order()];
            inside[0] = true;
            for a in 1..self.order() {
                if inside[a] {
                    continue;
                }
                gens.push(a);
                inside = vec![false; self.order()];
                for b in self.closure(&gens) {
                    inside[b] = true;
                }
            }
            gens
        })
    }

    /// The subgroup with the given element indices (assumed closed).
    pub fn subgroup(&self, indices: &[usize]) -> SymGroup {
        SymGroup::from_elements(
            self.n_flags,
            indices.iter().map(|&i| self.elements[i].clone()).collect(),
        )
    }

    /// Elements satisfying `keep`, which must select a subgroup.
    pub fn filter(&self, keep: impl Fn(&MapSymmetry) -> bool) -> SymGroup {
        SymGroup::from_elements(
            self.n_flags,
            self.elements.iter().filter(|g| keep(g)).cloned().collect(),
        )
    }

    pub fn is_subgroup_of(&self, other: &SymGroup) -> bool {
        self.n_flags == other.n_flags && self.elements.iter().all(|g| other.contains(g))
    }

    /// Orbit labels of an action on `0..n_objects`, where `act(g, x)` is
    /// the image of object `x` under `g`. Labels are the smallest object of
    /// each orbit.
    pub fn orbit_labels_by(&self, n_objects: usize, act: impl Fn(&MapSymmetry, usize) -> usize) -> Vec<usize> {
        let mut label = vec![usize::MAX; n_objects];
        for start in 0..n_objects {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = start;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &s in self.generators() {
                    let y = act(&self.elements[s], x);
                    if label[y] == usize::MAX {
                        label[y] = start;
                        stack.push(y);
                    }
                }
            }
        }
        label
    }

    /// Orbits on flags, each sorted, ordered by smallest flag.
    pub fn flag_orbits(&self) -> Vec<Vec<usize>> {
        classes(&self.orbit_labels_by(self.n_flags, |g, x| g.apply(x)))
    }

    /// Orbits on the cells of one kind, as lists of cell ids.
    pub fn cell_orbits(&self, map: &FlagMap, kind: CellKind) -> Vec<Vec<usize>> {
        let labels = self.orbit_labels_by(map.n_flags(), |g, x| map.cell_of(kind, g.apply(x)));
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..map.n_flags() {
            if map.cell_of(kind, x) == x {
                by_root.entry(labels[x]).or_default().push(x);
            }
        }
        by_root.into_values().collect()
    }

    /// Orbit partition of flags or cells.
    pub fn orbits_on(&self, map: &FlagMap, target: OrbitTarget) -> Vec<Vec<usize>> {
        match target {
            OrbitTarget::Flags => self.flag_orbits(),
            OrbitTarget::Cells(kind) => self.cell_orbits(map, kind),
        }
    }

    /// Subgroups of index at most `k`, each listed once, in order of
    /// increasing index. Fails when the group is larger than `bound`.
    pub fn subgroups_up_to_index(&self, k: usize, bound: usize) -> Result<Vec<SymGroup>, SymmetryError> {
        subgroups::low_index(self, k, bound)
    }
}

/// What [`SymGroup::orbits_on`] acts on. Orbits on corners live with the
/// corneration types.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitTarget {
    Flags,
    Cells(CellKind),
}

/// All automorphisms of `map`, found by extending each candidate image of
/// flag 0.
pub fn automorphism_group(map: &FlagMap) -> SymGroup {
    let elements = (0..map.n_flags())
        .filter_map(|g| propagate(map, map, g))
        .map(|image| MapSymmetry(image.into()))
        .collect();
    SymGroup::from_elements(map.n_flags(), elements)
}
