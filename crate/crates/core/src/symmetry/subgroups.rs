//! Low-index subgroup search on an explicit group.
//!
//! A subgroup of index `m` is the stabilizer of point 0 in a transitive
//! action on `0..m`. The action is built one generator image at a time
//! while walking the Cayley graph breadth first from the identity; points
//! are numbered in order of discovery, so each subgroup is produced exactly
//! once.

use std::collections::VecDeque;

use super::{SymGroup, SymmetryError};

/// Largest group order accepted by the exhaustive search.
pub const DEFAULT_GROUP_BOUND: usize = 20_000;

const UNSET: u8 = u8::MAX;

struct Search<'a> {
    group: &'a SymGroup,
    gens: &'a [usize],
    order: Vec<usize>,
    m: usize,
    found: Vec<Vec<usize>>,
}

#[derive(Clone)]
struct State {
    point: Vec<u8>,
    image: Vec<Vec<u8>>,
    preimage: Vec<Vec<u8>>,
    used: usize,
    // Position in the BFS order of the next element to expand, and the next
    // generator to try on it.
    cursor: usize,
    gen: usize,
}

impl Search<'_> {
    fn run(&mut self, mut st: State) {
        let n_gens = self.gens.len();
        while st.cursor < self.order.len() {
            let g = self.order[st.cursor];
            let x = st.point[g] as usize;
            if st.gen == n_gens {
                st.cursor += 1;
                st.gen = 0;
                continue;
            }
            let s = st.gen;
            let y = st.image[s][x];
            if y == UNSET {
                let limit = (st.used + 1).min(self.m);
                for cand in 0..limit {
                    if st.preimage[s][cand] != UNSET {
                        continue;
                    }
                    let mut next = st.clone();
                    if cand == next.used {
                        next.used += 1;
                    }
                    next.image[s][x] = cand as u8;
                    next.preimage[s][cand] = x as u8;
                    self.run(next);
                }
                return;
            }
            let h = self.group.compose(g, self.gens[s]);
            if st.point[h] == UNSET {
                st.point[h] = y;
            } else if st.point[h] != y {
                return;
            }
            st.gen += 1;
        }
        if st.used == self.m {
            let members: Vec<usize> = (0..st.point.len()).filter(|&g| st.point[g] == 0).collect();
            self.found.push(members);
        }
    }
}

fn bfs_order(group: &SymGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    seen[0] = true;
    let mut order = vec![0];
    let mut queue = VecDeque::from([0]);
    while let Some(a) = queue.pop_front() {
        for &s in gens {
            let b = group.compose(a, s);
            if !seen[b] {
                seen[b] = true;
                order.push(b);
                queue.push_back(b);
            }
        }
    }
    order
}

pub(super) fn low_index(group: &SymGroup, k: usize, bound: usize) -> Result<Vec<SymGroup>, SymmetryError> {
    if group.order() > bound {
        return Err(SymmetryError::GroupTooLarge {
            order: group.order(),
            bound,
        });
    }
    let gens = group.generators();
    let order = bfs_order(group, gens);
    let mut out = Vec::new();
    for m in 1..=k.min(group.order()) {
        if !group.order().is_multiple_of(m) {
            continue;
        }
        let mut search = Search {
            group,
            gens,
            order: order.clone(),
            m,
            found: Vec::new(),
        };
        let mut point = vec![UNSET; group.order()];
        point[0] = 0;
        let start = State {
            point,
            image: vec![vec![UNSET; m]; gens.len()],
            preimage: vec![vec![UNSET; m]; gens.len()],
            used: 1,
            cursor: 0,
            gen: 0,
        };
        search.run(start);
        let mut subs = search.found;
        subs.sort();
        out.extend(subs.iter().map(|members| group.subgroup(members)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build;
    use crate::symmetry::automorphism_group;

    // Every subgroup, by extending known subgroups with one more element
    // until nothing new appears; then keep those of index <= k.
    fn brute_force(group: &SymGroup, k: usize) -> Vec<Vec<usize>> {
        use std::collections::BTreeSet;
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier: Vec<Vec<usize>> = vec![vec![0]];
        all.insert(vec![0]);
        while let Some(h) = frontier.pop() {
            for a in 0..group.order() {
                if h.binary_search(&a).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(a);
                let c = group.closure(&gens);
                if all.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        all.into_iter()
            .filter(|h| h.len() * k >= group.order())
            .collect()
    }

    #[test]
    fn matches_brute_force_on_small_groups() {
        for m in [
            build::antiprism(3).unwrap(),
            build::antiprism(4).unwrap(),
            build::dipole(4).unwrap(),
            build::tetrahedron(),
        ] {
            let g = automorphism_group(&m);
            for k in 1..=4 {
                let mut fast: Vec<Vec<usize>> = g
                    .subgroups_up_to_index(k, DEFAULT_GROUP_BOUND)
                    .unwrap()
                    .iter()
                    .map(|h| {
                        h.elements()
                            .iter()
                            .map(|e| g.lookup(e.apply(0)).unwrap())
                            .collect()
                    })
                    .collect();
                fast.sort();
                let slow = brute_force(&g, k);
                assert_eq!(fast, slow, "{} k={k}", m.label());
            }
        }
    }

    #[test]
    fn index_one_is_whole_group() {
        let g = automorphism_group(&build::cube());
        let subs = g.subgroups_up_to_index(1, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(subs, vec![g]);
    }

    #[test]
    fn bound_is_enforced() {
        let g = automorphism_group(&build::cube());
        assert_eq!(
            g.subgroups_up_to_index(2, 10).unwrap_err(),
            SymmetryError::GroupTooLarge { order: 48, bound: 10 }
        );
    }
}
