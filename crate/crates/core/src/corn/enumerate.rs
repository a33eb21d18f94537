//! Searching for cornerations with prescribed symmetry.

use std::collections::{BTreeSet, HashMap};

use crate::flagmap::{CellKind, FlagMap};
use crate::symmetry::{automorphism_group, SymGroup, DEFAULT_GROUP_BOUND};

use super::{all_j_corners, CornError, Corner, Corneration};

/// All ways to pick rows covering every column `0..n_cols` exactly once.
/// Each row lists its columns without repetition. Solutions are row index
/// lists, in increasing order, produced in lexicographic order.
pub fn exact_cover(n_cols: usize, rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut by_col: Vec<Vec<usize>> = vec![Vec::new(); n_cols];
    for (i, r) in rows.iter().enumerate() {
        for &c in r {
            by_col[c].push(i);
        }
    }
    let mut out = Vec::new();
    let mut covered = vec![false; n_cols];
    let mut chosen = Vec::new();
    search(rows, &by_col, &mut covered, &mut chosen, &mut out);
    for s in &mut out {
        s.sort_unstable();
    }
    out.sort();
    out
}

fn search(
    rows: &[Vec<usize>],
    by_col: &[Vec<usize>],
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let fits = |i: usize, covered: &[bool]| rows[i].iter().all(|&c| !covered[c]);
    // Column with the fewest rows still available.
    let mut best: Option<(usize, usize)> = None;
    for (c, cands) in by_col.iter().enumerate() {
        if covered[c] {
            continue;
        }
        let n = cands.iter().filter(|&&i| fits(i, covered)).count();
        if best.is_none_or(|(_, m)| n < m) {
            best = Some((c, n));
        }
        if n == 0 {
            break;
        }
    }
    let Some((col, n)) = best else {
        out.push(chosen.clone());
        return;
    };
    if n == 0 {
        return;
    }
    for &i in &by_col[col] {
        if !fits(i, covered) {
            continue;
        }
        for &c in &rows[i] {
            covered[c] = true;
        }
        chosen.push(i);
        search(rows, by_col, covered, chosen, out);
        chosen.pop();
        for &c in &rows[i] {
            covered[c] = false;
        }
    }
}

fn check_subgroup(map: &FlagMap, h: &SymGroup) -> Result<(), CornError> {
    let n = map.n_flags();
    let ok = h.n_flags() == n
        && h.elements().iter().all(|s| {
            (0..3).all(|i| {
                let r = map.r(i);
                (0..n).all(|x| s.apply(r[x]) == r[s.apply(x)])
            })
        });
    if ok {
        Ok(())
    } else {
        Err(CornError::GroupNotSubgroup)
    }
}

// Orbits of `h` on a list of corners closed under `h`.
fn corner_orbits(map: &FlagMap, h: &SymGroup, corners: &[Corner]) -> Vec<Vec<usize>> {
    let index: HashMap<Corner, usize> = corners.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let labels = h.orbit_labels_by(corners.len(), |s, i| index[&corners[i].image(map, s)]);
    crate::perm::classes(&labels)
}

/// Every `j`-uniform corneration invariant under `h`, in increasing order.
///
/// Rows of the exact-cover problem are `h`-orbits of `j`-corners, columns
/// are `h`-orbits of darts. An orbit covering some dart twice is dropped;
/// the rest cover each dart of a column orbit once or not at all.
pub fn enumerate_invariant_cornerations(map: &FlagMap, h: &SymGroup, j: usize) -> Result<Vec<Corneration>, CornError> {
    check_subgroup(map, h)?;
    let corners = all_j_corners(map, j)?;
    let orbits = corner_orbits(map, h, &corners);
    let dart_orbits = h.cell_orbits(map, CellKind::Dart);
    let mut col_of = vec![usize::MAX; map.n_flags()];
    for (c, o) in dart_orbits.iter().enumerate() {
        for &d in o {
            col_of[d] = c;
        }
    }
    let mut rows = Vec::new();
    let mut row_orbit = Vec::new();
    'orbits: for (k, orbit) in orbits.iter().enumerate() {
        let mut hits = vec![0usize; map.n_flags()];
        for &i in orbit {
            let (a, b) = corners[i].darts();
            for d in [a, b] {
                hits[d.0] += 1;
                if hits[d.0] > 1 {
                    continue 'orbits;
                }
            }
        }
        let cols: BTreeSet<usize> = orbit
            .iter()
            .flat_map(|&i| {
                let (a, b) = corners[i].darts();
                [col_of[a.0], col_of[b.0]]
            })
            .collect();
        rows.push(cols.into_iter().collect::<Vec<_>>());
        row_orbit.push(k);
    }
    let mut out: Vec<Corneration> = exact_cover(dart_orbits.len(), &rows)
        .into_iter()
        .map(|sol| {
            let chosen = sol
                .iter()
                .flat_map(|&r| orbits[row_orbit[r]].iter().map(|&i| corners[i]))
                .collect();
            Corneration::new(map, chosen).expect("exact cover of dart orbits is a corneration")
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `Aut(L)`: the symmetries of the map preserving `L`.
pub fn aut_of_corneration(map: &FlagMap, aut: &SymGroup, l: &Corneration) -> SymGroup {
    aut.filter(|s| l.is_preserved_by(map, s))
}

/// A transitive corneration with its symmetry group.
#[derive(Clone, Debug)]
pub struct TransitiveCorneration {
    pub corneration: Corneration,
    pub aut: SymGroup,
    /// `Aut(L)` is transitive on the corners of `L`.
    pub transitive: bool,
    /// `Aut(L)` is transitive on the darts of the map.
    pub symmetric: bool,
}

/// All transitive `j`-cornerations of a map, in increasing order.
///
/// Since `|Aut(L)| >= |L|` and `|Aut(M)| <= 4 |L|`, the group of a
/// transitive corneration has index at most 4, and the corneration is a
/// single orbit of it. So it suffices to look, for each subgroup `H` of
/// index at most 4, at the `H`-orbits of `j`-corners that cover every dart
/// once.
pub fn enumerate_transitive_cornerations(map: &FlagMap, j: usize) -> Result<Vec<TransitiveCorneration>, CornError> {
    enumerate_transitive_with(map, j, 4, DEFAULT_GROUP_BOUND)
}

/// [`enumerate_transitive_cornerations`] with explicit subgroup index and
/// group order bounds.
pub fn enumerate_transitive_with(
    map: &FlagMap,
    j: usize,
    max_index: usize,
    bound: usize,
) -> Result<Vec<TransitiveCorneration>, CornError> {
    map.uniform_valence().ok_or(CornError::NonUniformValence)?;
    let aut = automorphism_group(map);
    let corners = all_j_corners(map, j)?;
    let n_darts = map.darts().len();
    let mut found: BTreeSet<Corneration> = BTreeSet::new();
    for h in aut.subgroups_up_to_index(max_index, bound)? {
        for orbit in corner_orbits(map, &h, &corners) {
            if 2 * orbit.len() != n_darts {
                continue;
            }
            let chosen: Vec<Corner> = orbit.iter().map(|&i| corners[i]).collect();
            if let Ok(l) = Corneration::new(map, chosen) {
                found.insert(l);
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|l| {
            let g = aut_of_corneration(map, &aut, &l);
            let transitive = l.is_transitive_under(map, &g);
            let symmetric = g.cell_orbits(map, CellKind::Dart).len() == 1;
            TransitiveCorneration {
                corneration: l,
                aut: g,
                transitive,
                symmetric,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build;
    use crate::corn::{named, Width};

    #[test]
    fn exact_cover_small() {
        // Columns 0..4; rows {0,1}, {2,3}, {0,2}, {1,3}, {0,1,2,3}.
        let rows = vec![vec![0, 1], vec![2, 3], vec![0, 2], vec![1, 3], vec![0, 1, 2, 3]];
        assert_eq!(exact_cover(4, &rows), vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(exact_cover(2, &[vec![0]]).is_empty());
        assert_eq!(exact_cover(0, &[]), vec![Vec::<usize>::new()]);
    }

    // Number of perfect matchings of the darts at each vertex into width-j
    // pairs, multiplied over vertices.
    fn per_vertex_product(map: &FlagMap, j: usize) -> usize {
        fn count(q: usize, j: usize, used: &mut [bool]) -> usize {
            let Some(a) = used.iter().position(|&u| !u) else {
                return 1;
            };
            used[a] = true;
            let mut cands = vec![(a + j) % q, (a + q - j) % q];
            cands.dedup();
            let mut total = 0;
            for b in cands {
                if !used[b] {
                    used[b] = true;
                    total += count(q, j, used);
                    used[b] = false;
                }
            }
            used[a] = false;
            total
        }
        map.vertices()
            .into_iter()
            .map(|v| {
                let q = map.valence(v);
                count(q, j, &mut vec![false; q])
            })
            .product()
    }

    #[test]
    fn trivial_group_counts_every_corneration() {
        let theta = build::dipole(3).unwrap();
        let t = SymGroup::trivial(theta.n_flags());
        assert_eq!(enumerate_invariant_cornerations(&theta, &t, 1).unwrap().len(), 0);
        assert_eq!(per_vertex_product(&theta, 1), 0);
        for (m, j) in [
            (build::octahedron(), 1),
            (build::torus_grid(3, 3).unwrap(), 1),
            (build::dipole(6).unwrap(), 1),
            (build::dipole(6).unwrap(), 2),
            (build::dipole(6).unwrap(), 3),
        ] {
            let t = SymGroup::trivial(m.n_flags());
            let all = enumerate_invariant_cornerations(&m, &t, j).unwrap();
            assert_eq!(all.len(), per_vertex_product(&m, j), "{} j={j}", m.label());
        }
        assert_eq!(per_vertex_product(&build::octahedron(), 1), 64);
    }

    #[test]
    fn straight_is_the_only_invariant_under_full_group() {
        let m = build::torus_grid(4, 4).unwrap();
        let g = automorphism_group(&m);
        let all = enumerate_invariant_cornerations(&m, &g, 2).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].len(), 32);
    }

    #[test]
    fn foreign_group_is_rejected() {
        let m = build::torus_grid(4, 4).unwrap();
        let other = automorphism_group(&build::cube());
        assert!(matches!(
            enumerate_invariant_cornerations(&m, &other, 1),
            Err(CornError::GroupNotSubgroup)
        ));
    }

    #[test]
    fn transitive_wedge_cornerations_of_the_torus() {
        let m = build::torus_grid(4, 4).unwrap();
        let found = enumerate_transitive_cornerations(&m, 1).unwrap();
        let a = named::face_class(&m, true).unwrap();
        let hit = found.iter().find(|t| t.corneration == a).unwrap();
        assert!(hit.transitive && hit.symmetric);
        for t in &found {
            assert!(t.transitive);
            assert_eq!(t.corneration.width(), Width::Uniform(1));
        }
    }

    #[test]
    fn single_orbit_search_matches_invariant_search() {
        let m = build::antiprism(4).unwrap();
        let aut = automorphism_group(&m);
        let fast: BTreeSet<Corneration> = enumerate_transitive_cornerations(&m, 1)
            .unwrap()
            .into_iter()
            .map(|t| t.corneration)
            .collect();
        let mut slow = BTreeSet::new();
        for h in aut.subgroups_up_to_index(4, DEFAULT_GROUP_BOUND).unwrap() {
            for l in enumerate_invariant_cornerations(&m, &h, 1).unwrap() {
                if l.is_transitive_under(&m, &aut_of_corneration(&m, &aut, &l)) {
                    slow.insert(l);
                }
            }
        }
        assert_eq!(fast, slow);
        assert!(!fast.is_empty());
    }
}
