use mapcorn::corn::{circuits_of, corneration_of, Corner, Corneration, CircuitDecomposition};
use mapcorn::io::{parse_corneration, parse_map, write_corneration, write_map};
use mapcorn::split::{from_graph6, is_locally_connected, split_named, SplitKind};
use mapcorn::symmetry::automorphism_group;
use mapcorn::{build, ops, FlagMap};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn base_map() -> impl Strategy<Value = FlagMap> {
    prop_oneof![
        (3usize..7, 3usize..7).prop_map(|(r, c)| build::torus_grid(r, c).unwrap()),
        (3usize..9).prop_map(|n| build::antiprism(n).unwrap()),
        (3usize..6).prop_map(|n| build::torus_triangular(n).unwrap()),
        Just(build::cube()),
        Just(build::octahedron()),
    ]
}

// The same map on relabelled flags.
fn relabel(m: &FlagMap, p: &[usize]) -> FlagMap {
    let mut r = [vec![0; p.len()], vec![0; p.len()], vec![0; p.len()]];
    for (i, ri) in r.iter_mut().enumerate() {
        for x in 0..p.len() {
            ri[p[x]] = p[m.r(i)[x]];
        }
    }
    let [r0, r1, r2] = r;
    FlagMap::new(r0, r1, r2).unwrap()
}

fn map_and_perm() -> impl Strategy<Value = (FlagMap, Vec<usize>)> {
    base_map().prop_flat_map(|m| {
        let n = m.n_flags();
        (Just(m), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

// A standard odd corneration of width `j`: at each vertex the corners start
// at every other position, from an offset chosen per vertex.
fn odd_corneration(m: &FlagMap, j: usize, offsets: &[bool]) -> Corneration {
    let mut corners = Vec::new();
    for (i, v) in m.vertices().into_iter().enumerate() {
        let q = m.valence(v);
        let s = offsets[i % offsets.len()] as usize;
        for k in (0..q).step_by(2) {
            corners.push(Corner::at_positions(m, v, (s + k) % q, (s + k + j) % q).unwrap());
        }
    }
    Corneration::new(m, corners).unwrap()
}

fn even_valence_map() -> impl Strategy<Value = FlagMap> {
    prop_oneof![
        (3usize..7, 3usize..7).prop_map(|(r, c)| build::torus_grid(r, c).unwrap()),
        (3usize..9).prop_map(|n| build::antiprism(n).unwrap()),
        (3usize..6).prop_map(|n| build::torus_triangular(n).unwrap()),
        (4usize..6).prop_map(|n| ops::opposite(&build::torus_grid(n, n).unwrap()).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn counts_and_euler(m in base_map()) {
        prop_assert_eq!(m.n_flags(), 4 * m.n_edges());
        let valences: usize = m.vertices().into_iter().map(|v| m.valence(v)).sum();
        let lengths: usize = m.faces().into_iter().map(|f| m.face_length(f)).sum();
        prop_assert_eq!(valences, 2 * m.n_edges());
        prop_assert_eq!(lengths, 2 * m.n_edges());
        let t = m.topology();
        prop_assert_eq!(t.euler, m.n_vertices() as i64 - m.n_edges() as i64 + m.n_faces() as i64);
    }

    #[test]
    fn operators_are_involutions(m in base_map()) {
        let d = ops::dual(&m).unwrap();
        prop_assert_eq!(d.n_vertices(), m.n_faces());
        prop_assert_eq!(d.topology().euler, m.topology().euler);
        prop_assert!(ops::is_isomorphic(&ops::dual(&d).unwrap(), &m).is_some());
        let p = ops::petrie(&m).unwrap();
        prop_assert_eq!((p.n_vertices(), p.n_edges()), (m.n_vertices(), m.n_edges()));
        prop_assert!(ops::is_isomorphic(&ops::petrie(&p).unwrap(), &m).is_some());
    }

    #[test]
    fn hole_splits_by_gcd(m in base_map(), j in 1usize..4) {
        let q = m.uniform_valence().unwrap();
        prop_assume!(j < q);
        let h = ops::hole(&m, j).unwrap();
        let g = (1..=j).rev().find(|d| j % d == 0 && q % d == 0).unwrap();
        prop_assert_eq!(h.maps.iter().map(FlagMap::n_flags).sum::<usize>(), m.n_flags());
        prop_assert_eq!(h.maps.iter().map(FlagMap::n_vertices).sum::<usize>(), g * m.n_vertices());
        for c in &h.maps {
            prop_assert_eq!(c.uniform_valence(), Some(q / g));
        }
    }

    #[test]
    fn relabelling_keeps_the_map((m, p) in map_and_perm()) {
        let r = relabel(&m, &p);
        prop_assert!(ops::is_isomorphic(&m, &r).is_some());
        prop_assert_eq!(r.topology(), m.topology());
        prop_assert_eq!(automorphism_group(&r).order(), automorphism_group(&m).order());
        prop_assert_eq!(r.is_face_bipartite(), m.is_face_bipartite());
    }

    #[test]
    fn map_file_round_trip((m, p) in map_and_perm()) {
        let r = relabel(&m, &p);
        prop_assert_eq!(parse_map(&write_map(&r)).unwrap(), r);
    }

    #[test]
    fn circuits_partition_the_edges(m in even_valence_map(), offsets in subsequence(vec![true, false, true, true, false, false, true], 1..7)) {
        let l = odd_corneration(&m, 1, &offsets);
        let c = circuits_of(&m, &l);
        prop_assert!(CircuitDecomposition::new(&m, c.circuits().to_vec()).is_ok());
        prop_assert_eq!(c.lengths().iter().sum::<usize>(), m.n_edges());
        prop_assert_eq!(corneration_of(&m, &c).unwrap(), l.clone());
        let text = write_corneration(&m, &l);
        prop_assert_eq!(parse_corneration(&text, &m).unwrap(), l);
    }

    #[test]
    fn split_graph_invariants(m in even_valence_map(), offsets in subsequence(vec![false, true, true, false, true], 1..5)) {
        let q = m.uniform_valence().unwrap();
        let j = if q >= 8 { 3 } else { 1 };
        let l = odd_corneration(&m, j, &offsets);
        for kind in SplitKind::ALL {
            let Ok(s) = split_named(&m, &l, kind) else { continue };
            prop_assert_eq!(s.n_vertices(), l.len());
            let degrees = s.degrees();
            prop_assert_eq!(degrees.iter().sum::<usize>(), 2 * s.n_edges());
            if is_locally_connected(&m, &s).is_ok() {
                prop_assert!(s.is_connected());
            }
            let (n, edges) = from_graph6(&s.to_graph6()).unwrap();
            prop_assert_eq!(n, s.n_vertices());
            prop_assert_eq!(edges, s.edges().map(|(a, b, _)| (a, b)).collect::<Vec<_>>());
        }
    }
}
