//! Cornerations of particular maps.

use crate::build::{self, BuildError};
use crate::flagmap::FlagMap;

use super::{CornError, Corner, Corneration};

/// All wedges of the faces of one colour in a face 2-colouring; the colour
/// of the face containing flag 0 is `false`.
pub fn face_class(map: &FlagMap, colour: bool) -> Result<Corneration, CornError> {
    let colours = map.face_bipartition().ok_or(CornError::NotFaceBipartite)?;
    let flip = colours[&map.face_of(0)];
    let corners = map
        .wedges()
        .into_iter()
        .filter(|&w| colours[&map.wedge_face(w)] ^ flip == colour)
        .map(|w| {
            let (a, b) = map.wedge_darts(w);
            Corner::new(map, a, b)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Corneration::new(map, corners)
}

/// The `n`-antiprism with the wedge corneration that, at every vertex,
/// takes the two triangle wedges next to the `n`-gon.
pub fn antiprism_band(n: usize) -> Result<(FlagMap, Corneration), BuildError> {
    if n < 4 {
        return Err(BuildError::DegenerateParameters(format!(
            "the band corneration needs n >= 4, got {n}"
        )));
    }
    let m = build::antiprism(n)?;
    let mut corners = Vec::new();
    for v in m.vertices() {
        let ws = m.wedges_at_vertex(v);
        let p = (0..4)
            .find(|&k| m.face_length(m.wedge_face(ws[k])) == n)
            .expect("every antiprism vertex meets one n-gon");
        for k in [p + 3, p + 1] {
            let (a, b) = m.wedge_darts(ws[k % 4]);
            corners.push(Corner::new(&m, a, b).expect("wedge darts form a corner"));
        }
    }
    let l = Corneration::new(&m, corners).expect("band wedges cover each dart once");
    Ok((m, l))
}

/// The `rows × cols` torus grid with the alternating wedge corneration of
/// [`build::torus_alternating_corners`].
pub fn torus_alternating(rows: usize, cols: usize) -> Result<(FlagMap, Corneration), BuildError> {
    let m = build::torus_grid(rows, cols)?;
    let pairs = build::torus_alternating_corners(rows, cols)?;
    let l = Corneration::from_pairs(&m, &pairs).expect("alternating wedges cover each dart once");
    Ok((m, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corn::Width;

    #[test]
    fn face_classes_partition_the_wedges() {
        let m = build::torus_grid(4, 6).unwrap();
        let a = face_class(&m, false).unwrap();
        let b = face_class(&m, true).unwrap();
        assert_eq!(a.len() + b.len(), m.wedges().len());
        assert!(a.corners().iter().all(|c| !b.contains(c)));
        assert_eq!(face_class(&build::cube(), false), Err(CornError::NotFaceBipartite));
    }

    #[test]
    fn bands_and_grids() {
        for n in 4..=7 {
            let (m, l) = antiprism_band(n).unwrap();
            assert_eq!(l.len(), 2 * m.n_vertices());
            assert_eq!(l.width(), Width::Uniform(1));
        }
        assert!(antiprism_band(3).is_err());
        let (m, l) = torus_alternating(4, 5).unwrap();
        assert_eq!(l.len(), 2 * m.n_vertices());
        assert!(torus_alternating(3, 5).is_err());
    }
}
