//! Face patterns of wedge cornerations.
//!
//! Walking once around a face, each wedge met is either in `L` or not; the
//! resulting cyclic word is the face's pattern.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::flagmap::{FaceId, FlagMap};

use super::{CornError, Corneration, Width};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FacePattern {
    /// Every wedge in `L`.
    A,
    /// Alternately in and out.
    B,
    /// In, in, out, repeated.
    C,
    /// In, in, out, out, repeated.
    D,
    /// No wedge in `L`.
    E,
    Other,
}

impl fmt::Display for FacePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FacePattern::A => "A",
            FacePattern::B => "B",
            FacePattern::C => "C",
            FacePattern::D => "D",
            FacePattern::E => "E",
            FacePattern::Other => "?",
        };
        f.write_str(s)
    }
}

/// How the face patterns fit together across the whole map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaceConfiguration {
    /// Faces are `A` or `E`, and adjacent faces differ.
    AlternatingAE,
    /// Every face is `B`.
    AllB,
    /// Faces are `C` or `E`; an `E` face meets only `C` faces and a `C` face
    /// meets both.
    MixedCE,
    /// Every face is `D`.
    AllD,
    Other,
}

impl FaceConfiguration {
    /// The case number `1..=4`, or `None` for [`FaceConfiguration::Other`].
    pub fn number(self) -> Option<u8> {
        match self {
            FaceConfiguration::AlternatingAE => Some(1),
            FaceConfiguration::AllB => Some(2),
            FaceConfiguration::MixedCE => Some(3),
            FaceConfiguration::AllD => Some(4),
            FaceConfiguration::Other => None,
        }
    }
}

impl fmt::Display for FaceConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.number() {
            Some(n) => write!(f, "{n}"),
            None => f.write_str("other"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePatterns {
    pub faces: BTreeMap<FaceId, FacePattern>,
    pub configuration: FaceConfiguration,
}

impl FacePatterns {
    /// The letters that occur.
    pub fn letters(&self) -> BTreeSet<FacePattern> {
        self.faces.values().copied().collect()
    }
}

/// In/out word of a face, starting at its smallest flag.
pub fn face_word(map: &FlagMap, l: &Corneration, f: FaceId) -> Vec<bool> {
    let (r0, r1) = (map.r0(), map.r1());
    let p = map.face_length(f);
    let mut x = f.0;
    let mut out = Vec::with_capacity(p);
    for _ in 0..p {
        let (a, b) = map.wedge_darts(map.wedge_of(x));
        out.push(l.contains_pair(a, b));
        x = r0[r1[x]];
    }
    out
}

fn is_rotation_of_period(word: &[bool], unit: &[bool]) -> bool {
    let (n, k) = (word.len(), unit.len());
    n % k == 0 && (0..k).any(|s| (0..n).all(|i| word[i] == unit[(i + s) % k]))
}

pub(crate) fn pattern_of_word(word: &[bool]) -> FacePattern {
    if word.iter().all(|&b| b) {
        FacePattern::A
    } else if word.iter().all(|&b| !b) {
        FacePattern::E
    } else if is_rotation_of_period(word, &[true, false]) {
        FacePattern::B
    } else if is_rotation_of_period(word, &[true, true, false]) {
        FacePattern::C
    } else if is_rotation_of_period(word, &[true, true, false, false]) {
        FacePattern::D
    } else {
        FacePattern::Other
    }
}

/// Pattern of every face, and the global configuration.
pub fn face_patterns(map: &FlagMap, l: &Corneration) -> Result<FacePatterns, CornError> {
    if l.width() != Width::Uniform(1) {
        return Err(CornError::NotWedgeCorneration);
    }
    let faces: BTreeMap<FaceId, FacePattern> = map
        .faces()
        .into_iter()
        .map(|f| (f, pattern_of_word(&face_word(map, l, f))))
        .collect();
    let configuration = configuration(map, &faces);
    Ok(FacePatterns {
        faces,
        configuration,
    })
}

fn configuration(map: &FlagMap, faces: &BTreeMap<FaceId, FacePattern>) -> FaceConfiguration {
    use FacePattern::*;
    let letters: BTreeSet<FacePattern> = faces.values().copied().collect();
    let mut neighbours: BTreeMap<FaceId, BTreeSet<FacePattern>> = BTreeMap::new();
    let mut self_adjacent = false;
    for x in 0..map.n_flags() {
        let (f, g) = (map.face_of(x), map.face_of(map.r2()[x]));
        self_adjacent |= f == g;
        neighbours.entry(f).or_default().insert(faces[&g]);
    }
    let only = |allowed: &[FacePattern]| letters.iter().all(|p| allowed.contains(p));

    if only(&[A, E]) {
        let proper = !self_adjacent
            && faces
                .iter()
                .all(|(f, p)| neighbours[f].iter().all(|q| q != p));
        if proper {
            return FaceConfiguration::AlternatingAE;
        }
    }
    if letters == BTreeSet::from([B]) {
        return FaceConfiguration::AllB;
    }
    if letters == BTreeSet::from([C, E]) {
        let ok = faces.iter().all(|(f, p)| match p {
            E => neighbours[f] == BTreeSet::from([C]),
            _ => neighbours[f].contains(&C) && neighbours[f].contains(&E),
        });
        if ok {
            return FaceConfiguration::MixedCE;
        }
    }
    if letters == BTreeSet::from([D]) {
        return FaceConfiguration::AllD;
    }
    FaceConfiguration::Other
}
