//! Predicted valence and local connectivity of the named split graphs.

use std::fmt;

use crate::corn::Corneration;
use crate::flagmap::FlagMap;
use crate::perm::gcd;

use super::{is_locally_connected, split_named, uniform, SplitError, SplitKind};

/// Predicted valence and local connectivity of a split graph of a
/// transitive `j`-uniform corneration on a dart-transitive map of valence `q`.
///
/// The odd-width exception applies to `Cx` only and the `j = 2` exception
/// to `Ci` only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub valence: usize,
    pub locally_connected: bool,
}

/// The prediction for `kind` at `(q, j)`, or `None` when `kind` is not
/// defined at that width.
pub fn expectation(kind: SplitKind, q: usize, j: usize) -> Option<Expectation> {
    let e = |valence, locally_connected| Some(Expectation { valence, locally_connected });
    if q < 2 || j == 0 || 2 * j > q {
        return None;
    }
    let straight = 2 * j == q;
    match kind {
        SplitKind::A if straight => None,
        SplitKind::A => e(if 4 * j == q { 3 } else { 4 }, gcd(q, j) == 1),
        SplitKind::B if straight => e(if q == 4 { 3 } else { 4 }, true),
        _ if straight || j < 2 => None,
        SplitKind::B if j % 2 == 1 => e(if q.is_multiple_of(4) && 2 * j + 2 == q { 5 } else { 6 }, true),
        SplitKind::B => e(if j == 2 { 5 } else { 6 }, true),
        SplitKind::Ci | SplitKind::Cx if j % 2 == 1 => {
            let exceptional = kind == SplitKind::Cx && q.is_multiple_of(4) && 2 * j + 2 == q;
            let shift = if kind == SplitKind::Ci { j - 1 } else { j + 1 };
            e(if exceptional { 3 } else { 4 }, gcd(q, shift) == 2)
        }
        SplitKind::Ci | SplitKind::Cx => {
            let exceptional = kind == SplitKind::Ci && j == 2;
            let shift = if kind == SplitKind::Ci { j - 2 } else { j + 2 };
            e(if exceptional { 3 } else { 4 }, gcd(q, shift) == 4)
        }
    }
}

/// One line of the cubic summary, with the value measured on the map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicLine {
    pub kind: SplitKind,
    /// The condition as stated.
    pub condition: &'static str,
    /// The condition evaluated at `(q, j)`.
    pub predicted: bool,
    /// Whether the graph was built and found cubic; `None` when `kind` is
    /// not defined at this width.
    pub measured: Option<bool>,
}

impl CubicLine {
    /// The prediction agrees with the measurement, or there is nothing to measure.
    pub fn agrees(&self) -> bool {
        self.measured.is_none_or(|m| m == self.predicted)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicReport {
    pub q: usize,
    pub j: usize,
    pub lines: Vec<CubicLine>,
}

impl CubicReport {
    pub fn cubic(&self) -> Vec<SplitKind> {
        self.lines
            .iter()
            .filter(|l| l.measured == Some(true))
            .map(|l| l.kind)
            .collect()
    }
}

impl fmt::Display for CubicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q = {}, j = {}", self.q, self.j)?;
        for l in &self.lines {
            let measured = match l.measured {
                Some(true) => "cubic",
                Some(false) => "not cubic",
                None => "undefined",
            };
            let flag = if l.agrees() { "" } else { "  (disagrees)" };
            writeln!(
                f,
                "{:<3}cubic iff {:<26}predicted {:<6}measured {measured}{flag}",
                l.kind.to_string(),
                l.condition,
                l.predicted
            )?;
        }
        Ok(())
    }
}

/// The four cubic conditions, as stated, next to the measured valences.
pub fn cubic_filter(map: &FlagMap, l: &Corneration) -> Result<CubicReport, SplitError> {
    let (q, j) = uniform(map, l)?;
    let lines = [
        (SplitKind::A, "j = q/2", 2 * j == q),
        (SplitKind::B, "j = q/4", 4 * j == q),
        (SplitKind::Ci, "j = 2", j == 2),
        (SplitKind::Cx, "4 | q and j = q/2 - 1", q % 4 == 0 && 2 * j + 2 == q),
    ];
    let mut out = Vec::new();
    for (kind, condition, predicted) in lines {
        let measured = match split_named(map, l, kind) {
            Ok(s) => Some(s.valence() == Some(3)),
            Err(SplitError::WidthOutOfRange { .. }) => None,
            Err(e) => return Err(e),
        };
        out.push(CubicLine {
            kind,
            condition,
            predicted,
            measured,
        });
    }
    Ok(CubicReport { q, j, lines: out })
}

/// Measured valence and local connectivity of a named construction, next
/// to the prediction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measurement {
    pub kind: SplitKind,
    pub q: usize,
    pub j: usize,
    pub valence: Option<usize>,
    pub locally_connected: bool,
    pub connected: bool,
    pub expected: Option<Expectation>,
}

impl Measurement {
    pub fn valence_ok(&self) -> bool {
        self.expected.is_some_and(|e| self.valence == Some(e.valence))
    }

    pub fn local_ok(&self) -> bool {
        self.expected.is_some_and(|e| self.locally_connected == e.locally_connected)
    }
}

pub fn measure(map: &FlagMap, l: &Corneration, kind: SplitKind) -> Result<Measurement, SplitError> {
    let (q, j) = uniform(map, l)?;
    let s = split_named(map, l, kind)?;
    Ok(Measurement {
        kind,
        q,
        j,
        valence: s.valence(),
        locally_connected: is_locally_connected(map, &s).is_ok(),
        connected: s.is_connected(),
        expected: expectation(kind, q, j),
    })
}
