//! Text formats for maps and cornerations, and DOT export.
//!
//! A map file:
//!
//! ```text
//! mapfile 1
//! name cube
//! flags 48
//! r0: 1 0 ...
//! r1: ...
//! r2: ...
//! ```
//!
//! The `name` line is omitted for unnamed maps. A corneration file lists
//! corners by the canonical ids of their two darts:
//!
//! ```text
//! cornfile 1
//! map cube
//! j 1
//! corner: 0 4
//! ...
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::corn::{Corner, Corneration, Width};
use crate::flagmap::{DartId, FlagMap, Skeleton, ValidationError};
use crate::split::{EdgeOrigin, SplitGraph};
use crate::symtype::{Diagram, Shape};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("corneration does not fit the map: {0}")]
    CornerationMismatch(String),
}

fn syntax(line: usize, message: impl Into<String>) -> IoError {
    IoError::Syntax {
        line,
        message: message.into(),
    }
}

// Non-empty, non-comment lines with their 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn expect_header<'a>(it: &mut impl Iterator<Item = (usize, &'a str)>, header: &str) -> Result<(), IoError> {
    match it.next() {
        Some((_, l)) if l == header => Ok(()),
        Some((n, l)) => Err(syntax(n, format!("expected `{header}`, found `{l}`"))),
        None => Err(syntax(1, format!("expected `{header}`, found end of input"))),
    }
}

fn keyword<'a>(n: usize, line: &'a str, key: &str) -> Result<&'a str, IoError> {
    line.strip_prefix(key)
        .filter(|rest| rest.is_empty() || rest.starts_with(char::is_whitespace))
        .map(str::trim)
        .ok_or_else(|| syntax(n, format!("expected `{key}`, found `{line}`")))
}

fn numbers(n: usize, text: &str) -> Result<Vec<usize>, IoError> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| syntax(n, format!("`{t}` is not a non-negative integer"))))
        .collect()
}

pub fn write_map(map: &FlagMap) -> String {
    let mut out = String::from("mapfile 1\n");
    if let Some(name) = map.name() {
        writeln!(out, "name {name}").unwrap();
    }
    writeln!(out, "flags {}", map.n_flags()).unwrap();
    for i in 0..3 {
        let images: Vec<String> = map.r(i).iter().map(usize::to_string).collect();
        writeln!(out, "r{i}: {}", images.join(" ")).unwrap();
    }
    out
}

pub fn parse_map(text: &str) -> Result<FlagMap, IoError> {
    let mut it = lines(text).peekable();
    expect_header(&mut it, "mapfile 1")?;
    let mut name = None;
    if let Some(&(n, l)) = it.peek() {
        if l.starts_with("name") {
            let label = keyword(n, l, "name")?;
            if label.is_empty() {
                return Err(syntax(n, "empty map name"));
            }
            name = Some(label.to_string());
            it.next();
        }
    }
    let (n, l) = it.next().ok_or_else(|| syntax(0, "missing `flags` line"))?;
    let count = match numbers(n, keyword(n, l, "flags")?)?[..] {
        [c] => c,
        _ => return Err(syntax(n, "`flags` takes one number")),
    };
    let mut r: [Vec<usize>; 3] = Default::default();
    for (i, slot) in r.iter_mut().enumerate() {
        let (n, l) = it.next().ok_or_else(|| syntax(0, format!("missing `r{i}:` line")))?;
        let images = numbers(n, keyword(n, l, &format!("r{i}:"))?)?;
        if images.len() != count {
            return Err(syntax(n, format!("r{i} has {} entries, expected {count}", images.len())));
        }
        if let Some(&bad) = images.iter().find(|&&x| x >= count) {
            return Err(syntax(n, format!("r{i} image {bad} is out of range 0..{count}")));
        }
        *slot = images;
    }
    if let Some((n, l)) = it.next() {
        return Err(syntax(n, format!("unexpected line `{l}`")));
    }
    let [r0, r1, r2] = r;
    let map = FlagMap::new(r0, r1, r2)?;
    Ok(match name {
        Some(s) => map.with_name(s),
        None => map,
    })
}

pub fn write_corneration(map: &FlagMap, l: &Corneration) -> String {
    let mut out = String::from("cornfile 1\n");
    writeln!(out, "map {}", map.label()).unwrap();
    match l.width() {
        Width::Uniform(j) => writeln!(out, "j {j}").unwrap(),
        Width::Mixed => out.push_str("j mixed\n"),
    }
    for c in l.corners() {
        let (a, b) = c.darts();
        writeln!(out, "corner: {} {}", a.0, b.0).unwrap();
    }
    out
}

/// Reads a corneration of `map`. The file must name the map by its label
/// and state the width of its corners.
pub fn parse_corneration(text: &str, map: &FlagMap) -> Result<Corneration, IoError> {
    let mismatch = |s: String| IoError::CornerationMismatch(s);
    let mut it = lines(text);
    expect_header(&mut it, "cornfile 1")?;
    let (n, l) = it.next().ok_or_else(|| syntax(0, "missing `map` line"))?;
    let label = keyword(n, l, "map")?;
    if label != map.label() {
        return Err(mismatch(format!("file is for map `{label}`, not `{}`", map.label())));
    }
    let (n, l) = it.next().ok_or_else(|| syntax(0, "missing `j` line"))?;
    let width = match keyword(n, l, "j")? {
        "mixed" => Width::Mixed,
        w => Width::Uniform(w.parse().map_err(|_| syntax(n, format!("bad width `{w}`")))?),
    };
    let mut corners = Vec::new();
    for (n, l) in it {
        let [a, b] = numbers(n, keyword(n, l, "corner:")?)?[..] else {
            return Err(syntax(n, "a corner is two dart ids"));
        };
        for d in [a, b] {
            if d >= map.n_flags() || map.dart_of(d) != DartId(d) {
                return Err(mismatch(format!("line {n}: {d} is not a dart id of the map")));
            }
        }
        let c = Corner::new(map, DartId(a), DartId(b)).map_err(|e| mismatch(format!("line {n}: {e}")))?;
        corners.push(c);
    }
    let l = Corneration::new(map, corners).map_err(|e| mismatch(e.to_string()))?;
    if l.width() != width {
        return Err(mismatch(format!("file states width {width:?}, corners have {:?}", l.width())));
    }
    Ok(l)
}

/// Graphviz rendering.
pub trait ToDot {
    fn to_dot(&self) -> String;
}

pub fn export_dot<T: ToDot + ?Sized>(x: &T) -> String {
    x.to_dot()
}

impl ToDot for Skeleton {
    fn to_dot(&self) -> String {
        let mut out = String::from("graph skeleton {\n");
        for v in &self.vertices {
            writeln!(out, "  v{};", v.0).unwrap();
        }
        for e in &self.edges {
            let (a, b) = self.endpoints[e];
            writeln!(out, "  v{} -- v{} [label=\"e{}\"];", a.0, b.0, e.0).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

const COLOUR_STYLE: [&str; 3] = ["dotted", "solid", "bold"];

impl ToDot for Diagram {
    fn to_dot(&self) -> String {
        let mut out = String::from("graph diagram {\n");
        for (i, shape) in self.shapes().iter().enumerate() {
            let shape = match shape {
                Shape::Box => "box",
                Shape::Oval => "ellipse",
            };
            writeln!(out, "  n{i} [shape={shape}];").unwrap();
        }
        let mut points = 0;
        for (c, style) in COLOUR_STYLE.iter().enumerate() {
            for (i, &j) in self.s(c).iter().enumerate() {
                if i == j {
                    writeln!(out, "  p{points} [shape=point];").unwrap();
                    writeln!(out, "  n{i} -- p{points} [style={style}, label=\"{c}\"];").unwrap();
                    points += 1;
                } else if i < j {
                    writeln!(out, "  n{i} -- n{j} [style={style}, label=\"{c}\"];").unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl ToDot for SplitGraph {
    fn to_dot(&self) -> String {
        let mut out = String::from("graph split {\n");
        for (i, c) in self.corners().iter().enumerate() {
            let (a, b) = c.darts();
            writeln!(out, "  c{i} [label=\"v{} {}|{}\"];", c.vertex().0, a.0, b.0).unwrap();
        }
        for (a, b, origins) in self.edges() {
            let old = origins.iter().any(|o| matches!(o, EdgeOrigin::Old(_)));
            let new = origins.iter().any(|o| matches!(o, EdgeOrigin::New(_)));
            let (kind, style) = match (old, new) {
                (true, true) => ("old+new", "bold"),
                (true, false) => ("old", "solid"),
                _ => ("new", "dashed"),
            };
            writeln!(out, "  c{a} -- c{b} [origin={kind}, style={style}];").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build;
    use crate::corn::named;

    #[test]
    fn map_round_trip() {
        for m in [build::cube(), build::torus_grid(3, 4).unwrap(), build::antiprism(5).unwrap()] {
            let text = write_map(&m);
            assert_eq!(parse_map(&text).unwrap(), m);
            assert_eq!(write_map(&parse_map(&text).unwrap()), text);
        }
        let unnamed = FlagMap::new(build::cube().r0().to_vec(), build::cube().r1().to_vec(), build::cube().r2().to_vec()).unwrap();
        assert_eq!(parse_map(&write_map(&unnamed)).unwrap(), unnamed);
    }

    #[test]
    fn map_errors() {
        let text = write_map(&build::tetrahedron());
        let bad: String = text
            .lines()
            .map(|l| match l.strip_prefix("r1: ") {
                Some(rest) => format!("r1: 999 {}\n", rest.split_once(' ').unwrap().1),
                None => format!("{l}\n"),
            })
            .collect();
        assert!(matches!(parse_map(&bad), Err(IoError::Syntax { line: 5, .. })));
        assert!(matches!(parse_map("mapfile 2\n"), Err(IoError::Syntax { line: 1, .. })));
        assert!(matches!(parse_map("mapfile 1\nflags 2\nr0: 1 0\nr1: 1 0\nr2: 1 x\n"), Err(IoError::Syntax { line: 5, .. })));
        // Valid syntax, but r0 = r2 gives a collapsed edge.
        assert!(matches!(
            parse_map("mapfile 1\nflags 2\nr0: 1 0\nr1: 1 0\nr2: 1 0\n"),
            Err(IoError::Validation(_))
        ));
    }

    #[test]
    fn corneration_round_trip() {
        let (m, l) = named::antiprism_band(4).unwrap();
        let text = write_corneration(&m, &l);
        assert_eq!(parse_corneration(&text, &m).unwrap(), l);
    }

    #[test]
    fn corneration_errors() {
        let (m, l) = named::antiprism_band(4).unwrap();
        let text = write_corneration(&m, &l);
        let other = build::antiprism(4).unwrap().with_name("other");
        assert!(matches!(parse_corneration(&text, &other), Err(IoError::CornerationMismatch(_))));
        let absent = text.replacen("corner: 0 ", "corner: 1 ", 1);
        assert!(matches!(parse_corneration(&absent, &m), Err(IoError::CornerationMismatch(_))));
        let wrong_j = text.replace("j 1", "j 2");
        assert!(matches!(parse_corneration(&wrong_j, &m), Err(IoError::CornerationMismatch(_))));
        let dropped: String = text.lines().take(text.lines().count() - 1).map(|l| format!("{l}\n")).collect();
        assert!(matches!(parse_corneration(&dropped, &m), Err(IoError::CornerationMismatch(_))));
    }

    #[test]
    fn skeleton_dot_counts() {
        let dot = export_dot(&build::cube().skeleton());
        assert_eq!(dot.lines().filter(|l| l.trim_start().starts_with('v') && !l.contains("--")).count(), 8);
        assert_eq!(dot.matches(" -- ").count(), 12);
    }

    #[test]
    fn diagram_dot_semiedges() {
        use crate::symtype::Shape::{Box, Oval};
        let d = Diagram::new(vec![Box, Oval], [vec![1, 0], vec![0, 1], vec![1, 0]]).unwrap();
        let dot = export_dot(&d);
        assert_eq!(dot.matches("shape=point").count(), 2);
        assert!(dot.contains("n0 [shape=box]") && dot.contains("n1 [shape=ellipse]"));
    }

    #[test]
    fn split_dot_marks_origins() {
        let m = build::torus_grid(4, 4).unwrap();
        let l = named::face_class(&m, false).unwrap();
        let s = crate::split::graph_a(&m, &l).unwrap();
        let dot = export_dot(&s);
        assert!(dot.contains("origin=old"));
        assert!(dot.contains("origin=new"));
        assert_eq!(dot.matches(" -- ").count(), s.n_edges());
    }
}
