//! graph6 and sparse6 encodings of simple graphs.

use thiserror::Error;

use super::SplitGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("byte {0:#04x} is outside the printable range 63..=126")]
    BadByte(u8),
    #[error("input ends early")]
    Truncated,
    #[error("{0} trailing bytes")]
    Trailing(usize),
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
}

struct Bits {
    out: Vec<u8>,
    acc: u8,
    len: u8,
}

impl Bits {
    fn new(out: Vec<u8>) -> Self {
        Bits { out, acc: 0, len: 0 }
    }

    fn push(&mut self, bit: bool) {
        self.acc = (self.acc << 1) | bit as u8;
        self.len += 1;
        if self.len == 6 {
            self.out.push(self.acc + 63);
            self.acc = 0;
            self.len = 0;
        }
    }

    fn push_int(&mut self, x: usize, width: u32) {
        for s in (0..width).rev() {
            self.push((x >> s) & 1 == 1);
        }
    }

    fn pending(&self) -> usize {
        if self.len == 0 {
            0
        } else {
            6 - self.len as usize
        }
    }

    fn finish(mut self, pad: bool) -> String {
        while self.len != 0 {
            self.push(pad);
        }
        String::from_utf8(self.out).expect("graph6 bytes are ASCII")
    }
}

/// graph6 encoding of the graph on `0..n` with the given edges.
pub fn graph6(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![false; n * n];
    for &(a, b) in edges {
        adj[a * n + b] = true;
        adj[b * n + a] = true;
    }
    let mut head = Vec::new();
    push_size(&mut head, n);
    let mut bits = Bits::new(head);
    for j in 1..n {
        for i in 0..j {
            bits.push(adj[i * n + j]);
        }
    }
    bits.finish(false)
}

/// sparse6 encoding of the graph on `0..n` with the given edges.
pub fn sparse6(n: usize, edges: &[(usize, usize)]) -> String {
    let mut head = vec![b':'];
    push_size(&mut head, n);
    let k = usize::BITS - n.saturating_sub(1).leading_zeros();
    let mut sorted: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a.max(b), a.min(b))).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let mut bits = Bits::new(head);
    let mut v = 0;
    for (hi, lo) in sorted {
        if hi == v {
            bits.push(false);
        } else if hi == v + 1 {
            bits.push(true);
            v = hi;
        } else {
            bits.push(true);
            bits.push_int(hi, k);
            bits.push(false);
            v = hi;
        }
        bits.push_int(lo, k);
    }
    let pending = bits.pending();
    if k < 6 && pending >= k as usize && n >= 2 && v == n - 2 && n == 1 << k {
        bits.push(false);
    }
    bits.finish(true)
}

/// Decodes a graph6 string into a vertex count and sorted edge list.
pub fn from_graph6(s: &str) -> Result<(usize, Vec<(usize, usize)>), Graph6Error> {
    let bytes = s.trim_end().as_bytes();
    let mut vals = Vec::with_capacity(bytes.len());
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte(b));
        }
        vals.push(b - 63);
    }
    let take = |vals: &[u8], from: usize, count: usize| -> Result<usize, Graph6Error> {
        let chunk = vals.get(from..from + count).ok_or(Graph6Error::Truncated)?;
        Ok(chunk.iter().fold(0usize, |acc, &x| (acc << 6) | x as usize))
    };
    let (n, mut pos) = match vals.first() {
        None => return Err(Graph6Error::Truncated),
        Some(&63) if vals.get(1) == Some(&63) => (take(&vals, 2, 6)?, 8),
        Some(&63) => (take(&vals, 1, 3)?, 4),
        Some(&x) => (x as usize, 1),
    };
    let n_bits = n * n.saturating_sub(1) / 2;
    let n_bytes = n_bits.div_ceil(6);
    let body = vals.get(pos..pos + n_bytes).ok_or(Graph6Error::Truncated)?;
    pos += n_bytes;
    if pos != vals.len() {
        return Err(Graph6Error::Trailing(vals.len() - pos));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[idx / 6] >> (5 - idx % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    edges.sort_unstable();
    Ok((n, edges))
}

impl SplitGraph {
    fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges().map(|(a, b, _)| (a, b)).collect()
    }

    pub fn to_graph6(&self) -> String {
        graph6(self.n_vertices(), &self.edge_pairs())
    }

    pub fn to_sparse6(&self) -> String {
        sparse6(self.n_vertices(), &self.edge_pairs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        assert_eq!(graph6(3, &[(0, 1), (0, 2), (1, 2)]), "Bw");
        assert_eq!(graph6(0, &[]), "?");
        assert_eq!(graph6(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]), "DQc");
        assert_eq!(sparse6(7, &[(0, 1), (0, 2), (1, 2), (5, 6)]), ":Fa@x^");
    }

    #[test]
    fn long_size_prefix() {
        let s = graph6(63, &[]);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 126]);
        assert_eq!(from_graph6(&s).unwrap(), (63, vec![]));
    }

    #[test]
    fn decoding_errors() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Truncated));
        assert_eq!(from_graph6("Bw?"), Err(Graph6Error::Trailing(1)));
        assert_eq!(from_graph6("B!"), Err(Graph6Error::BadByte(b'!')));
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..80, raw in proptest::collection::vec((0usize..80, 0usize..80), 0..200)) {
            let mut edges: Vec<(usize, usize)> = raw
                .into_iter()
                .filter(|&(a, b)| a < n && b < n && a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            prop_assert_eq!(from_graph6(&graph6(n, &edges)).unwrap(), (n, edges));
        }
    }
}
