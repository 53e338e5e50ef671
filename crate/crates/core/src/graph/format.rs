//! graph6 and sparse6 encodings as defined in the nauty format notes.

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Sparse6,
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

fn read_size<'a>(bytes: &'a [u8], format: &'static str) -> Result<(usize, &'a [u8]), GraphError> {
    let err = |reason: &str| GraphError::Format { format, reason: reason.into() };
    let take = |slice: &[u8]| -> Result<usize, GraphError> {
        slice.iter().try_fold(0usize, |acc, &b| {
            if !(63..=126).contains(&b) {
                return Err(err("byte outside the printable range 63..=126"));
            }
            Ok(acc << 6 | (b - 63) as usize)
        })
    };
    match bytes {
        [] => Err(err("missing size header")),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((take(&rest[..6])?, &rest[6..])),
        [126, 126, ..] => Err(err("truncated size header")),
        [126, rest @ ..] if rest.len() >= 3 => Ok((take(&rest[..3])?, &rest[3..])),
        [126, ..] => Err(err("truncated size header")),
        [b, rest @ ..] => Ok((take(&[*b])?, rest)),
    }
}

/// Packs bits into 6-bit groups, most significant first.
struct BitWriter {
    out: Vec<u8>,
    acc: u8,
    filled: u32,
}

impl BitWriter {
    fn new(out: Vec<u8>) -> Self {
        BitWriter { out, acc: 0, filled: 0 }
    }

    fn push(&mut self, bit: bool) {
        self.acc = self.acc << 1 | u8::from(bit);
        self.filled += 1;
        if self.filled == 6 {
            self.out.push(self.acc + 63);
            self.acc = 0;
            self.filled = 0;
        }
    }

    fn push_value(&mut self, x: usize, width: u32) {
        for i in (0..width).rev() {
            self.push(x >> i & 1 == 1);
        }
    }

    /// Bits still free in the current byte (6 when the byte is empty).
    fn remaining(&self) -> u32 {
        6 - self.filled
    }
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl BitReader<'_> {
    fn bits_left(&self) -> usize {
        self.bytes.len() * 6 - self.pos
    }

    fn bit(&mut self) -> bool {
        let b = (self.bytes[self.pos / 6] - 63) >> (5 - self.pos % 6) & 1;
        self.pos += 1;
        b == 1
    }

    fn value(&mut self, width: u32) -> usize {
        (0..width).fold(0, |acc, _| acc << 1 | usize::from(self.bit()))
    }
}

fn check_body(body: &[u8], format: &'static str) -> Result<(), GraphError> {
    if let Some(b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(GraphError::Format { format, reason: format!("invalid byte {b:#04x}") });
    }
    Ok(())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut w = BitWriter::new(Vec::new());
    push_size(&mut w.out, n);
    for j in 1..n {
        for i in 0..j {
            w.push(g.has_edge(i, j));
        }
    }
    while w.remaining() != 6 {
        w.push(false);
    }
    String::from_utf8(w.out).expect("printable ascii")
}

pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let (n, body) = read_size(text.as_bytes(), "graph6")?;
    check_body(body, "graph6")?;
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(GraphError::Format {
            format: "graph6",
            reason: format!("expected {needed} data bytes for {n} vertices, found {}", body.len()),
        });
    }
    let mut r = BitReader { bytes: body, pos: 0 };
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if r.bit() {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

fn width_for(n: usize) -> u32 {
    let mut k = 0;
    while n > 1 && (n - 1) >> k != 0 {
        k += 1;
    }
    k
}

pub fn to_sparse6(g: &Graph) -> String {
    let n = g.vertex_count();
    let k = width_for(n);
    let mut out = vec![b':'];
    push_size(&mut out, n);
    let mut w = BitWriter::new(out);
    let mut last = 0usize;
    for v in 0..n {
        for &u in g.neighbors(v).iter().filter(|&&u| (u as usize) < v) {
            if v == last {
                w.push(false);
            } else {
                w.push(true);
                if v > last + 1 {
                    w.push_value(v, k);
                    w.push(false);
                }
                last = v;
            }
            w.push_value(u as usize, k);
        }
    }
    let pad = w.remaining();
    if pad != 6 {
        if pad > k && n >= 2 && last == n - 2 && n == 1 << k {
            w.push(false);
            for _ in 1..pad {
                w.push(true);
            }
        } else {
            for _ in 0..pad {
                w.push(true);
            }
        }
    }
    String::from_utf8(w.out).expect("printable ascii")
}

pub fn from_sparse6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>sparse6<<").unwrap_or(text);
    let Some(rest) = text.strip_prefix(':') else {
        return Err(GraphError::Format { format: "sparse6", reason: "missing ':' prefix".into() });
    };
    let (n, body) = read_size(rest.as_bytes(), "sparse6")?;
    check_body(body, "sparse6")?;
    let k = width_for(n);
    let mut r = BitReader { bytes: body, pos: 0 };
    let mut v = 0usize;
    let mut edges = Vec::new();
    while r.bits_left() > k as usize {
        if r.bit() {
            v += 1;
        }
        let x = r.value(k);
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            if x == v {
                return Err(GraphError::Format { format: "sparse6", reason: format!("loop at vertex {v}") });
            }
            edges.push((x, v));
        }
    }
    Graph::from_edges(n, edges)
}

/// Detects sparse6 (leading ':') versus graph6 and decodes one graph.
pub fn parse_graph(text: &str) -> Result<(Graph, GraphFormat), GraphError> {
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if line.starts_with(':') || line.starts_with(">>sparse6<<") {
        Ok((from_sparse6(line)?, GraphFormat::Sparse6))
    } else {
        Ok((from_graph6(line)?, GraphFormat::Graph6))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_graph6_strings() {
        // Reference strings from the nauty format description and geng output.
        assert_eq!(to_graph6(&Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap()), "DQc");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(from_graph6("DQc").unwrap(), Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap());
        let big = to_graph6(&Graph::empty(63));
        assert!(big.starts_with("~??~"));
    }

    #[test]
    fn known_sparse6_string() {
        // The example from the format notes: n = 7, edges 0-1 0-2 1-2 5-6.
        let g = Graph::from_edges(7, [(0, 1), (0, 2), (1, 2), (5, 6)]).unwrap();
        assert_eq!(to_sparse6(&g), ":Fa@x^");
        assert_eq!(from_sparse6(":Fa@x^").unwrap(), g);
    }

    #[test]
    fn sparse6_special_padding() {
        // n a power of two whose last edge ends at n - 2 triggers the 0-then-1s padding.
        let g = Graph::from_edges(4, [(0, 2)]).unwrap();
        let s = to_sparse6(&g);
        assert_eq!(s, ":Co");
        assert_eq!(from_sparse6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_input() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("DQc\u{7f}").is_err());
        assert!(from_sparse6("Fa@x^").is_err());
        assert!(parse_graph(":Fa@x^\n").unwrap().1 == GraphFormat::Sparse6);
    }

    fn random_graph() -> impl Strategy<Value = Graph> {
        (0usize..140).prop_flat_map(|n| {
            proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..2 * n + 1).prop_map(move |pairs| {
                Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v && n > 0)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn roundtrips(g in random_graph()) {
            let g6 = to_graph6(&g);
            prop_assert_eq!(&from_graph6(&g6).unwrap(), &g);
            prop_assert_eq!(to_graph6(&from_graph6(&g6).unwrap()), g6);
            let s6 = to_sparse6(&g);
            prop_assert_eq!(&from_sparse6(&s6).unwrap(), &g);
            prop_assert_eq!(to_sparse6(&from_sparse6(&s6).unwrap()), s6);
        }
    }
}
