//! graph6 encoding with an optional ` colors=c0,c1,...` annotation.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_N};

const HEADER: &str = ">>graph6<<";

/// Encodes the edge structure of `x` in plain graph6 (colors are dropped).
pub fn emit_graph6(x: &Graph) -> String {
    let n = x.n();
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | x.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// graph6 followed by ` colors=...` when the graph is colored.
pub fn emit_annotated(x: &Graph) -> String {
    let mut s = emit_graph6(x);
    if let Some(colors) = x.colors() {
        s.push_str(" colors=");
        let parts: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
        s.push_str(&parts.join(","));
    }
    s
}

/// Parses one graph6 line, optionally annotated with vertex colors.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let (body, annotation) = match line.split_once(char::is_whitespace) {
        Some((b, rest)) => (b, Some(rest.trim())),
        None => (line, None),
    };
    let body = body.strip_prefix(HEADER).unwrap_or(body);
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::MalformedGraph6("empty line".into()));
    };
    if !(63..=126).contains(&first) {
        return Err(Error::MalformedGraph6(format!("bad size byte {first:#x}")));
    }
    if first == 126 {
        return Err(Error::TooManyVertices { n: 63, max: MAX_N });
    }
    let n = (first - 63) as usize;
    if n > MAX_N {
        return Err(Error::TooManyVertices { n, max: MAX_N });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for n = {n}, got {}",
            data.len()
        )));
    }
    let mut values = Vec::with_capacity(data.len());
    for &b in data {
        if !(63..=126).contains(&b) {
            return Err(Error::MalformedGraph6(format!("bad data byte {b:#x}")));
        }
        values.push(b - 63);
    }
    let bit = |k: usize| values[k / 6] & (32 >> (k % 6)) != 0;
    if (bits..expected * 6).any(bit) {
        return Err(Error::MalformedGraph6("nonzero padding bits".into()));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.insert(u, v);
            }
            k += 1;
        }
    }
    match annotation {
        None => Ok(g),
        Some(a) => {
            let list = a
                .strip_prefix("colors=")
                .ok_or_else(|| Error::MalformedGraph6(format!("unknown annotation {a:?}")))?;
            let colors = if list.is_empty() {
                Vec::new()
            } else {
                list.split(',')
                    .map(|c| {
                        c.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::MalformedGraph6(format!("bad color {c:?}")))
                    })
                    .collect::<Result<Vec<u32>>>()?
            };
            g.with_colors(colors)
        }
    }
}

/// Parses a newline-separated list; blank lines and `#` comments are skipped.
pub fn parse_graph6_list(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_graph6)
        .collect()
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&emit_annotated(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_graph6(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Reference decoder written against the format description, bit by bit.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let bytes: Vec<u8> = s.bytes().collect();
        let n = (bytes[0] - 63) as usize;
        let mut bitstream = Vec::new();
        for &b in &bytes[1..] {
            let v = b - 63;
            for shift in (0..6).rev() {
                bitstream.push((v >> shift) & 1);
            }
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bitstream[k] == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        edges.sort();
        (n, edges)
    }

    #[test]
    fn k4_decodes() {
        let g = parse_graph6("C~").unwrap();
        let (n, edges) = reference_decode("C~");
        assert_eq!(n, 4);
        assert_eq!(edges.len(), 6);
        assert_eq!(g.edges(), edges);
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn single_vertex_emits_header_only() {
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
    }

    #[test]
    fn color_annotation() {
        let g = parse_graph6("A_ colors=0,1").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
        assert_eq!(g.colors(), Some(&[0, 1][..]));
        assert_eq!(emit_annotated(&g), "A_ colors=0,1");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("C"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("C~~"), Err(Error::MalformedGraph6(_))));
        // n = 3 uses 3 bits, so '@' + 1 = 'A' sets a padding bit
        assert!(matches!(parse_graph6("BA"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(
            parse_graph6("A_ colors=0"),
            Err(Error::ColorLengthMismatch { expected: 2, got: 1 })
        ));
        assert!(matches!(parse_graph6("A_ colours=0,1"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("X????"), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn list_skips_comments() {
        let text = "# comment\nA_\n\n@\n";
        let gs = parse_graph6_list(text).unwrap();
        assert_eq!(gs.len(), 2);
    }

    #[test]
    fn exhaustive_roundtrip_up_to_five() {
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0u32..(1 << pairs) {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if mask & (1 << k) != 0 {
                            g.insert(u, v);
                        }
                        k += 1;
                    }
                }
                let s = emit_graph6(&g);
                assert_eq!(parse_graph6(&s).unwrap(), g);
                let (rn, redges) = reference_decode(&s);
                assert_eq!(rn, n);
                assert_eq!(redges, g.edges());
            }
        }
    }

    proptest! {
        #[test]
        fn roundtrip_random(n in 1usize..=MAX_N, seed in any::<u64>(), colored in any::<bool>()) {
            let mut state = seed;
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 63 == 1 {
                        g.insert(u, v);
                    }
                }
            }
            if colored {
                g = g.with_colors((0..n as u32).map(|i| i % 3).collect()).unwrap();
            }
            prop_assert_eq!(parse_graph6(&emit_annotated(&g)).unwrap(), g);
        }
    }
}
