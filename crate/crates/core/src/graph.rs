//! Labeled simple graphs on at most [`MAX_N`] vertices.
//!
//! Adjacency is stored as one `u32` row per vertex. Edge sets are addressed
//! through the lexicographic pair order `(0,1), (0,2), ..., (n-2,n-1)`; see
//! [`pair_index`] and [`PairBits`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_N: usize = 24;
pub const MAX_PAIRS: usize = MAX_N * (MAX_N - 1) / 2;

const WORDS: usize = MAX_PAIRS.div_ceil(64);

/// An unordered vertex pair, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

pub fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Number of unordered pairs on `n` points.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `(u, v)`, `u < v < n`, in lexicographic pair order.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_at(n: usize, mut index: usize) -> Edge {
    for u in 0..n {
        let row = n - u - 1;
        if index < row {
            return (u, u + 1 + index);
        }
        index -= row;
    }
    panic!("pair index out of range for n = {n}");
}

/// A bitstring over the lexicographic pair order, most significant pair first.
///
/// The derived `Ord` compares the bitstring as an unsigned big-endian integer
/// where pair 0 is the most significant bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PairBits([u64; WORDS]);

impl PairBits {
    #[inline]
    pub fn set(&mut self, index: usize) {
        self.0[index / 64] |= 1u64 << (63 - index % 64);
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        self.0[index / 64] & (1u64 << (63 - index % 64)) != 0
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, other: &PairBits) -> PairBits {
        let mut out = [0u64; WORDS];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i] & other.0[i];
        }
        PairBits(out)
    }

    /// Pair indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let lead = word.leading_zeros() as usize;
                word &= !(1u64 << (63 - lead));
                Some(w * 64 + lead)
            })
        })
    }

    /// Hex digits of the first `len` bits, zero-padded to a multiple of four.
    pub fn to_hex(&self, len: usize) -> String {
        let digits = len.div_ceil(4);
        let mut s = String::with_capacity(digits);
        for d in 0..digits {
            let mut nibble = 0u8;
            for b in 0..4 {
                let i = d * 4 + b;
                nibble <<= 1;
                if i < len && self.get(i) {
                    nibble |= 1;
                }
            }
            s.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        s
    }

    pub fn from_hex(hex: &str, len: usize) -> Option<PairBits> {
        if hex.len() != len.div_ceil(4) || len > MAX_PAIRS {
            return None;
        }
        let mut bits = PairBits::default();
        for (d, c) in hex.chars().enumerate() {
            let nibble = c.to_digit(16)?;
            for b in 0..4 {
                if nibble & (8 >> b) != 0 {
                    let i = d * 4 + b;
                    if i >= len {
                        return None;
                    }
                    bits.set(i);
                }
            }
        }
        Some(bits)
    }
}

impl fmt::Debug for PairBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.ones()).finish()
    }
}

/// A sorted, duplicate-free list of normalized edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> EdgeSet {
        let mut v: Vec<Edge> = edges.into_iter().map(|(a, b)| normalize(a, b)).collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.binary_search(&normalize(e.0, e.1)).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.0.iter()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet::new(iter)
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (u, v)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}{v}")?;
        }
        write!(f, "}}")
    }
}

/// A labeled simple graph on vertices `0..n` with optional vertex colors.
///
/// Graphs are values: every edit returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_N],
    colors: Option<Vec<u32>>,
}

impl Graph {
    /// The edgeless, uncolored graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_N {
            return Err(Error::TooManyVertices { n, max: MAX_N });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_N],
            colors: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Graph whose edge set is given as lexicographic pair bits.
    pub fn from_pair_bits(n: usize, bits: &PairBits) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let pairs = pair_count(n);
        for i in bits.ones() {
            if i >= pairs {
                return Err(Error::Precondition(format!(
                    "pair index {i} out of range for n = {n}"
                )));
            }
            let (u, v) = pair_at(n, i);
            g.insert(u, v);
        }
        Ok(g)
    }

    pub fn with_colors(mut self, colors: Vec<u32>) -> Result<Graph> {
        if colors.len() != self.n {
            return Err(Error::ColorLengthMismatch {
                expected: self.n,
                got: colors.len(),
            });
        }
        self.colors = Some(colors);
        Ok(self)
    }

    pub fn without_colors(mut self) -> Graph {
        self.colors = None;
        self
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u, v));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Neighborhood of `v` as a bitmask over vertices.
    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        let mut row = self.adj[v];
        std::iter::from_fn(move || {
            if row == 0 {
                return None;
            }
            let w = row.trailing_zeros() as usize;
            row &= row - 1;
            Some(w)
        })
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degree-1 vertices, ascending.
    pub fn end_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            let mut row = self.adj[u] & !((2u32 << u) - 1);
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges())
    }

    /// Non-adjacent pairs in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn pair_bits(&self) -> PairBits {
        let mut bits = PairBits::default();
        for (u, v) in self.edges() {
            bits.set(pair_index(self.n, u, v));
        }
        bits
    }

    pub fn colors(&self) -> Option<&[u32]> {
        self.colors.as_deref()
    }

    pub fn is_colored(&self) -> bool {
        self.colors.is_some()
    }

    /// Color of `v`; uncolored graphs report 0 everywhere.
    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors.as_ref().map_or(0, |c| c[v])
    }

    /// Color sequence with the uncolored case expanded to zeros.
    pub fn color_vec(&self) -> Vec<u32> {
        (0..self.n).map(|v| self.color(v)).collect()
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        let (u, v) = normalize(e.0, e.1);
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let mut g = self.clone();
        g.remove(u, v);
        Ok(g)
    }

    /// Removes `u`; vertices above `u` shift down by one.
    pub fn delete_vertex(&self, u: usize) -> Result<Graph> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != u).collect();
        Ok(self.induced(&keep))
    }

    pub fn delete_edges(&self, edges: &EdgeSet) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::EdgeAbsent(u, v));
            }
            g.remove(u, v);
        }
        Ok(g)
    }

    pub fn add_edges(&self, edges: &EdgeSet) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            if g.has_edge(u, v) {
                return Err(Error::EdgeCollision(u, v));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Subgraph induced by `vertices`, relabeled to `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut g = Graph {
            n: k,
            adj: [0; MAX_N],
            colors: self
                .colors
                .as_ref()
                .map(|c| vertices.iter().map(|&v| c[v]).collect()),
        };
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    /// Appends `count` isolated vertices carrying color `color` (colors only
    /// materialize if the graph is already colored or `color != 0`).
    pub fn add_vertices(&self, count: usize, color: u32) -> Result<Graph> {
        let n = self.n + count;
        if n > MAX_N {
            return Err(Error::TooManyVertices { n, max: MAX_N });
        }
        let mut g = self.clone();
        g.n = n;
        if g.colors.is_some() || color != 0 {
            let mut c = self.color_vec();
            c.resize(n, color);
            g.colors = Some(c);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        let full = (1u32 << self.n) - 1;
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        g
    }

    /// Connected components as ascending vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & (1 << s) != 0 {
                continue;
            }
            let mut comp = 1u32 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push((0..self.n).filter(|&v| comp & (1 << v) != 0).collect());
        }
        out
    }

    /// True for `n <= 1` as well.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {}", self.n, self.edge_set())?;
        if let Some(c) = &self.colors {
            write!(f, ", colors={c:?}")?;
        }
        write!(f, ")")
    }
}
