//! Orbit-minimal canonical codes, G-isomorphism and automorphism groups.
//!
//! For an arbitrary group the code is the exact minimum of the encoding over
//! all group elements. When the group is the full symmetric group the code is
//! instead the minimum over the leaves of an individualization-refinement
//! search tree: the leaf set depends only on the isomorphism class, so the
//! result is still a complete invariant, and it avoids touching all `n!`
//! elements.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{pair_count, pair_index, Graph, PairBits};
use crate::perm::{PermGroup, DEFAULT_MAX_ORDER};

/// Encoding of a (colored) graph: color sequence, then adjacency bitstring
/// over the lexicographic pair order.
///
/// Codes of graphs on the same vertex count compare by colors first, then by
/// adjacency as a big-endian integer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: usize,
    colors: Vec<u32>,
    adjacency: PairBits,
}

impl CanonicalCode {
    /// Encoding of `x` as labeled, with no minimization.
    pub fn of_labeled(x: &Graph) -> CanonicalCode {
        CanonicalCode {
            n: x.n(),
            colors: x.color_vec(),
            adjacency: x.pair_bits(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn adjacency(&self) -> &PairBits {
        &self.adjacency
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.count_ones()
    }

    /// The representative graph this code describes. All-zero color
    /// sequences decode to an uncolored graph.
    pub fn to_graph(&self) -> Graph {
        let g = Graph::from_pair_bits(self.n, &self.adjacency).expect("valid code");
        if self.colors.iter().all(|&c| c == 0) {
            g
        } else {
            g.with_colors(self.colors.clone()).expect("length n")
        }
    }

    /// `colors|adjacency`, both in lowercase hex.
    pub fn to_hex(&self) -> String {
        let colors: Vec<String> = self.colors.iter().map(|c| format!("{c:x}")).collect();
        format!("{}|{}", colors.join(","), self.adjacency.to_hex(pair_count(self.n)))
    }

    pub fn from_hex(s: &str) -> Result<CanonicalCode> {
        let bad = || Error::Precondition(format!("malformed canonical code {s:?}"));
        let (c, a) = s.split_once('|').ok_or_else(bad)?;
        let colors = if c.is_empty() {
            Vec::new()
        } else {
            c.split(',')
                .map(|x| u32::from_str_radix(x, 16).map_err(|_| bad()))
                .collect::<Result<Vec<u32>>>()?
        };
        let n = colors.len();
        let adjacency = PairBits::from_hex(a, pair_count(n)).ok_or_else(bad)?;
        Ok(CanonicalCode { n, colors, adjacency })
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalCode::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

/// Orbit-minimal code of `x` under `group`.
pub fn canonical_code(x: &Graph, group: &PermGroup) -> Result<CanonicalCode> {
    group.check_degree(x)?;
    if group.is_full_symmetric() {
        return Ok(canonical_form(x));
    }
    Ok(min_over_group(x, group))
}

const PARALLEL_THRESHOLD: usize = 4096;

fn min_over_group(x: &Graph, group: &PermGroup) -> CanonicalCode {
    let n = x.n();
    let edges: Vec<(u8, u8)> = x.edges().into_iter().map(|(u, v)| (u as u8, v as u8)).collect();
    let colors = x.colors();
    let encode = |g: &[u8]| -> (Vec<u32>, PairBits) {
        let mut bits = PairBits::default();
        for &(u, v) in &edges {
            let (a, b) = (g[u as usize] as usize, g[v as usize] as usize);
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            bits.set(pair_index(n, a, b));
        }
        let c = match colors {
            None => Vec::new(),
            Some(cs) => {
                let mut c = vec![0u32; n];
                for v in 0..n {
                    c[g[v] as usize] = cs[v];
                }
                c
            }
        };
        (c, bits)
    };
    let best = if group.order() >= PARALLEL_THRESHOLD {
        group.par_iter().map(encode).min().expect("nonempty group")
    } else {
        group.iter().map(encode).min().expect("nonempty group")
    };
    CanonicalCode {
        n,
        colors: if colors.is_some() { best.0 } else { vec![0; n] },
        adjacency: best.1,
    }
}

/// Canonical code of `x` under the full symmetric group on its vertices.
pub fn canonical_form(x: &Graph) -> CanonicalCode {
    canonical_labeling(x).0
}

/// Canonical code under `S_n` together with one labeling reaching it:
/// `labeling[v]` is the position of vertex `v` in the canonical form.
pub fn canonical_labeling(x: &Graph) -> (CanonicalCode, Vec<usize>) {
    let n = x.n();
    if n == 0 {
        return (CanonicalCode::of_labeled(x), Vec::new());
    }
    let cells = refine(x, color_partition(x));
    let mut best: Option<(PairBits, Vec<usize>)> = None;
    search(x, cells, &mut best);
    let (adjacency, order) = best.expect("search reaches a leaf");
    let mut labeling = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        labeling[v] = p;
    }
    let colors = order.iter().map(|&v| x.color(v)).collect();
    (CanonicalCode { n, colors, adjacency }, labeling)
}

type Cells = Vec<Vec<usize>>;

fn color_partition(x: &Graph) -> Cells {
    let mut vs: Vec<usize> = (0..x.n()).collect();
    vs.sort_by_key(|&v| (x.color(v), v));
    let mut cells: Cells = Vec::new();
    for v in vs {
        match cells.last_mut() {
            Some(c) if x.color(c[0]) == x.color(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    cells
}

/// Coarsest equitable refinement of an ordered partition. Split cells keep
/// their position and order their fragments by neighbor count.
pub(crate) fn refine(x: &Graph, mut cells: Cells) -> Cells {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: u32 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            let mut c = 0;
            while c < cells.len() {
                if cells[c].len() > 1 {
                    let count = |v: usize| (x.row(v) & splitter).count_ones();
                    let first = count(cells[c][0]);
                    if cells[c].iter().any(|&v| count(v) != first) {
                        let mut cell = std::mem::take(&mut cells[c]);
                        cell.sort_by_key(|&v| (count(v), v));
                        let mut parts: Cells = Vec::new();
                        for v in cell {
                            match parts.last_mut() {
                                Some(p) if count(p[0]) == count(v) => p.push(v),
                                _ => parts.push(vec![v]),
                            }
                        }
                        let k = parts.len();
                        cells.splice(c..=c, parts);
                        c += k;
                        changed = true;
                        continue;
                    }
                }
                c += 1;
            }
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}

#[inline]
fn twins(x: &Graph, u: usize, w: usize) -> bool {
    x.row(u) & !(1 << w) == x.row(w) & !(1 << u)
}

fn search(x: &Graph, cells: Cells, best: &mut Option<(PairBits, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let n = x.n();
        let mut pos = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let mut bits = PairBits::default();
        for (u, v) in x.edges() {
            let (a, b) = (pos[u], pos[v]);
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            bits.set(pair_index(n, a, b));
        }
        let better = match best {
            None => true,
            Some((b, _)) => bits.cmp(b) == Ordering::Less,
        };
        if better {
            *best = Some((bits, order));
        }
        return;
    };
    let cell = cells[target].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // swapping two twins is an automorphism fixing the current partition,
        // so their subtrees produce the same leaf codes
        if tried.iter().any(|&t| twins(x, t, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(x, refine(x, next), best);
    }
}

fn check_pair(x: &Graph, y: &Graph) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::DegreeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    if x.is_colored() != y.is_colored() {
        return Err(Error::ColorArityMismatch);
    }
    Ok(())
}

/// Whether `y` lies in the orbit of `x` under `group`.
pub fn is_g_isomorphic(x: &Graph, y: &Graph, group: &PermGroup) -> Result<bool> {
    check_pair(x, y)?;
    if x.m() != y.m() {
        return Ok(false);
    }
    Ok(canonical_code(x, group)? == canonical_code(y, group)?)
}

/// Plain isomorphism (the `S_n` case).
pub fn is_isomorphic(x: &Graph, y: &Graph) -> Result<bool> {
    check_pair(x, y)?;
    if x.m() != y.m() {
        return Ok(false);
    }
    Ok(canonical_form(x) == canonical_form(y))
}

/// `aut X`, with default order cap.
pub fn automorphism_group(x: &Graph) -> Result<PermGroup> {
    automorphism_group_with_cap(x, DEFAULT_MAX_ORDER)
}

/// All color-preserving automorphisms of `x`, found by backtracking within
/// the cells of the equitable partition.
pub fn automorphism_group_with_cap(x: &Graph, max_order: u64) -> Result<PermGroup> {
    let n = x.n();
    let cells = refine(x, color_partition(x));
    let mut cell_of = vec![0; n];
    for (i, c) in cells.iter().enumerate() {
        for &v in c {
            cell_of[v] = i;
        }
    }
    // singletons first, then vertices adjacent to already placed ones
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = 0u32;
    let mut remaining: Vec<usize> = (0..n).collect();
    remaining.sort_by_key(|&v| (cells[cell_of[v]].len(), cell_of[v], v));
    while !remaining.is_empty() {
        let pick = remaining
            .iter()
            .position(|&v| x.row(v) & placed != 0)
            .unwrap_or(0);
        let v = remaining.remove(pick);
        placed |= 1 << v;
        order.push(v);
    }
    let mut found: Vec<Vec<u8>> = Vec::new();
    let mut image = vec![u8::MAX; n];
    let mut used = 0u32;
    backtrack(x, &order, &cell_of, 0, &mut image, &mut used, &mut found, max_order)?;
    Ok(PermGroup::from_automorphisms(n, found, "aut".into()))
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    x: &Graph,
    order: &[usize],
    cell_of: &[usize],
    depth: usize,
    image: &mut Vec<u8>,
    used: &mut u32,
    found: &mut Vec<Vec<u8>>,
    max_order: u64,
) -> Result<()> {
    if depth == order.len() {
        if found.len() as u64 >= max_order {
            return Err(Error::OrderCapExceeded { cap: max_order });
        }
        found.push(image.clone());
        return Ok(());
    }
    let v = order[depth];
    for w in 0..x.n() {
        if *used & (1 << w) != 0 || cell_of[w] != cell_of[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| x.has_edge(u, v) == x.has_edge(image[u] as usize, w));
        if !consistent {
            continue;
        }
        image[v] = w as u8;
        *used |= 1 << w;
        backtrack(x, order, cell_of, depth + 1, image, used, found, max_order)?;
        *used &= !(1 << w);
        image[v] = u8::MAX;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{apply_images, Permutation};
    use proptest::prelude::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn p4() -> Graph {
        g(4, &[(0, 1), (1, 2), (2, 3)])
    }

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::from_cycles(n, s).unwrap()
    }

    /// Literal minimum over every element of S_n.
    fn brute_min(x: &Graph) -> CanonicalCode {
        let s = PermGroup::symmetric(x.n()).unwrap();
        s.iter()
            .map(|e| CanonicalCode::of_labeled(&apply_images(e, x)))
            .min()
            .unwrap()
    }

    #[test]
    fn empty_graph_code_is_zero() {
        let e = Graph::empty(5).unwrap();
        for grp in [PermGroup::symmetric(5).unwrap(), PermGroup::trivial(5)] {
            let c = canonical_code(&e, &grp).unwrap();
            assert_eq!(c.adjacency().count_ones(), 0);
        }
    }

    #[test]
    fn same_orbit_same_code() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let a = canonical_code(&g(4, &[(0, 1), (2, 3)]), &s4).unwrap();
        let b = canonical_code(&g(4, &[(0, 2), (1, 3)]), &s4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn alternating_splits_p4_orbit() {
        let a4 = PermGroup::alternating(4).unwrap();
        let y = cyc(4, "(0 1)").apply(&p4()).unwrap();
        // independent check: enumerate all 12 even permutations for both sides
        let orbit = |x: &Graph| -> Vec<Graph> { a4.iter().map(|e| apply_images(e, x)).collect() };
        assert!(!orbit(&p4()).contains(&y));
        assert_ne!(
            canonical_code(&p4(), &a4).unwrap(),
            canonical_code(&y, &a4).unwrap()
        );
        assert!(!is_g_isomorphic(&p4(), &y, &a4).unwrap());
        let s4 = PermGroup::symmetric(4).unwrap();
        assert!(is_g_isomorphic(&p4(), &y, &s4).unwrap());
    }

    #[test]
    fn isomorphism_examples() {
        let k3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let c3 = g(3, &[(1, 2), (0, 1), (2, 0)]);
        assert!(is_isomorphic(&k3, &c3).unwrap());
        assert!(!is_isomorphic(&g(4, &[(0, 1), (2, 3)]), &g(4, &[(0, 1), (1, 2)])).unwrap());
        let s4 = PermGroup::symmetric(4).unwrap();
        assert!(!is_g_isomorphic(&g(4, &[(0, 1), (2, 3)]), &g(4, &[(0, 1), (1, 2)]), &s4).unwrap());
        assert!(is_isomorphic(&p4(), &cyc(4, "(0 2)").apply(&p4()).unwrap()).unwrap());
    }

    #[test]
    fn color_arity_is_checked() {
        let a = g(2, &[(0, 1)]);
        let b = a.clone().with_colors(vec![0, 0]).unwrap();
        assert_eq!(is_isomorphic(&a, &b), Err(Error::ColorArityMismatch));
        // codes treat uncolored as constant color 0
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(automorphism_group(&g(3, &[(0, 1), (1, 2)])).unwrap().order(), 2);
        assert_eq!(automorphism_group(&g(4, &[(0, 1), (2, 3)])).unwrap().order(), 8);
        let k4p = g(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]);
        assert_eq!(automorphism_group(&k4p).unwrap().order(), 6);
        let colored = g(3, &[(0, 1), (1, 2)]).with_colors(vec![1, 0, 2]).unwrap();
        assert_eq!(automorphism_group(&colored).unwrap().order(), 1);
    }

    #[test]
    fn automorphism_cap() {
        let e = Graph::empty(6).unwrap();
        assert!(matches!(
            automorphism_group_with_cap(&e, 100),
            Err(Error::OrderCapExceeded { cap: 100 })
        ));
    }

    #[test]
    fn hex_roundtrip() {
        let x = g(4, &[(0, 1), (2, 3)]).with_colors(vec![0, 1, 10, 2]).unwrap();
        let c = CanonicalCode::of_labeled(&x);
        assert_eq!(c.to_hex(), "0,1,a,2|84");
        assert_eq!(CanonicalCode::from_hex(&c.to_hex()).unwrap(), c);
        assert_eq!(c.to_graph(), x);
    }

    #[test]
    fn canonical_form_exhaustive_n5() {
        // the refinement code and brute-force minimum induce the same classes
        let n = 5;
        let mut by_form = std::collections::HashMap::new();
        let mut by_brute = std::collections::HashMap::new();
        for mask in 0u32..(1 << 10) {
            let bits: Vec<(usize, usize)> = (0..10)
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| crate::graph::pair_at(n, k))
                .collect();
            let x = g(n, &bits);
            let f = canonical_form(&x);
            let b = brute_min(&x);
            let a = *by_form.entry(f).or_insert(mask);
            let c = *by_brute.entry(b).or_insert(mask);
            assert_eq!(a, c);
        }
        assert_eq!(by_form.len(), 34);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), prop::collection::vec(any::<bool>(), pairs), prop::collection::vec(0u32..3, n))
        })
        .prop_map(|(n, bits, colors)| {
            let edges: Vec<(usize, usize)> = bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(k, _)| crate::graph::pair_at(n, k))
                .collect();
            let x = Graph::from_edges(n, &edges).unwrap();
            if colors[0] == 0 {
                x
            } else {
                x.with_colors(colors).unwrap()
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn code_is_invariant(x in arb_graph(8), seed in any::<u64>()) {
            let n = x.n();
            let mut images: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
                images.swap(i, (s >> 33) as usize % (i + 1));
            }
            let p = Permutation::from_images(&images).unwrap();
            let y = p.apply(&x).unwrap();
            prop_assert_eq!(canonical_form(&x), canonical_form(&y));
            let a = PermGroup::alternating(n.min(6)).ok().filter(|a| a.degree() == n);
            if let Some(a) = a {
                let h = canonical_code(&x, &a).unwrap();
                let gy = apply_images(a.element(seed as usize % a.order()).images(), &x);
                prop_assert_eq!(h, canonical_code(&gy, &a).unwrap());
            }
        }

        #[test]
        fn orbit_stabilizer(x in arb_graph(5)) {
            let grp = PermGroup::alternating(x.n()).unwrap();
            let mut orbit: Vec<Graph> = grp.iter().map(|e| apply_images(e, &x)).collect();
            orbit.sort_by_key(CanonicalCode::of_labeled);
            orbit.dedup();
            let stab = grp.intersect_aut(&x).unwrap();
            prop_assert_eq!(orbit.len() * stab.order(), grp.order());
        }

        #[test]
        fn aut_matches_filtered_symmetric(x in arb_graph(6)) {
            let s = PermGroup::symmetric(x.n()).unwrap();
            let a = automorphism_group(&x).unwrap();
            let b = s.intersect_aut(&x).unwrap();
            prop_assert!(a.iter().eq(b.iter()));
        }

        #[test]
        fn g_isomorphism_is_equivalence(a in arb_graph(5), seed in any::<u64>()) {
            let n = a.n();
            let grp = PermGroup::alternating(n).unwrap();
            let b = apply_images(grp.element(seed as usize % grp.order()).images(), &a);
            let c = apply_images(grp.element((seed >> 20) as usize % grp.order()).images(), &b);
            prop_assert!(is_g_isomorphic(&a, &a, &grp).unwrap());
            prop_assert_eq!(is_g_isomorphic(&a, &b, &grp).unwrap(), is_g_isomorphic(&b, &a, &grp).unwrap());
            prop_assert!(is_g_isomorphic(&a, &c, &grp).unwrap());
        }
    }
}
