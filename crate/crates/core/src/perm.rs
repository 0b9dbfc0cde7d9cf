//! Permutations on `n` points and fully enumerated permutation groups.
//!
//! A [`PermGroup`] keeps every element in one flat buffer, sorted
//! lexicographically by image sequence, so iteration order (and everything
//! derived from it) is reproducible.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_N};

/// Default cap on enumerated group orders: 10!.
pub const DEFAULT_MAX_ORDER: u64 = 3_628_800;

/// A bijection on `0..n`; position `i` holds the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n as u8).collect())
    }

    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        if n > MAX_N {
            return Err(Error::TooManyVertices { n, max: MAX_N });
        }
        let mut seen = 0u32;
        for &i in images {
            if i >= n || seen & (1 << i) != 0 {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen |= 1 << i;
        }
        Ok(Permutation(images.iter().map(|&i| i as u8).collect()))
    }

    /// Parses cycle notation such as `(0 1)(2 3)`; omitted points are fixed.
    pub fn from_cycles(n: usize, text: &str) -> Result<Permutation> {
        if n > MAX_N {
            return Err(Error::TooManyVertices { n, max: MAX_N });
        }
        let bad = |why: &str| Error::BadCycleNotation(format!("{text:?}: {why}"));
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut used = 0u32;
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = inner.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let points = inner[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<usize>().map_err(|_| bad("non-numeric point")))
                .collect::<Result<Vec<usize>>>()?;
            for &p in &points {
                if p >= n {
                    return Err(bad(&format!("point {p} out of range for degree {n}")));
                }
                if used & (1 << p) != 0 {
                    return Err(bad(&format!("point {p} repeated")));
                }
                used |= 1 << p;
            }
            for (k, &p) in points.iter().enumerate() {
                images[p] = points[(k + 1) % points.len()] as u8;
            }
            rest = inner[close + 1..].trim_start();
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &g) in self.0.iter().enumerate() {
            inv[g as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &g)| g as usize == i)
    }

    pub fn is_even(&self) -> bool {
        is_even(&self.0)
    }

    /// Image of `x` under this permutation.
    pub fn apply(&self, x: &Graph) -> Result<Graph> {
        if self.degree() != x.n() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: x.n(),
            });
        }
        Ok(apply_images(&self.0, x))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for s in 0..n {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            write!(f, "(")?;
            let mut i = s;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

pub(crate) fn is_even(images: &[u8]) -> bool {
    let n = images.len();
    let mut seen = 0u32;
    let mut transpositions = 0;
    for s in 0..n {
        if seen & (1 << s) != 0 {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while seen & (1 << i) == 0 {
            seen |= 1 << i;
            i = images[i] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// `g(X)`: `(u,v)` is an edge of `X` iff `(g u, g v)` is an edge of the image;
/// the image gives vertex `g(v)` the color of `v`.
pub(crate) fn apply_images(images: &[u8], x: &Graph) -> Graph {
    let n = x.n();
    let mut out = Graph::empty(n).expect("same size as input");
    for (u, v) in x.edges() {
        out.insert(images[u] as usize, images[v] as usize);
    }
    if let Some(colors) = x.colors() {
        let mut c = vec![0u32; n];
        for v in 0..n {
            c[images[v] as usize] = colors[v];
        }
        out = out.with_colors(c).expect("length n");
    }
    out
}

/// Whether `g(X) = X`, colors included.
#[inline]
pub(crate) fn fixes(images: &[u8], x: &Graph) -> bool {
    for v in 0..x.n() {
        let gv = images[v] as usize;
        if x.color(gv) != x.color(v) || x.degree(gv) != x.degree(v) {
            return false;
        }
        let mut mapped = 0u32;
        for w in x.neighbors(v) {
            mapped |= 1 << images[w];
        }
        if mapped != x.row(gv) {
            return false;
        }
    }
    true
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A permutation group on `n` points with every element enumerated.
#[derive(Clone)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<u8>,
    order: usize,
    symmetric: bool,
    tag: String,
}

impl PermGroup {
    /// Builds a group from a complete, closed element list.
    fn from_sorted_flat(n: usize, generators: Vec<Permutation>, elements: Vec<u8>, tag: String) -> PermGroup {
        let order = if n == 0 { 1 } else { elements.len() / n };
        PermGroup {
            n,
            generators,
            symmetric: order as u128 == factorial(n),
            elements,
            order,
            tag,
        }
    }

    fn from_element_list(n: usize, generators: Vec<Permutation>, mut list: Vec<Vec<u8>>, tag: String) -> PermGroup {
        list.sort_unstable();
        list.dedup();
        let flat = list.concat();
        PermGroup::from_sorted_flat(n, generators, flat, tag)
    }

    pub fn trivial(n: usize) -> PermGroup {
        PermGroup::from_sorted_flat(n, Vec::new(), (0..n as u8).collect(), "trivial".into())
    }

    /// Smallest group containing `generators`, by breadth-first product closure.
    pub fn closure(n: usize, generators: &[Permutation], max_order: u64) -> Result<PermGroup> {
        if n > MAX_N {
            return Err(Error::TooManyVertices { n, max: MAX_N });
        }
        for g in generators {
            if g.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: g.degree(),
                    right: n,
                });
            }
        }
        let id: Vec<u8> = (0..n as u8).collect();
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y: Vec<u8> = x.iter().map(|&i| g.0[i as usize]).collect();
                if !seen.contains(&y) {
                    if seen.len() as u64 >= max_order {
                        return Err(Error::OrderCapExceeded { cap: max_order });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let tag = if generators.is_empty() {
            "trivial".to_string()
        } else {
            let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
            format!("gens:{}", gens.join(";"))
        };
        Ok(PermGroup::from_element_list(
            n,
            generators.to_vec(),
            seen.into_iter().collect(),
            tag,
        ))
    }

    pub fn symmetric(n: usize) -> Result<PermGroup> {
        PermGroup::symmetric_with_cap(n, DEFAULT_MAX_ORDER)
    }

    pub fn symmetric_with_cap(n: usize, max_order: u64) -> Result<PermGroup> {
        PermGroup::lex_filtered(n, max_order, factorial(n), |_| true, format!("S{n}"))
    }

    pub fn alternating(n: usize) -> Result<PermGroup> {
        PermGroup::alternating_with_cap(n, DEFAULT_MAX_ORDER)
    }

    pub fn alternating_with_cap(n: usize, max_order: u64) -> Result<PermGroup> {
        let order = if n < 2 { 1 } else { factorial(n) / 2 };
        PermGroup::lex_filtered(n, max_order, order, is_even, format!("A{n}"))
    }

    fn lex_filtered(
        n: usize,
        max_order: u64,
        order: u128,
        keep: impl Fn(&[u8]) -> bool,
        tag: String,
    ) -> Result<PermGroup> {
        if n > MAX_N {
            return Err(Error::TooManyVertices { n, max: MAX_N });
        }
        if order > max_order as u128 {
            return Err(Error::OrderCapExceeded { cap: max_order });
        }
        let mut p: Vec<u8> = (0..n as u8).collect();
        let mut flat = Vec::with_capacity(order as usize * n);
        loop {
            if keep(&p) {
                flat.extend_from_slice(&p);
            }
            if !next_permutation(&mut p) {
                break;
            }
        }
        let mut generators = Vec::new();
        if n >= 2 && tag.starts_with('S') {
            let mut t = Permutation::identity(n);
            t.0.swap(0, 1);
            let cyc = Permutation((0..n).map(|i| ((i + 1) % n) as u8).collect());
            generators = vec![t, cyc];
        } else if n >= 3 {
            // 3-cycles (0 1 i) generate A_n
            generators = (2..n)
                .map(|i| {
                    let mut g = Permutation::identity(n);
                    g.0[0] = 1;
                    g.0[1] = i as u8;
                    g.0[i] = 0;
                    g
                })
                .collect();
        }
        Ok(PermGroup::from_sorted_flat(n, generators, flat, tag))
    }

    /// Automorphism group of `K_{s,t}` with parts `0..s` and `s..s+t`.
    pub fn aut_complete_bipartite(s: usize, t: usize, max_order: u64) -> Result<PermGroup> {
        if s == 0 || t == 0 {
            return Err(Error::Precondition("both parts must be nonempty".into()));
        }
        let n = s + t;
        if n > MAX_N {
            return Err(Error::TooManyVertices { n, max: MAX_N });
        }
        let mut order = factorial(s) * factorial(t);
        if s == t {
            order *= 2;
        }
        if order > max_order as u128 {
            return Err(Error::OrderCapExceeded { cap: max_order });
        }
        let perms = |k: usize| {
            let mut p: Vec<u8> = (0..k as u8).collect();
            let mut all = vec![p.clone()];
            while next_permutation(&mut p) {
                all.push(p.clone());
            }
            all
        };
        let (pa, pb) = (perms(s), perms(t));
        let mut list = Vec::with_capacity(order as usize);
        for a in &pa {
            for b in &pb {
                let mut img = Vec::with_capacity(n);
                img.extend(a.iter().copied());
                img.extend(b.iter().map(|&j| j + s as u8));
                list.push(img);
                if s == t {
                    let mut swapped = Vec::with_capacity(n);
                    swapped.extend(a.iter().map(|&i| i + s as u8));
                    swapped.extend(b.iter().copied());
                    list.push(swapped);
                }
            }
        }
        Ok(PermGroup::from_element_list(n, Vec::new(), list, format!("autKst:{s},{t}")))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Short human-readable description, carried into deck and report output.
    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> PermGroup {
        self.tag = tag.into();
        self
    }

    /// True when the group is all of `S_n`.
    pub fn is_full_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Elements as image slices, in lexicographic order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u8]> + '_ {
        PermIter {
            flat: &self.elements,
            n: self.n,
            remaining: self.order,
        }
    }

    pub(crate) fn par_iter(&self) -> impl IndexedParallelIterator<Item = &[u8]> + '_ {
        let n = self.n.max(1);
        self.elements.par_chunks(n)
    }

    pub fn element(&self, index: usize) -> Permutation {
        Permutation(self.elements[index * self.n..(index + 1) * self.n].to_vec())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.n {
            return false;
        }
        if self.n == 0 {
            return true;
        }
        let (mut lo, mut hi) = (0, self.order);
        while lo < hi {
            let mid = (lo + hi) / 2;
            let e = &self.elements[mid * self.n..(mid + 1) * self.n];
            match e.cmp(&g.0[..]) {
                std::cmp::Ordering::Equal => return true,
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
            }
        }
        false
    }

    /// Whether every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.n == other.n && self.iter().all(|e| other.contains(&Permutation(e.to_vec())))
    }

    /// `G ∩ aut X`: the elements fixing `x` (colors included).
    pub fn intersect_aut(&self, x: &Graph) -> Result<PermGroup> {
        self.check_degree(x)?;
        let kept: Vec<u8> = self
            .par_iter()
            .filter(|g| fixes(g, x))
            .flat_map_iter(|g| g.iter().copied())
            .collect();
        Ok(PermGroup::from_sorted_flat(
            self.n,
            Vec::new(),
            kept,
            format!("{}∩aut", self.tag),
        ))
    }

    /// The group induced on the invariant vertex set `subset`, relabeled
    /// ascending to `0..|subset|`.
    pub fn restrict_to(&self, subset: &[usize]) -> Result<PermGroup> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        let mut pos = vec![usize::MAX; self.n];
        for (k, &v) in s.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            pos[v] = k;
        }
        let project = |g: &[u8]| -> Result<Vec<u8>> {
            s.iter()
                .map(|&v| match pos[g[v] as usize] {
                    usize::MAX => Err(Error::NotInvariant),
                    k => Ok(k as u8),
                })
                .collect()
        };
        let list = self.iter().map(project).collect::<Result<Vec<_>>>()?;
        let gens = self
            .generators
            .iter()
            .map(|g| project(&g.0).map(Permutation))
            .collect::<Result<Vec<_>>>()?;
        Ok(PermGroup::from_element_list(
            s.len(),
            gens,
            list,
            format!("{}|{}", self.tag, s.len()),
        ))
    }

    pub(crate) fn check_degree(&self, x: &Graph) -> Result<()> {
        if self.n != x.n() {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: x.n(),
            });
        }
        Ok(())
    }

    pub(crate) fn from_automorphisms(n: usize, list: Vec<Vec<u8>>, tag: String) -> PermGroup {
        PermGroup::from_element_list(n, Vec::new(), list, tag)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup({}, n={}, order={})", self.tag, self.n, self.order)
    }
}

struct PermIter<'a> {
    flat: &'a [u8],
    n: usize,
    remaining: usize,
}

impl<'a> Iterator for PermIter<'a> {
    type Item = &'a [u8];
    fn next(&mut self) -> Option<&'a [u8]> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let (head, tail) = self.flat.split_at(self.n);
        self.flat = tail;
        Some(head)
    }
    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

impl ExactSizeIterator for PermIter<'_> {}

/// `G ∩ aut X` as a free function.
pub fn group_intersect_aut(group: &PermGroup, x: &Graph) -> Result<PermGroup> {
    group.intersect_aut(x)
}

/// Image of `x` under `g`.
pub fn apply(g: &Permutation, x: &Graph) -> Result<Graph> {
    g.apply(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::from_cycles(n, s).unwrap()
    }

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn closure_examples() {
        let s4 = PermGroup::closure(4, &[cyc(4, "(0 1)"), cyc(4, "(0 1 2 3)")], DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(s4.order(), 24);
        assert!(s4.is_full_symmetric());
        assert_eq!(PermGroup::closure(4, &[], DEFAULT_MAX_ORDER).unwrap().order(), 1);
        let c3 = PermGroup::closure(4, &[cyc(4, "(0 1 2)")], DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(c3.order(), 3);
        assert!(!c3.is_full_symmetric());
    }

    #[test]
    fn closure_cap() {
        let gens = [cyc(6, "(0 1)"), cyc(6, "(0 1 2 3 4 5)")];
        assert_eq!(
            PermGroup::closure(6, &gens, 100).unwrap_err(),
            Error::OrderCapExceeded { cap: 100 }
        );
        assert_eq!(PermGroup::closure(6, &gens, 720).unwrap().order(), 720);
    }

    #[test]
    fn closure_ignores_generator_order() {
        let a = PermGroup::closure(5, &[cyc(5, "(0 1 2)"), cyc(5, "(2 3 4)")], DEFAULT_MAX_ORDER).unwrap();
        let b = PermGroup::closure(5, &[cyc(5, "(2 3 4)"), cyc(5, "(0 1 2)")], DEFAULT_MAX_ORDER).unwrap();
        assert!(a.iter().eq(b.iter()));
        assert_eq!(a.order(), 60);
    }

    #[test]
    fn named_groups() {
        assert_eq!(PermGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(PermGroup::alternating(4).unwrap().order(), 12);
        assert_eq!(PermGroup::alternating(2).unwrap().order(), 1);
        assert_eq!(PermGroup::symmetric(1).unwrap().order(), 1);
        for n in 2..=7 {
            let s = PermGroup::symmetric(n).unwrap();
            let a = PermGroup::alternating(n).unwrap();
            assert_eq!(2 * a.order(), s.order());
            assert!(a.iter().all(is_even));
            assert!(a.is_subgroup_of(&s));
        }
        assert!(matches!(
            PermGroup::symmetric(11),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn alternating_generators_generate() {
        let a5 = PermGroup::alternating(5).unwrap();
        let c = PermGroup::closure(5, a5.generators(), DEFAULT_MAX_ORDER).unwrap();
        assert!(c.iter().eq(a5.iter()));
    }

    #[test]
    fn complete_bipartite_orders() {
        let g23 = PermGroup::aut_complete_bipartite(2, 3, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g23.order(), 12);
        assert_eq!(PermGroup::aut_complete_bipartite(2, 2, DEFAULT_MAX_ORDER).unwrap().order(), 8);
        assert_eq!(PermGroup::aut_complete_bipartite(1, 1, DEFAULT_MAX_ORDER).unwrap().order(), 2);
        assert_eq!(PermGroup::aut_complete_bipartite(3, 3, DEFAULT_MAX_ORDER).unwrap().order(), 72);
        // every element preserves K_{2,3}
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(g23.iter().all(|e| fixes(e, &k23)));
    }

    #[test]
    fn apply_examples() {
        let x = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(cyc(4, "(0 1)").apply(&x).unwrap(), x);
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(cyc(4, "(1 2)").apply(&p4).unwrap(), g(4, &[(0, 2), (1, 2), (1, 3)]));
        assert_eq!(Permutation::identity(4).apply(&p4).unwrap(), p4);
        assert!(matches!(
            Permutation::identity(3).apply(&p4),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn apply_moves_colors() {
        let x = g(3, &[(0, 1)]).with_colors(vec![7, 8, 9]).unwrap();
        let y = cyc(3, "(0 1 2)").apply(&x).unwrap();
        // vertex g(v) takes the color of v
        assert_eq!(y.colors(), Some(&[9, 7, 8][..]));
        assert!(y.has_edge(1, 2));
    }

    #[test]
    fn intersect_aut_examples() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let a4 = PermGroup::alternating(4).unwrap();
        let two_k2 = g(4, &[(0, 1), (2, 3)]);
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        // brute force over all 24 permutations
        let count = s4
            .iter()
            .filter(|e| apply_images(e, &two_k2) == two_k2)
            .count();
        assert_eq!(count, 8);
        assert_eq!(s4.intersect_aut(&two_k2).unwrap().order(), 8);
        let h = a4.intersect_aut(&p4).unwrap();
        assert_eq!(h.order(), 2);
        assert!(h.contains(&cyc(4, "(0 3)(1 2)")));
        assert_eq!(PermGroup::trivial(4).intersect_aut(&p4).unwrap().order(), 1);
    }

    #[test]
    fn restrict_examples() {
        // K_4 on 0..3 plus a pendant 4 at 0
        let x = g(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]);
        let aut = PermGroup::symmetric(5).unwrap().intersect_aut(&x).unwrap();
        let r = aut.restrict_to(&[0, 1, 2, 3]).unwrap();
        assert_eq!(r.order(), 6);
        assert!(r.iter().all(|e| e[0] == 0));
        assert_eq!(PermGroup::trivial(5).restrict_to(&[1, 3]).unwrap().order(), 1);
        let s4 = PermGroup::symmetric(4).unwrap();
        assert!(s4.restrict_to(&[0, 1, 2, 3]).unwrap().iter().eq(s4.iter()));
        assert_eq!(s4.restrict_to(&[0, 1]).unwrap_err(), Error::NotInvariant);
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(cyc(4, "(0 1)(2 3)").images(), &[1, 0, 3, 2]);
        assert_eq!(cyc(3, "").images(), &[0, 1, 2]);
        assert_eq!(cyc(3, "()").images(), &[0, 1, 2]);
        assert_eq!(cyc(4, "(0 1 2)").to_string(), "(0 1 2)");
        assert!(Permutation::from_cycles(3, "(0 3)").is_err());
        assert!(Permutation::from_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Permutation::from_cycles(3, "0 1").is_err());
        assert!(Permutation::from_cycles(3, "(0 1").is_err());
    }

    #[test]
    fn permutation_algebra() {
        let a = cyc(4, "(0 1 2)");
        let b = cyc(4, "(1 3)");
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.compose(&b).image(1), a.image(3));
        assert!(a.is_even());
        assert!(!b.is_even());
        assert!(Permutation::from_images(&[0, 0, 1]).is_err());
    }
}
