//! Vertex, edge and end-vertex decks, hypomorphism tests, and recovery of
//! the pendant-attachment profile from an end-vertex deck.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_code, canonical_form, CanonicalCode};
use crate::perm::PermGroup;
use crate::structure::pruned_graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeckKind {
    Vertex,
    Edge,
    EndVertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DeckEntry {
    pub code: CanonicalCode,
    pub mult: usize,
}

/// A multiset of canonical codes, sorted by code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deck {
    pub kind: DeckKind,
    pub group: String,
    pub entries: Vec<DeckEntry>,
}

impl Deck {
    fn from_codes(kind: DeckKind, group: String, codes: Vec<CanonicalCode>) -> Deck {
        let mut counts: BTreeMap<CanonicalCode, usize> = BTreeMap::new();
        for c in codes {
            *counts.entry(c).or_default() += 1;
        }
        Deck {
            kind,
            group,
            entries: counts
                .into_iter()
                .map(|(code, mult)| DeckEntry { code, mult })
                .collect(),
        }
    }

    /// Total multiplicity.
    pub fn size(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// Multiset equality, ignoring kind and group tag.
    pub fn same_cards(&self, other: &Deck) -> bool {
        self.entries == other.entries
    }
}

/// `ED(X)` with members canonicalized under `group`.
pub fn edge_deck(x: &Graph, group: &PermGroup) -> Result<Deck> {
    group.check_degree(x)?;
    let edges = x.edges();
    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let codes = edges
        .into_iter()
        .map(|e| canonical_code(&x.delete_edge(e)?, group))
        .collect::<Result<Vec<_>>>()?;
    Ok(Deck::from_codes(DeckKind::Edge, group.tag().to_string(), codes))
}

/// `VD(X)` under the full symmetric group on `n - 1` points.
pub fn vertex_deck(x: &Graph) -> Result<Deck> {
    if x.n() < 2 {
        return Err(Error::Precondition("vertex deck needs n >= 2".into()));
    }
    let codes = (0..x.n())
        .map(|u| Ok(canonical_form(&x.delete_vertex(u)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Deck::from_codes(DeckKind::Vertex, format!("S{}", x.n() - 1), codes))
}

/// `VD_1(X)`: deletions of degree-1 vertices only.
pub fn end_vertex_deck(x: &Graph) -> Result<Deck> {
    let ends = x.end_vertices();
    if ends.is_empty() {
        return Err(Error::NoEndVertices);
    }
    let codes = ends
        .into_iter()
        .map(|u| Ok(canonical_form(&x.delete_vertex(u)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Deck::from_codes(DeckKind::EndVertex, format!("S{}", x.n() - 1), codes))
}

/// Equality of `G`-edge decks, which is equivalent to the existence of an
/// edge bijection with `X - e` and `Y - f(e)` in one `G`-orbit.
pub fn is_g_edge_hypomorphic(x: &Graph, y: &Graph, group: &PermGroup) -> Result<bool> {
    if x.n() != y.n() || x.m() != y.m() {
        return Err(Error::SizeMismatch(format!(
            "(n, m) = ({}, {}) vs ({}, {})",
            x.n(),
            x.m(),
            y.n(),
            y.m()
        )));
    }
    if x.is_colored() != y.is_colored() {
        return Err(Error::ColorArityMismatch);
    }
    if x.m() == 0 {
        return Ok(true);
    }
    if deck_signature(x) != deck_signature(y) {
        return Ok(false);
    }
    Ok(edge_deck(x, group)?.same_cards(&edge_deck(y, group)?))
}

/// A cheap `S_n`-invariant of the edge deck: the sorted list of the (color,
/// degree) multisets of every `X - e`. Equal edge decks under any group
/// imply equal signatures.
pub(crate) fn deck_signature(x: &Graph) -> Vec<Vec<(u32, usize)>> {
    let degs = x.degrees();
    let mut sig: Vec<Vec<(u32, usize)>> = x
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let mut d: Vec<(u32, usize)> = (0..x.n())
                .map(|w| (x.color(w), degs[w] - (w == u || w == v) as usize))
                .collect();
            d.sort_unstable();
            d
        })
        .collect();
    sig.sort_unstable();
    sig
}

/// Class sizes `r_1..r_k` and the class of every base vertex (0 for `R_0`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AttachmentProfile {
    pub r: Vec<usize>,
    pub partition: Vec<usize>,
}

impl AttachmentProfile {
    /// Builds a profile from a per-vertex class assignment.
    pub fn from_partition(partition: Vec<usize>) -> AttachmentProfile {
        let k = partition.iter().copied().max().unwrap_or(0);
        let mut r = vec![0; k];
        for &i in &partition {
            if i > 0 {
                r[i - 1] += 1;
            }
        }
        AttachmentProfile { r, partition }
    }

    pub fn k(&self) -> usize {
        self.r.len()
    }

    /// `r_i`, with `r_0 = |R_0|`.
    pub fn count(&self, i: usize) -> usize {
        if i == 0 {
            self.partition.iter().filter(|&&c| c == 0).count()
        } else {
            self.r.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// Vertices of class `i`, ascending.
    pub fn class(&self, i: usize) -> Vec<usize> {
        (0..self.partition.len())
            .filter(|&v| self.partition[v] == i)
            .collect()
    }

    pub fn end_vertex_count(&self) -> usize {
        self.r.iter().enumerate().map(|(i, r)| (i + 1) * r).sum()
    }
}

/// Joins every base vertex of class `i` to `i` fresh end vertices, appended
/// after the base vertices in base-vertex order.
pub fn attach_pendants(z: &Graph, partition: &[usize]) -> Result<Graph> {
    if partition.len() != z.n() {
        return Err(Error::SizeMismatch(format!(
            "partition has {} entries for {} vertices",
            partition.len(),
            z.n()
        )));
    }
    let total: usize = partition.iter().sum();
    let mut x = z.add_vertices(total, 0)?;
    let mut next = z.n();
    for (v, &i) in partition.iter().enumerate() {
        for _ in 0..i {
            x.insert(v, next);
            next += 1;
        }
    }
    Ok(x)
}

/// The colored graph `X_j`: classes outside `{j-1, j}` get distinct colors
/// `i + 1`, and each vertex of `R_j` gets one end vertex.
pub fn build_xj(z: &Graph, profile: &AttachmentProfile, j: usize) -> Result<Graph> {
    if j == 0 || j > profile.k() {
        return Err(Error::ClassOutOfRange(j));
    }
    if profile.partition.len() != z.n() {
        return Err(Error::SizeMismatch("profile does not match base graph".into()));
    }
    if z.n() > 0 && z.min_degree().unwrap_or(0) < 2 {
        return Err(Error::Precondition("base graph needs minimum degree >= 2".into()));
    }
    let attach: Vec<usize> = profile
        .partition
        .iter()
        .map(|&i| usize::from(i == j))
        .collect();
    let x = attach_pendants(&z.clone().without_colors(), &attach)?;
    let colors: Vec<u32> = (0..x.n())
        .map(|v| match profile.partition.get(v) {
            Some(&i) if i + 1 != j && i != j => i as u32 + 1,
            _ => 0,
        })
        .collect();
    x.with_colors(colors)
}

/// One class of the partitioned end-vertex deck.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassDeck {
    pub class: usize,
    /// `D_i`: members from deleting an end vertex attached to `R_i`.
    pub deck: Deck,
    /// `D_i'`: multiplicities divided by `i`.
    pub reduced: Deck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AttachmentFit {
    pub z: Graph,
    pub profile: AttachmentProfile,
    pub classes: Vec<ClassDeck>,
}

/// All `r` with `sum i * r_i = total` and `sum r_i <= base`, trailing zeros trimmed.
pub(crate) fn profiles_with_weight(total: usize, base: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max_part: usize, counts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            let mut r = counts.clone();
            while r.last() == Some(&0) {
                r.pop();
            }
            out.push(r);
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            counts[p - 1] += 1;
            go(rem - p, p, counts, out);
            counts[p - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    let mut counts = vec![0; total.max(1)];
    go(total, total, &mut counts, &mut out);
    out.retain(|r| r.iter().sum::<usize>() <= base);
    out.sort();
    out
}

/// Every way to pick disjoint classes `R_i` of sizes `r_i` in `0..base`,
/// as per-vertex class vectors, in lexicographic order of the choices.
pub(crate) fn class_assignments(base: usize, r: &[usize]) -> Vec<Vec<usize>> {
    fn choose(
        start: usize,
        need: usize,
        class: usize,
        r: &[usize],
        part: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if need == 0 {
            if class == r.len() {
                out.push(part.clone());
            } else {
                let next = class + 1;
                choose(0, r[next - 1], next, r, part, out);
            }
            return;
        }
        for v in start..part.len() {
            if part[v] == 0 {
                part[v] = class;
                choose(v + 1, need - 1, class, r, part, out);
                part[v] = 0;
            }
        }
    }
    let mut out = Vec::new();
    if r.iter().sum::<usize>() > base {
        return out;
    }
    let mut part = vec![0; base];
    if r.is_empty() {
        return vec![part];
    }
    choose(0, r[0], 1, r, &mut part, &mut out);
    out
}

/// For each base vertex of `member`'s pruned graph, how many end vertices
/// hang off it; `None` if the member is not a base graph plus pendants.
fn pendant_histogram(member: &Graph) -> Option<(Graph, Vec<usize>)> {
    let pruned = pruned_graph(member);
    let mut in_base = vec![false; member.n()];
    for &v in &pruned.vertices {
        in_base[v] = true;
    }
    let mut hist = vec![0usize; 1];
    let mut per_vertex = vec![0usize; member.n()];
    for v in 0..member.n() {
        if in_base[v] {
            continue;
        }
        if member.degree(v) != 1 {
            return None;
        }
        let a = member.neighbors(v).next()?;
        if !in_base[a] {
            return None;
        }
        per_vertex[a] += 1;
    }
    for &v in &pruned.vertices {
        let c = per_vertex[v];
        if hist.len() <= c {
            hist.resize(c + 1, 0);
        }
        hist[c] += 1;
    }
    Some((pruned.graph, hist))
}

/// Recovers the base graph `Z`, the profile `(r_1..r_k)`, and the deck
/// partition `D_i` / reduced decks `D_i'` from an end-vertex deck, by fitting
/// every candidate profile and keeping those that regenerate the deck.
pub fn infer_attachment_profile(deck: &Deck) -> Result<AttachmentFit> {
    if deck.kind != DeckKind::EndVertex {
        return Err(Error::Precondition("expected an end-vertex deck".into()));
    }
    let inconsistent = |why: &str| Error::InconsistentDeck(why.to_string());
    let d = deck.size();
    if d == 0 {
        return Err(inconsistent("empty deck"));
    }
    let members: Vec<(Graph, Vec<usize>)> = deck
        .entries
        .iter()
        .map(|e| pendant_histogram(&e.code.to_graph()))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| inconsistent("a member is not a base graph with pendants"))?;
    let z = members[0].0.clone();
    let z_code = canonical_form(&z);
    if members.iter().any(|(m, _)| canonical_form(m) != z_code) {
        return Err(inconsistent("members disagree on the pruned graph"));
    }
    if z.n() == 0 || z.min_degree().unwrap_or(0) < 2 {
        return Err(inconsistent("pruned graph has a vertex of degree < 2"));
    }
    let member_n = deck.entries[0].code.n();
    if member_n + 1 != z.n() + d {
        return Err(inconsistent("member size does not match deck size"));
    }

    let mut fits: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for r in profiles_with_weight(d, z.n()) {
        let hit = class_assignments(z.n(), &r).into_iter().find(|part| {
            attach_pendants(&z, part)
                .and_then(|x| end_vertex_deck(&x))
                .map(|regen| regen.same_cards(deck))
                .unwrap_or(false)
        });
        if let Some(part) = hit {
            fits.push((r, part));
        }
    }
    let (r, part) = match fits.len() {
        0 => return Err(inconsistent("no attachment profile regenerates the deck")),
        1 => fits.pop().expect("one fit"),
        _ => return Err(Error::AmbiguousProfile(fits.into_iter().map(|f| f.0).collect())),
    };
    let profile = AttachmentProfile { r, partition: part };

    let mut by_class: BTreeMap<usize, Vec<DeckEntry>> = BTreeMap::new();
    for (entry, (_, hist)) in deck.entries.iter().zip(&members) {
        let class = (1..=profile.k())
            .find(|&i| hist.get(i).copied().unwrap_or(0) + 1 == profile.count(i))
            .ok_or_else(|| inconsistent("member matches no class"))?;
        by_class.entry(class).or_default().push(entry.clone());
    }
    let classes = by_class
        .into_iter()
        .map(|(class, entries)| {
            let reduced = entries
                .iter()
                .map(|e| {
                    if e.mult % class != 0 {
                        Err(inconsistent("class multiplicity not divisible by its index"))
                    } else {
                        Ok(DeckEntry {
                            code: e.code.clone(),
                            mult: e.mult / class,
                        })
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ClassDeck {
                class,
                deck: Deck {
                    kind: DeckKind::EndVertex,
                    group: deck.group.clone(),
                    entries,
                },
                reduced: Deck {
                    kind: DeckKind::EndVertex,
                    group: deck.group.clone(),
                    entries: reduced,
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AttachmentFit { z, profile, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::normalize;
    use crate::iso::is_isomorphic;
    use crate::perm::{apply_images, Permutation};

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| normalize(i, (i + 1) % n)).collect();
        g(n, &e)
    }

    fn p4() -> Graph {
        g(4, &[(0, 1), (1, 2), (2, 3)])
    }

    #[test]
    fn edge_deck_examples() {
        let k3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let d = edge_deck(&k3, &PermGroup::symmetric(3).unwrap()).unwrap();
        assert_eq!(d.entries.len(), 1);
        assert_eq!(d.entries[0].mult, 3);
        assert!(is_isomorphic(&d.entries[0].code.to_graph(), &g(3, &[(0, 1), (1, 2)])).unwrap());

        let s4 = PermGroup::symmetric(4).unwrap();
        let d = edge_deck(&g(4, &[(0, 1), (2, 3)]), &s4).unwrap();
        assert_eq!(d.entries.len(), 1);
        assert_eq!(d.entries[0].mult, 2);
        assert_eq!(d.entries[0].code.edge_count(), 1);
    }

    #[test]
    fn edge_deck_of_p4_under_a4() {
        let a4 = PermGroup::alternating(4).unwrap();
        let d = edge_deck(&p4(), &a4).unwrap();
        // oracle: orbit-minimize each deletion over the 12 even permutations
        let min_code = |x: &Graph| {
            a4.iter()
                .map(|e| CanonicalCode::of_labeled(&apply_images(e, x)))
                .min()
                .unwrap()
        };
        let mut expected: Vec<CanonicalCode> = p4()
            .edges()
            .into_iter()
            .map(|e| min_code(&p4().delete_edge(e).unwrap()))
            .collect();
        expected.sort();
        let a = min_code(&g(4, &[(1, 2), (2, 3)]));
        let b = min_code(&g(4, &[(0, 1), (1, 2)]));
        assert_eq!(a, b);
        assert_eq!(d.entries.len(), 2);
        let mults: Vec<usize> = d.entries.iter().map(|e| e.mult).collect();
        let two_k2 = d.entries.iter().find(|e| e.mult == 1).unwrap();
        assert!(is_isomorphic(&two_k2.code.to_graph(), &g(4, &[(0, 1), (2, 3)])).unwrap());
        assert_eq!(mults.iter().sum::<usize>(), 3);
        let flat: Vec<CanonicalCode> = d
            .entries
            .iter()
            .flat_map(|e| std::iter::repeat(e.code.clone()).take(e.mult))
            .collect();
        assert_eq!(flat, expected);
    }

    #[test]
    fn empty_graph_has_no_edge_deck() {
        let s3 = PermGroup::symmetric(3).unwrap();
        assert_eq!(edge_deck(&Graph::empty(3).unwrap(), &s3), Err(Error::EmptyGraph));
    }

    #[test]
    fn vertex_and_end_vertex_decks() {
        let k3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let d = vertex_deck(&k3).unwrap();
        assert_eq!(d.entries.len(), 1);
        assert_eq!(d.entries[0].mult, 3);
        assert_eq!(d.entries[0].code.to_graph(), g(2, &[(0, 1)]));

        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let d = end_vertex_deck(&star).unwrap();
        assert_eq!(d.size(), 3);
        assert_eq!(d.entries.len(), 1);
        assert!(is_isomorphic(&d.entries[0].code.to_graph(), &g(3, &[(0, 1), (0, 2)])).unwrap());
        assert_eq!(end_vertex_deck(&cycle(5)), Err(Error::NoEndVertices));
    }

    #[test]
    fn hypomorphism_examples() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let a4 = PermGroup::alternating(4).unwrap();
        assert!(is_g_edge_hypomorphic(&g(4, &[(0, 1), (2, 3)]), &g(4, &[(0, 1), (1, 2)]), &s4).unwrap());
        let y = Permutation::from_cycles(4, "(0 1)").unwrap().apply(&p4()).unwrap();
        assert!(is_g_edge_hypomorphic(&p4(), &y, &a4).unwrap());
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let tri = g(4, &[(0, 1), (0, 2), (1, 2)]);
        // the classic small pair: both decks are three copies of P_3 + K_1
        assert!(is_g_edge_hypomorphic(&star, &tri, &s4).unwrap());
        assert!(!is_isomorphic(&star, &tri).unwrap());
        assert!(!is_g_edge_hypomorphic(&star, &p4(), &s4).unwrap());
        assert!(matches!(
            is_g_edge_hypomorphic(&star, &p4().delete_edge((0, 1)).unwrap(), &s4),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn coarsening_monotone() {
        // A4-hypomorphic pairs stay hypomorphic under S4
        let a4 = PermGroup::alternating(4).unwrap();
        let s4 = PermGroup::symmetric(4).unwrap();
        let y = Permutation::from_cycles(4, "(0 1)").unwrap().apply(&p4()).unwrap();
        assert!(a4.is_subgroup_of(&s4));
        assert!(is_g_edge_hypomorphic(&p4(), &y, &a4).unwrap());
        assert!(is_g_edge_hypomorphic(&p4(), &y, &s4).unwrap());
    }

    fn c5_with(partition: &[usize]) -> Graph {
        attach_pendants(&cycle(5), partition).unwrap()
    }

    #[test]
    fn infer_three_single_pendants() {
        let x = c5_with(&[1, 1, 0, 1, 0]);
        let fit = infer_attachment_profile(&end_vertex_deck(&x).unwrap()).unwrap();
        assert_eq!(fit.profile.r, vec![3]);
        assert!(is_isomorphic(&fit.z, &cycle(5)).unwrap());
        assert_eq!(fit.classes.len(), 1);
        assert_eq!(fit.classes[0].class, 1);
    }

    #[test]
    fn infer_flags_ambiguous_caveat() {
        let x = attach_pendants(&cycle(4), &[2, 0, 0, 0]).unwrap();
        let deck = end_vertex_deck(&x).unwrap();
        assert_eq!(deck.entries.len(), 1);
        assert_eq!(deck.entries[0].mult, 2);
        match infer_attachment_profile(&deck) {
            Err(Error::AmbiguousProfile(profiles)) => {
                assert_eq!(profiles, vec![vec![0, 1], vec![2]]);
            }
            other => panic!("expected ambiguity, got {other:?}"),
        }
    }

    #[test]
    fn infer_mixed_classes() {
        let x = c5_with(&[2, 0, 1, 0, 0]);
        let fit = infer_attachment_profile(&end_vertex_deck(&x).unwrap()).unwrap();
        assert_eq!(fit.profile.r, vec![1, 1]);
        let d2 = fit.classes.iter().find(|c| c.class == 2).unwrap();
        assert!(d2.deck.entries.iter().all(|e| e.mult % 2 == 0));
        assert_eq!(d2.reduced.size() * 2, d2.deck.size());
        let d1 = fit.classes.iter().find(|c| c.class == 1).unwrap();
        assert_eq!(d1.deck.size(), 1);
        // regenerating from the fit reproduces the deck
        let regen = attach_pendants(&fit.z, &fit.profile.partition).unwrap();
        assert!(end_vertex_deck(&regen).unwrap().same_cards(&end_vertex_deck(&x).unwrap()));
    }

    #[test]
    fn infer_rejects_inconsistent() {
        // pendant path of length two: not a base graph plus pendants
        let x = g(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (5, 6)]);
        assert!(matches!(
            infer_attachment_profile(&end_vertex_deck(&x).unwrap()),
            Err(Error::InconsistentDeck(_))
        ));
    }

    #[test]
    fn build_xj_examples() {
        let z = cycle(5);
        let p = AttachmentProfile::from_partition(vec![1, 1, 0, 1, 0]);
        let x1 = build_xj(&z, &p, 1).unwrap();
        assert_eq!(x1.n(), 8);
        assert_eq!(x1.end_vertices().len(), 3);
        assert!(x1.color_vec().iter().all(|&c| c == 0));

        let p = AttachmentProfile::from_partition(vec![2, 0, 1, 0, 0]);
        let x2 = build_xj(&z, &p, 2).unwrap();
        assert_eq!(x2.end_vertices(), vec![5]);
        assert!(x2.has_edge(0, 5));
        // R_1 = {2} is R_{j-1}: uncolored; R_0 gets its own color
        assert_eq!(x2.color(2), 0);
        assert_eq!(x2.color(1), 1);

        let p = AttachmentProfile::from_partition(vec![2, 0, 2, 0, 0, 0]);
        assert_eq!(p.r, vec![0, 2]);
        let x = build_xj(&cycle(6), &p, 2).unwrap();
        assert_eq!(x.end_vertices().len(), 2);
        assert_eq!(build_xj(&cycle(6), &p, 3), Err(Error::ClassOutOfRange(3)));
    }

    #[test]
    fn profile_enumeration() {
        assert_eq!(profiles_with_weight(2, 5), vec![vec![0, 1], vec![2]]);
        assert_eq!(profiles_with_weight(3, 2), vec![vec![0, 0, 1], vec![1, 1]]);
        assert_eq!(class_assignments(4, &[2]).len(), 6);
        assert_eq!(class_assignments(5, &[1, 1]).len(), 20);
        assert_eq!(class_assignments(2, &[3]).len(), 0);
    }
}
