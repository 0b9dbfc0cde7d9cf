//! Exhaustive experiments at desk scale: enumeration up to isomorphism,
//! hypomorphic pairs, replacing edge sets and end-vertex reconstruction.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::deck::{
    attach_pendants, class_assignments, deck_signature, edge_deck, end_vertex_deck, is_g_edge_hypomorphic,
    DeckEntry,
};
use crate::error::{Error, Result};
use crate::graph::{pair_count, Edge, EdgeSet, Graph};
use crate::group_spec::parse_group_spec;
use crate::iso::{automorphism_group, canonical_code, canonical_form, is_g_isomorphic, CanonicalCode};
use crate::nash_williams::{binomial, graph_from_pairs, pow2_exceeds, verify_lemma, Combinations, LemmaReport};
use crate::perm::PermGroup;
use crate::structure::tree_canonical;

pub const MAX_ENUMERATION_N: usize = 8;
pub const MAX_TREE_N: usize = 12;
pub const MAX_SURVEY_N: usize = 10;

const CHUNK: usize = 4096;

/// One representative per isomorphism class on `n` vertices, optionally
/// restricted to `m` edges and a predicate, ordered by canonical code.
/// Representatives are the canonical forms themselves.
pub fn enumerate_graphs(n: usize, m: Option<usize>, predicate: Option<&(dyn Fn(&Graph) -> bool + Sync)>) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationCapExceeded(format!(
            "graph enumeration is limited to n <= {MAX_ENUMERATION_N}"
        )));
    }
    let mut codes = all_classes(n);
    if let Some(m) = m {
        codes.retain(|c| c.edge_count() == m);
    }
    let mut out: Vec<Graph> = codes.iter().map(CanonicalCode::to_graph).collect();
    if let Some(p) = predicate {
        out.retain(|g| p(g));
    }
    Ok(out)
}

/// Canonical codes of every class on `n` vertices, sorted. Classes on `k`
/// vertices come from classes on `k - 1` by adding a vertex adjacent to
/// each possible neighbourhood.
fn all_classes(n: usize) -> Vec<CanonicalCode> {
    let mut level = vec![canonical_form(&Graph::empty(0).expect("n = 0"))];
    for k in 1..=n {
        let next: BTreeSet<CanonicalCode> = level
            .par_iter()
            .flat_map_iter(|code| {
                let base = code.to_graph().add_vertices(1, 0).expect("k <= 8");
                (0u32..1 << (k - 1)).map(move |mask| {
                    let mut g = base.clone();
                    for u in 0..k - 1 {
                        if mask >> u & 1 == 1 {
                            g.insert(u, k - 1);
                        }
                    }
                    canonical_form(&g)
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = next.into_iter().collect();
    }
    level
}

fn tree_adjacency(t: &Graph) -> Vec<Vec<usize>> {
    (0..t.n()).map(|v| t.neighbors(v).collect()).collect()
}

/// All trees on `n` vertices up to isomorphism, ordered by their rooted
/// center encoding.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_TREE_N {
        return Err(Error::EnumerationCapExceeded(format!(
            "tree enumeration is limited to n <= {MAX_TREE_N}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    let k1 = Graph::empty(1)?;
    level.insert(tree_canonical(&tree_adjacency(&k1)), k1);
    for k in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            let base = t.add_vertices(1, 0)?;
            for v in 0..k - 1 {
                let mut g = base.clone();
                g.insert(v, k - 1);
                next.entry(tree_canonical(&tree_adjacency(&g))).or_insert(g);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub x: Graph,
    pub y: Graph,
    pub group: String,
    /// `Y`'s canonical code under the full symmetric group.
    pub y_code_sn: CanonicalCode,
    pub hypomorphic: bool,
    pub isomorphic: bool,
    pub lemma: LemmaReport,
}

/// Every pair of distinct `G`-orbits of labeled `m`-edge graphs on `n`
/// vertices with equal `G`-edge decks. Each orbit is represented by its
/// member with the smallest pair bitstring; pairs come out sorted.
pub fn find_hypomorphic_pairs(
    n: usize,
    m: usize,
    group: &PermGroup,
    max_candidates: u64,
    max_subsets: u64,
) -> Result<Vec<PairWitness>> {
    let count = binomial(pair_count(n), m);
    if count > max_candidates as u128 {
        return Err(Error::CandidateCapExceeded {
            count,
            cap: max_candidates,
        });
    }
    if group.degree() != n {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: n,
        });
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    // orbit code -> smallest member; combinations arrive in ascending order
    let mut orbits: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    let mut combos = Combinations::new(pair_count(n), m);
    loop {
        let chunk: Vec<Vec<usize>> = combos.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let coded = chunk
            .par_iter()
            .map(|pairs| {
                let g = graph_from_pairs(n, pairs);
                canonical_code(&g, group).map(|c| (c, g))
            })
            .collect::<Result<Vec<_>>>()?;
        for (c, g) in coded {
            orbits.entry(c).or_insert(g);
        }
    }
    let mut reps: Vec<Graph> = orbits.into_values().collect();
    reps.sort_by_key(|g| g.pair_bits());

    let decks: Vec<Vec<DeckEntry>> = reps
        .par_iter()
        .map(|g| edge_deck(g, group).map(|d| d.entries))
        .collect::<Result<Vec<_>>>()?;
    let mut classes: BTreeMap<&Vec<DeckEntry>, Vec<usize>> = BTreeMap::new();
    for (i, d) in decks.iter().enumerate() {
        classes.entry(d).or_default().push(i);
    }
    let mut pairs: Vec<(usize, usize)> = classes
        .values()
        .flat_map(|members| {
            members
                .iter()
                .enumerate()
                .flat_map(move |(a, &i)| members[a + 1..].iter().map(move |&j| (i, j)))
        })
        .collect();
    pairs.sort_unstable();
    pairs
        .par_iter()
        .map(|&(i, j)| {
            let (x, y) = (&reps[i], &reps[j]);
            Ok(PairWitness {
                x: x.clone(),
                y: y.clone(),
                group: group.tag().to_string(),
                y_code_sn: canonical_form(y),
                hypomorphic: true,
                isomorphic: is_g_isomorphic(x, y, group)?,
                lemma: verify_lemma(x, y, group, max_subsets)?,
            })
        })
        .collect()
}

/// Lexicographic `k`-subsets of `0..p`.
fn lex_subsets(p: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= p).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let c = cur.as_mut().expect("checked above");
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < p - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Search state shared by replacing-set queries on one graph.
struct Replacer<'a> {
    x: &'a Graph,
    group: &'a PermGroup,
    non_edges: Vec<Edge>,
    signature: Vec<Vec<(u32, usize)>>,
    sn_deck: Option<Vec<CanonicalCode>>,
}

impl<'a> Replacer<'a> {
    fn new(x: &'a Graph, group: &'a PermGroup) -> Replacer<'a> {
        let sn_deck = (!group.is_full_symmetric() && x.m() > 0).then(|| sn_codes(x));
        Replacer {
            x,
            group,
            non_edges: x.non_edges(),
            signature: deck_signature(x),
            sn_deck,
        }
    }

    fn replaces(&self, reduced: &Graph, f: &[usize]) -> Result<bool> {
        let f = EdgeSet::new(f.iter().map(|&i| self.non_edges[i]));
        let z = reduced.add_edges(&f)?;
        if deck_signature(&z) != self.signature {
            return Ok(false);
        }
        if let Some(sn) = &self.sn_deck {
            if sn_codes(&z) != *sn {
                return Ok(false);
            }
        }
        is_g_edge_hypomorphic(self.x, &z, self.group)
    }

    /// Replacing sets of `e`, or just the first one when `first_only`.
    /// `budget` counts candidate checks and stops the search when spent.
    fn search(&self, e: &EdgeSet, first_only: bool, budget: &mut Option<u64>) -> Result<Option<Vec<EdgeSet>>> {
        let reduced = self.x.delete_edges(e)?;
        let mut found = Vec::new();
        for f in lex_subsets(self.non_edges.len(), e.len()) {
            if let Some(b) = budget {
                if *b == 0 {
                    return Ok(None);
                }
                *b -= 1;
            }
            if self.replaces(&reduced, &f)? {
                found.push(EdgeSet::new(f.iter().map(|&i| self.non_edges[i])));
                if first_only {
                    break;
                }
            }
        }
        Ok(Some(found))
    }
}

fn sn_codes(x: &Graph) -> Vec<CanonicalCode> {
    let mut codes: Vec<_> = x
        .edges()
        .into_iter()
        .map(|e| canonical_form(&x.delete_edge(e).expect("edge of x")))
        .collect();
    codes.sort();
    codes
}

/// All `F` disjoint from `E(X)` with `|F| = |E|` and `X - E + F` `G`-edge
/// hypomorphic to `X`, in lexicographic order.
pub fn find_replacing_sets(x: &Graph, e: &EdgeSet, group: &PermGroup) -> Result<Vec<EdgeSet>> {
    group.check_degree(x)?;
    for &(u, v) in e.iter() {
        if !x.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
    }
    let mut sets = Replacer::new(x, group)
        .search(e, false, &mut None)?
        .expect("no budget");
    sets.sort();
    Ok(sets)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum IrreplaceableSearch {
    /// The smallest, then lexicographically first, set without replacement.
    Found { edges: EdgeSet },
    /// Every edge set up to the size bound has a replacement.
    None { max_k: usize },
    /// The candidate budget ran out while checking sets of size `k`.
    Undecided { k: usize },
}

/// Looks for an edge set of size `1..=max_k` with no replacing set.
pub fn find_irreplaceable_edge_set(x: &Graph, group: &PermGroup, max_k: usize) -> Result<Option<EdgeSet>> {
    match find_irreplaceable_edge_set_with_budget(x, group, max_k, None)? {
        IrreplaceableSearch::Found { edges } => Ok(Some(edges)),
        _ => Ok(None),
    }
}

/// As [`find_irreplaceable_edge_set`], with an optional cap on the total
/// number of candidate replacements examined.
pub fn find_irreplaceable_edge_set_with_budget(
    x: &Graph,
    group: &PermGroup,
    max_k: usize,
    budget: Option<u64>,
) -> Result<IrreplaceableSearch> {
    group.check_degree(x)?;
    let edges = x.edges();
    if max_k > edges.len() {
        return Err(Error::Precondition(format!(
            "max_k = {max_k} exceeds the {} edges",
            edges.len()
        )));
    }
    let replacer = Replacer::new(x, group);
    let mut budget = budget;
    for k in 1..=max_k {
        for idx in lex_subsets(edges.len(), k) {
            let e = EdgeSet::new(idx.iter().map(|&i| edges[i]));
            match replacer.search(&e, true, &mut budget)? {
                None => return Ok(IrreplaceableSearch::Undecided { k }),
                Some(found) if found.is_empty() => return Ok(IrreplaceableSearch::Found { edges: e }),
                Some(_) => {}
            }
        }
    }
    Ok(IrreplaceableSearch::None { max_k })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionsFired {
    /// `k = 1` and (`r_1 > |V(Z)|/2` or `2^(r_1 - 1) > |aut Z|`).
    pub single_class: bool,
    /// Some `j` with `r_j >= 1` and (`r_j > r_(j-1)` or `2^(r_j - 1) > |aut Z|`).
    pub some_class: bool,
}

impl ConditionsFired {
    pub fn any(&self) -> bool {
        self.single_class || self.some_class
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndVertexReport {
    pub z: Graph,
    pub r: Vec<usize>,
    pub aut_order: usize,
    pub attachments: usize,
    pub isomorphism_classes: usize,
    pub deck_classes: usize,
    pub unique: bool,
    pub conditions: ConditionsFired,
    /// Non-isomorphic attachments sharing an end-vertex deck.
    pub witnesses: Vec<(Graph, Graph)>,
}

/// The paper-style inequalities for profile `r` on a base graph with
/// `n` vertices and automorphism group of order `aut`.
pub fn end_vertex_conditions(n: usize, r: &[usize], aut: usize) -> ConditionsFired {
    let total: usize = r.iter().sum();
    let r0 = n.saturating_sub(total);
    let power = |x: usize| x >= 1 && pow2_exceeds(x - 1, aut as u64);
    let single_class = r.len() == 1 && (2 * r[0] > n || power(r[0]));
    let some_class = (1..=r.len()).any(|j| {
        let rj = r[j - 1];
        let prev = if j == 1 { r0 } else { r[j - 2] };
        rj >= 1 && (rj > prev || power(rj))
    });
    ConditionsFired {
        single_class,
        some_class,
    }
}

/// Attaches `i` end vertices to each vertex of `r_i`-sized classes in every
/// possible way and checks whether end-vertex decks separate the results.
pub fn end_vertex_experiment(z: &Graph, r: &[usize]) -> Result<EndVertexReport> {
    let n = z.n();
    if n == 0 || z.min_degree().unwrap_or(0) < 2 {
        return Err(Error::Precondition("base graph needs minimum degree >= 2".into()));
    }
    let needed: usize = r.iter().sum();
    if needed > n {
        return Err(Error::ProfileTooLarge { needed, available: n });
    }
    let profile_weight: usize = r.iter().enumerate().map(|(i, c)| (i + 1) * c).sum();
    if profile_weight == 0 {
        return Err(Error::Precondition("profile attaches no end vertices".into()));
    }
    let z = z.clone().without_colors();
    let aut_order = automorphism_group(&z)?.order();
    let attachments = class_assignments(n, r);
    let built = attachments
        .par_iter()
        .map(|part| {
            let x = attach_pendants(&z, part)?;
            let deck = end_vertex_deck(&x)?.entries;
            Ok((deck, canonical_form(&x), x))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut by_deck: BTreeMap<Vec<DeckEntry>, BTreeMap<CanonicalCode, Graph>> = BTreeMap::new();
    let mut classes = HashSet::new();
    for (deck, code, x) in built {
        classes.insert(code.clone());
        by_deck.entry(deck).or_default().entry(code).or_insert(x);
    }
    let mut witnesses = Vec::new();
    for group in by_deck.values() {
        let mut it = group.values();
        if let (Some(a), Some(b)) = (it.next(), it.next()) {
            witnesses.push((a.clone(), b.clone()));
        }
    }
    Ok(EndVertexReport {
        r: r.to_vec(),
        aut_order,
        attachments: attachments.len(),
        isomorphism_classes: classes.len(),
        deck_classes: by_deck.len(),
        unique: witnesses.is_empty(),
        conditions: end_vertex_conditions(n, r, aut_order),
        witnesses,
        z,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeSurveyEntry {
    pub n: usize,
    pub tree: Graph,
    pub search: IrreplaceableSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeSurvey {
    pub group: String,
    pub trees: Vec<TreeSurveyEntry>,
    /// Trees where every edge set up to size `m` has a replacement.
    pub exceptional: Vec<Graph>,
    pub undecided: Vec<Graph>,
}

/// For every tree on `2..=max_n` vertices, looks for an edge set with no
/// replacing set under the group described by `group_spec`.
pub fn survey_trees(max_n: usize, group_spec: &str, max_order: u64, budget: Option<u64>) -> Result<TreeSurvey> {
    if max_n > MAX_SURVEY_N {
        return Err(Error::EnumerationCapExceeded(format!(
            "tree survey is limited to n <= {MAX_SURVEY_N}"
        )));
    }
    let mut jobs = Vec::new();
    for n in 2..=max_n {
        for t in enumerate_trees(n)? {
            jobs.push((n, t));
        }
    }
    let trees = jobs
        .into_par_iter()
        .map(|(n, t)| {
            let group = parse_group_spec(group_spec, n, Some(&t), max_order)?;
            let search = find_irreplaceable_edge_set_with_budget(&t, &group, t.m(), budget)?;
            Ok(TreeSurveyEntry { n, tree: t, search })
        })
        .collect::<Result<Vec<_>>>()?;
    let pick = |want: fn(&IrreplaceableSearch) -> bool| {
        trees
            .iter()
            .filter(|e| want(&e.search))
            .map(|e| e.tree.clone())
            .collect::<Vec<_>>()
    };
    Ok(TreeSurvey {
        group: group_spec.to_string(),
        exceptional: pick(|s| matches!(s, IrreplaceableSearch::None { .. })),
        undecided: pick(|s| matches!(s, IrreplaceableSearch::Undecided { .. })),
        trees,
    })
}
