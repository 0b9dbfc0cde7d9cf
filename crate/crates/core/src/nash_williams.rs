//! Overlap counts `|Y -> X|_F`, exact verification of the generalized
//! Nash-Williams identity, the counting corollaries, and a brute-force
//! decision of `G`-edge reconstructibility.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::deck::{deck_signature, edge_deck, is_g_edge_hypomorphic};
use crate::error::{Error, Result};
use crate::graph::{pair_at, pair_count, pair_index, Edge, EdgeSet, Graph, PairBits};
use crate::iso::{canonical_form, is_g_isomorphic};
use crate::perm::PermGroup;
use crate::structure::{bipartition, is_2_edge_connected};

/// Default bound on `2^m` for the lemma sweep.
pub const DEFAULT_MAX_SUBSETS: u64 = 1 << 20;
/// Default bound on the number of labeled candidates.
pub const DEFAULT_MAX_CANDIDATES: u64 = 10_000_000;

const PAR_THRESHOLD: usize = 4096;

/// `F -> |{g in G : g(Y) ∩ X = F}|`, keyed by the pair bitstring of `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapHistogram {
    pub base: Graph,
    pub counts: BTreeMap<PairBits, u64>,
}

impl OverlapHistogram {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// The count for the edge subset `f`, zero when absent.
    pub fn get(&self, f: &EdgeSet) -> u64 {
        let n = self.base.n();
        let mut bits = PairBits::default();
        for &(u, v) in f.iter() {
            bits.set(pair_index(n, u, v));
        }
        self.counts.get(&bits).copied().unwrap_or(0)
    }

    /// Cells as `(F, count)`, in descending bitstring order so that `E(X)`
    /// comes first and `∅` last.
    pub fn cells(&self) -> Vec<(EdgeSet, u64)> {
        let n = self.base.n();
        self.counts
            .iter()
            .rev()
            .map(|(bits, &c)| (EdgeSet::new(bits.ones().map(|i| pair_at(n, i))), c))
            .collect()
    }
}

impl Serialize for OverlapHistogram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Cell {
            subset: String,
            count: u64,
        }
        let cells = self.cells();
        let mut seq = s.serialize_seq(Some(cells.len()))?;
        for (f, count) in cells {
            seq.serialize_element(&Cell {
                subset: f.to_string(),
                count,
            })?;
        }
        seq.end()
    }
}

/// Overlap masks of `g(Y)` against `X` for every element, as `PairBits`.
fn overlap_bits(y: &Graph, x: &Graph, images: &[u8]) -> PairBits {
    let n = x.n();
    let mut bits = PairBits::default();
    for (u, v) in y.edges() {
        let (a, b) = (images[u] as usize, images[v] as usize);
        if x.has_edge(a, b) {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            bits.set(pair_index(n, a, b));
        }
    }
    bits
}

fn merge(mut a: BTreeMap<PairBits, u64>, b: BTreeMap<PairBits, u64>) -> BTreeMap<PairBits, u64> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

/// `|Y -> X|_F` for every `F` that occurs. Colors are ignored here.
pub fn overlap_histogram(y: &Graph, x: &Graph, group: &PermGroup) -> Result<OverlapHistogram> {
    if x.n() != y.n() {
        return Err(Error::DegreeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    group.check_degree(x)?;
    let counts = if group.order() >= PAR_THRESHOLD {
        group
            .par_iter()
            .fold(BTreeMap::new, |mut acc, g| {
                *acc.entry(overlap_bits(y, x, g)).or_default() += 1;
                acc
            })
            .reduce(BTreeMap::new, merge)
    } else {
        let mut acc = BTreeMap::new();
        for g in group.iter() {
            *acc.entry(overlap_bits(y, x, g)).or_default() += 1u64;
        }
        acc
    };
    Ok(OverlapHistogram {
        base: x.clone(),
        counts,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    #[serde(serialize_with = "display")]
    pub subset: EdgeSet,
    pub residual: i64,
}

fn display<S: Serializer>(f: &EdgeSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&f.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub m: usize,
    pub group: String,
    pub group_order: usize,
    /// `|G ∩ aut X|`.
    pub aut_term: u64,
    pub verdict: Verdict,
    pub subsets_checked: u64,
    pub max_abs_residual: i64,
    /// Subset with the largest `|residual|`; `None` when every residual is zero.
    #[serde(serialize_with = "display_opt")]
    pub worst_f: Option<EdgeSet>,
    /// Nonzero residuals only.
    pub residuals: Vec<Residual>,
    /// `Σ_F (-1)^|F| (XX - YX)(F) == (-1)^m 2^m |G ∩ aut X|`.
    pub alternating_sum_ok: bool,
    pub xx: OverlapHistogram,
    pub yx: OverlapHistogram,
}

fn display_opt<S: Serializer>(f: &Option<EdgeSet>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match f {
        Some(f) => s.serialize_str(&f.to_string()),
        None => s.serialize_none(),
    }
}

/// Checks `|X->X|_F - |Y->X|_F = (-1)^(m-|F|) |G ∩ aut X|` on all `2^m`
/// edge subsets `F` of `X`, under the hypothesis that `X`, `Y` are
/// `G`-edge hypomorphic but not `G`-isomorphic.
pub fn verify_lemma(x: &Graph, y: &Graph, group: &PermGroup, max_subsets: u64) -> Result<LemmaReport> {
    if x.n() != y.n() {
        return Err(Error::DegreeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    group.check_degree(x)?;
    if x.color_vec() != y.color_vec() || x.is_colored() != y.is_colored() {
        return Err(Error::ColorMismatch);
    }
    let m = x.m();
    if m >= 63 || (1u64 << m) > max_subsets {
        return Err(Error::SubsetCapExceeded { m, cap: max_subsets });
    }
    if y.m() != m || !is_g_edge_hypomorphic(x, y, group)? {
        return Err(Error::HypothesisNotMet("the pair is not G-edge hypomorphic".into()));
    }
    if is_g_isomorphic(x, y, group)? {
        return Err(Error::HypothesisNotMet("the pair is G-isomorphic".into()));
    }

    let xx = overlap_histogram(x, x, group)?;
    let yx = overlap_histogram(y, x, group)?;
    let aut_term = group.intersect_aut(x)?.order() as u64;

    let edges = x.edges();
    let n = x.n();
    let mut local = vec![usize::MAX; pair_count(n)];
    for (i, &(u, v)) in edges.iter().enumerate() {
        local[pair_index(n, u, v)] = i;
    }
    let size = 1usize << m;
    let mut diff = vec![0i64; size];
    let to_local = |bits: &PairBits| bits.ones().fold(0usize, |acc, p| acc | 1 << local[p]);
    for (bits, &c) in &xx.counts {
        diff[to_local(bits)] += c as i64;
    }
    for (bits, &c) in &yx.counts {
        diff[to_local(bits)] -= c as i64;
    }

    let a = aut_term as i64;
    let mut residuals = Vec::new();
    let mut worst: Option<(i64, usize)> = None;
    let mut alt = 0i128;
    for (f, &d) in diff.iter().enumerate() {
        let k = f.count_ones() as usize;
        let sign = if (m - k) % 2 == 0 { 1 } else { -1 };
        let r = d - sign * a;
        alt += if k % 2 == 0 { d as i128 } else { -(d as i128) };
        if r != 0 {
            residuals.push((f, r));
            if worst.map_or(true, |(w, _)| r.abs() > w) {
                worst = Some((r.abs(), f));
            }
        }
    }
    let subset = |f: usize| EdgeSet::new((0..m).filter(|i| f >> i & 1 == 1).map(|i| edges[i]));
    let expected_alt = if m % 2 == 0 { 1i128 } else { -1 } * (1i128 << m) * a as i128;
    let mut residuals: Vec<Residual> = residuals
        .into_iter()
        .map(|(f, residual)| Residual {
            subset: subset(f),
            residual,
        })
        .collect();
    residuals.sort_by(|p, q| p.subset.cmp(&q.subset));
    Ok(LemmaReport {
        m,
        group: group.tag().to_string(),
        group_order: group.order(),
        aut_term,
        verdict: if residuals.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Fails
        },
        subsets_checked: size as u64,
        max_abs_residual: worst.map_or(0, |w| w.0),
        worst_f: worst.map(|w| subset(w.1)),
        residuals,
        alternating_sum_ok: alt == expected_alt,
        xx,
        yx,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Context {
    Generic,
    Bipartite,
    CenterKnown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionFlags {
    pub context: Context,
    pub m: usize,
    pub group_order: usize,
    /// `2^(m-1) > |G|`, or `2^m > |G|` when the center is known.
    pub power_bound: bool,
    /// `m > st/2` (bipartite) or `|E| > |V|/2` (center known); absent for generic.
    pub density_bound: Option<bool>,
    pub bipartition: Option<(usize, usize)>,
}

impl ConditionFlags {
    pub fn any(&self) -> bool {
        self.power_bound || self.density_bound == Some(true)
    }
}

/// `2^e > bound`, without overflow.
pub(crate) fn pow2_exceeds(e: usize, bound: u64) -> bool {
    e >= 64 || (1u64 << e) > bound
}

/// Counting conditions under which `X` is `G`-edge reconstructible. In the
/// center-known context `x` is the center itself and `|V|` counts its
/// non-isolated vertices.
pub fn sufficient_conditions(x: &Graph, group: &PermGroup, context: Context) -> Result<ConditionFlags> {
    group.check_degree(x)?;
    let m = x.m();
    let order = group.order();
    let mut flags = ConditionFlags {
        context,
        m,
        group_order: order,
        power_bound: m >= 1 && pow2_exceeds(m - 1, order as u64),
        density_bound: None,
        bipartition: None,
    };
    match context {
        Context::Generic => {}
        Context::Bipartite => {
            let (a, b) = bipartition(x).ok_or(Error::NotBipartite)?;
            if !is_2_edge_connected(x) {
                return Err(Error::NotTwoEdgeConnected);
            }
            let (s, t) = (a.len().min(b.len()), a.len().max(b.len()));
            flags.bipartition = Some((s, t));
            flags.density_bound = Some(2 * m > s * t);
        }
        Context::CenterKnown => {
            let v = (0..x.n()).filter(|&u| x.degree(u) > 0).count();
            flags.power_bound = pow2_exceeds(m, order as u64);
            flags.density_bound = Some(2 * m > v);
        }
    }
    Ok(flags)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    pub group: String,
    pub candidates: u64,
    /// First `G`-edge hypomorphic, non-`G`-isomorphic graph in bitstring order.
    pub witness: Option<Graph>,
}

impl ReconstructionReport {
    pub fn is_reconstructible(&self) -> bool {
        self.witness.is_none()
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// The `m`-subsets of `0..p` as pair-index lists, in ascending bitstring
/// order where pair 0 is the most significant bit.
pub(crate) struct Combinations {
    p: usize,
    // reversed indices r = p - 1 - i, ascending; colex over r is ascending value
    r: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(p: usize, m: usize) -> Combinations {
        Combinations {
            p,
            r: (0..m).collect(),
            done: m > p,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let mut out: Vec<usize> = self.r.iter().map(|&r| self.p - 1 - r).collect();
        out.reverse();
        let m = self.r.len();
        let mut j = 0;
        while j < m {
            let limit = if j + 1 < m { self.r[j + 1] } else { self.p };
            if self.r[j] + 1 < limit {
                self.r[j] += 1;
                for (i, slot) in self.r[..j].iter_mut().enumerate() {
                    *slot = i;
                }
                break;
            }
            j += 1;
        }
        if j == m {
            self.done = true;
        }
        Some(out)
    }
}

pub(crate) fn graph_from_pairs(n: usize, pairs: &[usize]) -> Graph {
    let mut g = Graph::empty(n).expect("n within range");
    for &p in pairs {
        let (u, v): Edge = pair_at(n, p);
        g.insert(u, v);
    }
    g
}

/// Decides `G`-edge reconstructibility of `x` by exhausting every labeled
/// graph with the same vertex set (and colors) and edge count.
pub fn is_g_edge_reconstructible(x: &Graph, group: &PermGroup, max_candidates: u64) -> Result<ReconstructionReport> {
    group.check_degree(x)?;
    let n = x.n();
    let m = x.m();
    let p = pair_count(n);
    let count = binomial(p, m);
    if count > max_candidates as u128 {
        return Err(Error::CandidateCapExceeded {
            count,
            cap: max_candidates,
        });
    }
    let mut report = ReconstructionReport {
        group: group.tag().to_string(),
        candidates: count as u64,
        witness: None,
    };
    if m == 0 {
        return Ok(report);
    }
    let colors = x.colors().map(|c| c.to_vec());
    let with_colors = |g: Graph| match &colors {
        Some(c) => g.with_colors(c.clone()).expect("same n"),
        None => g,
    };
    let signature = deck_signature(x);
    let sn_deck = if group.is_full_symmetric() {
        None
    } else {
        Some(plain_deck_codes(x))
    };
    let deck = edge_deck(x, group)?;
    let x_class = canonical_form(x);

    let check = |pairs: &Vec<usize>| -> Result<Option<Graph>> {
        let y = with_colors(graph_from_pairs(n, pairs));
        if deck_signature(&y) != signature {
            return Ok(None);
        }
        if let Some(sn) = &sn_deck {
            if plain_deck_codes(&y) != *sn {
                return Ok(None);
            }
        } else if canonical_form(&y) == x_class {
            // under S_n an isomorphic candidate is never a witness
            return Ok(None);
        }
        if !edge_deck(&y, group)?.same_cards(&deck) {
            return Ok(None);
        }
        if is_g_isomorphic(x, &y, group)? {
            return Ok(None);
        }
        Ok(Some(y))
    };

    let mut combos = Combinations::new(p, m);
    loop {
        let chunk: Vec<Vec<usize>> = combos.by_ref().take(PAR_THRESHOLD).collect();
        if chunk.is_empty() {
            break;
        }
        let found = chunk
            .par_iter()
            .map(&check)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .next();
        if found.is_some() {
            report.witness = found;
            break;
        }
    }
    Ok(report)
}

/// Sorted `S_n` codes of the edge deck, a prefilter for smaller groups.
fn plain_deck_codes(x: &Graph) -> Vec<crate::iso::CanonicalCode> {
    let mut codes: Vec<_> = x
        .edges()
        .into_iter()
        .map(|e| canonical_form(&x.delete_edge(e).expect("edge of x")))
        .collect();
    codes.sort();
    codes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{apply_images, Permutation};

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn es(e: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::new(e.iter().copied())
    }

    fn two_k2() -> Graph {
        g(4, &[(0, 1), (2, 3)])
    }

    fn p3k1() -> Graph {
        g(4, &[(0, 1), (1, 2)])
    }

    fn p4() -> Graph {
        g(4, &[(0, 1), (1, 2), (2, 3)])
    }

    /// Oracle: apply each element as a graph and intersect edge sets directly.
    fn oracle_histogram(y: &Graph, x: &Graph, group: &PermGroup) -> BTreeMap<EdgeSet, u64> {
        let mut out = BTreeMap::new();
        for img in group.iter() {
            let gy = apply_images(img, y);
            let f = EdgeSet::new(gy.edges().into_iter().filter(|&(u, v)| x.has_edge(u, v)));
            *out.entry(f).or_default() += 1;
        }
        out
    }

    #[test]
    fn histogram_examples() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let h = overlap_histogram(&two_k2(), &two_k2(), &s4).unwrap();
        assert_eq!(h.get(&es(&[(0, 1), (2, 3)])), 8);
        assert_eq!(h.get(&es(&[])), 16);
        assert_eq!(h.counts.len(), 2);

        let h = overlap_histogram(&p3k1(), &two_k2(), &s4).unwrap();
        assert_eq!(h.get(&es(&[(0, 1)])), 8);
        assert_eq!(h.get(&es(&[(2, 3)])), 8);
        assert_eq!(h.get(&es(&[])), 8);
        assert_eq!(h.total(), 24);
        let oracle = oracle_histogram(&p3k1(), &two_k2(), &s4);
        let cells: BTreeMap<EdgeSet, u64> = h.cells().into_iter().collect();
        assert_eq!(cells, oracle);

        let t = PermGroup::trivial(4);
        let h = overlap_histogram(&p4(), &p4(), &t).unwrap();
        assert_eq!(h.cells(), vec![(p4().edge_set(), 1)]);
    }

    #[test]
    fn lemma_on_matching_pair() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let r = verify_lemma(&two_k2(), &p3k1(), &s4, DEFAULT_MAX_SUBSETS).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.aut_term, 8);
        assert_eq!(r.subsets_checked, 4);
        assert!(r.residuals.is_empty());
        assert!(r.alternating_sum_ok);
        assert_eq!(r.worst_f, None);
    }

    #[test]
    fn lemma_on_p4_under_a4() {
        let a4 = PermGroup::alternating(4).unwrap();
        let y = Permutation::from_cycles(4, "(0 1)").unwrap().apply(&p4()).unwrap();
        let r = verify_lemma(&p4(), &y, &a4, DEFAULT_MAX_SUBSETS).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.aut_term, 2);
        assert_eq!(r.subsets_checked, 8);
    }

    #[test]
    fn lemma_rejects_bad_hypotheses() {
        let s4 = PermGroup::symmetric(4).unwrap();
        assert!(matches!(
            verify_lemma(&two_k2(), &two_k2(), &s4, DEFAULT_MAX_SUBSETS),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(matches!(
            verify_lemma(&p4(), &g(4, &[(0, 1), (0, 2), (0, 3)]), &s4, DEFAULT_MAX_SUBSETS),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(matches!(
            verify_lemma(&two_k2(), &p3k1(), &s4, 2),
            Err(Error::SubsetCapExceeded { m: 2, cap: 2 })
        ));
        let colored = p3k1().with_colors(vec![0, 0, 0, 1]).unwrap();
        assert_eq!(
            verify_lemma(&two_k2(), &colored, &s4, DEFAULT_MAX_SUBSETS),
            Err(Error::ColorMismatch)
        );
    }

    #[test]
    fn sufficient_condition_examples() {
        let k33: Vec<Edge> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        let k33 = g(6, &k33);
        let aut = PermGroup::aut_complete_bipartite(3, 3, crate::perm::DEFAULT_MAX_ORDER).unwrap();
        let f = sufficient_conditions(&k33, &aut, Context::Bipartite).unwrap();
        assert_eq!(f.density_bound, Some(true));
        assert_eq!(f.bipartition, Some((3, 3)));

        let c6 = g(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (0, 5)]);
        let f = sufficient_conditions(&c6, &aut, Context::Bipartite).unwrap();
        assert_eq!(f.group_order, 72);
        assert!(!f.power_bound);
        assert_eq!(f.density_bound, Some(true));

        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let f = sufficient_conditions(&c4, &PermGroup::trivial(4), Context::Generic).unwrap();
        assert!(f.power_bound);
        assert_eq!(f.density_bound, None);

        let k3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(
            sufficient_conditions(&k3, &PermGroup::trivial(3), Context::Bipartite),
            Err(Error::NotBipartite)
        );
        assert_eq!(
            sufficient_conditions(&p4(), &PermGroup::trivial(4), Context::Bipartite),
            Err(Error::NotTwoEdgeConnected)
        );
    }

    #[test]
    fn combinations_ascend() {
        let all: Vec<Vec<usize>> = Combinations::new(5, 2).collect();
        assert_eq!(all.len(), 10);
        let bits = |c: &Vec<usize>| c.iter().fold(0u32, |a, &i| a | 1 << (4 - i));
        for w in all.windows(2) {
            assert!(bits(&w[0]) < bits(&w[1]));
        }
        assert_eq!(all[0], vec![3, 4]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
        assert_eq!(binomial(15, 5), 3003);
    }

    #[test]
    fn reconstructibility_examples() {
        let a4 = PermGroup::alternating(4).unwrap();
        let r = is_g_edge_reconstructible(&p4(), &a4, DEFAULT_MAX_CANDIDATES).unwrap();
        let y = r.witness.expect("P_4 is not A_4-edge reconstructible");
        // the witness is an odd relabeling of P_4
        let s4 = PermGroup::symmetric(4).unwrap();
        let odd = s4
            .iter()
            .filter(|e| !crate::perm::is_even(e))
            .any(|e| apply_images(e, &p4()) == y);
        assert!(odd);
        assert!(verify_lemma(&p4(), &y, &a4, DEFAULT_MAX_SUBSETS).is_ok());

        let r = is_g_edge_reconstructible(&p4(), &s4, DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(r.candidates, 20);
        assert!(r.is_reconstructible());

        let r = is_g_edge_reconstructible(&two_k2(), &s4, DEFAULT_MAX_CANDIDATES).unwrap();
        let y = r.witness.unwrap();
        assert!(crate::iso::is_isomorphic(&y, &p3k1()).unwrap());
        assert!(matches!(
            is_g_edge_reconstructible(&two_k2(), &s4, 10),
            Err(Error::CandidateCapExceeded { count: 15, cap: 10 })
        ));
    }
}
