//! Blocks, block-cutpoint trees, pruned graphs and centers, the separable
//! reduction onto a 3-connected pruned center, and small class recognizers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, EdgeSet, Graph};
use crate::iso::automorphism_group;
use crate::perm::PermGroup;

/// 2-blocks (bridges included) and cut vertices of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks {
    /// Edge sets of the blocks, ordered by their least edge.
    pub blocks: Vec<EdgeSet>,
    /// Cut vertices, ascending.
    pub cutpoints: Vec<usize>,
}

/// Biconnected decomposition by depth-first lowpoints.
pub fn blocks_and_cutpoints(x: &Graph) -> Result<Blocks> {
    let n = x.n();
    if n < 2 {
        return Err(Error::Precondition("need at least 2 vertices".into()));
    }
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut state = Dfs {
        x,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cut: vec![false; n],
    };
    state.visit(0, usize::MAX);
    let mut blocks: Vec<EdgeSet> = state.blocks.into_iter().map(EdgeSet::new).collect();
    blocks.sort();
    Ok(Blocks {
        blocks,
        cutpoints: (0..n).filter(|&v| state.cut[v]).collect(),
    })
}

struct Dfs<'a> {
    x: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<Edge>,
    blocks: Vec<Vec<Edge>>,
    cut: Vec<bool>,
}

impl Dfs<'_> {
    fn visit(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        let mut children = 0;
        for w in self.x.neighbors(v) {
            if self.disc[w] == usize::MAX {
                children += 1;
                self.stack.push((v, w));
                self.visit(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent != usize::MAX || children > 1 {
                        self.cut[v] = true;
                    }
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(normalize(e.0, e.1));
                        if e == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[v] {
                self.stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        if parent == usize::MAX && children > 1 {
            self.cut[v] = true;
        }
    }
}

/// Tree on blocks and cut vertices; nodes `0..blocks.len()` are blocks, the
/// rest are cut vertices in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    pub blocks: Vec<EdgeSet>,
    pub cutpoints: Vec<usize>,
    pub tree_edges: Vec<(usize, usize)>,
}

impl BlockCutTree {
    pub fn node_count(&self) -> usize {
        self.blocks.len() + self.cutpoints.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn block_vertices(&self, block: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self.blocks[block].iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Canonical string of the underlying unlabeled tree.
    pub fn shape(&self) -> String {
        tree_canonical(&self.adjacency())
    }
}

pub fn block_cut_tree(x: &Graph) -> Result<BlockCutTree> {
    let Blocks { blocks, cutpoints } = blocks_and_cutpoints(x)?;
    let b = blocks.len();
    let mut tree_edges = Vec::new();
    for (i, block) in blocks.iter().enumerate() {
        for (j, &c) in cutpoints.iter().enumerate() {
            if block.iter().any(|&(u, v)| u == c || v == c) {
                tree_edges.push((i, b + j));
            }
        }
    }
    Ok(BlockCutTree {
        blocks,
        cutpoints,
        tree_edges,
    })
}

/// Canonical string of an unlabeled tree (AHU encoding rooted at the center,
/// minimized over bicentral roots). Empty forest gives the empty string.
pub fn tree_canonical(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    if n == 0 {
        return String::new();
    }
    let centers = tree_centers(adj);
    centers
        .iter()
        .map(|&c| rooted_code(adj, c, usize::MAX))
        .min()
        .expect("at least one center")
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Centers of a tree by repeated leaf stripping.
pub fn tree_centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// `P(X)` with the original label of each surviving vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pruned {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

/// Repeatedly deletes every current degree-1 vertex at once. Isolated
/// vertices are kept.
pub fn pruned_graph(x: &Graph) -> Pruned {
    let mut alive: u32 = if x.n() == 0 { 0 } else { (1u32 << x.n()) - 1 };
    loop {
        let leaves: u32 = (0..x.n())
            .filter(|&v| alive & (1 << v) != 0 && (x.row(v) & alive).count_ones() == 1)
            .fold(0, |m, v| m | 1 << v);
        if leaves == 0 {
            break;
        }
        alive &= !leaves;
    }
    let vertices: Vec<usize> = (0..x.n()).filter(|&v| alive & (1 << v) != 0).collect();
    Pruned {
        graph: x.induced(&vertices),
        vertices,
    }
}

/// The pruned center, in the labels of the original graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Center {
    Block { edges: EdgeSet, vertices: Vec<usize> },
    CutVertex { vertex: usize },
}

impl Center {
    pub fn edge_count(&self) -> usize {
        match self {
            Center::Block { edges, .. } => edges.len(),
            Center::CutVertex { .. } => 0,
        }
    }
}

/// Pruned graph, its block-cut tree and center, all in original labels.
#[derive(Clone, Debug)]
pub struct PrunedCenter {
    pub pruned: Pruned,
    pub tree: BlockCutTree,
    pub center: Center,
}

pub fn pruned_center(x: &Graph) -> Result<Center> {
    Ok(pruned_center_full(x)?.center)
}

pub fn pruned_center_full(x: &Graph) -> Result<PrunedCenter> {
    let pruned = pruned_graph(x);
    if pruned.graph.m() == 0 {
        return Err(Error::EmptyPrunedGraph);
    }
    if !pruned.graph.is_connected() {
        return Err(Error::DisconnectedPrunedGraph);
    }
    let local = block_cut_tree(&pruned.graph)?;
    let relabel = |e: &Edge| (pruned.vertices[e.0], pruned.vertices[e.1]);
    let tree = BlockCutTree {
        blocks: local
            .blocks
            .iter()
            .map(|b| b.iter().map(relabel).collect())
            .collect(),
        cutpoints: local.cutpoints.iter().map(|&c| pruned.vertices[c]).collect(),
        tree_edges: local.tree_edges.clone(),
    };
    let centers = tree_centers(&tree.adjacency());
    if centers.len() != 1 {
        // leaves of a block-cut tree are blocks, so diameters are even
        return Err(Error::Precondition(format!(
            "block-cut tree has {} centers",
            centers.len()
        )));
    }
    let c = centers[0];
    let center = if c < tree.blocks.len() {
        Center::Block {
            edges: tree.blocks[c].clone(),
            vertices: tree.block_vertices(c),
        }
    } else {
        Center::CutVertex {
            vertex: tree.cutpoints[c - tree.blocks.len()],
        }
    };
    Ok(PrunedCenter { pruned, tree, center })
}

pub const BLUE: u32 = 1;
pub const RED: u32 = 2;

/// Result of reducing a separable graph onto its pruned center.
#[derive(Clone, Debug)]
pub struct SeparableReduction {
    /// `C(X)` relabeled to `0..|V(C)|` in ascending original order.
    pub center: Graph,
    /// Original labels of the center vertices, ascending.
    pub center_vertices: Vec<usize>,
    /// Group induced on `V(C)` by the automorphisms of the colored
    /// residual `X - E(C)`.
    pub group: PermGroup,
    /// Edge-deck members recognized as center-edge deletions.
    pub recognized: Vec<(Edge, Graph)>,
}

/// Whether deleting `e` passes the recognition test for center edges:
/// same pruned block-cut tree shape, and a center one edge smaller.
pub fn is_center_edge_deletion(x: &Graph, e: Edge) -> Result<bool> {
    let base = pruned_center_full(x)?;
    let card = x.delete_edge(e)?;
    Ok(center_criterion(&base, &card))
}

fn center_criterion(base: &PrunedCenter, card: &Graph) -> bool {
    match pruned_center_full(card) {
        Ok(pc) => {
            pc.tree.shape() == base.tree.shape()
                && pc.center.edge_count() + 1 == base.center.edge_count()
        }
        Err(_) => false,
    }
}

pub fn reduce_separable(x: &Graph) -> Result<SeparableReduction> {
    let Blocks { cutpoints, .. } = blocks_and_cutpoints(x)?;
    if cutpoints.is_empty() {
        return Err(Error::NotSeparable);
    }
    if x.end_vertices().is_empty() {
        return Err(Error::NoEndVertices);
    }
    let base = pruned_center_full(x)?;
    let (edges, vertices) = match &base.center {
        Center::CutVertex { .. } => return Err(Error::CenterIsCutVertex),
        Center::Block { edges, vertices } => (edges.clone(), vertices.clone()),
    };
    // the block itself, which can differ from the induced subgraph
    let pos = |v: usize| vertices.binary_search(&v).expect("block vertex");
    let local: Vec<Edge> = edges.iter().map(|&(u, v)| (pos(u), pos(v))).collect();
    let center = Graph::from_edges(vertices.len(), &local)?;
    if !vertex_connectivity_at_least(&center, 3) {
        return Err(Error::CenterNotThreeConnected);
    }
    let residual = x.delete_edges(&edges)?;
    let colors: Vec<u32> = (0..x.n())
        .map(|v| {
            let side = if vertices.binary_search(&v).is_ok() { BLUE } else { RED };
            x.color(v) * 3 + side
        })
        .collect();
    let residual = residual.without_colors().with_colors(colors)?;
    let group = automorphism_group(&residual)?
        .restrict_to(&vertices)?
        .with_tag("induced-on-center");
    let recognized = x
        .edges()
        .into_iter()
        .filter_map(|e| {
            let card = x.delete_edge(e).ok()?;
            center_criterion(&base, &card).then_some((e, card))
        })
        .collect();
    Ok(SeparableReduction {
        center,
        center_vertices: vertices,
        group,
        recognized,
    })
}

/// Brute force: `n > k` and no vertex set of size `< k` disconnects.
pub fn vertex_connectivity_at_least(x: &Graph, k: usize) -> bool {
    let n = x.n();
    if k == 0 {
        return true;
    }
    if n <= k {
        return false;
    }
    let mut chosen = Vec::new();
    separators_absent(x, k - 1, 0, &mut chosen)
}

fn separators_absent(x: &Graph, budget: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
    let keep: Vec<usize> = (0..x.n()).filter(|v| !chosen.contains(v)).collect();
    if !x.induced(&keep).is_connected() {
        return false;
    }
    if budget == 0 {
        return true;
    }
    for v in start..x.n() {
        chosen.push(v);
        let ok = separators_absent(x, budget - 1, v + 1, chosen);
        chosen.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Connected, at least two vertices, and no bridge.
pub fn is_2_edge_connected(x: &Graph) -> bool {
    if x.n() < 2 || !x.is_connected() {
        return false;
    }
    x.edges()
        .into_iter()
        .all(|e| x.delete_edge(e).expect("edge present").is_connected())
}

/// Class membership flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub connected: bool,
    /// Part sizes, smaller first, when bipartite.
    pub bipartite: Option<(usize, usize)>,
    pub tree: bool,
    pub path: bool,
    pub chordal: bool,
    pub claw_free: bool,
    pub p4_free: bool,
}

pub fn classify(x: &Graph) -> Classification {
    let connected = x.is_connected();
    let tree = x.n() >= 1 && connected && x.m() + 1 == x.n();
    Classification {
        connected,
        bipartite: bipartition(x).map(|(a, b)| {
            let (s, t) = (a.len(), b.len());
            (s.min(t), s.max(t))
        }),
        tree,
        path: tree && x.max_degree() <= 2,
        chordal: is_chordal(x),
        claw_free: is_claw_free(x),
        p4_free: is_p4_free(x),
    }
}

/// Two-coloring by breadth-first search; each component's least vertex goes
/// to the first side.
pub fn bipartition(x: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = x.n();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in x.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    let a = (0..n).filter(|&v| side[v] == 0).collect();
    let b = (0..n).filter(|&v| side[v] == 1).collect();
    Some((a, b))
}

/// Maximum cardinality search followed by a perfect-elimination check.
pub fn is_chordal(x: &Graph) -> bool {
    let n = x.n();
    let mut weight = vec![0usize; n];
    let mut numbered = 0u32;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| numbered & (1 << v) == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex");
        numbered |= 1 << v;
        visit.push(v);
        for w in x.neighbors(v) {
            weight[w] += 1;
        }
    }
    // elimination order is the reverse of the visit order
    let mut pos = vec![0; n];
    for (i, &v) in visit.iter().rev().enumerate() {
        pos[v] = i;
    }
    for v in 0..n {
        let later: Vec<usize> = x.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&u) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != u && !x.has_edge(u, w)) {
                return false;
            }
        }
    }
    true
}

/// No induced `K_{1,3}`.
pub fn is_claw_free(x: &Graph) -> bool {
    for c in 0..x.n() {
        let nb: Vec<usize> = x.neighbors(c).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if x.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !x.has_edge(a, d) && !x.has_edge(b, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// No induced path on four vertices.
pub fn is_p4_free(x: &Graph) -> bool {
    let n = x.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = [a, b, c, d];
                    let mut degs = [0; 4];
                    let mut m = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if x.has_edge(s[i], s[j]) {
                                degs[i] += 1;
                                degs[j] += 1;
                                m += 1;
                            }
                        }
                    }
                    degs.sort_unstable();
                    // 3 edges with degrees 1,1,2,2 is exactly P4
                    if m == 3 && degs == [1, 1, 2, 2] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Distance from end vertex `u` to the nearest vertex of `P(X)`.
pub fn end_vertex_depth(x: &Graph, u: usize) -> Result<usize> {
    if u >= x.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: x.n() });
    }
    if x.degree(u) != 1 {
        return Err(Error::NotEndVertex(u));
    }
    let pruned = pruned_graph(x);
    if pruned.vertices.is_empty() {
        return Err(Error::EmptyPrunedGraph);
    }
    let target: u32 = pruned.vertices.iter().fold(0, |m, &v| m | 1 << v);
    let mut seen = 1u32 << u;
    let mut frontier = seen;
    let mut dist = 0;
    while frontier != 0 {
        if frontier & target != 0 {
            return Ok(dist);
        }
        let mut next = 0u32;
        for v in 0..x.n() {
            if frontier & (1 << v) != 0 {
                next |= x.row(v);
            }
        }
        next &= !seen;
        seen |= next;
        frontier = next;
        dist += 1;
    }
    Err(Error::Disconnected)
}
