//! Simple connected graphs with bit-row adjacency, plus the structural
//! predicates (blocks, claws, bipartiteness) the classifier routes on.
//!
//! Vertices are `0..n`. Row `u` of the adjacency is a `u64` whose bit `v` is
//! set iff `uv` is an edge, so the order is capped at [`MAX_ORDER`].

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest order representable with one adjacency word per vertex.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: loop edge at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("declared {declared} edges but found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("adjacency rows are not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("unknown graph kind `{0}`")]
    UnknownKind(String),
    #[error("bad parameters: {0}")]
    BadParameter(String),
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

/// A finite simple connected undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Builds a graph from an edge list. Line numbers in errors are the edge
    /// positions (1-based).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_numbered_edges(n, edges.iter().enumerate().map(|(i, &e)| (i + 1, e)))
    }

    fn from_numbered_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, (usize, usize))>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = vec![0u64; n];
        for (line, (u, v)) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { line, vertex: u });
            }
            if adj[u] >> v & 1 == 1 {
                return Err(GraphError::DuplicateEdge { line, u, v });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let g = Graph { n, adj };
        g.check_connected()?;
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry, the absence of
    /// loops and connectivity.
    pub fn from_adjacency_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        for (u, &row) in rows.iter().enumerate() {
            if row & !low_mask(n) != 0 {
                let v = (row & !low_mask(n)).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { line: u + 1, vertex: v, n });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::Loop { line: u + 1, vertex: u });
            }
            for v in bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        let g = Graph { n, adj: rows };
        g.check_connected()?;
        Ok(g)
    }

    fn check_connected(&self) -> Result<(), GraphError> {
        let components = component_count(&self.adj);
        if components > 1 {
            Err(GraphError::Disconnected { components })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Adjacency rows; bit `v` of row `u` is set iff `uv` is an edge.
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbor_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[u])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n
    }

    /// Graph file text: `n m` header followed by one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterates the set bit positions of a word, lowest first.
pub fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

fn component_count(adj: &[u64]) -> usize {
    let n = adj.len();
    let mut seen = 0u64;
    let mut components = 0;
    for start in 0..n {
        if seen >> start & 1 == 1 {
            continue;
        }
        components += 1;
        let mut frontier = 1u64 << start;
        seen |= frontier;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= adj[u];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
    }
    components
}

/// JSON form of a graph: `{"n": 4, "edges": [[0, 1], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<&GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(value: &GraphJson) -> Result<Self, Self::Error> {
        let edges: Vec<(usize, usize)> = value.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(value.n, &edges)
    }
}

/// Parses the graph file format: a `n m` header, then `m` lines `u v`.
/// Lines starting with `#` and blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    parse_graph_indexed(text, false)
}

/// Like [`parse_graph`], with vertices numbered from 1 when `one_indexed`.
pub fn parse_graph_indexed(text: &str, one_indexed: bool) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GraphError::Malformed {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;
    if n == 0 {
        return Err(GraphError::Empty);
    }

    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        let (u, v) = if one_indexed { (shift_down(line, u)?, shift_down(line, v)?) } else { (u, v) };
        edges.push((line, (u, v)));
    }
    if edges.len() != m {
        return Err(GraphError::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Graph::from_numbered_edges(n, edges)
}

/// Parses either the JSON form or the text file format, picked by the first
/// non-blank character.
pub fn parse_graph_any(text: &str) -> Result<Graph, GraphError> {
    parse_graph_any_indexed(text, false)
}

pub fn parse_graph_any_indexed(text: &str, one_indexed: bool) -> Result<Graph, GraphError> {
    if text.trim_start().starts_with('{') {
        let mut json: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        if one_indexed {
            for e in json.edges.iter_mut() {
                for v in e.iter_mut() {
                    *v = v.checked_sub(1).ok_or_else(|| GraphError::Json("vertex 0 in one-indexed input".into()))?;
                }
            }
        }
        Graph::try_from(&json)
    } else {
        parse_graph_indexed(text, one_indexed)
    }
}

fn shift_down(line: usize, v: usize) -> Result<usize, GraphError> {
    v.checked_sub(1).ok_or(GraphError::Malformed { line, reason: "vertex 0 in one-indexed input".into() })
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], GraphError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::Malformed {
            line,
            reason: format!("expected two integers, found `{text}`"),
        });
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| GraphError::Malformed {
            line,
            reason: format!("`{field}` is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph_any(s)
    }
}

/// Families accepted by [`generate_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Path,
    Cycle,
    Complete,
    Star,
    Grid,
    Tree,
}

impl FromStr for GraphKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "path" => GraphKind::Path,
            "cycle" => GraphKind::Cycle,
            "complete" => GraphKind::Complete,
            "star" => GraphKind::Star,
            "grid" => GraphKind::Grid,
            "tree" => GraphKind::Tree,
            _ => return Err(GraphError::UnknownKind(s.to_string())),
        })
    }
}

/// Builds a member of a graph family.
///
/// * `path n`, `complete n`: `n` vertices.
/// * `cycle n`: `n >= 3` vertices.
/// * `star n`: `n` vertices, vertex 0 is the center.
/// * `grid m n`: `m * n` vertices, vertex `r * n + c` at row `r`, column `c`.
/// * `tree n`: uniformly random labeled tree from a seeded Prüfer sequence.
pub fn generate_graph(kind: GraphKind, params: &[i64], seed: Option<u64>) -> Result<Graph, GraphError> {
    let expected = if kind == GraphKind::Grid { 2 } else { 1 };
    if params.len() != expected {
        return Err(GraphError::BadParameter(format!(
            "{kind:?} takes {expected} parameter(s), got {}",
            params.len()
        )));
    }
    if let Some(p) = params.iter().find(|&&p| p <= 0) {
        return Err(GraphError::BadParameter(format!("parameter {p} is not positive")));
    }
    let p: Vec<usize> = params.iter().map(|&p| p as usize).collect();
    let n = if kind == GraphKind::Grid { p[0].saturating_mul(p[1]) } else { p[0] };
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge(n));
    }

    let mut edges = Vec::new();
    match kind {
        GraphKind::Path => edges.extend((1..n).map(|v| (v - 1, v))),
        GraphKind::Cycle => {
            if n < 3 {
                return Err(GraphError::BadParameter("a cycle needs at least 3 vertices".into()));
            }
            edges.extend((1..n).map(|v| (v - 1, v)));
            edges.push((n - 1, 0));
        }
        GraphKind::Complete => {
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
        }
        GraphKind::Star => edges.extend((1..n).map(|v| (0, v))),
        GraphKind::Grid => {
            let (rows, cols) = (p[0], p[1]);
            for r in 0..rows {
                for c in 0..cols {
                    let v = r * cols + c;
                    if c + 1 < cols {
                        edges.push((v, v + 1));
                    }
                    if r + 1 < rows {
                        edges.push((v, v + cols));
                    }
                }
            }
        }
        GraphKind::Tree => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            edges = random_tree_edges(n, &mut rng);
        }
    }
    Graph::from_edges(n, &edges)
}

fn random_tree_edges(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    if n <= 2 {
        return (1..n).map(|v| (0, v)).collect();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &code)
}

/// Decodes a Prüfer sequence of length `n - 2` into the edges of a labeled tree.
pub fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Structural facts about a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    /// A proper two-coloring, the part holding vertex 0 first; absent iff the
    /// graph has an odd cycle.
    pub bipartition: Option<[Vec<usize>; 2]>,
    pub degrees: Vec<usize>,
    pub cut_vertices: Vec<usize>,
    /// Vertex sets of the blocks (maximal 2-connected pieces and bridges).
    pub blocks: Vec<Vec<usize>>,
    pub claw_free: bool,
    /// Every block is a clique.
    pub block_graph: bool,
}

pub fn structural_report(g: &Graph) -> StructuralReport {
    let (cut_vertices, blocks) = blocks_and_cut_vertices(g);
    let block_graph = blocks.iter().all(|b| is_clique(g, b));
    StructuralReport {
        bipartition: bipartition(g),
        degrees: g.degrees(),
        cut_vertices,
        blocks,
        claw_free: find_claw(g).is_none(),
        block_graph,
    }
}

/// Two-coloring by breadth-first search.
pub fn bipartition(g: &Graph) -> Option<[Vec<usize>; 2]> {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    color[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if color[v] == u8::MAX {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if color[v] == color[u] {
                return None;
            }
        }
    }
    let part = |c| (0..n).filter(|&v| color[v] == c).collect();
    Some([part(0), part(1)])
}

/// Returns `(center, [a, b, c])` for the first induced claw, scanning centers
/// in index order and leaf triples lexicographically.
pub fn find_claw(g: &Graph) -> Option<(usize, [usize; 3])> {
    for center in 0..g.order() {
        let nbrs: Vec<usize> = g.neighbors(center).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nbrs[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some((center, [a, b, c]));
                    }
                }
            }
        }
    }
    None
}

fn is_clique(g: &Graph, set: &[usize]) -> bool {
    let mask: u64 = set.iter().map(|&v| 1u64 << v).sum();
    set.iter().all(|&v| g.neighbor_mask(v) & mask == mask & !(1 << v))
}

/// Hopcroft–Tarjan biconnected components. Blocks are returned with sorted
/// vertex lists, ordered by their smallest vertex then lexicographically.
pub fn blocks_and_cut_vertices(g: &Graph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = g.order();
    if n == 1 {
        return (vec![], vec![vec![0]]);
    }
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<usize>>,
        cut: Vec<bool>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            let mut children = 0;
            for v in self.g.neighbors(u) {
                if self.disc[v] == 0 {
                    children += 1;
                    self.stack.push((u, v));
                    self.visit(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        if parent.is_some() {
                            self.cut[u] = true;
                        }
                        let mut mask = 0u64;
                        while let Some((a, b)) = self.stack.pop() {
                            mask |= 1 << a | 1 << b;
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        self.blocks.push(bits(mask).collect());
                    }
                } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
            if parent.is_none() && children > 1 {
                self.cut[u] = true;
            }
        }
    }
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: vec![],
        blocks: vec![],
        cut: vec![false; n],
    };
    dfs.visit(0, None);
    let mut blocks = dfs.blocks;
    blocks.sort();
    let cut = (0..n).filter(|&v| dfs.cut[v]).collect();
    (cut, blocks)
}

/// Claw-free block graph: exactly the line graphs of trees.
pub fn is_line_graph_of_tree(g: &Graph) -> bool {
    let (_, blocks) = blocks_and_cut_vertices(g);
    blocks.iter().all(|b| is_clique(g, b)) && find_claw(g).is_none()
}

/// True iff `g` is a claw-free block graph of even order, which for a
/// connected graph is the same as being a line graph with invertible
/// adjacency over F2, or the line graph of an odd-order tree.
pub fn is_nondegenerate_line_graph(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && is_line_graph_of_tree(g)
}

/// Line graph: one vertex per edge of `g` (in [`Graph::edges`] order), two
/// adjacent iff the edges share an endpoint.
pub fn line_graph_of(g: &Graph) -> Result<Graph, GraphError> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return Err(GraphError::NoEdges);
    }
    if edges.len() > MAX_ORDER {
        return Err(GraphError::TooLarge(edges.len()));
    }
    let mut adj = vec![0u64; edges.len()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Graph::from_adjacency_rows(adj)
}
