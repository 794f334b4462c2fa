//! Transvections `τ_α(β) = β + B(β, α)α` on the vector space, their duality
//! with the game moves, orbit enumeration under the group they generate, and
//! elementary t-moves on independent vector sets.

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::f2::{bilinear_mask, adjacency_matrix, F2Error, F2Matrix, F2Vector, Inversion, QuadraticSpace};
use crate::game::kappa_word_matrix;
use crate::graph::{bits, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransvectionError {
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("index {index} out of range for {len} vectors")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("a t-move needs two distinct indices")]
    SameIndex,
    #[error("graph of the vector set is disconnected")]
    Disconnected,
    #[error("search limited to {max} vectors, got {got}")]
    TooMany { max: usize, got: usize },
    #[error("dimension {dim} exceeds the orbit cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("graph is degenerate (adjacency rank {rank})")]
    Degenerate { rank: usize },
    #[error(transparent)]
    Algebra(#[from] F2Error),
}

pub fn transvection_apply(qs: &QuadraticSpace, alpha: &F2Vector, beta: &F2Vector) -> Result<F2Vector, F2Error> {
    if qs.bilinear(beta, alpha)? {
        Ok(beta ^ alpha)
    } else {
        Ok(beta.clone())
    }
}

/// Matrix of the transvection along the vertex basis vector `e_s`: the
/// identity plus the adjacency row of `s` placed in row `s`.
pub fn tau_matrix(g: &Graph, s: usize) -> F2Matrix {
    let mut m = F2Matrix::identity(g.order());
    for t in g.neighbors(s) {
        m.set(s, t, true);
    }
    m
}

/// Product of vertex transvections, the first letter applied first.
pub fn tau_word_matrix(g: &Graph, word: &[usize]) -> F2Matrix {
    word.iter().fold(F2Matrix::identity(g.order()), |acc, &s| {
        tau_matrix(g, s).mul(&acc).expect("square matrices of the graph order")
    })
}

/// Checks `A · τ(w) = κ(w) · A`, i.e. that the adjacency map intertwines the
/// transvection action with the game moves along `word`.
pub fn verify_kappa_tau_duality(g: &Graph, word: &[usize]) -> Result<bool, TransvectionError> {
    let a = adjacency_matrix(g);
    if let Inversion::Singular { rank } = a.invert() {
        return Err(TransvectionError::Degenerate { rank });
    }
    if let Some(&s) = word.iter().find(|&&s| s >= g.order()) {
        return Err(TransvectionError::IndexOutOfRange { index: s, len: g.order() });
    }
    let lhs = a.mul(&tau_word_matrix(g, word))?;
    let rhs = kappa_word_matrix(g, word).mul(&a)?;
    Ok(lhs == rhs)
}

/// A linearly independent, ordered list of vectors in a quadratic space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSet {
    vectors: Vec<F2Vector>,
    space: QuadraticSpace,
}

impl VectorSet {
    pub fn new(space: QuadraticSpace, vectors: Vec<F2Vector>) -> Result<Self, TransvectionError> {
        let dim = space.dim();
        if let Some(v) = vectors.iter().find(|v| v.dim() != dim) {
            return Err(F2Error::DimensionMismatch { expected: dim, found: v.dim() }.into());
        }
        if independent_rank(&vectors) != vectors.len() {
            return Err(TransvectionError::Dependent);
        }
        Ok(VectorSet { vectors, space })
    }

    /// The vertex basis of a graph's space.
    pub fn standard(g: &Graph) -> Self {
        let n = g.order();
        VectorSet {
            vectors: (0..n).map(|s| F2Vector::unit(n, s)).collect(),
            space: QuadraticSpace::of_graph(g),
        }
    }

    pub fn vectors(&self) -> &[F2Vector] {
        &self.vectors
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Adjacency rows of the pairing graph: `i ~ j` iff `B(pᵢ, pⱼ) = 1`.
    pub fn pairing_rows(&self) -> Vec<u64> {
        let k = self.vectors.len();
        assert!(k <= 64, "pairing graph needs at most 64 vectors");
        let mut rows = vec![0u64; k];
        for i in 0..k {
            for j in i + 1..k {
                if self.space.bilinear(&self.vectors[i], &self.vectors[j]).expect("same space") {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        rows
    }

    /// The pairing graph, when it is connected.
    pub fn pairing_graph(&self) -> Result<Graph, GraphError> {
        Graph::from_adjacency_rows(self.pairing_rows())
    }
}

fn independent_rank(vectors: &[F2Vector]) -> usize {
    let mut basis: Vec<F2Vector> = Vec::new();
    for v in vectors {
        let mut x = v.clone();
        for b in &basis {
            let lead = b.support().next().unwrap();
            if x.get(lead) {
                x ^= b;
            }
        }
        let lead = x.support().next();
        if let Some(lead) = lead {
            for b in basis.iter_mut() {
                if b.get(lead) {
                    *b ^= &x;
                }
            }
            basis.push(x);
        }
    }
    basis.len()
}

/// Replaces vector `j` with its image under the transvection along vector `i`.
pub fn elementary_t_move(p: &VectorSet, i: usize, j: usize) -> Result<VectorSet, TransvectionError> {
    let len = p.vectors.len();
    for index in [i, j] {
        if index >= len {
            return Err(TransvectionError::IndexOutOfRange { index, len });
        }
    }
    if i == j {
        return Err(TransvectionError::SameIndex);
    }
    let mut out = p.clone();
    out.vectors[j] = transvection_apply(&p.space, &p.vectors[i], &p.vectors[j])?;
    Ok(out)
}

/// Partition of the whole space into orbits of the group generated by the
/// transvections along the vectors of `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TvOrbits {
    /// Orbit id per vector, indexed by the vector's mask; ids follow the
    /// smallest mask in each orbit.
    pub orbit_of: Vec<u32>,
    pub sizes: Vec<u64>,
}

impl TvOrbits {
    pub fn orbit_count(&self) -> usize {
        self.sizes.len()
    }

    /// Orbits as sorted member lists.
    pub fn members(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new(); self.sizes.len()];
        for (v, &id) in self.orbit_of.iter().enumerate() {
            out[id as usize].push(v as u64);
        }
        out
    }
}

pub fn tv_orbits(p: &VectorSet, cap: usize) -> Result<TvOrbits, TransvectionError> {
    let dim = p.space.dim();
    if dim > cap || dim > crate::game::HARD_ORBIT_LIMIT {
        return Err(TransvectionError::CapExceeded { dim, cap });
    }
    let rows = p.space.gram().mask_rows().expect("dim within orbit cap");
    let dirs: Vec<u64> = p.vectors.iter().map(|v| v.to_mask().expect("dim <= 64")).collect();
    let total = 1usize << dim;
    let mut orbit_of = vec![u32::MAX; total];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..total {
        if orbit_of[start] != u32::MAX {
            continue;
        }
        let id = sizes.len() as u32;
        orbit_of[start] = id;
        queue.push_back(start as u64);
        let mut size = 0;
        while let Some(x) = queue.pop_front() {
            size += 1;
            for &a in &dirs {
                if bilinear_mask(&rows, x, a) {
                    let y = x ^ a;
                    if orbit_of[y as usize] == u32::MAX {
                        orbit_of[y as usize] = id;
                        queue.push_back(y);
                    }
                }
            }
        }
        sizes.push(size);
    }
    Ok(TvOrbits { orbit_of, sizes })
}

/// Largest vector set [`reduce_to_tree_search`] accepts.
pub const TREE_SEARCH_MAX: usize = 8;

/// A t-equivalent set with a tree as pairing graph, and the `(i, j)` moves
/// that reach it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeWitness {
    pub set: VectorSet,
    pub moves: Vec<(usize, usize)>,
}

fn is_tree_rows(rows: &[u64]) -> bool {
    let k = rows.len();
    let edges: u32 = rows.iter().map(|r| r.count_ones()).sum::<u32>() / 2;
    edges as usize + 1 == k && Graph::from_adjacency_rows(rows.to_vec()).is_ok()
}

/// Breadth-first search over elementary t-moves for a set whose pairing graph
/// is a tree. States are deduplicated by their sorted masks. `None` means no
/// tree within `depth_cap` moves, which says nothing about larger depths.
pub fn reduce_to_tree_search(p: &VectorSet, depth_cap: usize) -> Result<Option<TreeWitness>, TransvectionError> {
    let k = p.len();
    if k > TREE_SEARCH_MAX {
        return Err(TransvectionError::TooMany { max: TREE_SEARCH_MAX, got: k });
    }
    if p.pairing_graph().is_err() {
        return Err(TransvectionError::Disconnected);
    }
    let mut found = None;
    visit_t_class(p, depth_cap, |set, moves| {
        if is_tree_rows(&set.pairing_rows()) {
            found = Some(TreeWitness { set: set.clone(), moves: moves.to_vec() });
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// Breadth-first traversal of the sets reachable from `p` by at most
/// `depth_cap` elementary t-moves. `visit` sees every distinct set once,
/// with a shortest move list; returning `false` stops the traversal.
pub fn visit_t_class(p: &VectorSet, depth_cap: usize, mut visit: impl FnMut(&VectorSet, &[(usize, usize)]) -> bool) {
    let key = |s: &VectorSet| -> Vec<F2Vector> {
        let mut v = s.vectors.clone();
        v.sort();
        v
    };
    let mut seen: HashSet<Vec<F2Vector>> = HashSet::from([key(p)]);
    let mut parents: HashMap<usize, (usize, (usize, usize))> = HashMap::new();
    let mut states: Vec<(VectorSet, usize)> = vec![(p.clone(), 0)];
    let mut head = 0;
    while head < states.len() {
        let (set, depth) = states[head].clone();
        let mut moves = Vec::new();
        let mut at = head;
        while let Some(&(parent, mv)) = parents.get(&at) {
            moves.push(mv);
            at = parent;
        }
        moves.reverse();
        if !visit(&set, &moves) {
            return;
        }
        if depth < depth_cap {
            for i in 0..set.len() {
                for j in 0..set.len() {
                    if i == j {
                        continue;
                    }
                    let next = elementary_t_move(&set, i, j).expect("indices in range");
                    if next.vectors[j] == set.vectors[j] {
                        continue;
                    }
                    if seen.insert(key(&next)) {
                        parents.insert(states.len(), (head, (i, j)));
                        states.push((next, depth + 1));
                    }
                }
            }
        }
        head += 1;
    }
}

/// For a tree pairing graph: true iff no vertex of degree at least 3 has two
/// leaf neighbors.
pub fn no_branch_with_two_leaves(tree: &Graph) -> bool {
    (0..tree.order()).filter(|&v| tree.degree(v) >= 3).all(|v| {
        bits(tree.neighbor_mask(v)).filter(|&u| tree.degree(u) == 1).count() < 2
    })
}
