//! The lit-only sigma-game: configurations, moves, exhaustive orbit tables
//! and a shortest-path solver.
//!
//! A configuration is stored as a bitmask (bit `s` set iff vertex `s` is on).
//! The move at `s` XORs the adjacency row of `s` into the configuration when
//! `s` is on and does nothing otherwise. Every move is an involution, so the
//! "reachable by moves" relation is symmetric and its components are orbits.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2::{F2Matrix, F2Vector};
use crate::graph::{bits, Graph};

/// Default bound on the order for exhaustive enumeration over `2^n` configurations.
pub const DEFAULT_ORBIT_CAP: usize = 20;
/// Orders beyond this are refused regardless of the requested cap.
pub const HARD_ORBIT_LIMIT: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("configuration has {found} vertices, graph has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("graph order {n} exceeds the orbit cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid configuration: {0}")]
    Parse(String),
}

/// An on/off assignment to the vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    dim: usize,
    bits: u64,
}

impl Configuration {
    pub fn all_off(dim: usize) -> Self {
        Configuration { dim, bits: 0 }
    }

    pub fn from_bits(dim: usize, bits: u64) -> Result<Self, GameError> {
        if dim > 64 {
            return Err(GameError::Parse(format!("{dim} vertices do not fit in a configuration")));
        }
        if dim < 64 && bits >> dim != 0 {
            let vertex = 63 - bits.leading_zeros() as usize;
            return Err(GameError::VertexOutOfRange { vertex, n: dim });
        }
        Ok(Configuration { dim, bits })
    }

    pub fn from_on_set(dim: usize, on: impl IntoIterator<Item = usize>) -> Result<Self, GameError> {
        let mut bits = 0u64;
        for v in on {
            if v >= dim {
                return Err(GameError::VertexOutOfRange { vertex: v, n: dim });
            }
            bits |= 1 << v;
        }
        Configuration::from_bits(dim, bits)
    }

    /// Parses a bitstring of length `dim` (index 0 leftmost) or a
    /// comma-separated list of on vertices. An empty string or `all-off` is
    /// all-off.
    /// With `one_indexed`, list entries are shifted down by one.
    pub fn parse(text: &str, dim: usize, one_indexed: bool) -> Result<Self, GameError> {
        let text = text.trim();
        if text.len() == dim && !text.is_empty() && text.chars().all(|c| c == '0' || c == '1') {
            let on = text.chars().enumerate().filter(|&(_, c)| c == '1').map(|(i, _)| i);
            return Configuration::from_on_set(dim, on);
        }
        if text.is_empty() || text.eq_ignore_ascii_case("all-off") {
            return Ok(Configuration::all_off(dim));
        }
        if text.len() > 1 && text.chars().all(|c| c == '0' || c == '1') {
            return Err(GameError::DimensionMismatch { expected: dim, found: text.len() });
        }
        let mut on = Vec::new();
        for item in text.split(',') {
            let item = item.trim();
            let v: usize = item
                .parse()
                .map_err(|_| GameError::Parse(format!("`{item}` is not a vertex index")))?;
            let v = if one_indexed {
                v.checked_sub(1).ok_or_else(|| GameError::Parse("vertex 0 with one-indexed input".into()))?
            } else {
                v
            };
            on.push(v);
        }
        Configuration::from_on_set(dim, on)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_on(&self, s: usize) -> bool {
        self.bits >> s & 1 == 1
    }

    pub fn is_all_off(&self) -> bool {
        self.bits == 0
    }

    /// Number of on vertices.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn on_vertices(&self) -> Vec<usize> {
        bits(self.bits).collect()
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.dim).map(|i| if self.is_on(i) { '1' } else { '0' }).collect()
    }

    /// Coordinates in the basis dual to the vertex basis.
    pub fn to_vector(&self) -> F2Vector {
        F2Vector::from_mask(self.dim, self.bits)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Configuration({})", self.to_bitstring())
    }
}

/// An ordered list of chosen vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MoveSequence(pub Vec<usize>);

impl MoveSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[inline]
pub(crate) fn step(rows: &[u64], config: u64, s: usize) -> u64 {
    if config >> s & 1 == 1 {
        config ^ rows[s]
    } else {
        config
    }
}

fn check_config(g: &Graph, f: &Configuration) -> Result<(), GameError> {
    if f.dim == g.order() {
        Ok(())
    } else {
        Err(GameError::DimensionMismatch { expected: g.order(), found: f.dim })
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), GameError> {
    let n = g.order();
    if n > cap || n > HARD_ORBIT_LIMIT {
        Err(GameError::CapExceeded { n, cap: cap.min(HARD_ORBIT_LIMIT) })
    } else {
        Ok(())
    }
}

/// Chooses vertex `s`: toggles its neighbors if `s` is on, otherwise no change.
pub fn apply_move(g: &Graph, f: &Configuration, s: usize) -> Result<Configuration, GameError> {
    check_config(g, f)?;
    if s >= g.order() {
        return Err(GameError::VertexOutOfRange { vertex: s, n: g.order() });
    }
    Ok(Configuration { dim: f.dim, bits: step(g.rows(), f.bits, s) })
}

/// Outcome of [`replay`]: illegal moves act as the identity and the first one
/// is reported by position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReplayOutcome {
    pub end: Configuration,
    pub first_illegal: Option<usize>,
}

impl ReplayOutcome {
    pub fn all_legal(&self) -> bool {
        self.first_illegal.is_none()
    }
}

pub fn replay(g: &Graph, f: &Configuration, seq: &MoveSequence) -> Result<ReplayOutcome, GameError> {
    let mut cur = *f;
    let mut first_illegal = None;
    for (pos, &s) in seq.0.iter().enumerate() {
        if s < g.order() && !cur.is_on(s) && first_illegal.is_none() {
            first_illegal = Some(pos);
        }
        cur = apply_move(g, &cur, s)?;
    }
    Ok(ReplayOutcome { end: cur, first_illegal })
}

/// Matrix of the move at `s` acting on configuration coordinates (column
/// vectors): the identity plus the adjacency row of `s` placed in column `s`.
pub fn kappa_matrix(g: &Graph, s: usize) -> F2Matrix {
    let n = g.order();
    let mut m = F2Matrix::identity(n);
    for t in g.neighbors(s) {
        m.set(t, s, true);
    }
    m
}

/// Matrix of a word of moves: the word `[s₁, …, s_k]` applies `s₁` first.
pub fn kappa_word_matrix(g: &Graph, word: &[usize]) -> F2Matrix {
    word.iter().fold(F2Matrix::identity(g.order()), |acc, &s| {
        kappa_matrix(g, s).mul(&acc).expect("square matrices of the graph order")
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSummary {
    /// Smallest configuration integer in the orbit.
    pub representative: u64,
    pub size: u64,
    pub min_weight: u32,
    /// Smallest configuration integer among those of minimum weight.
    pub witness: u64,
}

/// Partition of all `2^n` configurations into orbits. Ids are assigned in
/// increasing order of each orbit's smallest configuration, so the zero
/// configuration is orbit 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable {
    n: usize,
    orbit_of: Vec<u32>,
    orbits: Vec<OrbitSummary>,
}

impl OrbitTable {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_id(&self, f: &Configuration) -> usize {
        self.orbit_of[f.bits as usize] as usize
    }

    pub fn orbit_id_of_bits(&self, bits: u64) -> usize {
        self.orbit_of[bits as usize] as usize
    }

    pub fn orbits(&self) -> &[OrbitSummary] {
        &self.orbits
    }

    /// Largest per-orbit minimum weight.
    pub fn min_light_number(&self) -> u32 {
        self.orbits.iter().map(|o| o.min_weight).max().unwrap_or(0)
    }

    /// Bytes used by the id array and the search queue for order `n`.
    pub fn memory_estimate_bytes(n: usize) -> u64 {
        (1u64 << n) * (std::mem::size_of::<u32>() as u64 + std::mem::size_of::<u64>() as u64)
    }
}

/// Breadth-first search over all configurations.
pub fn enumerate_orbits(g: &Graph, cap: usize) -> Result<OrbitTable, GameError> {
    check_cap(g, cap)?;
    let n = g.order();
    let total = 1usize << n;
    let rows = g.rows();
    let mut orbit_of = vec![u32::MAX; total];
    let mut orbits = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..total {
        if orbit_of[start] != u32::MAX {
            continue;
        }
        let id = orbits.len() as u32;
        orbit_of[start] = id;
        queue.push_back(start as u64);
        let mut summary = OrbitSummary {
            representative: start as u64,
            size: 0,
            min_weight: u32::MAX,
            witness: start as u64,
        };
        while let Some(c) = queue.pop_front() {
            summary.size += 1;
            let w = c.count_ones();
            if w < summary.min_weight || (w == summary.min_weight && c < summary.witness) {
                summary.min_weight = w;
                summary.witness = c;
            }
            for s in bits(c) {
                let next = c ^ rows[s];
                if orbit_of[next as usize] == u32::MAX {
                    orbit_of[next as usize] = id;
                    queue.push_back(next);
                }
            }
        }
        orbits.push(summary);
    }
    Ok(OrbitTable { n, orbit_of, orbits })
}

/// Minimum light number by exhaustive orbit enumeration.
pub fn min_light_number_bruteforce(g: &Graph, cap: usize) -> Result<u32, GameError> {
    Ok(enumerate_orbits(g, cap)?.min_light_number())
}

/// Distances to the nearest minimum-weight configuration, over one orbit.
#[derive(Debug, Clone)]
pub struct OrbitDistances {
    n: usize,
    rows: Vec<u64>,
    dist: Vec<u32>,
    min_weight: u32,
}

impl OrbitDistances {
    /// Explores the orbit of `f`, then runs a multi-source search back from its
    /// minimum-weight members.
    pub fn new(g: &Graph, f: &Configuration, cap: usize) -> Result<Self, GameError> {
        check_config(g, f)?;
        check_cap(g, cap)?;
        let n = g.order();
        let rows = g.rows().to_vec();
        let mut dist = vec![u32::MAX; 1usize << n];

        let mut members = vec![f.bits];
        dist[f.bits as usize] = 0;
        let mut i = 0;
        while i < members.len() {
            let c = members[i];
            i += 1;
            for s in bits(c) {
                let next = c ^ rows[s];
                if dist[next as usize] == u32::MAX {
                    dist[next as usize] = 0;
                    members.push(next);
                }
            }
        }
        let min_weight = members.iter().map(|c| c.count_ones()).min().unwrap_or(0);

        let mut queue = VecDeque::new();
        for &c in &members {
            if c.count_ones() == min_weight {
                dist[c as usize] = 0;
                queue.push_back(c);
            } else {
                dist[c as usize] = u32::MAX;
            }
        }
        while let Some(c) = queue.pop_front() {
            let d = dist[c as usize];
            for s in bits(c) {
                let next = c ^ rows[s];
                if dist[next as usize] == u32::MAX {
                    dist[next as usize] = d + 1;
                    queue.push_back(next);
                }
            }
        }
        Ok(OrbitDistances { n, rows, dist, min_weight })
    }

    /// Smallest on-count reachable in this orbit.
    pub fn target_weight(&self) -> u32 {
        self.min_weight
    }

    /// Moves remaining from `f`, or `None` if `f` is outside the orbit.
    pub fn distance(&self, f: &Configuration) -> Option<u32> {
        match self.dist.get(f.bits as usize) {
            Some(&d) if f.dim == self.n && d != u32::MAX => Some(d),
            _ => None,
        }
    }

    /// Lowest-index vertex whose move brings `f` one step closer. `None` when
    /// `f` already has minimum weight or lies outside the orbit.
    pub fn hint(&self, f: &Configuration) -> Option<usize> {
        let d = self.distance(f)?;
        if d == 0 {
            return None;
        }
        bits(f.bits).find(|&s| self.dist[(f.bits ^ self.rows[s]) as usize] == d - 1)
    }

    fn walk(&self, f: &Configuration) -> Option<(Configuration, MoveSequence)> {
        let mut cur = *f;
        let mut moves = Vec::new();
        while let Some(s) = self.hint(&cur) {
            moves.push(s);
            cur.bits = step(&self.rows, cur.bits, s);
        }
        self.distance(&cur).map(|_| (cur, MoveSequence(moves)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// A minimum-weight configuration in the orbit of the start.
    pub target: Configuration,
    /// Shortest legal sequence reaching `target`; lexicographically smallest
    /// among all shortest sequences ending at any minimum-weight configuration.
    pub moves: MoveSequence,
}

pub fn solve(g: &Graph, f: &Configuration, cap: usize) -> Result<Solution, GameError> {
    let field = OrbitDistances::new(g, f, cap)?;
    let (target, moves) = field.walk(f).expect("start lies in its own orbit");
    Ok(Solution { target, moves })
}
