//! Verdicts about orbits and minimum light numbers.
//!
//! For a graph `Γ` with adjacency matrix `A` invertible over F2 that is not a
//! line graph, a configuration `f ≠ 0` falls in one of two nonzero orbits
//! according to `Q(A⁻¹f)`, and the minimum light number is 1 exactly when
//! `Q` takes both values on the dual basis (the columns of `A⁻¹`), and 2
//! otherwise. Outside those hypotheses the classifier reports the detected
//! structure and refuses to predict.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2::{adjacency_matrix, F2Error, F2Matrix, F2Vector, Inversion, QuadraticSpace};
use crate::game::{kappa_matrix, Configuration};
use crate::graph::{bipartition, is_nondegenerate_line_graph, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("graph is degenerate (adjacency rank {rank} of {n})")]
    Degenerate { rank: usize, n: usize },
    #[error("graph is a nondegenerate line graph; orbit classification does not apply")]
    LineGraph,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("configuration has {found} vertices, graph has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("inverse adjacency matrix is not a simple graph: {0}")]
    Inconsistent(String),
    #[error("group closure exceeded {0} elements")]
    ClosureLimit(usize),
    #[error(transparent)]
    Algebra(#[from] F2Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ClassifyError {
    /// The verdict a precondition failure corresponds to, if any.
    pub fn verdict(&self) -> Option<Verdict> {
        match self {
            ClassifyError::Degenerate { .. } => Some(Verdict::DegenerateOutOfScope),
            ClassifyError::LineGraph => Some(Verdict::LineGraphOutOfScope),
            _ => None,
        }
    }
}

/// Which result governs a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Nondegenerate and not a line graph: orbits and light numbers are predicted.
    Classified,
    /// Nondegenerate line graph (line graph of an odd-order tree).
    LineGraphOutOfScope,
    /// Singular adjacency matrix.
    DegenerateOutOfScope,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbitClass {
    #[serde(rename = "ZERO")]
    Zero,
    /// Nonzero `f` with `Q(A⁻¹f) = 0`.
    Q0,
    /// `f` with `Q(A⁻¹f) = 1`.
    Q1,
}

/// Sizes of the three orbits and the order of the orthogonal group, from the
/// closed formulas in `m = n / 2` and the Arf invariant. Serialized as
/// decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedSizes {
    #[serde(with = "decimal")]
    pub q1: BigUint,
    #[serde(with = "decimal")]
    pub q0_nonzero: BigUint,
    #[serde(with = "decimal")]
    pub group_order: BigUint,
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        BigUint::parse_bytes(text.as_bytes(), 10).ok_or_else(|| D::Error::custom(format!("`{text}` is not a decimal integer")))
    }
}

/// On-sets of minimum size in each nonzero orbit class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub q0: Vec<usize>,
    pub q1: Vec<usize>,
}

/// Analysis verdict for one graph. Fields after `verdict` are present only
/// when they are meaningful for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub order: usize,
    pub nondegenerate: bool,
    /// Rank of the adjacency matrix over F2.
    pub rank: usize,
    /// Claw-free block graph of even order.
    pub line_graph: bool,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub arf: Option<u8>,
    /// `Q` on each dual basis vector, indexed by vertex.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dual_q_values: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_light: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub one_lit: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witnesses: Option<Witnesses>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orbit_sizes: Option<PredictedSizes>,
}

/// Dual-basis data for a nondegenerate graph.
#[derive(Debug, Clone)]
pub struct DualData {
    pub space: QuadraticSpace,
    pub inverse: F2Matrix,
    pub dual: Vec<F2Vector>,
    pub q_values: Vec<bool>,
}

impl DualData {
    pub fn new(g: &Graph) -> Result<Self, ClassifyError> {
        let a = adjacency_matrix(g);
        let inverse = match a.invert() {
            Inversion::Invertible(inv) => inv,
            Inversion::Singular { rank } => return Err(ClassifyError::Degenerate { rank, n: g.order() }),
        };
        if g.order() % 2 == 1 {
            return Err(ClassifyError::Inconsistent(format!("invertible alternating matrix of odd order {}", g.order())));
        }
        let space = QuadraticSpace::of_graph(g);
        let dual: Vec<F2Vector> = (0..g.order()).map(|s| inverse.column(s)).collect();
        let q_values = dual.iter().map(|d| space.quadratic(d)).collect::<Result<_, _>>()?;
        Ok(DualData { space, inverse, dual, q_values })
    }

    fn pairing(&self, s: usize, t: usize) -> bool {
        self.inverse.get(s, t)
    }
}

pub fn classify_graph(g: &Graph) -> ClassReport {
    let n = g.order();
    let line_graph = is_nondegenerate_line_graph(g);
    let data = match DualData::new(g) {
        Ok(d) => d,
        Err(_) => {
            return ClassReport {
                order: n,
                nondegenerate: false,
                rank: adjacency_matrix(g).rank(),
                line_graph,
                verdict: Verdict::DegenerateOutOfScope,
                arf: None,
                dual_q_values: None,
                min_light: None,
                one_lit: None,
                witnesses: None,
                orbit_sizes: None,
            }
        }
    };
    let (_, arf) = data.space.symplectic_basis_and_arf().expect("nondegenerate space");
    let dual_q_values = Some(data.q_values.iter().map(|&q| q as u8).collect());
    let mut report = ClassReport {
        order: n,
        nondegenerate: true,
        rank: n,
        line_graph,
        verdict: Verdict::LineGraphOutOfScope,
        arf: Some(arf as u8),
        dual_q_values,
        min_light: None,
        one_lit: None,
        witnesses: None,
        orbit_sizes: None,
    };
    if line_graph {
        return report;
    }
    let witnesses = witnesses(&data);
    let min_light = witnesses.q0.len().max(witnesses.q1.len()) as u8;
    report.verdict = Verdict::Classified;
    report.min_light = Some(min_light);
    report.one_lit = Some(min_light == 1);
    report.witnesses = Some(witnesses);
    report.orbit_sizes = Some(predicted_orbit_sizes(n / 2, arf).expect("m >= 1"));
    report
}

/// Smallest on-set for each class: a single vertex whose dual vector has the
/// right `Q` value if one exists, otherwise the lexicographically first pair.
/// A pair `{s, t}` has `Q(α̌ₛ + α̌ₜ) = Q(α̌ₛ) + Q(α̌ₜ) + B(α̌ₛ, α̌ₜ)`, which
/// reduces to the pairing when both singles share a value.
fn witnesses(data: &DualData) -> Witnesses {
    let n = data.q_values.len();
    let pick = |want: bool| -> Vec<usize> {
        if let Some(s) = data.q_values.iter().position(|&q| q == want) {
            return vec![s];
        }
        for s in 0..n {
            for t in s + 1..n {
                let q = data.q_values[s] ^ data.q_values[t] ^ data.pairing(s, t);
                if q == want {
                    return vec![s, t];
                }
            }
        }
        unreachable!("a nondegenerate non-complete space always has a pair witness")
    };
    Witnesses { q0: pick(false), q1: pick(true) }
}

/// Orbit class lookup with the inverse adjacency matrix computed once.
#[derive(Debug, Clone)]
pub struct OrbitClassifier {
    data: DualData,
}

impl OrbitClassifier {
    pub fn new(g: &Graph) -> Result<Self, ClassifyError> {
        let data = DualData::new(g)?;
        if is_nondegenerate_line_graph(g) {
            return Err(ClassifyError::LineGraph);
        }
        Ok(OrbitClassifier { data })
    }

    pub fn classify(&self, f: &Configuration) -> Result<OrbitClass, ClassifyError> {
        let n = self.data.space.dim();
        if f.dim() != n {
            return Err(ClassifyError::DimensionMismatch { expected: n, found: f.dim() });
        }
        if f.is_all_off() {
            return Ok(OrbitClass::Zero);
        }
        let preimage = self.data.inverse.mul_vec(&f.to_vector())?;
        Ok(if self.data.space.quadratic(&preimage)? { OrbitClass::Q1 } else { OrbitClass::Q0 })
    }

    pub fn dual_data(&self) -> &DualData {
        &self.data
    }
}

pub fn orbit_class(g: &Graph, f: &Configuration) -> Result<OrbitClass, ClassifyError> {
    OrbitClassifier::new(g)?.classify(f)
}

/// Graph whose adjacency matrix is the inverse of `g`'s.
pub fn dual_graph(g: &Graph) -> Result<Graph, ClassifyError> {
    let data = DualData::new(g)?;
    if !data.inverse.has_zero_diagonal() {
        let s = (0..g.order()).find(|&s| data.inverse.get(s, s)).unwrap();
        return Err(ClassifyError::Inconsistent(format!("diagonal entry {s} is 1")));
    }
    if !data.inverse.is_symmetric() {
        return Err(ClassifyError::Inconsistent("inverse is not symmetric".into()));
    }
    let rows = data.inverse.mask_rows().expect("graphs have order <= 64");
    Ok(Graph::from_adjacency_rows(rows)?)
}

/// `(|Q⁻¹(1)|, |Q⁻¹(0) \ {0}|, |O(V)|)` on a space of dimension `2m` with
/// the given Arf invariant.
pub fn predicted_orbit_sizes(m: usize, arf: bool) -> Result<PredictedSizes, ClassifyError> {
    if m < 1 {
        return Err(ClassifyError::BadParameter(format!("m = {m} must be at least 1")));
    }
    let pow = |e: usize| BigUint::from(1u8) << e;
    let one = BigUint::from(1u8);
    let half = pow(2 * m - 1);
    let shift = pow(m - 1);
    let (q1, q0_nonzero) = if arf {
        (&half + &shift, &half - &shift - &one)
    } else {
        (&half - &shift, &half + &shift - &one)
    };
    let mut group_order = pow(m * m - m + 1);
    group_order *= if arf { pow(m) + &one } else { pow(m) - &one };
    for i in 1..m {
        group_order *= pow(2 * i) - &one;
    }
    Ok(PredictedSizes { q1, q0_nonzero, group_order })
}

/// For nondegenerate bipartite graphs: 1-lit iff some vertex has even degree
/// or the graph is a single edge.
pub fn bipartite_one_lit(g: &Graph) -> Result<bool, ClassifyError> {
    let a = adjacency_matrix(g);
    if let Inversion::Singular { rank } = a.invert() {
        return Err(ClassifyError::Degenerate { rank, n: g.order() });
    }
    if bipartition(g).is_none() {
        return Err(ClassifyError::NotBipartite);
    }
    Ok(g.order() == 2 || g.degrees().iter().any(|d| d % 2 == 0))
}

/// Order of the matrix group generated by the moves, by closure. Stops with
/// an error once more than `limit` elements are found.
pub fn kappa_group_order(g: &Graph, limit: usize) -> Result<usize, ClassifyError> {
    let gens: Vec<F2Matrix> = (0..g.order()).map(|s| kappa_matrix(g, s)).collect();
    let identity = F2Matrix::identity(g.order());
    let mut seen: HashSet<F2Matrix> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(m) = queue.pop_front() {
        for k in &gens {
            let next = k.mul(&m)?;
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return Err(ClassifyError::ClosureLimit(limit));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}
