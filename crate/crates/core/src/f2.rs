//! Linear algebra over the two-element field.
//!
//! Vectors and matrix rows are packed 64 bits to a word, bit `i` of a vector
//! living at word `i / 64`, position `i % 64`. A [`QuadraticSpace`] pairs the
//! alternating form whose Gram matrix is a graph's adjacency matrix with the
//! quadratic form taking the value 1 on every vertex basis vector.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};
use std::str::FromStr;

use rand::Rng;
use smallvec::SmallVec;
use thiserror::Error;

use crate::graph::Graph;

/// Largest dimension [`QuadraticSpace::quadric_counts`] enumerates by default.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum F2Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("form is degenerate (rank {rank} of {dim})")]
    Degenerate { rank: usize, dim: usize },
    #[error("not an alternating form: {0}")]
    NotAlternating(String),
    #[error("invalid character {ch:?} at position {position} in bitstring")]
    InvalidBit { position: usize, ch: char },
    #[error("dimension {dim} exceeds the exhaustive cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

#[inline]
fn word_count(dim: usize) -> usize {
    dim.div_ceil(64)
}

#[inline]
fn tail_mask(dim: usize) -> u64 {
    match dim % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A vector of `F2^dim`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vector {
    dim: usize,
    words: SmallVec<[u64; 1]>,
}

impl F2Vector {
    pub fn zeros(dim: usize) -> Self {
        F2Vector { dim, words: SmallVec::from_elem(0, word_count(dim)) }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.set(i, true);
        v
    }

    /// Builds a vector of dimension at most 64 from a bit mask; bits at or
    /// above `dim` are dropped.
    pub fn from_mask(dim: usize, mask: u64) -> Self {
        assert!(dim <= 64, "from_mask needs dim <= 64, got {dim}");
        let mut v = Self::zeros(dim);
        if dim > 0 {
            v.words[0] = mask & tail_mask(dim);
        }
        v
    }

    pub fn from_support(dim: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(dim);
        for i in support {
            v.flip(i);
        }
        v
    }

    pub(crate) fn from_words(dim: usize, words: &[u64]) -> Self {
        debug_assert_eq!(words.len(), word_count(dim));
        let mut v = F2Vector { dim, words: SmallVec::from_slice(words) };
        if let Some(last) = v.words.last_mut() {
            *last &= tail_mask(dim);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The low word, for vectors of dimension at most 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.dim, "bit {i} out of range for dim {}", self.dim);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.dim, "bit {i} out of range for dim {}", self.dim);
        let bit = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= bit;
        } else {
            self.words[i / 64] &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.dim, "bit {i} out of range for dim {}", self.dim);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(k, &w)| crate::graph::bits(w).map(move |b| k * 64 + b))
    }

    /// Standard dot product `Σ uᵢvᵢ`.
    pub fn dot(&self, other: &Self) -> Result<bool, F2Error> {
        self.check_dim(other.dim)?;
        Ok(dot_words(&self.words, &other.words))
    }

    fn check_dim(&self, found: usize) -> Result<(), F2Error> {
        if self.dim == found {
            Ok(())
        } else {
            Err(F2Error::DimensionMismatch { expected: self.dim, found })
        }
    }

    /// Bitstring with index 0 leftmost.
    pub fn to_bitstring(&self) -> String {
        (0..self.dim).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

#[inline]
fn dot_words(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones()) & 1 == 1
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector({})", self.to_bitstring())
    }
}

impl FromStr for F2Vector {
    type Err = F2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut v = F2Vector::zeros(s.chars().count());
        for (position, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(position, true),
                _ => return Err(F2Error::InvalidBit { position, ch }),
            }
        }
        Ok(v)
    }
}

impl BitXorAssign<&F2Vector> for F2Vector {
    fn bitxor_assign(&mut self, rhs: &F2Vector) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in vector addition");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor<&F2Vector> for &F2Vector {
    type Output = F2Vector;

    fn bitxor(self, rhs: &F2Vector) -> F2Vector {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

/// A square matrix over F2, stored row-major with `stride` words per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    dim: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Result of [`F2Matrix::invert`]; singularity is a value, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inversion {
    Invertible(F2Matrix),
    Singular { rank: usize },
}

impl Inversion {
    pub fn inverse(self) -> Option<F2Matrix> {
        match self {
            Inversion::Invertible(m) => Some(m),
            Inversion::Singular { .. } => None,
        }
    }
}

impl F2Matrix {
    pub fn zeros(dim: usize) -> Self {
        let stride = word_count(dim);
        F2Matrix { dim, stride, data: vec![0; dim * stride] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[F2Vector]) -> Result<Self, F2Error> {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, r) in rows.iter().enumerate() {
            if r.dim != dim {
                return Err(F2Error::DimensionMismatch { expected: dim, found: r.dim });
            }
            m.row_words_mut(i).copy_from_slice(&r.words);
        }
        Ok(m)
    }

    /// Builds a matrix of dimension at most 64 from one mask per row.
    pub fn from_mask_rows(rows: &[u64]) -> Self {
        let dim = rows.len();
        assert!(dim <= 64);
        let mut m = Self::zeros(dim);
        if dim > 0 {
            for (i, &r) in rows.iter().enumerate() {
                m.data[i] = r & tail_mask(dim);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row(&self, i: usize) -> F2Vector {
        F2Vector::from_words(self.dim, self.row_words(i))
    }

    pub fn rows(&self) -> Vec<F2Vector> {
        (0..self.dim).map(|i| self.row(i)).collect()
    }

    pub fn column(&self, j: usize) -> F2Vector {
        F2Vector::from_support(self.dim, (0..self.dim).filter(|&i| self.get(i, j)))
    }

    /// Row masks, for matrices of dimension at most 64.
    pub fn mask_rows(&self) -> Option<Vec<u64>> {
        match self.stride {
            0 => Some(vec![]),
            1 => Some(self.data.clone()),
            _ => None,
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let bit = 1u64 << (j % 64);
        let w = &mut self.data[i * self.stride + j / 64];
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (s, d) = (src * self.stride, dst * self.stride);
        for k in 0..self.stride {
            self.data[d + k] ^= self.data[s + k];
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for k in 0..self.stride {
            self.data.swap(a * self.stride + k, b * self.stride + k);
        }
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix, F2Error> {
        if self.dim != other.dim {
            return Err(F2Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let mut out = F2Matrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in (0..self.dim).filter(|&j| self.get(i, j)) {
                let (o, r) = (i * self.stride, j * other.stride);
                for k in 0..self.stride {
                    out.data[o + k] ^= other.data[r + k];
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &F2Vector) -> Result<F2Vector, F2Error> {
        if v.dim != self.dim {
            return Err(F2Error::DimensionMismatch { expected: self.dim, found: v.dim });
        }
        Ok(F2Vector::from_support(
            self.dim,
            (0..self.dim).filter(|&i| dot_words(self.row_words(i), &v.words)),
        ))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.dim).all(|i| !self.get(i, i))
    }

    pub fn is_identity(&self) -> bool {
        *self == F2Matrix::identity(self.dim)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..self.dim {
            let Some(p) = (rank..self.dim).find(|&r| m.get(r, col)) else { continue };
            m.swap_rows(rank, p);
            for r in rank + 1..self.dim {
                if m.get(r, col) {
                    m.xor_row_into(rank, r);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Gauss–Jordan inversion. For each column the pivot is the lowest-index
    /// remaining row with that bit set, so the result is reproducible.
    pub fn invert(&self) -> Inversion {
        let n = self.dim;
        let mut work = self.clone();
        let mut inv = F2Matrix::identity(n);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| work.get(r, col)) else {
                return Inversion::Singular { rank: self.rank() };
            };
            work.swap_rows(col, p);
            inv.swap_rows(col, p);
            for r in 0..n {
                if r != col && work.get(r, col) {
                    work.xor_row_into(col, r);
                    inv.xor_row_into(col, r);
                }
            }
        }
        Inversion::Invertible(inv)
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.dim).map(|i| self.row(i).to_bitstring())).finish()
    }
}

/// Gram matrix of the alternating form: entry `(s, t)` is 1 iff `st` is an edge.
pub fn adjacency_matrix(g: &Graph) -> F2Matrix {
    F2Matrix::from_mask_rows(g.rows())
}

/// The alternating form `B(u, v) = uᵀAv` together with the quadratic form
/// `Q` normalized by `Q(eₛ) = 1` on the standard basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSpace {
    gram: F2Matrix,
}

impl QuadraticSpace {
    pub fn new(gram: F2Matrix) -> Result<Self, F2Error> {
        if !gram.is_symmetric() {
            return Err(F2Error::NotAlternating("Gram matrix is not symmetric".into()));
        }
        if !gram.has_zero_diagonal() {
            return Err(F2Error::NotAlternating("Gram matrix has a nonzero diagonal".into()));
        }
        Ok(QuadraticSpace { gram })
    }

    pub fn of_graph(g: &Graph) -> Self {
        QuadraticSpace { gram: adjacency_matrix(g) }
    }

    pub fn dim(&self) -> usize {
        self.gram.dim()
    }

    pub fn gram(&self) -> &F2Matrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        matches!(self.gram.invert(), Inversion::Invertible(_))
    }

    fn check(&self, v: &F2Vector) -> Result<(), F2Error> {
        if v.dim == self.dim() {
            Ok(())
        } else {
            Err(F2Error::DimensionMismatch { expected: self.dim(), found: v.dim })
        }
    }

    fn degenerate(&self) -> F2Error {
        F2Error::Degenerate { rank: self.rank(), dim: self.dim() }
    }

    pub fn bilinear(&self, u: &F2Vector, v: &F2Vector) -> Result<bool, F2Error> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.bilinear_unchecked(u, v))
    }

    fn bilinear_unchecked(&self, u: &F2Vector, v: &F2Vector) -> bool {
        u.support().fold(false, |acc, s| acc ^ dot_words(self.gram.row_words(s), &v.words))
    }

    /// `Q(v)` for `v = Σ_{s∈T} eₛ`: `|T|` plus the number of edges inside `T`, mod 2.
    pub fn quadratic(&self, v: &F2Vector) -> Result<bool, F2Error> {
        self.check(v)?;
        Ok(self.quadratic_unchecked(v))
    }

    fn quadratic_unchecked(&self, v: &F2Vector) -> bool {
        let inside: usize = v
            .support()
            .map(|s| {
                self.gram.row_words(s).iter().zip(&v.words).map(|(r, w)| (r & w).count_ones() as usize).sum::<usize>()
            })
            .sum();
        (v.weight() + inside / 2) % 2 == 1
    }

    /// Columns of `A⁻¹`: `dual[s]` is the unique vector with `B(dual[s], eₜ) = δₛₜ`.
    pub fn dual_basis(&self) -> Result<Vec<F2Vector>, F2Error> {
        let inv = self.gram.invert().inverse().ok_or_else(|| self.degenerate())?;
        Ok((0..self.dim()).map(|s| inv.column(s)).collect())
    }

    /// Symplectic basis built from the standard basis, and the Arf invariant.
    pub fn symplectic_basis_and_arf(&self) -> Result<(SymplecticBasis, bool), F2Error> {
        let basis = self.symplectic_basis_from((0..self.dim()).map(|s| F2Vector::unit(self.dim(), s)).collect())?;
        let arf = basis.arf(self);
        Ok((basis, arf))
    }

    /// Hyperbolic-pair extraction over an ordered basis of the space: take the
    /// first remaining vector as β, the first later vector pairing to 1 with it
    /// as γ, project the rest onto the orthogonal complement of ⟨β, γ⟩ and
    /// repeat.
    pub fn symplectic_basis_from(&self, basis: Vec<F2Vector>) -> Result<SymplecticBasis, F2Error> {
        let n = self.dim();
        if basis.len() != n {
            return Err(F2Error::DimensionMismatch { expected: n, found: basis.len() });
        }
        for v in &basis {
            self.check(v)?;
        }
        if F2Matrix::from_rows(&basis)?.rank() != n {
            return Err(F2Error::Inconsistent("starting vectors are not a basis".into()));
        }
        let mut rest = basis;
        let mut pairs = Vec::with_capacity(n / 2);
        while !rest.is_empty() {
            let beta = rest.remove(0);
            let Some(k) = rest.iter().position(|x| self.bilinear_unchecked(&beta, x)) else {
                // β is orthogonal to a complement of itself, so it lies in the radical.
                return Err(if n % 2 == 1 || !self.is_nondegenerate() {
                    self.degenerate()
                } else {
                    F2Error::Inconsistent("nondegenerate form left an unpaired vector".into())
                });
            };
            let gamma = rest.remove(k);
            for x in rest.iter_mut() {
                let with_gamma = self.bilinear_unchecked(x, &gamma);
                let with_beta = self.bilinear_unchecked(x, &beta);
                if with_gamma {
                    *x ^= &beta;
                }
                if with_beta {
                    *x ^= &gamma;
                }
            }
            pairs.push((beta, gamma));
        }
        Ok(SymplecticBasis { pairs })
    }

    /// A symplectic basis extracted from a uniformly random basis of the space.
    pub fn random_symplectic_basis(&self, rng: &mut impl Rng) -> Result<SymplecticBasis, F2Error> {
        let n = self.dim();
        let basis = loop {
            let rows: Vec<F2Vector> = (0..n)
                .map(|_| {
                    let words: Vec<u64> = (0..word_count(n)).map(|_| rng.gen()).collect();
                    F2Vector::from_words(n, &words)
                })
                .collect();
            if F2Matrix::from_rows(&rows)?.rank() == n {
                break rows;
            }
        };
        self.symplectic_basis_from(basis)
    }

    /// `(|Q⁻¹(0)|, |Q⁻¹(1)|)` by evaluating `Q` on all `2^dim` vectors.
    pub fn quadric_counts(&self, cap: usize) -> Result<(u64, u64), F2Error> {
        let n = self.dim();
        if n > cap || n >= 64 {
            return Err(F2Error::CapExceeded { dim: n, cap });
        }
        let rows = self.gram.mask_rows().expect("dim < 64");
        let ones = (0u64..1 << n).filter(|&v| quadratic_mask(&rows, v)).count() as u64;
        Ok(((1u64 << n) - ones, ones))
    }
}

/// `Q` on a vector given as a mask, with the Gram matrix given as row masks.
#[inline]
pub fn quadratic_mask(rows: &[u64], v: u64) -> bool {
    let inside: u32 = crate::graph::bits(v).map(|s| (rows[s] & v).count_ones()).sum();
    (v.count_ones() + inside / 2) & 1 == 1
}

/// `B(u, v)` on masks.
#[inline]
pub fn bilinear_mask(rows: &[u64], u: u64, v: u64) -> bool {
    crate::graph::bits(u).fold(0u32, |acc, s| acc ^ (rows[s] & v).count_ones()) & 1 == 1
}

/// Pairs `(βᵢ, γᵢ)` with `B(βᵢ, γⱼ) = δᵢⱼ` and all other pairings zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticBasis {
    pub pairs: Vec<(F2Vector, F2Vector)>,
}

impl SymplecticBasis {
    /// `Σ Q(βᵢ)Q(γᵢ)`.
    pub fn arf(&self, qs: &QuadraticSpace) -> bool {
        self.pairs
            .iter()
            .fold(false, |acc, (b, g)| acc ^ (qs.quadratic_unchecked(b) & qs.quadratic_unchecked(g)))
    }

    /// Checks the pairing relations and that the vectors span the space.
    pub fn verify(&self, qs: &QuadraticSpace) -> bool {
        let flat: Vec<&F2Vector> = self.pairs.iter().flat_map(|(b, g)| [b, g]).collect();
        if flat.len() != qs.dim() || flat.iter().any(|v| v.dim != qs.dim()) {
            return false;
        }
        for (i, (bi, gi)) in self.pairs.iter().enumerate() {
            for (j, (bj, gj)) in self.pairs.iter().enumerate() {
                if qs.bilinear_unchecked(bi, gj) != (i == j)
                    || qs.bilinear_unchecked(bi, bj)
                    || qs.bilinear_unchecked(gi, gj)
                {
                    return false;
                }
            }
        }
        let rows: Vec<F2Vector> = flat.into_iter().cloned().collect();
        F2Matrix::from_rows(&rows).map(|m| m.rank() == qs.dim()).unwrap_or(false)
    }
}
