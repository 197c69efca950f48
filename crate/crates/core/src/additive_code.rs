//! Additive `(n, 2^k)` codes over GF(4).
//!
//! A code is stored as a `k × n` GF(4) generator whose binary expansion has
//! rank `k`; the codewords are all GF(2)-combinations of its rows. Set-level
//! questions (membership, equality, duals) are answered in the binary
//! expansion, where coordinate `i` occupies bits `(2i, 2i+1) = (a, b)`.
//!
//! Both trace forms become binary bilinear forms on that expansion. Writing
//! `x = a₁ + ωb₁` and `y = a₂ + ωb₂`,
//!
//! ```text
//! Tr(x ȳ) = a₁b₂ ⊕ a₂b₁            (trace-Hermitian, symplectic)
//! Tr(x y) = a₁b₂ ⊕ a₂b₁ ⊕ b₁b₂     (trace-Euclidean)
//! ```
//!
//! A code meets its dual trivially exactly when the Gram matrix of the chosen
//! form on its generator rows is invertible over GF(2).

use std::fmt;

use rayon::prelude::*;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::f2linalg::{Echelon, F2Matrix, F4Matrix};
use crate::gf4::{F4Vector, Gf4};
use crate::DEFAULT_ENUMERATION_LIMIT;

/// GF(2)-valued trace inner products on GF(4)ⁿ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// `x ⋆ y = Σ Tr(x_i ȳ_i)`
    TraceHermitian,
    /// `x ⋄ y = Σ Tr(x_i y_i)`
    TraceEuclidean,
}

impl Form {
    pub const BOTH: [Form; 2] = [Form::TraceHermitian, Form::TraceEuclidean];

    /// Evaluates the form. Lengths must match.
    pub fn pair(self, x: &F4Vector, y: &F4Vector) -> Result<bool> {
        match self {
            Form::TraceHermitian => x.dot_trace_hermitian(y),
            Form::TraceEuclidean => x.dot_trace_euclidean(y),
        }
    }

    /// The binary row `r` with `r · expansion(y) = x ⟨form⟩ y` for all `y`.
    fn functional(self, x: &F4Vector) -> BitVec {
        let (a, b) = (x.a_plane(), x.b_plane());
        let on_b = match self {
            Form::TraceHermitian => a.clone(),
            Form::TraceEuclidean => a.xor(b),
        };
        F4Vector::from_planes(b.clone(), on_b).to_binary_expansion()
    }

    pub fn name(self) -> &'static str {
        match self {
            Form::TraceHermitian => "trace-Hermitian",
            Form::TraceEuclidean => "trace-Euclidean",
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(A_0, …, A_n)`, `A_i` = number of codewords of weight `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Least `i > 0` with `A_i > 0`.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(i, _)| i)
    }

    /// Nonzero `(weight, count)` pairs.
    pub fn nonzero(&self) -> Vec<(usize, u64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nonzero()
            .iter()
            .map(|(i, c)| format!("A{i}={c}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightDistribution({self})")
    }
}

/// An additive `(n, 2^k)` code over GF(4).
#[derive(Clone)]
pub struct AdditiveCode {
    gen: F4Matrix,
}

impl AdditiveCode {
    /// Code generated by `rows` over GF(2). Rows that are dependent on earlier
    /// ones are dropped, so the generator keeps the given order.
    pub fn from_generator(n: usize, rows: &[F4Vector]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a code of length {n}",
                r.len()
            )));
        }
        let mut basis: Vec<(usize, BitVec)> = Vec::new();
        let mut kept = Vec::new();
        for row in rows {
            let mut v = row.to_binary_expansion();
            for (p, b) in &basis {
                if v.get(*p) {
                    v.xor_assign(b);
                }
            }
            if let Some(p) = v.first_one() {
                basis.push((p, v));
                kept.push(row.clone());
            }
        }
        Ok(Self {
            gen: F4Matrix::from_rows(n, &kept)?,
        })
    }

    pub fn from_matrix(m: &F4Matrix) -> Self {
        Self::from_generator(m.ncols(), &m.row_vectors()).expect("rows come from m")
    }

    pub fn from_strs(rows: &[&str]) -> Self {
        Self::from_matrix(&F4Matrix::from_strs(rows))
    }

    /// The GF(4)-linear code spanned by `m`, as an additive code: rows of `m`
    /// followed by `ω` times each row.
    pub fn from_linear(m: &F4Matrix) -> Self {
        let rows = m.row_vectors();
        let mut all = rows.clone();
        all.extend(rows.iter().map(|r| r.scale(Gf4::OMEGA)));
        Self::from_generator(m.ncols(), &all).expect("rows come from m")
    }

    pub fn zero(n: usize) -> Self {
        Self {
            gen: F4Matrix::zeros(0, n),
        }
    }

    /// All of GF(4)ⁿ.
    pub fn full(n: usize) -> Self {
        Self::from_linear(&F4Matrix::identity(n))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.gen.ncols()
    }

    /// Binary dimension: the code has `2^k` words.
    #[inline]
    pub fn k(&self) -> usize {
        self.gen.nrows()
    }

    pub fn generator(&self) -> &F4Matrix {
        &self.gen
    }

    pub fn rows(&self) -> Vec<F4Vector> {
        self.gen.row_vectors()
    }

    /// RREF of the binary expansion; the canonical form of the code.
    pub fn echelon(&self) -> Echelon {
        self.gen.binary_expansion().rref()
    }

    pub fn contains(&self, v: &F4Vector) -> bool {
        v.len() == self.n() && self.echelon().contains(&v.to_binary_expansion())
    }

    /// Set equality.
    pub fn equals(&self, other: &AdditiveCode) -> bool {
        self.n() == other.n()
            && self.k() == other.k()
            && self.echelon().matrix == other.echelon().matrix
    }

    /// Whether every `ω·g` for a generator row `g` lies in the code.
    pub fn is_linear(&self) -> bool {
        let ech = self.echelon();
        self.rows()
            .iter()
            .all(|g| ech.contains(&g.scale(Gf4::OMEGA).to_binary_expansion()))
    }

    /// Dual with respect to `form`, an `(n, 2^{2n-k})` code.
    pub fn dual(&self, form: Form) -> AdditiveCode {
        let constraints: Vec<BitVec> = self.rows().iter().map(|g| form.functional(g)).collect();
        let m = F2Matrix::from_rows(2 * self.n(), constraints).expect("expansion length 2n");
        let basis: Vec<F4Vector> = m
            .nullspace()
            .iter()
            .map(F4Vector::from_binary_expansion)
            .collect();
        AdditiveCode::from_generator(self.n(), &basis).expect("kernel vectors have length n")
    }

    /// `k × k` Gram matrix of `form` on the generator rows.
    pub fn gram(&self, form: Form) -> F2Matrix {
        let rows = self.rows();
        let k = rows.len();
        let mut g = F2Matrix::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let v = form.pair(&rows[i], &rows[j]).expect("rows share length n");
                g.set(i, j, v);
                g.set(j, i, v);
            }
        }
        g
    }

    /// The Gram matrix as the GF(4) matrix sum `GḠᵀ + ḠGᵀ` (trace-Hermitian)
    /// or `GGᵀ + ḠḠᵀ` (trace-Euclidean), whose entries are all in GF(2).
    pub fn gram_from_matrix_products(&self, form: Form) -> F2Matrix {
        let g = &self.gen;
        let gb = g.conj();
        let sum = match form {
            Form::TraceHermitian => g
                .matmul(&gb.transpose())
                .and_then(|x| x.add(&gb.matmul(&g.transpose())?)),
            Form::TraceEuclidean => g
                .matmul(&g.transpose())
                .and_then(|x| x.add(&gb.matmul(&gb.transpose())?)),
        }
        .expect("square products");
        debug_assert!(sum.b_plane().is_zero(), "trace sums land in GF(2)");
        sum.a_plane().clone()
    }

    /// Whether `C ∩ C^⊥ = {0}` for `form`, via invertibility of the Gram matrix.
    pub fn is_acd(&self, form: Form) -> bool {
        self.gram(form).inverse().is_ok()
    }

    /// Orthogonal projection onto the code along its trace-Euclidean dual.
    pub fn projector(&self) -> Result<Projector> {
        let gram_inv = self
            .gram(Form::TraceEuclidean)
            .inverse()
            .map_err(|_| Error::NotAcd)?;
        Ok(Projector {
            rows: self.rows(),
            gram_inv,
        })
    }

    /// `T_C(v)`; see [`Projector`].
    pub fn projection(&self, v: &F4Vector) -> Result<F4Vector> {
        self.projector()?.apply(v)
    }

    fn check_limit(&self, limit: u32) -> Result<()> {
        if self.k() > limit as usize {
            return Err(Error::LimitExceeded {
                what: "binary dimension k",
                value: self.k(),
                limit: limit as usize,
            });
        }
        Ok(())
    }

    /// Codeword of Gray-code index `i`.
    fn gray_word(&self, rows: &[F4Vector], i: u64) -> F4Vector {
        let g = i ^ (i >> 1);
        let mut w = F4Vector::zeros(self.n());
        for (j, r) in rows.iter().enumerate() {
            if (g >> j) & 1 == 1 {
                w.add_assign(r);
            }
        }
        w
    }

    /// Visits codewords with Gray-code indices in `start..end`.
    fn for_each_in_range(&self, rows: &[F4Vector], start: u64, end: u64, mut f: impl FnMut(&F4Vector)) {
        if start >= end {
            return;
        }
        let mut cur = self.gray_word(rows, start);
        f(&cur);
        for i in start + 1..end {
            cur.add_assign(&rows[i.trailing_zeros() as usize]);
            f(&cur);
        }
    }

    /// Visits all `2^k` codewords in Gray-code order.
    pub fn for_each_codeword(&self, f: impl FnMut(&F4Vector)) {
        let rows = self.rows();
        self.for_each_in_range(&rows, 0, 1u64 << self.k(), f);
    }

    pub fn codewords(&self, limit: u32) -> Result<Vec<F4Vector>> {
        self.check_limit(limit)?;
        let mut out = Vec::with_capacity(1 << self.k());
        self.for_each_codeword(|c| out.push(c.clone()));
        Ok(out)
    }

    /// Exact weight distribution with the default enumeration limit.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.weight_distribution_with_limit(DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn weight_distribution_with_limit(&self, limit: u32) -> Result<WeightDistribution> {
        self.check_limit(limit)?;
        let chunks = if self.k() >= 16 { 64 } else { 1 };
        Ok(self.weight_distribution_chunked(chunks))
    }

    /// Weight distribution with the index range split into `chunks` pieces
    /// counted in parallel. The result does not depend on `chunks`.
    pub fn weight_distribution_chunked(&self, chunks: usize) -> WeightDistribution {
        let rows = self.rows();
        let total = 1u64 << self.k();
        let chunks = (chunks.max(1) as u64).min(total);
        let step = total.div_ceil(chunks);
        let n = self.n();
        let counts = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut local = vec![0u64; n + 1];
                let start = c * step;
                let end = (start + step).min(total);
                self.for_each_in_range(&rows, start, end, |w| local[w.weight()] += 1);
                local
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            );
        WeightDistribution::new(counts)
    }

    /// Minimum distance; `None` for the zero code.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        Ok(self.weight_distribution()?.min_distance())
    }

    /// Whether every nonzero codeword has weight at least `d`. Stops at the
    /// first lighter codeword.
    pub fn has_min_distance_at_least(&self, d: usize, limit: u32) -> Result<bool> {
        self.check_limit(limit)?;
        let rows = self.rows();
        let mut cur = F4Vector::zeros(self.n());
        for i in 1u64..(1u64 << self.k()) {
            cur.add_assign(&rows[i.trailing_zeros() as usize]);
            if cur.weight() < d {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The code with coordinate `i` moved to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> AdditiveCode {
        let rows: Vec<F4Vector> = self.rows().iter().map(|r| r.permute(perm)).collect();
        AdditiveCode {
            gen: F4Matrix::from_rows(self.n(), &rows).expect("length preserved"),
        }
    }

    /// The code with column `j` multiplied by `scales[j]`.
    pub fn scale_columns(&self, scales: &[Gf4]) -> Result<AdditiveCode> {
        if scales.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "{} scales for a code of length {}",
                scales.len(),
                self.n()
            )));
        }
        let rows: Vec<F4Vector> = self.rows().iter().map(|r| r.scale_columns(scales)).collect();
        AdditiveCode::from_generator(self.n(), &rows)
    }

    /// Order of the permutation automorphism group, by brute force over all
    /// `n!` coordinate permutations (pruned by a per-coordinate weight
    /// profile). Fails with [`Error::LimitExceeded`] when `n > limit`.
    pub fn paut_order(&self, limit: usize) -> Result<u64> {
        let n = self.n();
        if n > limit {
            return Err(Error::LimitExceeded {
                what: "length n for permutation brute force",
                value: n,
                limit,
            });
        }
        // profile[i][w] = number of codewords of weight w that are nonzero at i
        let mut profile = vec![vec![0u64; n + 1]; n];
        self.for_each_codeword(|c| {
            let w = c.weight();
            for (i, p) in profile.iter_mut().enumerate() {
                if !c.get(i).is_zero() {
                    p[w] += 1;
                }
            }
        });
        let ech = self.echelon();
        let rows = self.rows();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut count = 0u64;
        paut_search(0, &profile, &mut perm, &mut used, &mut |perm| {
            let fixes = rows
                .iter()
                .all(|r| ech.contains(&r.permute(perm).to_binary_expansion()));
            if fixes {
                count += 1;
            }
        });
        Ok(count)
    }
}

/// Assigns images to coordinates `i..` in lexicographic order, only along
/// profile-compatible branches.
fn paut_search(
    i: usize,
    profile: &[Vec<u64>],
    perm: &mut [usize],
    used: &mut [bool],
    leaf: &mut dyn FnMut(&[usize]),
) {
    let n = perm.len();
    if i == n {
        leaf(perm);
        return;
    }
    for target in 0..n {
        if used[target] || profile[i] != profile[target] {
            continue;
        }
        used[target] = true;
        perm[i] = target;
        paut_search(i + 1, profile, perm, used, leaf);
        used[target] = false;
    }
}

/// The map `T_C(v) = Tr(vGᵀ)·(GGᵀ + ḠḠᵀ)⁻¹·G` for a trace-Euclidean ACD code,
/// where `Tr(vGᵀ)` is the binary vector `(v ⋄ g_1, …, v ⋄ g_k)`.
#[derive(Clone, Debug)]
pub struct Projector {
    rows: Vec<F4Vector>,
    gram_inv: F2Matrix,
}

impl Projector {
    pub fn apply(&self, v: &F4Vector) -> Result<F4Vector> {
        let n = self.rows.first().map_or(v.len(), F4Vector::len);
        if v.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} projected onto a code of length {n}",
                v.len()
            )));
        }
        let pairings = self
            .rows
            .iter()
            .map(|g| v.dot_trace_euclidean(g))
            .collect::<Result<Vec<bool>>>()?;
        let coeffs = self.gram_inv.left_mul_vec(&BitVec::from_bools(pairings));
        let mut out = F4Vector::zeros(v.len());
        for j in coeffs.iter_ones() {
            out.add_assign(&self.rows[j]);
        }
        Ok(out)
    }
}

impl fmt::Display for AdditiveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gen)
    }
}

impl fmt::Debug for AdditiveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdditiveCode (n={}, 2^{}) {:?}", self.n(), self.k(), self.gen)
    }
}
