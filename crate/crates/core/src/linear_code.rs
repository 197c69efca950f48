//! GF(4)-linear codes with the Hermitian and Euclidean inner products.
//!
//! Duals here are computed as kernels over GF(4) directly, independently of
//! the binary-expansion machinery in [`crate::additive_code`].

use std::fmt;

use crate::additive_code::AdditiveCode;
use crate::error::{Error, Result};
use crate::f2linalg::F4Matrix;
use crate::gf4::F4Vector;

/// GF(4)-valued inner products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinearForm {
    /// `Σ x_i ȳ_i`
    Hermitian,
    /// `Σ x_i y_i`
    Euclidean,
}

impl LinearForm {
    pub fn name(self) -> &'static str {
        match self {
            LinearForm::Hermitian => "Hermitian",
            LinearForm::Euclidean => "Euclidean",
        }
    }
}

/// A linear `[n, r]` code over GF(4).
#[derive(Clone)]
pub struct LinearCodeF4 {
    gen: F4Matrix,
}

impl LinearCodeF4 {
    /// Span of `rows` over GF(4); rows dependent on earlier ones are dropped.
    pub fn from_generator(n: usize, rows: &[F4Vector]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a code of length {n}",
                r.len()
            )));
        }
        let mut kept: Vec<F4Vector> = Vec::new();
        for row in rows {
            let mut trial = kept.clone();
            trial.push(row.clone());
            if F4Matrix::from_rows(n, &trial)?.rank_f4() == trial.len() {
                kept = trial;
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

    pub fn n(&self) -> usize {
        self.gen.ncols()
    }

    /// Dimension over GF(4).
    pub fn dim(&self) -> usize {
        self.gen.nrows()
    }

    pub fn generator(&self) -> &F4Matrix {
        &self.gen
    }

    /// The same code viewed as an additive `(n, 2^{2r})` code.
    pub fn to_additive(&self) -> AdditiveCode {
        AdditiveCode::from_linear(&self.gen)
    }

    /// `G·Gᵀ` or `G·Ḡᵀ`.
    pub fn gram(&self, form: LinearForm) -> F4Matrix {
        let rhs = match form {
            LinearForm::Hermitian => self.gen.conj_transpose(),
            LinearForm::Euclidean => self.gen.transpose(),
        };
        self.gen.matmul(&rhs).expect("square product")
    }

    /// LCD iff the Gram matrix is invertible over GF(4).
    pub fn is_lcd(&self, form: LinearForm) -> bool {
        self.gram(form).rank_f4() == self.dim()
    }

    /// `{u : ⟨u, v⟩ = 0 for all v ∈ C}`, as the GF(4) kernel of `G` (Euclidean)
    /// or `Ḡ` (Hermitian).
    pub fn dual(&self, form: LinearForm) -> LinearCodeF4 {
        let m = match form {
            LinearForm::Hermitian => self.gen.conj(),
            LinearForm::Euclidean => self.gen.clone(),
        };
        let basis = m.nullspace_f4();
        LinearCodeF4 {
            gen: F4Matrix::from_rows(self.n(), &basis).expect("kernel vectors have length n"),
        }
    }

    pub fn min_distance(&self) -> Result<Option<usize>> {
        self.to_additive().min_distance()
    }
}

impl fmt::Display for LinearCodeF4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gen)
    }
}

impl fmt::Debug for LinearCodeF4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCodeF4 [{}, {}] {:?}", self.n(), self.dim(), self.gen)
    }
}
