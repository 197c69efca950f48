//! Dense linear algebra over GF(2) and GF(4).
//!
//! [`F2Matrix`] is row-major with each row a packed [`BitVec`]. [`F4Matrix`]
//! is a pair of `F2Matrix` bit planes (`a` and `b` of `a + ωb`). Empty
//! shapes (0×0, k×0, 0×n) are legal everywhere; the 0×0 matrix is
//! invertible.

use std::fmt;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::gf4::{F4Vector, Gf4};

/// A binary matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<BitVec>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// Nonzero rows of the RREF, one per pivot.
    pub matrix: F2Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the echelon rows; the result is zero iff `v` lies in the row space.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        for (row, &p) in self.matrix.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| BitVec::unit(n, i)).collect(),
        }
    }

    /// Builds a matrix from rows of length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(Self { cols, rows })
    }

    /// Parses rows of `0`/`1` characters. Panics on malformed input; meant for literals.
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                BitVec::from_bools(r.chars().map(|c| match c {
                    '0' => false,
                    '1' => true,
                    _ => panic!("bad bit {c:?}"),
                }))
            })
            .collect();
        Self { cols, rows }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.rows[i].set(j, v)
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter_ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    pub fn add(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.nrows() != other.nrows() || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.nrows(),
                self.cols,
                other.nrows(),
                other.cols
            )));
        }
        Ok(F2Matrix {
            cols: self.cols,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.xor(b)).collect(),
        })
    }

    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.cols,
                other.nrows(),
                other.cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| other.left_mul_vec(r))
            .collect();
        Ok(F2Matrix {
            cols: other.cols,
            rows,
        })
    }

    /// Row vector times matrix: `v·M`.
    pub fn left_mul_vec(&self, v: &BitVec) -> BitVec {
        debug_assert_eq!(v.len(), self.nrows());
        let mut out = BitVec::zeros(self.cols);
        for i in v.iter_ones() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }

    /// Matrix times column vector: `M·vᵀ`.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        debug_assert_eq!(v.len(), self.cols);
        BitVec::from_bools(self.rows.iter().map(|r| r.dot(v)))
    }

    /// `self` stacked on top of `other`.
    pub fn vstack(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(F2Matrix {
            cols: self.cols,
            rows,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.nrows().min(self.cols)).all(|i| !self.get(i, i))
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Echelon {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Echelon {
            matrix: F2Matrix {
                cols: self.cols,
                rows,
            },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        // Forward elimination only; cheaper than a full RREF.
        let mut basis: Vec<(usize, BitVec)> = Vec::new();
        for row in &self.rows {
            let mut v = row.clone();
            for (p, b) in &basis {
                if v.get(*p) {
                    v.xor_assign(b);
                }
            }
            if let Some(p) = v.first_one() {
                basis.push((p, v));
            }
        }
        basis.len()
    }

    pub fn inverse(&self) -> Result<F2Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.nrows(),
                self.cols
            )));
        }
        let n = self.cols;
        let mut left = self.rows.clone();
        let mut right = F2Matrix::identity(n).rows;
        for c in 0..n {
            let p = (c..n).find(|&i| left[i].get(c)).ok_or(Error::NotInvertible)?;
            left.swap(c, p);
            right.swap(c, p);
            let (lp, rp) = (left[c].clone(), right[c].clone());
            for i in 0..n {
                if i != c && left[i].get(c) {
                    left[i].xor_assign(&lp);
                    right[i].xor_assign(&rp);
                }
            }
        }
        Ok(F2Matrix {
            cols: n,
            rows: right,
        })
    }

    /// Basis of `{x : M·xᵀ = 0}`, one vector per free column of the RREF in
    /// ascending column order.
    pub fn nullspace(&self) -> Vec<BitVec> {
        let ech = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitVec::unit(self.cols, f);
                for (row, &p) in ech.matrix.rows.iter().zip(&ech.pivots) {
                    if row.get(f) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }
}

impl fmt::Display for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Matrix {}x{} [", self.nrows(), self.cols)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

/// GF(2) rank.
pub fn rank2(m: &F2Matrix) -> usize {
    m.rank()
}

/// GF(2) inverse, or [`Error::NotInvertible`].
pub fn invert2(m: &F2Matrix) -> Result<F2Matrix> {
    m.inverse()
}

/// Basis of the right kernel over GF(2).
pub fn nullspace2(m: &F2Matrix) -> Vec<BitVec> {
    m.nullspace()
}

/// A matrix over GF(4), stored as two bit planes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F4Matrix {
    a: F2Matrix,
    b: F2Matrix,
}

impl F4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            a: F2Matrix::zeros(rows, cols),
            b: F2Matrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            a: F2Matrix::identity(n),
            b: F2Matrix::zeros(n, n),
        }
    }

    /// Builds a matrix from rows of length `cols`.
    pub fn from_rows(cols: usize, rows: &[F4Vector]) -> Result<Self> {
        let a = rows.iter().map(|r| r.a_plane().clone()).collect();
        let b = rows.iter().map(|r| r.b_plane().clone()).collect();
        Ok(Self {
            a: F2Matrix::from_rows(cols, a)?,
            b: F2Matrix::from_rows(cols, b)?,
        })
    }

    /// Parses rows of symbols `0 1 w W`. Panics on malformed input; meant for literals.
    pub fn from_strs(rows: &[&str]) -> Self {
        let vecs: Vec<F4Vector> = rows
            .iter()
            .map(|r| F4Vector::parse(r).expect("bad GF(4) literal"))
            .collect();
        let cols = vecs.first().map_or(0, F4Vector::len);
        Self::from_rows(cols, &vecs).expect("ragged GF(4) literal")
    }

    /// GF(2) ⊂ GF(4) embedding.
    pub fn from_binary(m: &F2Matrix) -> Self {
        Self {
            a: m.clone(),
            b: F2Matrix::zeros(m.nrows(), m.ncols()),
        }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.a.nrows()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.a.ncols()
    }

    pub fn a_plane(&self) -> &F2Matrix {
        &self.a
    }

    pub fn b_plane(&self) -> &F2Matrix {
        &self.b
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        Gf4::from_bits(self.a.get(i, j), self.b.get(i, j))
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Gf4) {
        self.a.set(i, j, x.a());
        self.b.set(i, j, x.b());
    }

    pub fn row(&self, i: usize) -> F4Vector {
        F4Vector::from_planes(self.a.row(i).clone(), self.b.row(i).clone())
    }

    pub fn row_vectors(&self) -> Vec<F4Vector> {
        (0..self.nrows()).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> F4Matrix {
        F4Matrix {
            a: self.a.transpose(),
            b: self.b.transpose(),
        }
    }

    /// Entrywise conjugate Ḡ.
    pub fn conj(&self) -> F4Matrix {
        F4Matrix {
            a: self.a.add(&self.b).expect("planes share a shape"),
            b: self.b.clone(),
        }
    }

    /// Ḡᵀ.
    pub fn conj_transpose(&self) -> F4Matrix {
        self.conj().transpose()
    }

    pub fn add(&self, other: &F4Matrix) -> Result<F4Matrix> {
        Ok(F4Matrix {
            a: self.a.add(&other.a)?,
            b: self.b.add(&other.b)?,
        })
    }

    pub fn scale(&self, s: Gf4) -> F4Matrix {
        let rows: Vec<F4Vector> = self.row_vectors().iter().map(|r| r.scale(s)).collect();
        F4Matrix::from_rows(self.ncols(), &rows).expect("shape preserved")
    }

    pub fn matmul(&self, other: &F4Matrix) -> Result<F4Matrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let lhs = self.row_vectors();
        let rhs = other.transpose().row_vectors();
        let mut out = F4Matrix::zeros(self.nrows(), other.ncols());
        for (i, r) in lhs.iter().enumerate() {
            for (j, c) in rhs.iter().enumerate() {
                out.set(i, j, r.dot_euclidean(c)?);
            }
        }
        Ok(out)
    }

    /// Each entry replaced by its trace.
    pub fn entrywise_trace(&self) -> F2Matrix {
        self.b.clone()
    }

    /// The `rows × 2·cols` binary matrix with coordinate `j` at columns `(2j, 2j+1)`.
    pub fn binary_expansion(&self) -> F2Matrix {
        let rows = (0..self.nrows())
            .map(|i| self.row(i).to_binary_expansion())
            .collect();
        F2Matrix {
            cols: 2 * self.ncols(),
            rows,
        }
    }

    /// Rank over GF(2) of the binary expansion.
    pub fn two_rank(&self) -> usize {
        self.binary_expansion().rank()
    }

    /// Row echelon reduction over GF(4). Returns reduced rows and pivots.
    fn rref_f4(&self) -> (Vec<Vec<Gf4>>, Vec<usize>) {
        let (m, n) = (self.nrows(), self.ncols());
        let mut rows: Vec<Vec<Gf4>> = (0..m).map(|i| self.row(i).elements()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv().expect("pivot is nonzero");
            for x in rows[r].iter_mut() {
                *x = *x * inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                let f = row[c];
                if i != r && !f.is_zero() {
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x += f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (rows, pivots)
    }

    /// Rank over GF(4).
    pub fn rank_f4(&self) -> usize {
        self.rref_f4().1.len()
    }

    /// Basis of `{x ∈ GF(4)ⁿ : M·xᵀ = 0}`.
    pub fn nullspace_f4(&self) -> Vec<F4Vector> {
        let n = self.ncols();
        let (rows, pivots) = self.rref_f4();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Gf4::ZERO; n];
                x[f] = Gf4::ONE;
                for (row, &p) in rows.iter().zip(&pivots) {
                    // characteristic 2: x_p = -row[f] = row[f]
                    x[p] = row[f];
                }
                F4Vector::from_elements(&x)
            })
            .collect()
    }
}

impl fmt::Display for F4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for F4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F4Matrix {}x{} [", self.nrows(), self.ncols())?;
        for i in 0..self.nrows() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        f.write_str("]")
    }
}

/// Matrix product over GF(4).
pub fn f4_matmul(a: &F4Matrix, b: &F4Matrix) -> Result<F4Matrix> {
    a.matmul(b)
}

/// Transpose with every entry conjugated.
pub fn conj_transpose(m: &F4Matrix) -> F4Matrix {
    m.conj_transpose()
}

/// Entrywise trace to GF(2).
pub fn entrywise_trace(m: &F4Matrix) -> F2Matrix {
    m.entrywise_trace()
}
