//! Binary linear codes: duals, LCD and self-duality, complements, distance.

use std::fmt;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::f2linalg::{Echelon, F2Matrix};
use crate::DEFAULT_ENUMERATION_LIMIT;

/// A binary linear `[n, k]` code given by a `k × n` generator of full row rank.
#[derive(Clone)]
pub struct BinaryCode {
    gen: F2Matrix,
}

impl BinaryCode {
    /// Code spanned by `rows`; dependent rows are dropped, keeping the first
    /// independent subset in the given order.
    pub fn from_rows(n: usize, rows: Vec<BitVec>) -> Result<Self> {
        let m = F2Matrix::from_rows(n, rows)?;
        Ok(Self::from_generator(&m))
    }

    pub fn from_generator(m: &F2Matrix) -> Self {
        let mut kept: Vec<BitVec> = Vec::new();
        let mut basis: Vec<(usize, BitVec)> = Vec::new();
        for row in m.rows() {
            let mut v = row.clone();
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
        Self {
            gen: F2Matrix::from_rows(m.ncols(), kept).expect("rows come from m"),
        }
    }

    pub fn from_strs(rows: &[&str]) -> Self {
        Self::from_generator(&F2Matrix::from_strs(rows))
    }

    pub fn zero(n: usize) -> Self {
        Self {
            gen: F2Matrix::zeros(0, n),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            gen: F2Matrix::identity(n),
        }
    }

    pub fn repetition(n: usize) -> Self {
        let mut all = BitVec::zeros(n);
        for i in 0..n {
            all.set(i, true);
        }
        Self::from_rows(n, vec![all]).expect("length n")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.gen.ncols()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.gen.nrows()
    }

    pub fn generator(&self) -> &F2Matrix {
        &self.gen
    }

    pub fn echelon(&self) -> Echelon {
        self.gen.rref()
    }

    /// Membership by rank comparison.
    pub fn contains(&self, v: &BitVec) -> bool {
        v.len() == self.n() && self.echelon().contains(v)
    }

    /// Set equality via canonical RREF.
    pub fn equals(&self, other: &BinaryCode) -> bool {
        self.n() == other.n() && self.echelon().matrix == other.echelon().matrix
    }

    /// `C^⊥` under the standard dot product.
    pub fn dual(&self) -> BinaryCode {
        BinaryCode {
            gen: F2Matrix::from_rows(self.n(), self.gen.nullspace()).expect("kernel vectors have length n"),
        }
    }

    /// `G·Gᵀ`.
    pub fn gram(&self) -> F2Matrix {
        self.gen.mul(&self.gen.transpose()).expect("square product")
    }

    /// LCD iff `G·Gᵀ` is invertible.
    pub fn is_lcd(&self) -> bool {
        self.gram().inverse().is_ok()
    }

    pub fn is_self_dual(&self) -> bool {
        self.n() == 2 * self.k() && self.gram().is_zero()
    }

    /// A complement `D` with `C ⊕ D = F₂ⁿ`, spanned by the unit vectors of the
    /// non-pivot columns of `C`'s RREF, in ascending order.
    pub fn complement(&self) -> BinaryCode {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.n()];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.n())
            .filter(|&j| !is_pivot[j])
            .map(|j| BitVec::unit(self.n(), j))
            .collect();
        BinaryCode {
            gen: F2Matrix::from_rows(self.n(), rows).expect("unit vectors of length n"),
        }
    }

    /// `C + D`.
    pub fn sum(&self, other: &BinaryCode) -> Result<BinaryCode> {
        Ok(BinaryCode::from_generator(&self.gen.vstack(&other.gen)?))
    }

    /// Whether every generator row shifted cyclically by one stays in the code.
    pub fn is_cyclic(&self) -> bool {
        let n = self.n();
        let ech = self.echelon();
        self.gen.rows().iter().all(|r| {
            let mut shifted = BitVec::zeros(n);
            for i in r.iter_ones() {
                shifted.set((i + 1) % n, true);
            }
            ech.contains(&shifted)
        })
    }

    fn check_limit(&self, limit: u32) -> Result<()> {
        if self.k() > limit as usize {
            return Err(Error::LimitExceeded {
                what: "dimension k",
                value: self.k(),
                limit: limit as usize,
            });
        }
        Ok(())
    }

    /// Visits every codeword once in Gray-code order, starting from zero.
    pub fn for_each_codeword(&self, mut f: impl FnMut(&BitVec)) {
        let mut cur = BitVec::zeros(self.n());
        f(&cur);
        for i in 1u64..(1u64 << self.k()) {
            cur.xor_assign(self.gen.row(i.trailing_zeros() as usize));
            f(&cur);
        }
    }

    /// All `2^k` codewords. Subject to `limit` on k.
    pub fn codewords(&self, limit: u32) -> Result<Vec<BitVec>> {
        self.check_limit(limit)?;
        let mut out = Vec::with_capacity(1 << self.k());
        self.for_each_codeword(|c| out.push(c.clone()));
        Ok(out)
    }

    /// `(A_0, …, A_n)` by exhaustive enumeration.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        self.check_limit(DEFAULT_ENUMERATION_LIMIT)?;
        let mut counts = vec![0u64; self.n() + 1];
        self.for_each_codeword(|c| counts[c.count_ones()] += 1);
        Ok(counts)
    }

    /// Minimum nonzero weight with the default enumeration limit; `None` for the zero code.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        self.min_distance_with_limit(DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn min_distance_with_limit(&self, limit: u32) -> Result<Option<usize>> {
        self.check_limit(limit)?;
        let mut best: Option<usize> = None;
        let mut first = true;
        self.for_each_codeword(|c| {
            if first {
                first = false;
                return;
            }
            let w = c.count_ones();
            best = Some(best.map_or(w, |b| b.min(w)));
        });
        Ok(best)
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gen)
    }
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryCode [{}, {}] {:?}", self.n(), self.k(), self.gen)
    }
}
