//! Arithmetic in GF(4) = {0, 1, ω, ω²} with ω² = ω + 1.
//!
//! An element `a + ωb` (a, b ∈ GF(2)) is encoded as the integer `a + 2b`:
//!
//! | code | element | symbol |
//! |------|---------|--------|
//! | 0    | 0       | `0`    |
//! | 1    | 1       | `1`    |
//! | 2    | ω       | `w`    |
//! | 3    | ω²      | `W`    |
//!
//! With this encoding addition is XOR of codes, conjugation is
//! `(a, b) ↦ (a ⊕ b, b)` and the trace is the `b` bit.
//!
//! Vectors are bit-sliced: [`F4Vector`] keeps the `a` bits and `b` bits of
//! all coordinates in two separate [`BitVec`] planes.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::bits::BitVec;
use crate::error::Error;

/// An element of GF(4).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

const MUL_TABLE: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    /// ω
    pub const OMEGA: Gf4 = Gf4(2);
    /// ω² = ω + 1 = ω̄
    pub const OMEGA2: Gf4 = Gf4(3);

    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];
    pub const UNITS: [Gf4; 3] = [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];

    /// Element with code `code & 3`.
    #[inline]
    pub const fn from_code(code: u8) -> Gf4 {
        Gf4(code & 3)
    }

    /// Element `a + ωb`.
    #[inline]
    pub const fn from_bits(a: bool, b: bool) -> Gf4 {
        Gf4(a as u8 | ((b as u8) << 1))
    }

    #[inline]
    pub const fn code(self) -> u8 {
        self.0
    }

    /// The `1`-coordinate `a` of `a + ωb`.
    #[inline]
    pub const fn a(self) -> bool {
        self.0 & 1 == 1
    }

    /// The `ω`-coordinate `b` of `a + ωb`.
    #[inline]
    pub const fn b(self) -> bool {
        self.0 & 2 == 2
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn add(self, other: Gf4) -> Gf4 {
        Gf4(self.0 ^ other.0)
    }

    #[inline]
    pub const fn mul(self, other: Gf4) -> Gf4 {
        Gf4(MUL_TABLE[self.0 as usize][other.0 as usize])
    }

    /// Frobenius conjugate `x²`.
    #[inline]
    pub const fn conj(self) -> Gf4 {
        let a = self.0 & 1;
        let b = (self.0 >> 1) & 1;
        Gf4((a ^ b) | (b << 1))
    }

    /// `Tr(x) = x + x²`, which lands in GF(2).
    #[inline]
    pub const fn trace(self) -> bool {
        self.b()
    }

    pub const fn inv(self) -> Option<Gf4> {
        match self.0 {
            0 => None,
            1 => Some(Gf4::ONE),
            2 => Some(Gf4::OMEGA2),
            _ => Some(Gf4::OMEGA),
        }
    }

    pub const fn symbol(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }

    pub const fn from_symbol(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::OMEGA),
            'W' => Some(Gf4::OMEGA2),
            _ => None,
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4::add(self, rhs)
    }
}

impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        *self = *self + rhs;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4::mul(self, rhs)
    }
}

impl std::iter::Sum for Gf4 {
    fn sum<I: Iterator<Item = Gf4>>(iter: I) -> Gf4 {
        iter.fold(Gf4::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Gf4 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Gf4, Error> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Gf4::from_symbol(c)
                .ok_or_else(|| Error::InvalidInput(format!("unknown GF(4) symbol {c:?}"))),
            _ => Err(Error::InvalidInput(format!("unknown GF(4) symbol {s:?}"))),
        }
    }
}

/// A vector in GF(4)ⁿ stored as two bit planes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F4Vector {
    a: BitVec,
    b: BitVec,
}

impl F4Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            a: BitVec::zeros(len),
            b: BitVec::zeros(len),
        }
    }

    pub fn from_planes(a: BitVec, b: BitVec) -> Self {
        assert_eq!(a.len(), b.len(), "bit planes must have equal length");
        Self { a, b }
    }

    pub fn from_elements(elems: &[Gf4]) -> Self {
        let mut v = Self::zeros(elems.len());
        for (i, &x) in elems.iter().enumerate() {
            v.set(i, x);
        }
        v
    }

    /// Embeds a binary vector via GF(2) ⊂ GF(4).
    pub fn from_binary(bits: &BitVec) -> Self {
        Self {
            a: bits.clone(),
            b: BitVec::zeros(bits.len()),
        }
    }

    /// Parses a string of symbols `0 1 w W`; whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let elems = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                Gf4::from_symbol(c)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown GF(4) symbol {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_elements(&elems))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.a.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Plane of `1`-coordinates.
    #[inline]
    pub fn a_plane(&self) -> &BitVec {
        &self.a
    }

    /// Plane of `ω`-coordinates; also the entrywise trace.
    #[inline]
    pub fn b_plane(&self) -> &BitVec {
        &self.b
    }

    #[inline]
    pub fn get(&self, i: usize) -> Gf4 {
        Gf4::from_bits(self.a.get(i), self.b.get(i))
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: Gf4) {
        self.a.set(i, x.a());
        self.b.set(i, x.b());
    }

    pub fn elements(&self) -> Vec<Gf4> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    #[inline]
    pub fn add_assign(&mut self, other: &F4Vector) {
        self.a.xor_assign(&other.a);
        self.b.xor_assign(&other.b);
    }

    pub fn add(&self, other: &F4Vector) -> F4Vector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Scalar multiple `s·v`.
    pub fn scale(&self, s: Gf4) -> F4Vector {
        // ω(a + ωb) = b + ω(a + b)
        let times_omega = |v: &F4Vector| F4Vector {
            a: v.b.clone(),
            b: v.a.xor(&v.b),
        };
        match s.code() {
            0 => F4Vector::zeros(self.len()),
            1 => self.clone(),
            2 => times_omega(self),
            _ => times_omega(&times_omega(self)),
        }
    }

    /// Coordinatewise product `(u_i s_i)`.
    pub fn scale_columns(&self, scales: &[Gf4]) -> F4Vector {
        assert_eq!(scales.len(), self.len());
        let mut out = F4Vector::zeros(self.len());
        for (i, &s) in scales.iter().enumerate() {
            out.set(i, self.get(i) * s);
        }
        out
    }

    /// Coordinatewise conjugate.
    pub fn conj(&self) -> F4Vector {
        F4Vector {
            a: self.a.xor(&self.b),
            b: self.b.clone(),
        }
    }

    /// Coordinatewise trace.
    pub fn trace(&self) -> BitVec {
        self.b.clone()
    }

    /// Number of nonzero coordinates.
    #[inline]
    pub fn weight(&self) -> usize {
        self.a
            .words()
            .iter()
            .zip(self.b.words())
            .map(|(x, y)| (x | y).count_ones() as usize)
            .sum()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Returns the coordinates permuted so that output coordinate `perm[i]`
    /// holds input coordinate `i`.
    pub fn permute(&self, perm: &[usize]) -> F4Vector {
        assert_eq!(perm.len(), self.len());
        let mut out = F4Vector::zeros(self.len());
        for (i, &p) in perm.iter().enumerate() {
            out.set(p, self.get(i));
        }
        out
    }

    /// Interleaved binary expansion: coordinate `i` becomes bits `(2i, 2i+1) = (a, b)`.
    pub fn to_binary_expansion(&self) -> BitVec {
        let n = self.len();
        let mut out = BitVec::zeros(2 * n);
        for i in self.a.iter_ones() {
            out.set(2 * i, true);
        }
        for i in self.b.iter_ones() {
            out.set(2 * i + 1, true);
        }
        out
    }

    /// Inverse of [`F4Vector::to_binary_expansion`]. `bits.len()` must be even.
    pub fn from_binary_expansion(bits: &BitVec) -> F4Vector {
        assert!(bits.len().is_multiple_of(2), "binary expansion must have even length");
        let n = bits.len() / 2;
        let mut out = F4Vector::zeros(n);
        for j in bits.iter_ones() {
            if j % 2 == 0 {
                out.a.set(j / 2, true);
            } else {
                out.b.set(j / 2, true);
            }
        }
        out
    }

    /// Euclidean product `Σ x_i y_i` in GF(4).
    pub fn dot_euclidean(&self, other: &F4Vector) -> Result<Gf4, Error> {
        check_len(self, other)?;
        // (a1 + ωb1)(a2 + ωb2) = (a1a2 + b1b2) + ω(a1b2 + a2b1 + b1b2)
        let (a1, b1, a2, b2) = (&self.a, &self.b, &other.a, &other.b);
        let a = a1.dot(a2) ^ b1.dot(b2);
        let b = a1.dot(b2) ^ a2.dot(b1) ^ b1.dot(b2);
        Ok(Gf4::from_bits(a, b))
    }

    /// Hermitian product `Σ x_i ȳ_i` in GF(4).
    pub fn dot_hermitian(&self, other: &F4Vector) -> Result<Gf4, Error> {
        check_len(self, other)?;
        self.dot_euclidean(&other.conj())
    }

    /// Trace-Hermitian product `Σ Tr(x_i ȳ_i)`.
    pub fn dot_trace_hermitian(&self, other: &F4Vector) -> Result<bool, Error> {
        check_len(self, other)?;
        // Tr((a1 + ωb1)·conj(a2 + ωb2)) = a1b2 + a2b1
        Ok(self.a.dot(&other.b) ^ other.a.dot(&self.b))
    }

    /// Trace-Euclidean product `Σ Tr(x_i y_i)`.
    pub fn dot_trace_euclidean(&self, other: &F4Vector) -> Result<bool, Error> {
        check_len(self, other)?;
        // Tr((a1 + ωb1)(a2 + ωb2)) = a1b2 + a2b1 + b1b2
        Ok(self.a.dot(&other.b) ^ other.a.dot(&self.b) ^ self.b.dot(&other.b))
    }
}

fn check_len(x: &F4Vector, y: &F4Vector) -> Result<(), Error> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "vector lengths {} and {} differ",
            x.len(),
            y.len()
        )));
    }
    Ok(())
}

impl fmt::Display for F4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for F4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F4Vector({self})")
    }
}
