//! Additive codes over GF(4) built from binary codes, and the
//! binary ↔ quaternary correspondences between `[2n, k]` binary codes and
//! `(n, 2^k)` additive codes.
//!
//! | construction                 | input                        | ACD under        |
//! |------------------------------|------------------------------|------------------|
//! | [`lift_binary_lcd`]          | binary LCD `[n, k, d]`       | trace-Hermitian  |
//! | [`self_dual_complement_acd`] | binary self-dual `[2m, m]`   | trace-Hermitian  |
//! | [`mix_lcd_pair`]             | two binary LCD codes         | trace-Euclidean  |
//! | [`fold`]                     | binary `[2n, k]` LCD code    | trace-Euclidean  |

use crate::additive_code::AdditiveCode;
use crate::binary_code::BinaryCode;
use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::f2linalg::F4Matrix;
use crate::gf4::{F4Vector, Gf4};

/// The binary code `C₂` regarded as a GF(4)-linear code, then as an additive
/// `(n, 2^{2k}, d)` code. Trace-Hermitian ACD when `C₂` is LCD.
pub fn lift_binary_lcd(c2: &BinaryCode) -> Result<AdditiveCode> {
    if !c2.is_lcd() {
        return Err(Error::NotLcd("the binary code must satisfy C ∩ C^⊥ = {0}"));
    }
    Ok(AdditiveCode::from_linear(&F4Matrix::from_binary(c2.generator())))
}

fn check_scalars(a: Gf4, b: Gf4) -> Result<()> {
    if a.is_zero() || b.is_zero() || a == b {
        return Err(Error::BadScalars {
            a: a.symbol(),
            b: b.symbol(),
        });
    }
    Ok(())
}

/// `aC + bD`: the additive code generated by `a·u` for rows `u` of `C` and
/// `b·v` for rows `v` of `D`. `a`, `b` must be distinct and nonzero. When
/// `C ∩ D = {0}` the result has `k = k_C + k_D`; otherwise the dimension is
/// whatever the rank reduction gives.
pub fn mix(a: Gf4, c: &BinaryCode, b: Gf4, d: &BinaryCode) -> Result<AdditiveCode> {
    check_scalars(a, b)?;
    if c.n() != d.n() {
        return Err(Error::DimensionMismatch(format!(
            "codes of lengths {} and {}",
            c.n(),
            d.n()
        )));
    }
    let rows: Vec<F4Vector> = c
        .generator()
        .rows()
        .iter()
        .map(|u| F4Vector::from_binary(u).scale(a))
        .chain(
            d.generator()
                .rows()
                .iter()
                .map(|v| F4Vector::from_binary(v).scale(b)),
        )
        .collect();
    AdditiveCode::from_generator(c.n(), &rows)
}

/// `aC + bD` with `D` the complement of the self-dual code `C` from
/// [`BinaryCode::complement`]. Trace-Hermitian ACD `(2m, 2^{2m})` with
/// minimum distance `min(d(C), d(D))`.
pub fn self_dual_complement_acd(c: &BinaryCode, a: Gf4, b: Gf4) -> Result<AdditiveCode> {
    if !c.is_self_dual() {
        return Err(Error::NotSelfDual("C must equal C^⊥ (n = 2k and G·Gᵀ = 0)"));
    }
    check_scalars(a, b)?;
    mix(a, c, b, &c.complement())
}

/// `ωC + ω²D` for binary LCD codes `C`, `D` of the same length.
/// Trace-Euclidean ACD with `k = k_C + k_D`.
pub fn mix_lcd_pair(c: &BinaryCode, d: &BinaryCode) -> Result<AdditiveCode> {
    if !c.is_lcd() {
        return Err(Error::NotLcd("the first binary code must satisfy C ∩ C^⊥ = {0}"));
    }
    if !d.is_lcd() {
        return Err(Error::NotLcd("the second binary code must satisfy D ∩ D^⊥ = {0}"));
    }
    mix(Gf4::OMEGA, c, Gf4::OMEGA2, d)
}

/// For a binary `[2n, k]` code with generator `[A | B]` (A = first n
/// columns), the additive `(n, 2^k)` code generated by `ωA + ω²B`. It is
/// trace-Euclidean ACD exactly when the binary code is LCD.
pub fn fold(c1: &BinaryCode) -> Result<AdditiveCode> {
    let len = c1.n();
    if !len.is_multiple_of(2) {
        return Err(Error::OddLength(len));
    }
    let n = len / 2;
    let rows: Vec<F4Vector> = c1
        .generator()
        .rows()
        .iter()
        .map(|r| {
            let a = F4Vector::from_binary(&r.slice(0, n)).scale(Gf4::OMEGA);
            let b = F4Vector::from_binary(&r.slice(n, len)).scale(Gf4::OMEGA2);
            a.add(&b)
        })
        .collect();
    AdditiveCode::from_generator(n, &rows)
}

/// The binary `[2n, k]` code `{Tr(ωu) | Tr(ω̄u) : u ∈ C}` with generator
/// `[ωG + ω̄Ḡ | ω̄G + ωḠ]`. LCD exactly when `C` is trace-Euclidean ACD.
pub fn unfold(c: &AdditiveCode) -> BinaryCode {
    let rows: Vec<BitVec> = c
        .rows()
        .iter()
        .map(|g| g.scale(Gf4::OMEGA).trace().concat(&g.scale(Gf4::OMEGA2).trace()))
        .collect();
    BinaryCode::from_rows(2 * c.n(), rows).expect("rows of length 2n")
}
