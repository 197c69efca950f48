//! Additive codes over GF(4) and their complementary duality under the
//! trace-Hermitian and trace-Euclidean inner products.
//!
//! Vectors over GF(4) are bit-sliced: `a + bω` is stored as one bit in an
//! `a`-plane and one in a `b`-plane, so additions are word-wide XORs.

pub mod additive_code;
pub mod binary_code;
pub mod bits;
pub mod constructions;
pub mod error;
pub mod f2linalg;
pub mod format;
pub mod gf4;
pub mod linear_code;
pub mod paperdata;
pub mod search;

/// Largest code dimension (log2 of the size) enumerated without an explicit
/// override.
pub const DEFAULT_ENUMERATION_LIMIT: u32 = 28;

pub use additive_code::{AdditiveCode, Form, Projector, WeightDistribution};
pub use binary_code::BinaryCode;
pub use bits::BitVec;
pub use error::{Error, Result};
pub use f2linalg::{F2Matrix, F4Matrix};
pub use format::{CodeFile, CodeKind};
pub use gf4::{F4Vector, Gf4};
pub use linear_code::{LinearCodeF4, LinearForm};
pub use search::{SearchConfig, SearchResult};
