//! Exact computation of Franel numbers and their generalizations, with
//! verifiers for the identities and congruences they satisfy.
//!
//! Arithmetic routines are generic over [`Scalar`]; the verifiers work with
//! the arbitrary-precision [`Integer`] alias.

pub mod arith;
pub mod congruences;
pub mod error;
pub mod identities;
pub mod poly;
pub mod scalar;
pub mod sequences;
pub mod verdict;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use sequences::{Family, FranelMethod, SequenceRequest, SequenceStore, SequenceTable};
pub use verdict::{CheckKind, Verdict};

/// Arbitrary-precision signed integer used for every sequence value.
pub type Integer = num_bigint::BigInt;

/// Integer-coefficient polynomial.
pub type IntPoly = poly::Poly<Integer>;

/// Modulus over [`Integer`].
pub type IntModulus = arith::Modulus<Integer>;
