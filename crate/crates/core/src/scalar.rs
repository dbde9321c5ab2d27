//! The exact integer abstraction every routine in this crate is written against.
//!
//! Anything that behaves like a signed integer ring with Euclidean division
//! qualifies: `i64` and `i128` for quick cross-checks on small inputs, and
//! [`BigInt`](num_bigint::BigInt) for everything that matters.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_integer::Integer as IntegerOps;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer scalar.
pub trait Scalar:
    IntegerOps
    + Signed
    + Clone
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + Send
    + Sync
{
    fn from_u64_exact(v: u64) -> Self {
        Self::from_u64(v).expect("value does not fit the scalar type")
    }

    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("value does not fit the scalar type")
    }

    /// `self / d`, panicking if `d` does not divide `self`.
    fn exact_quotient(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact division: {self} / {d} leaves remainder {r}");
        q
    }

    /// `(-1)^e`.
    fn sign_pow(e: u64) -> Self {
        if e.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Scalar for T where
    T: IntegerOps
        + Signed
        + Clone
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + for<'a> MulAssign<&'a T>
        + Send
        + Sync
{
}

/// `base^exp` by repeated squaring over any scalar.
pub fn pow<T: Scalar>(base: &T, mut exp: u64) -> T {
    let mut acc = T::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            let s = sq.clone();
            sq *= &s;
        }
    }
    acc
}
