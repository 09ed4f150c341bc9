//! The integer type the coordinate maps are written against.
//!
//! Every formula in this crate is exact integer arithmetic, so the scalar
//! abstraction is over signed integers only: `i64` for everyday use,
//! `i128` for headroom, and [`num_bigint::BigInt`] when nothing may overflow.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// A signed, exact integer type.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

#[inline]
pub(crate) fn two<S: Scalar>() -> S {
    S::one() + S::one()
}

#[inline]
pub(crate) fn int<S: Scalar>(value: i64) -> S {
    S::from_i64(value).expect("every scalar type holds an i64")
}

/// `max(c, 0)`: the number of twisting components encoded by `c`.
pub fn cplus<S: Scalar>(c: &S) -> S {
    if c.is_positive() {
        c.clone()
    } else {
        S::zero()
    }
}

/// Halves an even value, `None` if odd.
pub(crate) fn half<S: Scalar>(value: &S) -> Option<S> {
    let (q, r) = value.div_rem(&two());
    r.is_zero().then_some(q)
}
