//! Scalar bounds shared by the generic parts of the crate.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num, Signed};

/// Signed integer type usable by the recurrence engines.
///
/// Implemented for primitive signed integers (which overflow quickly, and are
/// only useful for small `n` cross-checks) and for [`num_bigint::BigInt`].
pub trait ExactInt: Clone + Debug + Num + Signed + From<i32> + Send + Sync {}

impl<T: Clone + Debug + Num + Signed + From<i32> + Send + Sync> ExactInt for T {}

/// Coefficient field for [`crate::QuadI3`].
pub trait ExactField: Clone + Debug + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("small integer constant must embed in the field")
    }
}

impl<T: Clone + Debug + Num + Neg<Output = T> + FromPrimitive> ExactField for T {}
