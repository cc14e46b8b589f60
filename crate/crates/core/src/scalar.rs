use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed};

/// Exact integer type that index sums, closed forms and bounds are evaluated in.
///
/// Every arithmetic step goes through the checked operations so that a
/// fixed-width scalar reports overflow instead of wrapping.
pub trait Scalar:
    Signed + Clone + Ord + Debug + Display + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + Send + Sync
{
    fn from_count(count: usize) -> Option<Self> {
        Self::from_usize(count)
    }

    fn add_checked(&self, other: &Self) -> Option<Self> {
        self.checked_add(other)
    }

    fn sub_checked(&self, other: &Self) -> Option<Self> {
        self.checked_sub(other)
    }

    fn mul_checked(&self, other: &Self) -> Option<Self> {
        self.checked_mul(other)
    }

    /// `2^exp`, or `None` on overflow.
    fn pow2(exp: usize) -> Option<Self> {
        num_traits::checked_pow(Self::from_u8(2)?, exp)
    }
}

impl<T> Scalar for T where
    T: Signed
        + Clone
        + Ord
        + Debug
        + Display
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + Send
        + Sync
{
}
