use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Num, Signed, ToPrimitive};

use crate::word::Symbol;

/// Exact signed integer arithmetic used for weights and moments.
///
/// Implemented for every type with the listed num-traits capabilities, so
/// `BigInt` (unbounded) and the primitive signed integers both qualify.
/// Primitive types are only safe after [`crate::CodeParams::new`] has checked
/// headroom for the chosen parameters.
pub trait Exact:
    Clone
    + Ord
    + Debug
    + Display
    + Num
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_symbol(s: Symbol) -> Self {
        Self::from_u32(u32::from(s)).expect("every exact integer type holds a u16")
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count does not fit the integer type")
    }

    /// `self * s` for a symbol value.
    fn scale(&self, s: Symbol) -> Self {
        match s {
            0 => Self::zero(),
            1 => self.clone(),
            _ => self.clone() * Self::from_symbol(s),
        }
    }
}

impl<T> Exact for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + Num
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
