//! The scalar field every other type is generic over.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// A field of real scalars.
///
/// The engine is exact when instantiated with [`crate::Rational`]; `f64`
/// satisfies the bound too and is handy for quick numeric sanity checks.
pub trait Scalar:
    Num + Signed + FromPrimitive + Clone + PartialOrd + Debug + Display + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer is representable in the scalar type")
    }

    /// `n / d`; panics when `d == 0`.
    fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_int(n) / Self::from_int(d)
    }
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + Clone + PartialOrd + Debug + Display + Send + Sync + 'static
{
}
