//! Scalar abstraction shared by every estimator in the crate.
//!
//! Estimation code is written against [`Real`] so that it runs in `f32` or
//! `f64`. Reference distributions (p-values) are always evaluated in `f64`.

use nalgebra::RealField;
use num_traits::{FromPrimitive, ToPrimitive};
use std::fmt::{Debug, Display};

/// Floating-point scalar usable by the estimators.
pub trait Real:
    RealField + Copy + FromPrimitive + ToPrimitive + Display + Debug + Send + Sync + 'static
{
    /// Converts an `f64` literal into the scalar type.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Converts a count into the scalar type.
    #[inline]
    fn count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar representable as f64")
    }

    /// Largest acceptable condition number of an equilibrated design matrix.
    fn max_condition() -> Self;

    /// Floor applied to variance estimates that must stay strictly positive.
    fn variance_floor() -> Self;
}

impl Real for f32 {
    fn max_condition() -> Self {
        1.0e5
    }

    fn variance_floor() -> Self {
        1.0e-12
    }
}

impl Real for f64 {
    fn max_condition() -> Self {
        1.0e12
    }

    fn variance_floor() -> Self {
        1.0e-12
    }
}

pub(crate) fn sum<T: Real>(xs: impl IntoIterator<Item = T>) -> T {
    xs.into_iter().fold(T::zero(), |acc, x| acc + x)
}

pub(crate) fn mean<T: Real>(xs: &[T]) -> T {
    if xs.is_empty() {
        return T::zero();
    }
    sum(xs.iter().copied()) / T::count(xs.len())
}
