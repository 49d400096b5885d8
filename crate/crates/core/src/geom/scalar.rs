use num_traits::{FromPrimitive, ToPrimitive};

/// Scalar type the kernel is generic over: `f32` or `f64`.
pub trait Real:
    nalgebra::RealField
    + FromPrimitive
    + ToPrimitive
    + Copy
    + Default
    + std::iter::Sum
    + 'static
{
}

impl<T> Real for T where
    T: nalgebra::RealField
        + FromPrimitive
        + ToPrimitive
        + Copy
        + Default
        + std::iter::Sum
        + 'static
{
}

/// Convert an `f64` constant into the kernel scalar.
#[inline]
pub fn real<S: Real>(v: f64) -> S {
    S::from_f64(v).expect("finite f64 constant")
}
