//! Exact scalars: rationals and cyclotomic numbers.

mod cyclotomic;
mod poly;
mod scalar;

pub use cyclotomic::{CyclotomicField, CyclotomicNumber};
pub use poly::{cyclotomic_polynomial, IntPoly};
pub use scalar::{FieldKind, Scalar};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;
