//! Truncated formal power series over exact rationals.
//!
//! A [`PowerSeries`] of order `N` stores `a_0..=a_N` densely. Binary
//! operations truncate to the smaller operand order, so a coefficient is
//! never emitted unless every input needed to determine it was known.
//!
//! [`LogSeries`] extends this with powers of `log z` up to the square,
//! which is all the Frobenius basis of a third-order operator needs.

mod log;
mod power;

pub use log::LogSeries;
pub use power::PowerSeries;

use num_bigint::BigInt;

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
