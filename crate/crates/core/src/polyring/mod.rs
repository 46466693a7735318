//! Exact arithmetic kernel.
//!
//! * [`GradedSPoly`]: polynomials in the formal variables `s_1, s_2, …` over the
//!   rationals, truncated above a total weight (`s_j` has weight `j`).
//! * [`UPoly`]: polynomials in an auxiliary variable `u` tracking cohomological
//!   degree, with [`GradedSPoly`] coefficients.
//! * [`ZSeries`]: truncated power series in `z` with [`GradedSPoly`] coefficients.
//!
//! Every operation is exact, so sums may be reduced in any order.

mod index;
mod spoly;
mod upoly;
mod zseries;

pub use index::{monomial_index, MonomialIndex};
pub use spoly::{spoly_mul, GradedSPoly, SMonomial};
pub use upoly::{exp_truncated, UPoly};
pub use zseries::{zseries_euler_sq, zseries_log, ZSeries};

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

use num_traits::One;

/// `numer / denom` as an exact rational.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
