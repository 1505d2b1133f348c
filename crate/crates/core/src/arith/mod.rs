//! Exact-arithmetic substrate.
//!
//! [`Int`] and [`Rat`] are `num-bigint` / `num-rational` types; `Ratio`
//! keeps values in lowest terms with a positive denominator, so equality of
//! two `Rat`s is equality of the numbers they denote.

mod bernoulli;
mod combinatorics;
mod divisors;
mod float;

pub use bernoulli::bernoulli;
pub use combinatorics::{binomial, factorial, falling_factorial, lcm_all};
pub use divisors::{divisor_count, divisors, factorize, DivisorBudget};
pub use float::{log10_abs_int, log10_abs_rat, rat_to_f64};

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Exact rational in lowest terms.
pub type Rat = num_rational::BigRational;

/// `Rat` from an integer value.
pub fn rat<T: Into<Int>>(v: T) -> Rat {
    Rat::from_integer(v.into())
}

/// `Rat` from `num/den`; panics on a zero denominator.
pub fn frac<N: Into<Int>, D: Into<Int>>(num: N, den: D) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Exact integer power of a rational.
pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    num_traits::pow::pow(base.clone(), exp as usize)
}

/// Exact integer power of an integer.
pub fn int_pow(base: &Int, exp: u32) -> Int {
    num_traits::pow::pow(base.clone(), exp as usize)
}
