//! Exact-arithmetic workbench for the Erdős–Moser equation
//! `1^k + 2^k + ... + (m-1)^k = m^k`.
//!
//! Everything here is computed with arbitrary-precision integers and
//! rationals. The layers build on each other:
//!
//! - [`arith`]: big integers and rationals, Bernoulli numbers, binomials,
//!   falling factorials, divisor enumeration.
//! - [`powersum`]: direct power sums and the remainder-free Euler–Maclaurin
//!   expansion that must agree with them.
//! - [`approx`]: the two-term Euler–Maclaurin approximant, its first
//!   correction term and order-`p` truncations at rational arguments.
//! - [`polyform`]: integer polynomials in `m` obtained by clearing
//!   denominators, both for the approximant and the full expansion.
//! - [`candidates`]: rational-root-theorem candidate enumeration.
//! - [`signanalysis`]: exact signs at candidates, the ratio analyses and the
//!   large-`m` sign threshold.
//! - [`search`]: brute-force scan of the equation over finite ranges.
//! - [`figures`]: exact datasets behind the two plots.
//!
//! Range sweeps run on rayon when the `parallel` feature is enabled (the
//! default) and sequentially otherwise; results are identical either way.

pub mod approx;
pub mod arith;
pub mod candidates;
mod error;
pub mod figures;
pub mod par;
pub mod polyform;
pub mod powersum;
pub mod search;
pub mod signanalysis;

pub use arith::{DivisorBudget, Int, Rat};
pub use error::{Error, Result};
