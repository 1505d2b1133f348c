//! Ground-truth power sums `S(n, k) = 1^k + ... + n^k`.
//!
//! Two independent routes: plain summation, and the Euler–Maclaurin
//! expansion carried to its last non-vanishing correction, where the
//! remainder is identically zero. They must agree exactly; everything else
//! in the crate is checked against them.

use num_traits::{One, Zero};

use crate::arith::{bernoulli, factorial, falling_factorial, int_pow, rat, rat_pow, Int, Rat};
use crate::error::{domain, Error, Result};

/// Upper limit `n` (= `m - 1`) and exponent `k` of a power sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerSumQuery {
    pub n: u64,
    pub k: u32,
}

impl PowerSumQuery {
    pub fn new(n: u64, k: u32) -> Result<Self> {
        if k < 1 {
            return domain("power sum exponent k must be >= 1");
        }
        Ok(Self { n, k })
    }
}

/// `sum_{i=1}^{n} i^k` by direct summation; `n = 0` gives 0.
pub fn sum_direct(q: PowerSumQuery) -> Int {
    (1..=q.n).map(|i| int_pow(&Int::from(i), q.k)).sum()
}

/// Euler–Maclaurin correction term of order `r` for `f(x) = x^k` on `[1, b]`:
/// `B_2r / (2r)! * k^(2r-1) * (b^(k-2r+1) - 1)`.
pub(crate) fn correction_term(b: &Rat, k: u32, r: u32) -> Rat {
    let order = 2 * r - 1;
    if order > k {
        return Rat::zero();
    }
    let coeff = bernoulli(2 * r).expect("even index")
        * rat(falling_factorial(k as i64, order as i64).expect("non-negative order"))
        / rat(factorial(2 * r));
    coeff * (rat_pow(b, k - order) - Rat::one())
}

/// Number of non-vanishing correction terms, `floor(k / 2)`.
pub fn max_corrections(k: u32) -> u32 {
    k / 2
}

/// Exact `S(n, k)` from the remainder-free Euler–Maclaurin expansion:
/// integral `(n^{k+1} - 1)/(k+1)`, boundary `(1 + n^k)/2`, and all
/// `floor(k/2)` derivative corrections.
///
/// Requires `n >= 1`. A non-integer total signals a bug and is reported as
/// [`Error::Inconsistency`].
pub fn sum_eml_exact(q: PowerSumQuery) -> Result<Rat> {
    if q.n < 1 {
        return domain("sum_eml_exact requires n >= 1");
    }
    let b = rat(q.n);
    let k = q.k;
    let integral = (rat_pow(&b, k + 1) - Rat::one()) / rat(k + 1);
    let boundary = (Rat::one() + rat_pow(&b, k)) / rat(2);
    let corrections: Rat = (1..=max_corrections(k)).map(|r| correction_term(&b, k, r)).sum();
    let total = integral + boundary + corrections;
    if !total.is_integer() {
        return Err(Error::Inconsistency(format!(
            "Euler–Maclaurin sum for n = {}, k = {} is not an integer: {total}",
            q.n, q.k
        )));
    }
    Ok(total)
}
