use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Int;
use crate::error::{domain, Error, Result};

/// Upper bound on trial divisors tried during factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorBudget {
    max_trial: u64,
}

impl DivisorBudget {
    pub const DEFAULT_MAX_TRIAL: u64 = 1_000_000;

    pub fn new(max_trial: u64) -> Result<Self> {
        if max_trial < 2 {
            return domain(format!("divisor budget must be >= 2, got {max_trial}"));
        }
        Ok(Self { max_trial })
    }

    pub fn max_trial(&self) -> u64 {
        self.max_trial
    }
}

impl Default for DivisorBudget {
    fn default() -> Self {
        Self { max_trial: Self::DEFAULT_MAX_TRIAL }
    }
}

/// Prime factorization of `n >= 1` by trial division, ascending primes.
///
/// Fails when a cofactor larger than `max_trial^2` is left, since its
/// primality cannot be settled within the budget.
pub fn factorize(n: &Int, budget: DivisorBudget) -> Result<Vec<(Int, u32)>> {
    if n < &Int::one() {
        return domain(format!("factorize: n must be >= 1, got {n}"));
    }
    if let Some(small) = n.to_u64() {
        return factorize_u64(small, budget).map(|v| v.into_iter().map(|(p, e)| (Int::from(p), e)).collect());
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut d: u64 = 2;
    while d <= budget.max_trial {
        let dd = Int::from(d);
        if &dd * &dd > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&dd);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((dd, e));
        }
        // Drop to the u64 path once the cofactor is small enough.
        if let Some(small) = rest.to_u64() {
            let tail = factorize_from(small, d + 1, budget)?;
            out.extend(tail.into_iter().map(|(p, e)| (Int::from(p), e)));
            return Ok(out);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    finish(rest, out, budget)
}

fn finish(rest: Int, mut out: Vec<(Int, u32)>, budget: DivisorBudget) -> Result<Vec<(Int, u32)>> {
    if rest.is_one() {
        return Ok(out);
    }
    let limit = Int::from(budget.max_trial) * Int::from(budget.max_trial);
    if rest > limit {
        return Err(Error::BudgetExceeded { cofactor: rest, max_trial: budget.max_trial });
    }
    out.push((rest, 1));
    Ok(out)
}

fn factorize_u64(n: u64, budget: DivisorBudget) -> Result<Vec<(u64, u32)>> {
    factorize_from(n, 2, budget)
}

fn factorize_from(mut n: u64, start: u64, budget: DivisorBudget) -> Result<Vec<(u64, u32)>> {
    let mut out = Vec::new();
    let mut d = start.max(2);
    if d > 2 && d.is_multiple_of(2) {
        d += 1;
    }
    while d <= budget.max_trial && (d as u128) * (d as u128) <= n as u128 {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n == 1 {
        return Ok(out);
    }
    if (n as u128) > (budget.max_trial as u128) * (budget.max_trial as u128) {
        return Err(Error::BudgetExceeded { cofactor: Int::from(n), max_trial: budget.max_trial });
    }
    out.push((n, 1));
    Ok(out)
}

/// Number of divisors `prod (e_i + 1)` from a factorization.
pub fn divisor_count(factors: &[(Int, u32)]) -> u64 {
    factors.iter().map(|&(_, e)| e as u64 + 1).product()
}

/// All positive divisors of `n >= 1`, ascending.
pub fn divisors(n: &Int, budget: DivisorBudget) -> Result<Vec<Int>> {
    let factors = factorize(n, budget)?;
    let mut out = vec![Int::one()];
    for (p, e) in &factors {
        let len = out.len();
        let mut pk = Int::one();
        for _ in 0..*e {
            pk *= p;
            for i in 0..len {
                let d = &out[i] * &pk;
                out.push(d);
            }
        }
    }
    out.sort();
    Ok(out)
}
