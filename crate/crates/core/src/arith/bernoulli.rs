use std::sync::{OnceLock, RwLock};

use num_traits::Zero;

use super::{binomial, frac, rat, Rat};
use crate::error::{domain, Result};

// Full table B_0..B_len-1, odd entries included (B_1 = -1/2, zeros above).
static TABLE: OnceLock<RwLock<Vec<Rat>>> = OnceLock::new();

/// Bernoulli number `B_n` for even `n`, or `n = 1`.
///
/// Uses the convention `B_1 = -1/2`, i.e. the recurrence
/// `sum_{j=0}^{n} C(n+1, j) B_j = 0` for `n >= 1`. Only even indices feed the
/// Euler–Maclaurin sums, where both conventions agree.
///
/// The table grows monotonically and is shared by all threads; concurrent
/// readers never block each other once it covers the requested index.
pub fn bernoulli(n: u32) -> Result<Rat> {
    if n >= 3 && n % 2 == 1 {
        return domain(format!("bernoulli({n}): odd index >= 3 is not supported"));
    }
    let idx = n as usize;
    let table = TABLE.get_or_init(|| RwLock::new(vec![rat(1)]));
    {
        let read = table.read().unwrap_or_else(|e| e.into_inner());
        if let Some(b) = read.get(idx) {
            return Ok(b.clone());
        }
    }
    let mut write = table.write().unwrap_or_else(|e| e.into_inner());
    extend(&mut write, idx);
    Ok(write[idx].clone())
}

fn extend(table: &mut Vec<Rat>, upto: usize) {
    while table.len() <= upto {
        let n = table.len();
        if n >= 3 && n % 2 == 1 {
            table.push(Rat::zero());
            continue;
        }
        let mut acc = Rat::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += b * rat(binomial(n as i64 + 1, j as i64));
            }
        }
        table.push(-acc * frac(1, n as i64 + 1));
    }
}
