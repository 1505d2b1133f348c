use num_integer::Integer;
use num_traits::{One, Zero};

use super::Int;
use crate::error::{domain, Result};

/// Falling factorial `k (k-1) ... (k-n+1)`.
///
/// `n = 0` gives 1; `n > k` gives 0, matching the vanishing derivatives of
/// `x^k` beyond order `k`.
pub fn falling_factorial(k: i64, n: i64) -> Result<Int> {
    if n < 0 {
        return domain(format!("falling_factorial: negative order {n}"));
    }
    if k >= 0 && n > k {
        return Ok(Int::zero());
    }
    Ok((0..n).fold(Int::one(), |acc, i| acc * Int::from(k - i)))
}

/// Binomial coefficient `C(n, i)`; 0 when `i < 0` or `i > n`.
pub fn binomial(n: i64, i: i64) -> Int {
    if i < 0 || i > n || n < 0 {
        return Int::zero();
    }
    let i = i.min(n - i);
    let mut acc = Int::one();
    for j in 0..i {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

pub fn factorial(n: u32) -> Int {
    (2..=n as u64).fold(Int::one(), |acc, i| acc * i)
}

/// Least common multiple of a non-empty list of positive integers.
pub fn lcm_all(values: &[Int]) -> Result<Int> {
    let Some((first, rest)) = values.split_first() else {
        return domain("lcm_all: empty list");
    };
    if values.iter().any(|v| v < &Int::one()) {
        return domain("lcm_all: values must be >= 1");
    }
    Ok(rest.iter().fold(first.clone(), |acc, v| acc.lcm(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(rows: usize) -> Vec<Vec<Int>> {
        let mut t: Vec<Vec<Int>> = vec![vec![Int::one()]];
        for r in 1..rows {
            let prev = &t[r - 1];
            let mut row = vec![Int::one(); r + 1];
            for j in 1..r {
                row[j] = &prev[j - 1] + &prev[j];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(5, 3).unwrap(), Int::from(60));
        assert_eq!(falling_factorial(9, 0).unwrap(), Int::one());
        assert_eq!(falling_factorial(4, 5).unwrap(), Int::zero());
        assert!(falling_factorial(4, -1).is_err());
    }

    #[test]
    fn binomial_matches_pascal() {
        let t = pascal(40);
        for (n, row) in t.iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as i64, i as i64), v);
            }
        }
        assert_eq!(binomial(5, 2), Int::from(10));
        assert_eq!(binomial(7, 3), Int::from(35));
        assert_eq!(binomial(7, 8), Int::zero());
        assert_eq!(binomial(7, -1), Int::zero());
    }

    #[test]
    fn falling_factorial_is_binomial_times_factorial() {
        for k in 0..=50i64 {
            for n in 0..=k {
                assert_eq!(falling_factorial(k, n).unwrap(), binomial(k, n) * factorial(n as u32));
            }
        }
    }

    #[test]
    fn lcm_examples() {
        let ints = |v: &[i64]| v.iter().map(|&x| Int::from(x)).collect::<Vec<_>>();
        assert_eq!(lcm_all(&ints(&[3, 2, 2])).unwrap(), Int::from(6));
        assert_eq!(lcm_all(&ints(&[5, 2, 2, 24])).unwrap(), Int::from(120));
        assert_eq!(lcm_all(&ints(&[17])).unwrap(), Int::from(17));
        assert!(lcm_all(&[]).is_err());
        assert!(lcm_all(&ints(&[0, 3])).is_err());
    }
}
