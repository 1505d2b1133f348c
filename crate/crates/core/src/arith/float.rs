//! Lossy views of exact values, for display and plotting columns only.

use num_bigint::Sign;
use num_traits::{ToPrimitive, Zero};

use super::{Int, Rat};

const MANTISSA_BITS: i64 = 64;

// |x| ~= mantissa * 2^exp with mantissa holding the top bits of x.
fn split(x: &Int) -> (f64, i64) {
    let bits = x.bits() as i64;
    let shift = (bits - MANTISSA_BITS).max(0);
    let top = x.magnitude() >> shift as usize;
    (top.to_f64().unwrap_or(f64::INFINITY), shift)
}

/// Nearest-ish `f64` to a rational of any size (saturates to +-inf / 0).
pub fn rat_to_f64(x: &Rat) -> f64 {
    if x.numer().is_zero() {
        return 0.0;
    }
    let (nm, ne) = split(x.numer());
    let (dm, de) = split(x.denom());
    let exp = ne - de;
    let mag = (nm / dm) * 2f64.powi(exp.clamp(i32::MIN as i64, i32::MAX as i64) as i32);
    if x.numer().sign() == Sign::Minus {
        -mag
    } else {
        mag
    }
}

/// `log10 |x|`, or `None` for zero.
pub fn log10_abs_int(x: &Int) -> Option<f64> {
    if x.is_zero() {
        return None;
    }
    let (m, e) = split(x);
    Some(m.log10() + e as f64 * std::f64::consts::LOG10_2)
}

/// `log10 |x|`, or `None` for zero.
pub fn log10_abs_rat(x: &Rat) -> Option<f64> {
    let n = log10_abs_int(x.numer())?;
    let d = log10_abs_int(x.denom()).unwrap_or(0.0);
    Some(n - d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, int_pow};

    #[test]
    fn small_values_exact() {
        assert_eq!(rat_to_f64(&frac(29, 6)), 29.0 / 6.0);
        assert_eq!(rat_to_f64(&frac(-663, 1)), -663.0);
        assert_eq!(rat_to_f64(&Rat::zero()), 0.0);
    }

    #[test]
    fn huge_ratio_of_huge_values() {
        // (3^2000 + 1) / 3^1999 ~= 3
        let big = int_pow(&Int::from(3), 1999);
        let x = Rat::new(&big * 3 + 1, big);
        assert!((rat_to_f64(&x) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn log10_of_big_power() {
        let x = int_pow(&Int::from(200), 103);
        let l = log10_abs_int(&x).unwrap();
        assert!((l - 103.0 * 200f64.log10()).abs() < 1e-10);
        assert_eq!(log10_abs_int(&Int::zero()), None);
        assert!((log10_abs_rat(&frac(-1, 1000)).unwrap() + 3.0).abs() < 1e-14);
    }
}
