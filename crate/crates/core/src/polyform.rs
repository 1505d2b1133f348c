//! Integer polynomials in `m`.
//!
//! Two families, both obtained by multiplying `P(m) = S(m-1, k) - m^k` (or
//! an approximation of it) by a common denominator:
//!
//! - [`cleared_poly`]: `2(k+1)` times the two-term approximant,
//!   `2(m-1)^{k+1} + (k+1)(m-1)^k - 2(k+1)m^k + (k-1)`.
//! - [`full_eml_poly`]: `D` times the exact expansion with every correction
//!   term, `D = lcm(k+1, 2, (2r)! for 1 <= r <= floor(k/2))`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{bernoulli, binomial, factorial, falling_factorial, frac, lcm_all, rat, Int, Rat};
use crate::error::{domain, Error, Result};
use crate::powersum::max_corrections;

/// Dense integer polynomial, ascending powers; no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Coefficient of `m^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn leading(&self) -> Int {
        self.coeffs.last().cloned().unwrap_or_else(Int::zero)
    }

    pub fn constant(&self) -> Int {
        self.coeff(0)
    }

    /// Horner evaluation at an integer.
    pub fn eval_int(&self, m: &Int) -> Int {
        self.coeffs.iter().rev().fold(Int::zero(), |acc, c| acc * m + c)
    }

    /// Horner evaluation at a rational.
    pub fn eval(&self, m: &Rat) -> Rat {
        if m.is_integer() {
            return rat(self.eval_int(m.numer()));
        }
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * m + rat(c.clone()))
    }

    /// `m * self`.
    pub fn mul_m(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(Int::zero());
        c.extend(self.coeffs.iter().cloned());
        Self::new(c)
    }

    /// `self / m`, defined only when the constant term is zero.
    pub fn div_m(&self) -> Option<Self> {
        if !self.constant().is_zero() {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(1).cloned().collect()))
    }
}

impl fmt::Display for IntPoly {
    /// Descending human-readable form, e.g. `2*m^3 - 9*m^2 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "m")?,
                _ => write!(f, "m^{i}")?,
            }
        }
        Ok(())
    }
}

/// Ascending coefficients of `(m + shift)^n`.
fn shifted_power(n: u32, shift: i64) -> Vec<Int> {
    let s = Int::from(shift);
    (0..=n).map(|l| binomial(n as i64, l as i64) * crate::arith::int_pow(&s, n - l)).collect()
}

fn add_scaled(acc: &mut Vec<Int>, term: &[Int], scale: &Int) {
    if acc.len() < term.len() {
        acc.resize(term.len(), Int::zero());
    }
    for (a, t) in acc.iter_mut().zip(term) {
        *a += t * scale;
    }
}

fn add_scaled_rat(acc: &mut Vec<Rat>, term: &[Int], scale: &Rat) {
    if acc.len() < term.len() {
        acc.resize(term.len(), Rat::zero());
    }
    for (a, t) in acc.iter_mut().zip(term) {
        if !t.is_zero() {
            *a += scale * rat(t.clone());
        }
    }
}

/// An integer polynomial together with the factor that cleared its
/// denominators: `poly = multiplier * P(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClearedPoly {
    pub poly: IntPoly,
    pub k: u32,
    pub multiplier: Int,
}

/// `2(m-1)^{k+1} + (k+1)(m-1)^k - 2(k+1)m^k + (k-1)`, fully expanded.
///
/// This is `2(k+1)` times the two-term approximant minus `m^k`; degree
/// `k+1`, leading coefficient 2.
pub fn cleared_poly(k: u32) -> Result<ClearedPoly> {
    if k < 1 {
        return domain("cleared_poly needs k >= 1");
    }
    let kp1 = Int::from(k + 1);
    let mut c: Vec<Int> = Vec::new();
    add_scaled(&mut c, &shifted_power(k + 1, -1), &Int::from(2));
    add_scaled(&mut c, &shifted_power(k, -1), &kp1);
    c[k as usize] -= Int::from(2) * &kp1;
    c[0] += Int::from(k) - 1;
    Ok(ClearedPoly { poly: IntPoly::new(c), k, multiplier: Int::from(2) * kp1 })
}

/// The approximant `P_R(m) = (m-1)^{k+1}/(k+1) + (m-1)^k/2 - m^k - 1/(k+1) + 1/2`
/// evaluated directly in rationals (no expansion).
pub fn approx_p_r(m: &Rat, k: u32) -> Rat {
    let b = m - rat(1);
    crate::arith::rat_pow(&b, k + 1) / rat(k + 1) + crate::arith::rat_pow(&b, k) / rat(2)
        - crate::arith::rat_pow(m, k)
        - frac(1, k + 1)
        + frac(1, 2)
}

/// Constant and linear coefficients `(a0, a1)` of [`cleared_poly`].
pub fn constant_and_linear_terms(k: u32) -> Result<(Int, Int)> {
    if k < 2 {
        return domain("constant_and_linear_terms needs k >= 2");
    }
    let p = cleared_poly(k)?.poly;
    Ok((p.coeff(0), p.coeff(1)))
}

/// `cleared_poly(k) / m` for odd `k >= 3`, whose constant term vanishes.
pub fn q_poly(k: u32) -> Result<IntPoly> {
    if k < 3 {
        return domain(format!("Q needs odd k >= 3, got {k}"));
    }
    let p = cleared_poly(k)?.poly;
    p.div_m().ok_or_else(|| {
        Error::Domain(format!("Q undefined for even k (k = {k}, constant term {})", p.coeff(0)))
    })
}

/// `D = lcm(k+1, 2, {(2r)! : 1 <= r <= floor(k/2)})`.
pub fn eml_multiplier(k: u32) -> Int {
    let mut parts = vec![Int::from(k + 1), Int::from(2)];
    parts.extend((1..=max_corrections(k)).map(|r| factorial(2 * r)));
    lcm_all(&parts).expect("non-empty, positive")
}

/// `D * (S(m-1, k) - m^k)` as an integer polynomial, built from the
/// remainder-free Euler–Maclaurin expansion:
///
/// `((m-1)^{k+1} - 1)/(k+1) + ((m-1)^k + 1)/2 - m^k + sum_r T_r`, with
/// `T_r = B_2r/(2r)! * k^(2r-1) * ((m-1)^{k-2r+1} - 1)`.
///
/// Degree `k+1`, leading coefficient `D/(k+1)`. The constant term is read
/// off the expansion.
pub fn full_eml_poly(k: u32) -> Result<ClearedPoly> {
    if k < 1 {
        return domain("full_eml_poly needs k >= 1");
    }
    let mut acc: Vec<Rat> = Vec::new();
    let one = [Int::one()];
    add_scaled_rat(&mut acc, &shifted_power(k + 1, -1), &frac(1, k + 1));
    add_scaled_rat(&mut acc, &one, &frac(-1, k + 1));
    add_scaled_rat(&mut acc, &shifted_power(k, -1), &frac(1, 2));
    add_scaled_rat(&mut acc, &one, &frac(1, 2));
    acc[k as usize] -= rat(1);
    for r in 1..=max_corrections(k) {
        let order = 2 * r - 1;
        let weight =
            bernoulli(2 * r)? * rat(falling_factorial(k as i64, order as i64)?) / rat(factorial(2 * r));
        add_scaled_rat(&mut acc, &shifted_power(k - order, -1), &weight);
        add_scaled_rat(&mut acc, &one, &-weight);
    }

    let d = eml_multiplier(k);
    let dr = rat(d.clone());
    let coeffs = acc
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            let scaled = c * &dr;
            if scaled.is_integer() {
                Ok(scaled.to_integer())
            } else {
                Err(Error::Inconsistency(format!(
                    "D = {d} does not clear coefficient {i} of the k = {k} expansion ({scaled})"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClearedPoly { poly: IntPoly::new(coeffs), k, multiplier: d })
}

/// Exact Horner evaluation.
pub fn eval_poly(p: &IntPoly, m: &Rat) -> Rat {
    p.eval(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powersum::{sum_direct, PowerSumQuery};

    #[test]
    fn cleared_k2() {
        let c = cleared_poly(2).unwrap();
        assert_eq!(c.poly, IntPoly::from_i64(&[2, 0, -9, 2]));
        assert_eq!(c.multiplier, Int::from(6));
        assert_eq!(c.poly.to_string(), "2*m^3 - 9*m^2 + 2");
    }

    #[test]
    fn cleared_values_at_highlighted_roots() {
        assert_eq!(cleared_poly(4).unwrap().poly.eval_int(&Int::from(3)), Int::from(-663));
        assert_eq!(cleared_poly(6).unwrap().poly.eval_int(&Int::from(5)), Int::from(-157305));
        assert_eq!(cleared_poly(4).unwrap().poly.eval_int(&Int::from(6)), Int::from(-3582));
    }

    #[test]
    fn eval_examples() {
        let p = IntPoly::from_i64(&[2, 0, -9, 2]);
        assert_eq!(eval_poly(&p, &rat(3)), rat(-25));
        assert_eq!(eval_poly(&IntPoly::zero(), &frac(7, 3)), rat(0));
        // 2(1/8) - 9(1/4) + 2 = 0
        assert_eq!(eval_poly(&p, &frac(1, 2)), rat(0));
    }

    #[test]
    fn zero_poly_shape() {
        let z = IntPoly::from_i64(&[0, 0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.to_string(), "0");
        assert!(z.mul_m().is_zero());
    }

    #[test]
    fn a0_a1_examples() {
        assert_eq!(constant_and_linear_terms(4).unwrap().0, Int::from(6));
        let (a0, a1) = constant_and_linear_terms(3).unwrap();
        assert_eq!(a0, Int::zero());
        assert_eq!(a1, Int::from(4));
        assert!(constant_and_linear_terms(1).is_err());
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_poly(3).unwrap(), IntPoly::from_i64(&[4, 0, -12, 2]));
        assert_eq!(q_poly(5).unwrap().constant(), Int::from(18));
        let err = q_poly(4).unwrap_err();
        assert!(matches!(err, Error::Domain(ref s) if s.contains("even k")));
    }

    #[test]
    fn full_eml_k2_and_k4() {
        let c = full_eml_poly(2).unwrap();
        assert_eq!(c.multiplier, Int::from(6));
        assert_eq!(c.poly, IntPoly::from_i64(&[0, 1, -9, 2]));
        let c4 = full_eml_poly(4).unwrap();
        assert_eq!(c4.multiplier, Int::from(120));
        assert_eq!(c4.poly.leading(), Int::from(24));
        assert_eq!(c4.poly.degree(), Some(5));
    }

    #[test]
    fn full_eml_small_k_against_direct_sums() {
        for k in 1..=8u32 {
            let c = full_eml_poly(k).unwrap();
            for m in 1..=40u64 {
                let lhs = c.poly.eval_int(&Int::from(m));
                let s = sum_direct(PowerSumQuery::new(m - 1, k).unwrap());
                let rhs = &c.multiplier * (s - crate::arith::int_pow(&Int::from(m), k));
                assert_eq!(lhs, rhs, "k={k} m={m}");
            }
        }
    }
}
