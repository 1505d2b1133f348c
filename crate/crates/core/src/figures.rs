//! Exact datasets behind the two plots: the approximant against the exact
//! sum over a `(k, m)` grid, and the cleared polynomial at the highlighted
//! candidates as a function of `k`.

use std::ops::RangeInclusive;

use crate::approx::{correction_first, s_r, RealArg};
use crate::arith::{int_pow, rat, Int, Rat};
use crate::candidates::CaseKind;
use crate::error::{domain, Result};
use crate::par;
use crate::polyform::cleared_poly;
use crate::powersum::{sum_direct, PowerSumQuery};
use crate::signanalysis::{ratio_r, RatioPoint, Sign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Figure1Row {
    pub k: u32,
    pub m: u64,
    /// `S(m-1, k)`.
    pub s_exact: Int,
    /// Two-term approximant.
    pub s_r: Rat,
    pub m_pow_k: Int,
    /// `s_r - m^k`.
    pub p_r: Rat,
    /// `s_r - m^k + C` with the first correction `C`.
    pub p_r_plus_c: Rat,
    /// `S(m-1, k) - m^k`.
    pub p_exact: Int,
}

pub const FIGURE1_K: RangeInclusive<u32> = 2..=102;
pub const FIGURE1_M: RangeInclusive<u64> = 3..=200;

fn figure1_for_k(k: u32, m_range: RangeInclusive<u64>) -> Result<Vec<Figure1Row>> {
    let lo = *m_range.start();
    let mut s = sum_direct(PowerSumQuery::new(lo - 1, k)?);
    let mut rows = Vec::with_capacity(m_range.clone().count());
    for m in m_range {
        if m > lo {
            s += int_pow(&Int::from(m - 1), k);
        }
        let arg = RealArg::from_int(m)?;
        let approx = s_r(&arg, k)?;
        let m_pow_k = int_pow(&Int::from(m), k);
        let p_r = &approx - rat(m_pow_k.clone());
        let p_r_plus_c = &p_r + correction_first(&arg, k)?;
        let p_exact = &s - &m_pow_k;
        rows.push(Figure1Row { k, m, s_exact: s.clone(), s_r: approx, m_pow_k, p_r, p_r_plus_c, p_exact });
    }
    Ok(rows)
}

/// Rows ordered by `k`, then `m`.
pub fn figure1_rows(k_range: RangeInclusive<u32>, m_range: RangeInclusive<u64>) -> Result<Vec<Figure1Row>> {
    if k_range.is_empty() || m_range.is_empty() {
        return domain("figure1: empty range");
    }
    if *k_range.start() < 1 || *m_range.start() < 3 {
        return domain("figure1 needs k >= 1 and m >= 3");
    }
    let per_k = par::try_map_ordered(k_range.collect(), |k| figure1_for_k(k, m_range.clone()))?;
    Ok(per_k.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure2Row {
    pub case: CaseKind,
    pub k: u32,
    pub m0: u64,
    /// Cleared polynomial at `m0`.
    pub value: Int,
    pub sign: Sign,
    pub ratio: RatioPoint,
}

/// One row per applicable `(case, k)` with `k <= k_to`, ordered by case then `k`.
pub fn figure2_rows(k_to: u32) -> Result<Vec<Figure2Row>> {
    if k_to < 4 {
        return domain(format!("figure2 needs k_to >= 4, got {k_to}"));
    }
    let pairs: Vec<(CaseKind, u32)> = CaseKind::ALL
        .into_iter()
        .flat_map(|c| (c.min_k()..=k_to).filter(move |&k| c.applies(k)).map(move |k| (c, k)))
        .collect();
    par::try_map_ordered(pairs, |(case, k)| {
        let m0 = case.m0(k);
        let value = cleared_poly(k)?.poly.eval_int(&Int::from(m0));
        let sign = Sign::of(&value);
        Ok(Figure2Row { case, k, m0, value, sign, ratio: ratio_r(k, case)? })
    })
}
