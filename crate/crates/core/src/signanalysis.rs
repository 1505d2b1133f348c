//! Signs of the cleared polynomial at candidate roots, the per-case ratios
//! `R` with their limits, and the large-`m` sign threshold.
//!
//! For each highlighted candidate the cleared polynomial splits into one
//! negative group and a positive group (plus the small constant `k - 1`);
//! `R = |negative| / positive`, so `R > 1` forces a negative value and
//! `R < 1` a positive one.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{frac, rat, rat_pow, rat_to_f64, DivisorBudget, Int, Rat};
use crate::candidates::{candidate_roots, highlighted_candidates, CaseKind};
use crate::error::{domain, Error, Result};
use crate::par;
use crate::polyform::{cleared_poly, full_eml_poly, IntPoly};

/// Largest `k` for which [`ratio_r`] also returns the exact rational.
pub const DEFAULT_EXACT_CUTOFF: u32 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(v: &Int) -> Self {
        if v.is_zero() {
            Self::Zero
        } else if v.is_negative() {
            Self::Neg
        } else {
            Self::Pos
        }
    }

    pub fn of_rat(v: &Rat) -> Self {
        Self::of(v.numer())
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Neg => "NEG",
            Self::Zero => "ZERO",
            Self::Pos => "POS",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Where a sign row came from: a highlighted case or the full divisor set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReportCase {
    Case(CaseKind),
    FullSet,
}

impl fmt::Display for ReportCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Case(c) => f.write_str(c.label()),
            Self::FullSet => f.write_str("FULL_SET"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignReport {
    pub k: u32,
    pub m0: Int,
    pub case: ReportCase,
    /// Exact value of the cleared polynomial at `m0`.
    pub value: Int,
    pub sign: Sign,
}

fn report(poly: &IntPoly, k: u32, m0: Int, case: ReportCase) -> SignReport {
    let value = poly.eval_int(&m0);
    let sign = Sign::of(&value);
    SignReport { k, m0, case, value, sign }
}

/// Exact value and sign of the cleared polynomial at `m0`.
pub fn sign_at(k: u32, m0: u64) -> Result<SignReport> {
    if k < 2 {
        return domain(format!("sign_at needs k >= 2, got {k}"));
    }
    if m0 < 3 {
        return domain(format!("sign_at needs m0 >= 3, got {m0}"));
    }
    Ok(report(&cleared_poly(k)?.poly, k, Int::from(m0), ReportCase::FullSet))
}

fn rows_for_k(k: u32, budget: DivisorBudget) -> Result<Vec<SignReport>> {
    let poly = cleared_poly(k)?.poly;
    let mut rows: Vec<SignReport> = highlighted_candidates(k)
        .into_iter()
        .map(|(c, m0)| report(&poly, k, m0, ReportCase::Case(c)))
        .collect();
    let full = candidate_roots(k, budget)?;
    rows.extend(full.integer_candidates_ge3.into_iter().map(|m0| report(&poly, k, m0, ReportCase::FullSet)));
    Ok(rows)
}

/// Sign rows for every `2 <= k <= k_max`: highlighted candidates first (in
/// case order), then every integer candidate `>= 3` of the full divisor set.
/// Rows are ordered by `k`. `ZERO` rows are data, not errors.
pub fn sign_summary(k_max: u32, budget: DivisorBudget) -> Result<Vec<SignReport>> {
    if k_max < 3 {
        return domain(format!("sign_summary needs k_max >= 3, got {k_max}"));
    }
    let per_k = par::try_map_ordered((2..=k_max).collect(), |k| rows_for_k(k, budget))?;
    Ok(per_k.into_iter().flatten().collect())
}

/// One sample of a case's ratio.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioPoint {
    pub k: u32,
    pub case: CaseKind,
    /// Exact value when `k <= exact_cutoff`.
    pub r_exact: Option<Rat>,
    pub r_float: f64,
    pub limit: f64,
}

// R = prefactor * (1 + 1/d)^k; returns (prefactor, d) as exact rationals.
fn ratio_parts(k: u32, case: CaseKind) -> (Rat, Rat) {
    let k = k as i64;
    let two_kp1 = 2 * (k + 1);
    match case {
        CaseKind::EvenKm1 => (frac(two_kp1, 3 * (k - 1)), rat(k - 2)),
        CaseKind::Even2Km1 => (frac(two_kp1, 5 * (k - 1)), rat(2 * k - 3)),
        CaseKind::OddKm2 => (frac(two_kp1, 3 * k - 5), rat(k - 3)),
        CaseKind::OddKp1 => (frac(two_kp1, 3 * k + 1), rat(k)),
        CaseKind::OddProd => (frac(two_kp1, 2 * k * k - k - 5), rat(k * k - k - 3)),
    }
}

/// Exact `R` for a case at `k`.
pub fn ratio_exact(k: u32, case: CaseKind) -> Result<Rat> {
    case.check(k)?;
    let (pref, d) = ratio_parts(k, case);
    let base = rat(1) + rat(1) / d;
    Ok(pref * rat_pow(&base, k))
}

/// `R` via `ln R = ln(prefactor) + k ln(1 + 1/d)` in `f64`.
pub fn ratio_log_space(k: u32, case: CaseKind) -> Result<f64> {
    case.check(k)?;
    let kf = k as f64;
    let (pref, d) = match case {
        CaseKind::EvenKm1 => (2.0 * (kf + 1.0) / (3.0 * (kf - 1.0)), kf - 2.0),
        CaseKind::Even2Km1 => (2.0 * (kf + 1.0) / (5.0 * (kf - 1.0)), 2.0 * kf - 3.0),
        CaseKind::OddKm2 => (2.0 * (kf + 1.0) / (3.0 * kf - 5.0), kf - 3.0),
        CaseKind::OddKp1 => (2.0 * (kf + 1.0) / (3.0 * kf + 1.0), kf),
        CaseKind::OddProd => (2.0 * (kf + 1.0) / (2.0 * kf * kf - kf - 5.0), kf * kf - kf - 3.0),
    };
    Ok((pref.ln() + kf * (1.0 / d).ln_1p()).exp())
}

/// `R` at `k`, exact up to [`DEFAULT_EXACT_CUTOFF`].
pub fn ratio_r(k: u32, case: CaseKind) -> Result<RatioPoint> {
    ratio_r_with_cutoff(k, case, DEFAULT_EXACT_CUTOFF)
}

pub fn ratio_r_with_cutoff(k: u32, case: CaseKind, exact_cutoff: u32) -> Result<RatioPoint> {
    case.check(k)?;
    let (r_exact, r_float) = if k <= exact_cutoff {
        let r = ratio_exact(k, case)?;
        let f = rat_to_f64(&r);
        (Some(r), f)
    } else {
        (None, ratio_log_space(k, case)?)
    };
    Ok(RatioPoint { k, case, r_exact, r_float, limit: ratio_limit(case) })
}

/// `lim_{k -> inf} R`: `2e/3`, `2 sqrt(e)/5`, or 0 for [`CaseKind::OddProd`].
pub fn ratio_limit(case: CaseKind) -> f64 {
    use std::f64::consts::E;
    match case {
        CaseKind::EvenKm1 | CaseKind::OddKm2 | CaseKind::OddKp1 => 2.0 * E / 3.0,
        CaseKind::Even2Km1 => 2.0 * E.sqrt() / 5.0,
        CaseKind::OddProd => 0.0,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioSeries {
    pub case: CaseKind,
    pub points: Vec<RatioPoint>,
    /// Strictly decreasing over the sampled `k >= case.monotone_from()`.
    pub decreasing: bool,
}

fn strictly_less(a: &RatioPoint, b: &RatioPoint) -> bool {
    match (&a.r_exact, &b.r_exact) {
        (Some(x), Some(y)) => x < y,
        _ => a.r_float < b.r_float,
    }
}

/// `R` over `k = k_from, k_from + step, ..., <= k_to` plus a monotonicity
/// verdict on the sampled grid. `step` must be even so parity is kept.
pub fn ratio_series(case: CaseKind, k_from: u32, k_to: u32, step: u32) -> Result<RatioSeries> {
    ratio_series_with_cutoff(case, k_from, k_to, step, DEFAULT_EXACT_CUTOFF)
}

pub fn ratio_series_with_cutoff(
    case: CaseKind,
    k_from: u32,
    k_to: u32,
    step: u32,
    exact_cutoff: u32,
) -> Result<RatioSeries> {
    if k_from > k_to {
        return domain(format!("empty k range {k_from}..{k_to}"));
    }
    if step == 0 || step % 2 == 1 {
        return domain(format!("step must be a positive even number, got {step}"));
    }
    case.check(k_from)?;
    let ks: Vec<u32> = (k_from..=k_to).step_by(step as usize).collect();
    let points = par::try_map_ordered(ks, |k| ratio_r_with_cutoff(k, case, exact_cutoff))?;
    let from = case.monotone_from();
    let window: Vec<&RatioPoint> = points.iter().filter(|p| p.k >= from).collect();
    let decreasing = window.windows(2).all(|w| strictly_less(w[1], w[0]));
    Ok(RatioSeries { case, points, decreasing })
}

/// `m^k (m/(k+1) - 3/2 + 1/(2m))`, the large-`m` form of `S(m-1,k) - m^k`.
pub fn asymptotic_value(m: u64, k: u32) -> Result<Rat> {
    if m < 3 || k < 2 {
        return domain(format!("asymptotic_value needs m >= 3, k >= 2 (got m = {m}, k = {k})"));
    }
    let mr = rat(m);
    Ok(rat_pow(&mr, k) * (&mr / rat(k + 1) - frac(3, 2) + frac(1, 2 * m)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threshold {
    pub k: u32,
    /// `3(k+1)/2`.
    pub predicted: Rat,
    /// Smallest `m >= 3` where `S(m-1,k) - m^k > 0`.
    pub crossing: u64,
    /// Largest `m` scanned, `4(k+2)`.
    pub scan_bound: u64,
    /// Values stay positive from `crossing` through `scan_bound`.
    pub single_crossing: bool,
}

/// Locates the sign crossing of the exact full-expansion polynomial by
/// scanning integer `m` from 3 to `4(k+2)`.
pub fn sign_threshold(k: u32) -> Result<Threshold> {
    if k < 1 {
        return domain("sign_threshold needs k >= 1");
    }
    let poly = full_eml_poly(k)?.poly;
    let scan_bound = 4 * (k as u64 + 2);
    let signs: Vec<(u64, Sign)> =
        (3..=scan_bound).map(|m| (m, Sign::of(&poly.eval_int(&Int::from(m))))).collect();
    let Some(pos) = signs.iter().position(|&(_, s)| s == Sign::Pos) else {
        return Err(Error::Inconsistency(format!("no sign crossing for k = {k} below m = {scan_bound}")));
    };
    let single_crossing = signs[pos..].iter().all(|&(_, s)| s == Sign::Pos);
    Ok(Threshold {
        k,
        predicted: frac(3 * (k as i64 + 1), 2),
        crossing: signs[pos].0,
        scan_bound,
        single_crossing,
    })
}

/// Convenience: `S(m-1,k) - m^k` sign straight from the full polynomial.
pub fn exact_sign(poly: &IntPoly, m: u64) -> Sign {
    Sign::of(&poly.eval_int(&Int::from(m)))
}
