//! Brute-force scan of `S(m-1, k) = m^k` over finite `(k, m)` boxes.
//!
//! Work is sharded by `k` so each shard keeps its running sum local; hits
//! are merged and sorted, so the output does not depend on the shard count.

use std::cmp::Ordering;
use std::ops::RangeInclusive;

use crate::arith::{int_pow, Int};
use crate::error::{domain, Result};
use crate::par;
use crate::powersum::{sum_direct, PowerSumQuery};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SearchHit {
    pub k: u32,
    pub m: u64,
}

/// Result of scanning one `k` across an `m` range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KScan {
    pub k: u32,
    pub hits: Vec<u64>,
    /// Sign changes of `S(m-1,k) - m^k` across the range, zeros skipped.
    pub sign_changes: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SearchReport {
    pub hits: Vec<SearchHit>,
    /// Values of `k` whose difference changed sign more than once.
    pub multi_crossing: Vec<u32>,
}

/// Exact test of `S(m-1, k) == m^k`.
pub fn check_pair(k: u32, m: u64) -> Result<bool> {
    if k < 1 || m < 3 {
        return domain(format!("check_pair needs k >= 1, m >= 3 (got k = {k}, m = {m})"));
    }
    let s = sum_direct(PowerSumQuery::new(m - 1, k)?);
    Ok(s == int_pow(&Int::from(m), k))
}

/// Scans `m` in `m_range` for one `k`, stepping the running sum by `(m-1)^k`.
pub fn scan_k(k: u32, m_range: RangeInclusive<u64>) -> Result<KScan> {
    let (lo, hi) = (*m_range.start(), *m_range.end());
    if k < 1 || lo < 3 || lo > hi {
        return domain(format!("scan_k needs k >= 1 and 3 <= m_lo <= m_hi (got k = {k}, m = {lo}..{hi})"));
    }
    let mut sum = sum_direct(PowerSumQuery::new(lo - 1, k)?);
    let mut hits = Vec::new();
    let mut sign_changes = 0;
    let mut last: Option<Ordering> = None;
    let mut m_pow = int_pow(&Int::from(lo), k);
    for m in lo..=hi {
        if m > lo {
            // S(m-1) = S(m-2) + (m-1)^k, and (m-1)^k is the previous m^k.
            sum += &m_pow;
            m_pow = int_pow(&Int::from(m), k);
        }
        let ord = sum.cmp(&m_pow);
        if ord == Ordering::Equal {
            hits.push(m);
            continue;
        }
        if last.is_some_and(|l| l != ord) {
            sign_changes += 1;
        }
        last = Some(ord);
    }
    Ok(KScan { k, hits, sign_changes })
}

fn check_ranges(k_range: &RangeInclusive<u32>, m_range: &RangeInclusive<u64>) -> Result<()> {
    if k_range.is_empty() || m_range.is_empty() {
        return domain("search ranges must be non-empty");
    }
    if *k_range.start() < 1 {
        return domain("search needs k >= 1");
    }
    if *m_range.start() < 3 {
        return domain("search needs m >= 3");
    }
    Ok(())
}

/// Full scan report with the given number of shards (`>= 1`).
pub fn scan_sharded(
    k_range: RangeInclusive<u32>,
    m_range: RangeInclusive<u64>,
    shards: usize,
) -> Result<SearchReport> {
    check_ranges(&k_range, &m_range)?;
    if shards == 0 {
        return domain("shard count must be >= 1");
    }
    let ks: Vec<u32> = k_range.collect();
    // Round-robin keeps shard cost balanced since cost grows with k.
    let shard_ks: Vec<Vec<u32>> =
        (0..shards.min(ks.len())).map(|s| ks.iter().copied().skip(s).step_by(shards).collect()).collect();
    let scans = par::try_map_ordered(shard_ks, |group| {
        group.into_iter().map(|k| scan_k(k, m_range.clone())).collect::<Result<Vec<_>>>()
    })?;
    let mut report = SearchReport::default();
    for scan in scans.into_iter().flatten() {
        report.hits.extend(scan.hits.iter().map(|&m| SearchHit { k: scan.k, m }));
        if scan.sign_changes > 1 {
            report.multi_crossing.push(scan.k);
        }
    }
    report.hits.sort();
    report.multi_crossing.sort();
    Ok(report)
}

/// All solutions in the box, sorted by `(k, m)`.
pub fn find_solutions(k_range: RangeInclusive<u32>, m_range: RangeInclusive<u64>) -> Result<Vec<SearchHit>> {
    let shards = (k_range.end().saturating_sub(*k_range.start()) as usize + 1).max(1);
    find_solutions_sharded(k_range, m_range, shards)
}

pub fn find_solutions_sharded(
    k_range: RangeInclusive<u32>,
    m_range: RangeInclusive<u64>,
    shards: usize,
) -> Result<Vec<SearchHit>> {
    Ok(scan_sharded(k_range, m_range, shards)?.hits)
}

/// Roots of `m(m-3) = 0` with `m >= 3` inside `m_range`: the `k = 1` closed form.
pub fn k1_closed_form(m_range: RangeInclusive<u64>) -> Vec<u64> {
    [0u64, 3].into_iter().filter(|m| *m >= 3 && m_range.contains(m)).collect()
}
