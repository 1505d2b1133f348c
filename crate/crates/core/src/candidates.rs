//! Rational-root-theorem candidates for the cleared polynomial.
//!
//! Even `k`: the cleared polynomial has constant `2(k-1)` and leading
//! coefficient 2. Odd `k`: its constant vanishes, `m = 0` is a root, and the
//! theorem is applied to the quotient `Q = P/m` with constant `(k+1)(k-2)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::arith::{divisors, rat, DivisorBudget, Int, Rat};
use crate::error::{domain, Error, Result};
use crate::polyform::{cleared_poly, q_poly, IntPoly};

/// The five highlighted candidate families, by parity of `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseKind {
    /// Even `k >= 4`, `m0 = k - 1`.
    EvenKm1,
    /// Even `k >= 4`, `m0 = 2(k - 1)`.
    Even2Km1,
    /// Odd `k >= 5`, `m0 = k - 2`.
    OddKm2,
    /// Odd `k >= 3`, `m0 = k + 1`.
    OddKp1,
    /// Odd `k >= 3`, `m0 = (k + 1)(k - 2)`.
    OddProd,
}

impl CaseKind {
    pub const ALL: [CaseKind; 5] = [Self::EvenKm1, Self::Even2Km1, Self::OddKm2, Self::OddKp1, Self::OddProd];

    pub fn label(self) -> &'static str {
        match self {
            Self::EvenKm1 => "EVEN_KM1",
            Self::Even2Km1 => "EVEN_2KM1",
            Self::OddKm2 => "ODD_KM2",
            Self::OddKp1 => "ODD_KP1",
            Self::OddProd => "ODD_PROD",
        }
    }

    pub fn wants_even_k(self) -> bool {
        matches!(self, Self::EvenKm1 | Self::Even2Km1)
    }

    pub fn min_k(self) -> u32 {
        match self {
            Self::EvenKm1 | Self::Even2Km1 => 4,
            Self::OddKm2 => 5,
            Self::OddKp1 | Self::OddProd => 3,
        }
    }

    /// Whether the case is defined at this `k` (parity and minimum).
    pub fn applies(self, k: u32) -> bool {
        k >= self.min_k() && k.is_multiple_of(2) == self.wants_even_k()
    }

    pub fn check(self, k: u32) -> Result<()> {
        if self.applies(k) {
            return Ok(());
        }
        let parity = if self.wants_even_k() { "even" } else { "odd" };
        domain(format!("{} needs {parity} k >= {}, got k = {k}", self.label(), self.min_k()))
    }

    /// The candidate `m0` for this case at `k`.
    pub fn m0(self, k: u32) -> u64 {
        let k = k as u64;
        match self {
            Self::EvenKm1 => k - 1,
            Self::Even2Km1 => 2 * (k - 1),
            Self::OddKm2 => k - 2,
            Self::OddKp1 => k + 1,
            Self::OddProd => (k + 1) * (k - 2),
        }
    }

    /// First `k` from which the ratio `R` is claimed to decrease.
    pub fn monotone_from(self) -> u32 {
        match self {
            Self::EvenKm1 => 4,
            Self::Even2Km1 => 8,
            Self::OddKm2 => 5,
            Self::OddKp1 => 3,
            Self::OddProd => 5,
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CaseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|c| c.label() == norm)
            .ok_or_else(|| Error::Domain(format!("unknown case '{s}'")))
    }
}

/// Which polynomial the theorem was applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolySource {
    /// The cleared polynomial itself (even `k`).
    P,
    /// `P / m` (odd `k`).
    Q,
}

impl fmt::Display for PolySource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::P => "P",
            Self::Q => "Q",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub k: u32,
    pub source: PolySource,
    /// Constant term of the polynomial the theorem was applied to.
    pub constant: Int,
    /// Leading coefficient of that polynomial.
    pub leading: Int,
    /// Positive `p/q` in lowest terms, ascending.
    pub all_candidates: Vec<Rat>,
    /// Integer candidates `>= 3`, ascending.
    pub integer_candidates_ge3: Vec<Int>,
    /// Odd `k`: `m = 0` was factored out before applying the theorem.
    pub zero_root: bool,
}

/// The polynomial the theorem is applied to, with its source tag.
pub fn reduced_poly(k: u32) -> Result<(IntPoly, PolySource)> {
    if k < 2 {
        return domain(format!("candidate_roots needs k >= 2, got {k}"));
    }
    if k.is_multiple_of(2) {
        Ok((cleared_poly(k)?.poly, PolySource::P))
    } else {
        Ok((q_poly(k)?, PolySource::Q))
    }
}

/// All positive rational-root candidates of the cleared polynomial (or its
/// quotient by `m` for odd `k`).
pub fn candidate_roots(k: u32, budget: DivisorBudget) -> Result<CandidateSet> {
    let (poly, source) = reduced_poly(k)?;
    let constant = poly.constant();
    let leading = poly.leading();
    if constant.is_zero() {
        return Err(Error::Inconsistency(format!("zero constant term after reduction at k = {k}")));
    }
    let ps = divisors(&constant.abs(), budget)?;
    let qs = divisors(&leading.abs(), budget)?;
    let set: BTreeSet<Rat> =
        ps.iter().flat_map(|p| qs.iter().map(move |q| Rat::new(p.clone(), q.clone()))).collect();
    let three = rat(3);
    let integer_candidates_ge3 =
        set.iter().filter(|c| c.is_integer() && **c >= three).map(|c| c.to_integer()).collect();
    Ok(CandidateSet {
        k,
        source,
        constant,
        leading,
        all_candidates: set.into_iter().collect(),
        integer_candidates_ge3,
        zero_root: source == PolySource::Q,
    })
}

/// The named candidates per case, with their minimum-`k` guards; empty when
/// no case applies.
pub fn highlighted_candidates(k: u32) -> Vec<(CaseKind, Int)> {
    CaseKind::ALL
        .into_iter()
        .filter(|c| c.applies(k))
        .map(|c| (c, c.m0(k)))
        .filter(|&(_, m0)| m0 >= 3)
        .map(|(c, m0)| (c, Int::from(m0)))
        .collect()
}
