//! The two-term Euler–Maclaurin approximant and its truncation error.
//!
//! `m` is taken as an exact rational, so statements about "how close" the
//! approximant is become exact statements about rationals.

use num_traits::Signed;

use crate::arith::{frac, rat, rat_pow, Rat};
use crate::error::{domain, Result};
use crate::powersum::{correction_term, max_corrections};

/// Evaluation point `m >= 2` of the continuous extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealArg(Rat);

impl RealArg {
    pub fn new(m: Rat) -> Result<Self> {
        if m < rat(2) {
            return domain(format!("m must be >= 2, got {m}"));
        }
        Ok(Self(m))
    }

    pub fn from_int(m: u64) -> Result<Self> {
        Self::new(rat(m))
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    fn upper(&self) -> Rat {
        &self.0 - rat(1)
    }
}

fn check_k(k: u32) -> Result<()> {
    if k < 1 {
        return domain("k must be >= 1");
    }
    Ok(())
}

/// `((m-1)^{k+1} - 1)/(k+1) + (1 + (m-1)^k)/2`.
pub fn s_r(m: &RealArg, k: u32) -> Result<Rat> {
    check_k(k)?;
    let b = m.upper();
    Ok((rat_pow(&b, k + 1) - rat(1)) / rat(k + 1) + (rat(1) + rat_pow(&b, k)) / rat(2))
}

/// First correction `C = (k/12) ((m-1)^{k-1} - 1)`; zero for `k = 1`.
pub fn correction_first(m: &RealArg, k: u32) -> Result<Rat> {
    check_k(k)?;
    Ok(frac(k, 12) * (rat_pow(&m.upper(), k - 1) - rat(1)))
}

/// `|C| / L` with leading term `L = (m-1)^{k+1}/(k+1)`; needs `m >= 3`.
pub fn correction_ratio(m: &RealArg, k: u32) -> Result<Rat> {
    check_k(k)?;
    if m.value() < &rat(3) {
        return domain(format!("correction_ratio needs m >= 3, got {}", m.value()));
    }
    let leading = rat_pow(&m.upper(), k + 1) / rat(k + 1);
    Ok(correction_first(m, k)?.abs() / leading)
}

/// `s_r` plus the first `p` correction terms (orders `r = 1..=p`).
///
/// Terms with `2r - 1 > k` vanish, so any `p >= floor(k/2)` gives the full
/// expansion, which equals the exact sum at integer `m`.
pub fn s_eml_truncated(m: &RealArg, k: u32, p: i64) -> Result<Rat> {
    if p < 0 {
        return domain(format!("truncation order p must be >= 0, got {p}"));
    }
    let base = s_r(m, k)?;
    let upto = (p as u64).min(max_corrections(k) as u64) as u32;
    let b = m.upper();
    Ok((1..=upto).fold(base, |acc, r| acc + correction_term(&b, k, r)))
}

/// `|s_eml_truncated - S(m-1, k)|` against a supplied exact sum.
pub fn truncation_error(m: &RealArg, k: u32, p: i64, exact: &Rat) -> Result<Rat> {
    Ok((s_eml_truncated(m, k, p)? - exact).abs())
}
