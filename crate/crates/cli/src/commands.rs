//! One builder per subcommand, each turning library output into a [`Document`].

use emw_core::approx::{correction_first, correction_ratio, s_eml_truncated, s_r, truncation_error, RealArg};
use emw_core::candidates::{candidate_roots, highlighted_candidates};
use emw_core::figures::{figure1_rows, figure2_rows};
use emw_core::polyform::{cleared_poly, full_eml_poly, q_poly, IntPoly};
use emw_core::powersum::{max_corrections, sum_direct, sum_eml_exact, PowerSumQuery};
use emw_core::signanalysis::{ratio_series, sign_summary, sign_threshold, Sign};
use emw_core::{par, search, DivisorBudget, Int, Rat, Result};
use num_traits::Signed;

use crate::output::{Cell, Document};
use crate::{Command, GlobalOpts};

/// A rendered command plus any diagnostics for stderr.
pub struct Outcome {
    pub doc: Document,
    pub warnings: Vec<String>,
}

impl From<Document> for Outcome {
    fn from(doc: Document) -> Self {
        Self { doc, warnings: Vec::new() }
    }
}

fn range_str<T: std::fmt::Display>(r: &std::ops::RangeInclusive<T>) -> String {
    format!("{}..{}", r.start(), r.end())
}

fn sign_cell(s: Sign) -> Cell {
    Cell::text(s.label())
}

fn rat_sign(v: &Rat) -> Cell {
    sign_cell(Sign::of_rat(v))
}

/// Float column, followed by the exact `p/q` column when `exact` is set.
fn rat_cells(row: &mut Vec<Cell>, v: &Rat, exact: bool) {
    row.push(Cell::approx_rat(v));
    if exact {
        row.push(Cell::exact_rat(v));
    }
}

fn with_exact(base: &[&'static str], exact: bool) -> Vec<&'static str> {
    base.iter().copied().filter(|c| exact || !c.ends_with("_exact")).collect()
}

pub fn dispatch(cmd: &Command, g: &GlobalOpts, budget: DivisorBudget) -> Result<Outcome> {
    match cmd {
        Command::Sum { k, m } => sum(*k, *m).map(Into::into),
        Command::Approx { k, m, p } => approx(*k, m, *p, g.exact).map(Into::into),
        Command::Poly { k, full_eml, q } => poly(*k, *full_eml, *q).map(Into::into),
        Command::Candidates { k } => candidates(*k, budget).map(Into::into),
        Command::Signs { k_max } => signs(*k_max, budget).map(Into::into),
        Command::Ratios { case, k, step } => ratios(*case, k.clone(), *step, g.exact),
        Command::Threshold { k } => threshold(k.clone(), g.exact),
        Command::Search { k, m } => search_cmd(k.clone(), m.clone(), g.jobs),
        Command::Figure1 { k, m } => figure1(k.clone(), m.clone()).map(Into::into),
        Command::Figure2 { k_to } => figure2(*k_to, g.exact).map(Into::into),
    }
}

fn sum(k: u32, m: u64) -> Result<Document> {
    if m < 2 {
        return Err(emw_core::Error::Domain(format!("sum needs m >= 2, got {m}")));
    }
    let q = PowerSumQuery::new(m - 1, k)?;
    let s = sum_direct(q);
    let eml = sum_eml_exact(q)?;
    let diff = &eml - Rat::from_integer(s.clone());
    let mut doc = Document::new("sum", vec!["k", "m", "S", "EML", "diff"]).param("k", k).param("m", m);
    doc.push(vec![k.into(), m.into(), Cell::exact_int(&s), Cell::exact_rat(&eml), Cell::exact_rat(&diff)]);
    Ok(doc)
}

fn approx(k: u32, m: &Rat, p: Option<i64>, exact: bool) -> Result<Document> {
    let arg = RealArg::new(m.clone())?;
    let p = p.unwrap_or(max_corrections(k) as i64);
    let sr = s_r(&arg, k)?;
    let c1 = correction_first(&arg, k)?;
    let ratio = correction_ratio(&arg, k).ok();
    let trunc = s_eml_truncated(&arg, k, p)?;
    let exact_sum = m.is_integer().then(|| {
        let n = (m.to_integer() - 1u32).try_into().unwrap_or(u64::MAX);
        PowerSumQuery::new(n, k).map(|q| Rat::from_integer(sum_direct(q)))
    });
    let exact_sum = exact_sum.transpose()?;
    let err = exact_sum.as_ref().map(|s| truncation_error(&arg, k, p, s)).transpose()?;

    let columns = with_exact(
        &[
            "k",
            "m",
            "p",
            "S_R",
            "S_R_exact",
            "C1",
            "C1_exact",
            "C1_over_L",
            "S_EML_p",
            "S_EML_p_exact",
            "S",
            "S_exact",
            "error",
            "error_exact",
        ],
        exact,
    );
    let mut doc = Document::new("approx", columns).param("k", k).param("m", m.to_string()).param("p", p);
    let mut row = vec![k.into(), Cell::Exact(m.to_string()), Cell::Int(p)];
    rat_cells(&mut row, &sr, exact);
    rat_cells(&mut row, &c1, exact);
    row.push(Cell::Float(ratio.as_ref().map(emw_core::arith::rat_to_f64)));
    rat_cells(&mut row, &trunc, exact);
    for v in [&exact_sum, &err] {
        match v {
            Some(v) => rat_cells(&mut row, v, exact),
            None => {
                row.push(Cell::Float(None));
                if exact {
                    row.push(Cell::text(""));
                }
            }
        }
    }
    doc.push(row);
    Ok(doc)
}

fn poly_rows(doc: &mut Document, k: u32, kind: &str, multiplier: &Int, p: &IntPoly) {
    for (i, c) in p.coeffs().iter().enumerate() {
        doc.push(vec![k.into(), Cell::text(kind), Cell::exact_int(multiplier), i.into(), Cell::exact_int(c)]);
    }
}

fn poly(k: u32, full: bool, q: bool) -> Result<Document> {
    let kind = if full {
        "full_eml"
    } else if q {
        "q"
    } else {
        "cleared"
    };
    let mut doc = Document::new("poly", vec!["k", "kind", "multiplier", "power", "coefficient"])
        .param("k", k)
        .param("kind", kind);
    if full {
        let c = full_eml_poly(k)?;
        poly_rows(&mut doc, k, kind, &c.multiplier, &c.poly);
    } else {
        let c = cleared_poly(k)?;
        if q {
            poly_rows(&mut doc, k, kind, &c.multiplier, &q_poly(k)?);
        } else {
            poly_rows(&mut doc, k, kind, &c.multiplier, &c.poly);
        }
    }
    Ok(doc)
}

fn candidates(k: u32, budget: DivisorBudget) -> Result<Document> {
    let set = candidate_roots(k, budget)?;
    let highlighted = highlighted_candidates(k);
    let mut doc = Document::new("candidates", vec!["k", "source", "candidate", "integer_ge3", "case"])
        .param("k", k)
        .param("source", set.source.to_string())
        .param("constant", set.constant.to_string())
        .param("leading", set.leading.to_string());
    let src = set.source.to_string();
    if set.zero_root {
        doc.push(vec![
            k.into(),
            Cell::text(src.clone()),
            Cell::Exact("0".into()),
            Cell::Bool(false),
            Cell::text(""),
        ]);
    }
    for c in &set.all_candidates {
        let int_ge3 = c.is_integer() && set.integer_candidates_ge3.contains(&c.to_integer());
        let label = if c.is_integer() {
            highlighted
                .iter()
                .filter(|(_, m0)| *m0 == c.to_integer())
                .map(|(case, _)| case.label())
                .collect::<Vec<_>>()
                .join(";")
        } else {
            String::new()
        };
        doc.push(vec![
            k.into(),
            Cell::text(src.clone()),
            Cell::exact_rat(c),
            Cell::Bool(int_ge3),
            Cell::text(label),
        ]);
    }
    Ok(doc)
}

fn signs(k_max: u32, budget: DivisorBudget) -> Result<Document> {
    let rows = sign_summary(k_max, budget)?;
    let mut doc = Document::new("signs", vec!["k", "case", "m0", "value", "sign", "log10_abs_value"])
        .param("k_max", k_max);
    for r in rows {
        doc.push(vec![
            r.k.into(),
            Cell::text(r.case.to_string()),
            Cell::exact_int(&r.m0),
            Cell::exact_int(&r.value),
            sign_cell(r.sign),
            Cell::log10_int(&r.value),
        ]);
    }
    Ok(doc)
}

fn ratios(
    case: emw_core::candidates::CaseKind,
    k: std::ops::RangeInclusive<u32>,
    step: u32,
    exact: bool,
) -> Result<Outcome> {
    let series = ratio_series(case, *k.start(), *k.end(), step)?;
    let columns = with_exact(&["case", "k", "R", "R_exact", "limit", "R_minus_limit"], exact);
    let mut doc = Document::new("ratios", columns)
        .param("case", case.label())
        .param("k", range_str(&k))
        .param("step", step)
        .param("decreasing", series.decreasing);
    for p in &series.points {
        let mut row = vec![Cell::text(case.label()), p.k.into(), Cell::float(p.r_float)];
        if exact {
            row.push(match &p.r_exact {
                Some(r) => Cell::exact_rat(r),
                None => Cell::text(""),
            });
        }
        row.push(Cell::float(p.limit));
        row.push(Cell::float(p.r_float - p.limit));
        doc.push(row);
    }
    let mut warnings = Vec::new();
    if !series.decreasing {
        warnings.push(format!(
            "{} ratio is not monotonically decreasing over {}",
            case.label(),
            range_str(&k)
        ));
    }
    Ok(Outcome { doc, warnings })
}

fn threshold(k: std::ops::RangeInclusive<u32>, exact: bool) -> Result<Outcome> {
    let rows = par::try_map_ordered(k.clone().collect(), sign_threshold)?;
    let columns = with_exact(
        &["k", "predicted", "predicted_exact", "crossing", "offset", "scan_bound", "single_crossing"],
        exact,
    );
    let mut doc = Document::new("threshold", columns).param("k", range_str(&k));
    let mut warnings = Vec::new();
    for t in rows {
        let mut row = vec![t.k.into()];
        rat_cells(&mut row, &t.predicted, exact);
        let offset = Rat::from_integer(Int::from(t.crossing)) - &t.predicted;
        row.push(t.crossing.into());
        row.push(Cell::approx_rat(&offset));
        row.push(t.scan_bound.into());
        row.push(Cell::Bool(t.single_crossing));
        if !t.single_crossing {
            warnings.push(format!("k = {}: sign changes more than once below m = {}", t.k, t.scan_bound));
        }
        doc.push(row);
    }
    Ok(Outcome { doc, warnings })
}

fn search_cmd(
    k: std::ops::RangeInclusive<u32>,
    m: std::ops::RangeInclusive<u64>,
    jobs: Option<u32>,
) -> Result<Outcome> {
    let shards = match jobs {
        Some(n) => n as usize,
        None => (k.end() - k.start()) as usize + 1,
    };
    let report = search::scan_sharded(k.clone(), m.clone(), shards)?;
    let mut doc = Document::new("search", vec!["k", "m"]).param("k", range_str(&k)).param("m", range_str(&m));
    for h in &report.hits {
        doc.push(vec![h.k.into(), h.m.into()]);
    }
    let warnings = report
        .multi_crossing
        .iter()
        .map(|k| format!("k = {k}: more than one sign change in the scanned m range"))
        .collect();
    Ok(Outcome { doc, warnings })
}

pub const FIGURE1_COLUMNS: [&str; 20] = [
    "k",
    "m",
    "S_exact",
    "S_exact_log10",
    "S_R",
    "S_R_log10",
    "m_pow_k",
    "m_pow_k_log10",
    "P_R",
    "P_R_sign",
    "P_R_log10",
    "P_R_plus_C",
    "P_R_plus_C_sign",
    "P_R_plus_C_log10",
    "P_exact",
    "P_exact_sign",
    "P_exact_log10",
    "P_R_plus_C_minus_P_exact",
    "P_R_plus_C_minus_P_exact_sign",
    "P_R_plus_C_minus_P_exact_log10",
];

fn figure1(k: std::ops::RangeInclusive<u32>, m: std::ops::RangeInclusive<u64>) -> Result<Document> {
    let rows = figure1_rows(k.clone(), m.clone())?;
    let mut doc = Document::new("figure1", FIGURE1_COLUMNS.to_vec())
        .param("k", range_str(&k))
        .param("m", range_str(&m));
    // Decimal expansion of the big values dominates; spread it over workers.
    doc.rows = par::map_ordered(rows, |r| {
        let gap = &r.p_r_plus_c - Rat::from_integer(r.p_exact.clone());
        vec![
            r.k.into(),
            r.m.into(),
            Cell::exact_int(&r.s_exact),
            Cell::log10_int(&r.s_exact),
            Cell::exact_rat(&r.s_r),
            Cell::log10_rat(&r.s_r),
            Cell::exact_int(&r.m_pow_k),
            Cell::log10_int(&r.m_pow_k),
            Cell::exact_rat(&r.p_r),
            rat_sign(&r.p_r),
            Cell::log10_rat(&r.p_r),
            Cell::exact_rat(&r.p_r_plus_c),
            rat_sign(&r.p_r_plus_c),
            Cell::log10_rat(&r.p_r_plus_c),
            Cell::exact_int(&r.p_exact),
            sign_cell(Sign::of(&r.p_exact)),
            Cell::log10_int(&r.p_exact),
            Cell::exact_rat(&gap),
            rat_sign(&gap),
            Cell::log10_rat(&gap.abs()),
        ]
    });
    Ok(doc)
}

fn figure2(k_to: u32, exact: bool) -> Result<Document> {
    let rows = figure2_rows(k_to)?;
    let columns =
        with_exact(&["case", "k", "m0", "value", "sign", "log10_abs_value", "R", "R_exact", "limit"], exact);
    let mut doc = Document::new("figure2", columns).param("k_to", k_to);
    for r in rows {
        let mut row = vec![
            Cell::text(r.case.label()),
            r.k.into(),
            r.m0.into(),
            Cell::exact_int(&r.value),
            sign_cell(r.sign),
            Cell::log10_int(&r.value),
            Cell::float(r.ratio.r_float),
        ];
        if exact {
            row.push(match &r.ratio.r_exact {
                Some(v) => Cell::exact_rat(v),
                None => Cell::text(""),
            });
        }
        row.push(Cell::float(r.ratio.limit));
        doc.push(row);
    }
    Ok(doc)
}
