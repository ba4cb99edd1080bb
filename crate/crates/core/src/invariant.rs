//! `d3` of the cyclic contact branched cover, by formula and by surgery.

use serde::Serialize;

use crate::braid::{factorization_one, BraidWord};
use crate::error::{Error, Result};
use crate::report::{exact_rational, exact_rational_opt};
use crate::seifert::{alexander_polynomial, band_surface, seifert_matrix, SeifertMatrix};
use crate::surgery::{build_surgery, dgs_d3, DgsBreakdown, LinkingRule};
use crate::tristram::{tl_sum, TLSpectrum};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidEcho {
    pub word: String,
    pub strands: usize,
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgeryPath {
    /// `"literal"` or `"reduced"`.
    pub factorization: &'static str,
    pub letters: Vec<i64>,
    pub rule: LinkingRule,
    pub linking_matrix: Vec<Vec<i64>>,
    pub breakdown: DgsBreakdown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct D3Report {
    pub braid: BraidEcho,
    pub p: usize,
    pub writhe: i64,
    pub sl: i64,
    pub seifert_matrix: Vec<Vec<i64>>,
    pub alexander: String,
    pub tl: TLSpectrum,
    #[serde(serialize_with = "exact_rational")]
    pub d3_theorem: Rational,
    pub surgery_path: Option<SurgeryPath>,
    pub claim_verified: Option<bool>,
    pub paths_agree: Option<bool>,
    /// Absent for `p = 1`, where the bound is vacuous.
    #[serde(serialize_with = "exact_rational_opt")]
    pub genus_lower_bound: Option<Rational>,
}

impl D3Report {
    /// False only when a surgery path was computed and disagrees with the
    /// formula, or the signature claim failed.
    pub fn consistent(&self) -> bool {
        self.claim_verified != Some(false) && self.paths_agree != Some(false)
    }
}

/// `-(3/4) Σ σ_ω - ((p-1)/2) sl - p/2`.
pub fn theorem_value(tl_sum: i64, sl: i64, p: usize) -> Rational {
    let p = p as i64;
    Rational::new((-3 * tl_sum - 2 * (p - 1) * sl - 2 * p).into(), 4.into())
}

fn seifert_for(w: &BraidWord, reduce: bool) -> Result<SeifertMatrix> {
    seifert_matrix(&band_surface(w, &factorization_one(w, reduce)))
}

/// Formula path only. Accepts `p = 1`, which always gives `-1/2`.
pub fn d3_theorem(w: &BraidWord, p: usize) -> Result<D3Report> {
    if p == 0 {
        return Err(Error::DegreeTooSmall { p, min: 1 });
    }
    let a = seifert_for(w, true)?;
    let tl = tl_sum(&a, p)?;
    let sl = w.self_linking();
    let d3 = theorem_value(tl.sum, sl, p);
    let genus_lower_bound = (p >= 2).then(|| bound(&d3, p));
    Ok(D3Report {
        braid: BraidEcho {
            word: w.to_text(),
            strands: w.strands(),
            components: w.closure_components(),
        },
        p,
        writhe: w.writhe(),
        sl,
        seifert_matrix: a.to_rows(),
        alexander: alexander_polynomial(&a).to_string(),
        tl,
        d3_theorem: d3,
        surgery_path: None,
        claim_verified: None,
        paths_agree: None,
        genus_lower_bound,
    })
}

/// Both paths. A disagreement is recorded in the report, not returned as an
/// error.
pub fn d3_verified(w: &BraidWord, p: usize, literal: bool, rule: LinkingRule) -> Result<D3Report> {
    if p < 2 {
        return Err(Error::DegreeTooSmall { p, min: 2 });
    }
    let mut report = d3_theorem(w, p)?;
    let f = factorization_one(w, !literal);
    let diagram = build_surgery(&f, p, rule)?;
    let breakdown = dgs_d3(&diagram, &f)?;
    report.claim_verified = Some(breakdown.sigma_x == report.tl.sum);
    report.paths_agree = Some(breakdown.d3 == report.d3_theorem);
    report.surgery_path = Some(SurgeryPath {
        factorization: if literal { "literal" } else { "reduced" },
        letters: f.letters().iter().map(|l| l.token()).collect(),
        rule,
        linking_matrix: diagram.linking.to_rows(),
        breakdown,
    });
    Ok(report)
}

fn bound(d3: &Rational, p: usize) -> Rational {
    let half = Rational::new(1.into(), 2.into());
    let g = (-d3 - half) * Rational::new(2.into(), (5 * (p as i64 - 1)).into());
    g.max(Rational::from_integer(0.into()))
}

/// Largest `g` with `d3 >= -(5/2)(p-1)g - 1/2`, clamped at 0.
pub fn genus_bound(report: &D3Report) -> Result<Rational> {
    if report.p < 2 {
        return Err(Error::DegreeTooSmall { p: report.p, min: 2 });
    }
    Ok(bound(&report.d3_theorem, report.p))
}
