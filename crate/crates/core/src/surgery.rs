//! The framed surgery link of the 2-handlebody `X` bounded by the cover,
//! read off from the factorization, and `d3` evaluated from it.
//!
//! Every letter `σ_i^ε` of the factorization contributes `p - 1` unknotted
//! components `C_{j,1}, …, C_{j,p-1}` (one per sheet). Framings are `-2` for
//! positive letters (contact `-1` surgery) and `0` for negative letters
//! (contact `+1` surgery). All nonzero linking numbers are `-1`:
//!
//! * inside a positive letter consecutive sheets link (a chain), inside a
//!   negative letter nothing links;
//! * for letters `k < l`, `C_{k,s}` links `C_{l,t}` iff
//!   `i_k ∈ {i_l, i_l + 1}` and `s ∈ {t, t + 1}`.

use std::fmt;

use serde::Serialize;

use crate::braid::{Factorization, Sign};
use crate::error::{Error, Result};
use crate::linalg::{symmetric_signature, Matrix, SignatureTriple};
use crate::seifert::SeifertMatrix;
use crate::tristram::tl_sum;
use crate::Rational;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinkingRule {
    /// Cross-letter linking only between sheets `s ∈ {t, t + 1}`.
    #[default]
    Sheetwise,
    /// Diagnostics: cross-letter linking between every pair of sheets.
    /// Known to break `σ(X) = Σ σ_ω`; kept to show the checks can fail.
    AllPairs,
}

impl fmt::Display for LinkingRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinkingRule::Sheetwise => "sheetwise",
            LinkingRule::AllPairs => "all-pairs",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// 1-based position of the letter in the factorization.
    pub letter: usize,
    /// Sheet index in `1..p`.
    pub sheet: usize,
    pub contact_coefficient: i64,
    pub framing: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgeryDiagram {
    pub p: usize,
    pub rule: LinkingRule,
    pub components: Vec<Component>,
    pub linking: Matrix<i64>,
}

impl SurgeryDiagram {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Number of contact `(+1)`-surgeries.
    pub fn plus_surgeries(&self) -> usize {
        self.components.iter().filter(|c| c.contact_coefficient == 1).count()
    }
}

fn linking_number(f: &Factorization, rule: LinkingRule, a: &Component, b: &Component) -> i64 {
    let (a, b) = if a.letter <= b.letter { (a, b) } else { (b, a) };
    let letters = f.letters();
    let (first, second) = (letters[a.letter - 1], letters[b.letter - 1]);
    if a.letter == b.letter {
        let chain = first.sign == Sign::Positive && a.sheet.abs_diff(b.sheet) == 1;
        return if chain { -1 } else { 0 };
    }
    let adjacent = first.index == second.index || first.index == second.index + 1;
    let sheets = match rule {
        LinkingRule::Sheetwise => a.sheet == b.sheet || a.sheet == b.sheet + 1,
        LinkingRule::AllPairs => true,
    };
    if adjacent && sheets {
        -1
    } else {
        0
    }
}

/// Components are ordered letter by letter, sheets ascending.
pub fn build_surgery(f: &Factorization, p: usize, rule: LinkingRule) -> Result<SurgeryDiagram> {
    if p < 2 {
        return Err(Error::DegreeTooSmall { p, min: 2 });
    }
    let components: Vec<Component> = f
        .letters()
        .iter()
        .enumerate()
        .flat_map(|(j, l)| {
            (1..p).map(move |sheet| {
                let (contact_coefficient, framing) = match l.sign {
                    Sign::Positive => (-1, -2),
                    Sign::Negative => (1, 0),
                };
                Component { letter: j + 1, sheet, contact_coefficient, framing }
            })
        })
        .collect();
    let n = components.len();
    let linking = Matrix::from_fn(n, n, |x, y| {
        if x == y {
            components[x].framing
        } else {
            linking_number(f, rule, &components[x], &components[y])
        }
    });
    Ok(SurgeryDiagram { p, rule, components, linking })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DgsBreakdown {
    pub sigma_x: i64,
    pub chi_x: i64,
    pub q: i64,
    #[serde(serialize_with = "crate::report::exact_rational")]
    pub d3: Rational,
    pub inertia: SignatureTriple,
}

/// `d3 = (-3σ(X) - 2χ(X)) / 4 + q`. The `c²` term vanishes because every
/// component has rotation number zero.
pub fn dgs_d3(d: &SurgeryDiagram, f: &Factorization) -> Result<DgsBreakdown> {
    debug_assert_eq!(d.len(), f.len() * (d.p - 1));
    let inertia = symmetric_signature(&d.linking)?;
    let sigma_x = inertia.signature();
    let chi_x = d.len() as i64 + 1;
    let q = d.plus_surgeries() as i64;
    let d3 = Rational::new((-3 * sigma_x - 2 * chi_x).into(), 4.into()) + Rational::from_integer(q.into());
    Ok(DgsBreakdown { sigma_x, chi_x, q, d3, inertia })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub sigma_x: i64,
    pub tl_sum: i64,
    pub holds: bool,
}

/// Checks `σ(X) = Σ_{ω^p = 1} σ_ω(K)` for a diagram and Seifert matrix
/// built from the same factorization.
pub fn verify_claim(a: &SeifertMatrix, d: &SurgeryDiagram) -> Result<ClaimReport> {
    let sigma_x = symmetric_signature(&d.linking)?.signature();
    let tl_sum = tl_sum(a, d.p)?.sum;
    Ok(ClaimReport { sigma_x, tl_sum, holds: sigma_x == tl_sum })
}
