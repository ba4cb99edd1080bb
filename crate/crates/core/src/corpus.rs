//! Seeded random braids and the property checks run over them.
//!
//! Generation is sequential from one ChaCha stream, so a `(seed, count)`
//! pair always yields the same braids and the same perturbations; checking
//! runs in parallel but results are collected in corpus order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{factorization_one, BraidWord, Letter};
use crate::invariant::{d3_theorem, D3Report};
use crate::poly::IntPoly;
use crate::report::fraction;
use crate::seifert::{alexander_polynomial, band_surface, seifert_matrix, SeifertMatrix};
use crate::surgery::{build_surgery, dgs_d3, verify_claim, LinkingRule};
use crate::cyclo::root_of_unity;

pub const MAX_STRANDS: usize = 5;
pub const MAX_LENGTH: usize = 12;

/// A braid together with the random choices used to perturb it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusBraid {
    pub word: BraidWord,
    /// Conjugating generator, absent on one strand.
    pub conjugator: Option<Letter>,
    pub pair_at: usize,
    pub pair_letter: Option<Letter>,
}

fn random_letter(rng: &mut ChaCha8Rng, strands: usize) -> Option<Letter> {
    (strands > 1).then(|| {
        let index = rng.gen_range(1..strands);
        if rng.gen_bool(0.5) {
            Letter::pos(index)
        } else {
            Letter::neg(index)
        }
    })
}

/// `m` uniform in `1..=5`, length uniform in `0..=12` (0 when `m = 1`).
pub fn generate(seed: u64, count: usize) -> Vec<CorpusBraid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let strands = rng.gen_range(1..=MAX_STRANDS);
            let len = if strands == 1 { 0 } else { rng.gen_range(0..=MAX_LENGTH) };
            let letters: Vec<Letter> = (0..len).filter_map(|_| random_letter(&mut rng, strands)).collect();
            let word = BraidWord::new(strands, letters).expect("generated letters are in range");
            let conjugator = random_letter(&mut rng, strands);
            let pair_at = rng.gen_range(0..=len);
            let pair_letter = random_letter(&mut rng, strands);
            CorpusBraid { word, conjugator, pair_at, pair_letter }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusConfig {
    pub seed: u64,
    pub count: usize,
    pub pmax: usize,
    pub rule: LinkingRule,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig { seed: 0, count: 100, pmax: 3, rule: LinkingRule::Sheetwise }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusFailure {
    pub word: String,
    pub strands: usize,
    pub p: usize,
    pub check: String,
    pub detail: String,
    pub reproduce: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub config: CorpusConfig,
    pub braids: usize,
    pub passed: usize,
    pub failures: Vec<CorpusFailure>,
}

impl CorpusSummary {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn headline(&self) -> String {
        format!("{}/{} passed", self.passed, self.braids)
    }
}

struct Ctx<'a> {
    w: &'a BraidWord,
    failures: Vec<CorpusFailure>,
}

impl Ctx<'_> {
    fn fail(&mut self, p: usize, check: &str, detail: String, reproduce: String) {
        self.failures.push(CorpusFailure {
            word: self.w.to_text(),
            strands: self.w.strands(),
            p,
            check: check.to_string(),
            detail,
            reproduce,
        });
    }

    fn verify_cmd(&self, p: usize, literal: bool, rule: LinkingRule) -> String {
        let mut cmd = format!(
            "cyclic-d3 verify '{}' --strands {} --p {} --{}",
            self.w.to_text(),
            self.w.strands(),
            p,
            if literal { "literal" } else { "reduced" }
        );
        if rule == LinkingRule::AllPairs {
            cmd.push_str(" --all-pairs-linking");
        }
        cmd
    }

    fn table_cmd(w: &BraidWord, p: usize) -> String {
        format!("cyclic-d3 table '{}' --strands {} --pmax {}", w.to_text(), w.strands(), p)
    }
}

fn seifert(w: &BraidWord, reduce: bool) -> Option<SeifertMatrix> {
    seifert_matrix(&band_surface(w, &factorization_one(w, reduce))).ok()
}

/// Transverse-preserving moves that apply to the braid.
pub fn transverse_variants(b: &CorpusBraid) -> Vec<(&'static str, BraidWord)> {
    let w = &b.word;
    let mut out = Vec::new();
    if let Some(g) = b.conjugator {
        out.extend(w.conjugate(g).ok().map(|v| ("conjugation", v)));
    }
    if let Some(&site) = w.relation_sites().first() {
        out.extend(w.apply_braid_relation(site).ok().map(|v| ("braid relation", v)));
    }
    if let Some(site) = (1..w.len()).find(|&k| w.commute(k).is_ok()) {
        out.extend(w.commute(site).ok().map(|v| ("far commutation", v)));
    }
    out.push(("positive stabilization", w.positive_stabilize()));
    if let Some(l) = b.pair_letter {
        out.extend(w.insert_cancelling_pair(b.pair_at, l).ok().map(|v| ("cancelling pair", v)));
    }
    out
}

/// Nullity at `ω ≠ 1` is positive exactly when `Δ(ω) = 0`.
fn nullity_matches(delta: &IntPoly, report: &D3Report) -> Result<(), String> {
    for v in report.tl.values.iter().filter(|v| v.k != 0) {
        let omega = root_of_unity(v.k, report.p).map_err(|e| e.to_string())?;
        let vanishes = delta.eval_cyclo(&omega).is_zero();
        if vanishes != (v.nullity > 0) {
            return Err(format!("k={}: nullity {} but Δ(ω) {}", v.k, v.nullity, if vanishes { "= 0" } else { "≠ 0" }));
        }
    }
    Ok(())
}

pub fn check_braid(b: &CorpusBraid, pmax: usize, rule: LinkingRule) -> Vec<CorpusFailure> {
    let w = &b.word;
    let mut ctx = Ctx { w, failures: Vec::new() };
    let (Some(lit), Some(red)) = (seifert(w, false), seifert(w, true)) else {
        ctx.fail(0, "seifert surface", "disconnected band surface".into(), Ctx::table_cmd(w, 1));
        return ctx.failures;
    };
    let delta = alexander_polynomial(&red);
    if alexander_polynomial(&lit) != delta {
        ctx.fail(0, "alexander literal/reduced", format!("{} vs {}", alexander_polynomial(&lit), delta), Ctx::table_cmd(w, 1));
    }
    if delta.reversed().normalized() != delta {
        ctx.fail(0, "alexander symmetry", format!("Δ(t) = {delta} is not symmetric"), Ctx::table_cmd(w, 1));
    }
    let variants = transverse_variants(b);
    for (name, v) in &variants {
        if let Some(a) = seifert(v, true) {
            let dv = alexander_polynomial(&a);
            if dv != delta {
                ctx.fail(0, "alexander invariance", format!("{name} -> '{}': {dv} vs {delta}", v.to_text()), Ctx::table_cmd(v, 1));
            }
        }
    }

    for p in 1..=pmax {
        let report = match d3_theorem(w, p) {
            Ok(r) => r,
            Err(e) => {
                ctx.fail(p, "theorem path", e.to_string(), Ctx::table_cmd(w, p));
                continue;
            }
        };
        let d3 = &report.d3_theorem;
        if !(d3 * crate::Rational::from_integer(4.into())).is_integer() {
            ctx.fail(p, "quarter integrality", format!("d3 = {}", fraction(d3)), Ctx::table_cmd(w, p));
        }
        for k in 1..p {
            if report.tl.signature(k) != report.tl.signature(p - k) {
                ctx.fail(p, "conjugate symmetry", format!("σ({k}) ≠ σ({})", p - k), Ctx::table_cmd(w, p));
            }
        }
        if let Err(detail) = nullity_matches(&delta, &report) {
            ctx.fail(p, "nullity vs alexander", detail, Ctx::table_cmd(w, p));
        }
        for (name, v) in &variants {
            match d3_theorem(v, p) {
                Ok(rv) if rv.d3_theorem == *d3 => {}
                Ok(rv) => ctx.fail(
                    p,
                    "transverse invariance",
                    format!("{name} -> '{}': {} vs {}", v.to_text(), fraction(&rv.d3_theorem), fraction(d3)),
                    Ctx::table_cmd(v, p),
                ),
                Err(e) => ctx.fail(p, "transverse invariance", e.to_string(), Ctx::table_cmd(v, p)),
            }
        }
        if p < 2 {
            continue;
        }
        for (literal, a) in [(true, &lit), (false, &red)] {
            let f = factorization_one(w, !literal);
            let outcome = build_surgery(&f, p, rule).and_then(|d| Ok((verify_claim(a, &d)?, dgs_d3(&d, &f)?)));
            match outcome {
                Ok((claim, breakdown)) => {
                    if !claim.holds {
                        let detail = format!("σ(X) = {} but Σσ_ω = {}", claim.sigma_x, claim.tl_sum);
                        let cmd = ctx.verify_cmd(p, literal, rule);
                        ctx.fail(p, "signature claim", detail, cmd);
                    }
                    if breakdown.d3 != *d3 {
                        let detail = format!("surgery {} vs formula {}", fraction(&breakdown.d3), fraction(d3));
                        let cmd = ctx.verify_cmd(p, literal, rule);
                        ctx.fail(p, "path agreement", detail, cmd);
                    }
                }
                Err(e) => {
                    let cmd = ctx.verify_cmd(p, literal, rule);
                    ctx.fail(p, "surgery path", e.to_string(), cmd);
                }
            }
        }
    }
    ctx.failures
}

pub fn run_corpus(config: CorpusConfig) -> CorpusSummary {
    let braids = generate(config.seed, config.count);
    let per_braid: Vec<Vec<CorpusFailure>> =
        braids.par_iter().map(|b| check_braid(b, config.pmax, config.rule)).collect();
    let passed = per_braid.iter().filter(|f| f.is_empty()).count();
    CorpusSummary {
        config,
        braids: braids.len(),
        passed,
        failures: per_braid.into_iter().flatten().collect(),
    }
}
