//! JSON and text rendering of reports.
//!
//! Exact rationals serialize as `{"num": .., "den": .., "decimal": ".."}`.
//! `num`/`den` are JSON integers when they fit in `i64` and strings
//! otherwise.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::invariant::D3Report;
use crate::Rational;

const DECIMAL_PLACES: usize = 12;

/// Exact decimal expansion when the denominator is of the form `2^a 5^b`,
/// otherwise rounded half away from zero to twelve places with a trailing `…`.
pub fn decimal(x: &Rational) -> String {
    let mut den = x.denom().clone();
    let mut places = 0usize;
    for f in [2u32, 5] {
        let f = BigInt::from(f);
        let mut e = 0;
        while (&den % &f).is_zero() {
            den /= &f;
            e += 1;
        }
        places = places.max(e);
    }
    let terminating = den == BigInt::from(1);
    let places = if terminating { places.min(64) } else { DECIMAL_PLACES };
    let scale = BigInt::from(10).pow(places as u32);
    let scaled = x.abs() * Rational::from_integer(scale.clone());
    let digits = if terminating {
        scaled.to_integer()
    } else {
        (scaled + Rational::new(1.into(), 2.into())).floor().to_integer()
    };
    let (int, frac) = digits.div_rem(&scale);
    let mut out = String::new();
    if x.is_negative() && !digits.is_zero() {
        out.push('-');
    }
    write!(out, "{int}").unwrap();
    if places > 0 {
        let frac = frac.to_string();
        let mut frac = format!("{}{frac}", "0".repeat(places - frac.len()));
        if !terminating {
            while frac.ends_with('0') && frac.len() > 1 {
                frac.pop();
            }
        }
        write!(out, ".{frac}").unwrap();
        if !terminating {
            out.push('…');
        }
    }
    out
}

/// `num/den`, or just `num` for integers.
pub fn fraction(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

struct Big<'a>(&'a BigInt);

impl Serialize for Big<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct Exact<'a>(&'a Rational);

impl Serialize for Exact<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rational", 3)?;
        st.serialize_field("num", &Big(self.0.numer()))?;
        st.serialize_field("den", &Big(self.0.denom()))?;
        st.serialize_field("decimal", &decimal(self.0))?;
        st.end()
    }
}

pub fn exact_rational<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    Exact(x).serialize(s)
}

pub fn exact_rational_opt<S: Serializer>(x: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.serialize_some(&Exact(x)),
        None => s.serialize_none(),
    }
}

/// Reads back a rational written by [`exact_rational`].
pub fn parse_exact(v: &serde_json::Value) -> Option<Rational> {
    let part = |key: &str| -> Option<BigInt> {
        match &v[key] {
            serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
            serde_json::Value::String(s) => s.parse().ok(),
            _ => None,
        }
    };
    let den = part("den")?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(part("num")?, den))
}

fn echo(r: &D3Report) -> String {
    let word = if r.braid.word.is_empty() { "(empty)" } else { &r.braid.word };
    let noun = if r.braid.components == 1 { "component" } else { "components" };
    format!("braid {word} on {} strands, {} {noun}", r.braid.strands, r.braid.components)
}

pub fn render_text(r: &D3Report) -> String {
    let mut out = String::new();
    writeln!(out, "{}", echo(r)).unwrap();
    writeln!(out, "p = {}", r.p).unwrap();
    writeln!(out, "writhe = {}, sl = {}", r.writhe, r.sl).unwrap();
    writeln!(out, "alexander = {}", r.alexander).unwrap();
    let sigs: Vec<String> = r.tl.values.iter().map(|v| v.signature.to_string()).collect();
    writeln!(out, "tristram-levine signatures (k = 0..{}) = [{}]", r.p - 1, sigs.join(", ")).unwrap();
    writeln!(out, "Σσ_ω = {}", r.tl.sum).unwrap();
    writeln!(out, "d3 (formula) = {} = {}", fraction(&r.d3_theorem), decimal(&r.d3_theorem)).unwrap();
    if let Some(path) = &r.surgery_path {
        let b = &path.breakdown;
        writeln!(
            out,
            "surgery ({} factorization, {} components, {} linking): σ(X) = {}, χ(X) = {}, q = {}",
            path.factorization,
            path.linking_matrix.len(),
            path.rule,
            b.sigma_x,
            b.chi_x,
            b.q
        )
        .unwrap();
        writeln!(out, "d3 (surgery) = {} = {}", fraction(&b.d3), decimal(&b.d3)).unwrap();
    }
    if let Some(claim) = r.claim_verified {
        writeln!(out, "σ(X) = Σσ_ω: {}", if claim { "holds" } else { "FAILS" }).unwrap();
    }
    if let Some(agree) = r.paths_agree {
        writeln!(out, "paths agree: {}", if agree { "yes" } else { "NO" }).unwrap();
    }
    if let Some(g) = &r.genus_lower_bound {
        writeln!(out, "slice genus lower bound = {}", fraction(g)).unwrap();
    }
    out
}
