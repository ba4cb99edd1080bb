//! Exact arithmetic in cyclotomic fields `ℚ(ζ_d)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(d)-1}` reduced
//! modulo the `d`-th cyclotomic polynomial, so equality (and zero testing) is
//! coefficientwise. Signs of real elements are decided by evaluating the
//! real embedding `ζ ↦ e^{2πi/d}` with rational interval arithmetic and
//! doubling the precision until the enclosure excludes zero.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::interval::{cos_two_pi_ratio, Interval};
use crate::poly::{cyclotomic_polynomial, divrem, to_rational, trim_rational};
use crate::Rational;

/// The field `ℚ(ζ_d)` together with reduction data.
#[derive(Debug)]
pub struct CycloField {
    order: usize,
    /// Monic `Φ_d`, low degree first; length `degree + 1`.
    modulus: Vec<Rational>,
    /// `ζ^j` reduced, for `0 <= j < order`.
    powers: Vec<Vec<Rational>>,
}

impl CycloField {
    pub fn new(order: usize) -> Arc<CycloField> {
        assert!(order > 0, "cyclotomic field of order 0");
        let modulus = to_rational(cyclotomic_polynomial(order).coeffs());
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order);
        let mut cur = vec![Rational::zero(); degree];
        cur[0] = Rational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            cur = shift_reduce(&cur, &modulus);
        }
        Arc::new(CycloField { order, modulus, powers })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `φ(d)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut coeffs: Vec<Rational>) -> Vec<Rational> {
        let deg = self.degree();
        while coeffs.len() > deg {
            let top = coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = coeffs.len() - deg;
            for i in 0..deg {
                coeffs[shift + i] -= &top * &self.modulus[i];
            }
        }
        coeffs.resize(deg, Rational::zero());
        coeffs
    }
}

// multiply by ζ and reduce
fn shift_reduce(v: &[Rational], modulus: &[Rational]) -> Vec<Rational> {
    let deg = v.len();
    let mut out = vec![Rational::zero(); deg];
    let top = v[deg - 1].clone();
    for i in (1..deg).rev() {
        out[i] = v[i - 1].clone();
    }
    if !top.is_zero() {
        for (i, m) in modulus.iter().take(deg).enumerate() {
            out[i] -= &top * m;
        }
    }
    out
}

/// An element of `ℚ(ζ_d)`.
#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNumber {}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNumber({self})")
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => format!("{c}"),
                1 => format!("({c})*z{}", self.field.order),
                _ => format!("({c})*z{}^{k}", self.field.order),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl CycloNumber {
    pub fn from_rational(field: &Arc<CycloField>, value: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[0] = value;
        CycloNumber { field: Arc::clone(field), coeffs }
    }

    pub fn from_integer(field: &Arc<CycloField>, value: i64) -> Self {
        CycloNumber::from_rational(field, Rational::from_integer(value.into()))
    }

    /// `ζ_d^k` for any integer `k`.
    pub fn zeta_power(field: &Arc<CycloField>, k: i64) -> Self {
        let d = field.order as i64;
        let idx = k.mod_floor(&d) as usize;
        CycloNumber { field: Arc::clone(field), coeffs: field.powers[idx].clone() }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn field_zero(&self) -> Self {
        CycloNumber::from_rational(&self.field, Rational::zero())
    }

    pub fn field_one(&self) -> Self {
        CycloNumber::from_rational(&self.field, Rational::one())
    }

    pub fn field_constant(&self, value: Rational) -> Self {
        CycloNumber::from_rational(&self.field, value)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Complex conjugation, `ζ ↦ ζ^{d-1}`.
    pub fn conj(&self) -> Self {
        let d = self.field.order;
        let mut out = vec![Rational::zero(); self.field.degree()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = &self.field.powers[(d - k % d) % d];
            for (o, v) in out.iter_mut().zip(image) {
                *o += c * v;
            }
        }
        CycloNumber { field: Arc::clone(&self.field), coeffs: out }
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Φ_d`; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(self.field_constant(r.recip()));
        }
        // invariant: s_i * a ≡ r_i (mod Φ)
        let mut r0 = self.field.modulus.clone();
        let mut r1 = self.coeffs.clone();
        trim_rational(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while r1.len() > 1 {
            let (q, r) = divrem(&r0, &r1);
            let qs = poly_mul(&q, &s1);
            let s2 = poly_sub(&s0, &qs);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant because Φ_d is irreducible
        let c = r1[0].recip();
        let coeffs = s1.into_iter().map(|x| x * &c).collect();
        Some(CycloNumber { field: Arc::clone(&self.field), coeffs: self.field.reduce(coeffs) })
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.order, other.field.order,
            "mixing elements of cyclotomic fields of different orders"
        );
    }

    /// Floating-point value of the real part under `ζ ↦ e^{2πi/d}`.
    pub fn real_f64(&self) -> f64 {
        let d = self.field.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * (2.0 * std::f64::consts::PI * k as f64 / d).cos())
            .sum()
    }

    /// Floating-point complex value `(re, im)` under `ζ ↦ e^{2πi/d}`.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let d = self.field.order as f64;
        let im = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * (2.0 * std::f64::consts::PI * k as f64 / d).sin())
            .sum();
        (self.real_f64(), im)
    }

    /// Certified sign of a real element. Panics if the element is not real.
    pub fn real_sign(&self) -> Ordering {
        RealEmbedding::new(self.order()).sign(self)
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim_rational(&mut out);
    out
}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        self.check_same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CycloNumber { field: Arc::clone(&self.field), coeffs }
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self.check_same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CycloNumber { field: Arc::clone(&self.field), coeffs }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        self.check_same_field(rhs);
        let prod = poly_mul(&self.coeffs, &rhs.coeffs);
        CycloNumber { field: Arc::clone(&self.field), coeffs: self.field.reduce(prod) }
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: CycloNumber) -> CycloNumber {
        &self + &rhs
    }
}

impl Sub for CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: CycloNumber) -> CycloNumber {
        &self - &rhs
    }
}

impl Mul for CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: CycloNumber) -> CycloNumber {
        &self * &rhs
    }
}

/// `ω = e^{2πik/p}` as an element of `ℚ(ζ_d)`, `d = p / gcd(k, p)`.
pub fn root_of_unity(k: usize, p: usize) -> Result<CycloNumber> {
    if p == 0 || k >= p {
        return Err(Error::RootOutOfRange { k, p });
    }
    let g = k.gcd(&p);
    let d = p / g;
    let field = CycloField::new(d);
    Ok(CycloNumber::zeta_power(&field, (k / g) as i64))
}

/// Interval evaluation of real elements of one field, with the cosine
/// enclosures cached per precision.
pub struct RealEmbedding {
    order: usize,
    cache: HashMap<u32, Arc<Vec<Interval>>>,
}

const START_BITS: u32 = 64;

type CosineTable = HashMap<(usize, u32), Arc<Vec<Interval>>>;

impl RealEmbedding {
    pub fn new(order: usize) -> Self {
        RealEmbedding { order, cache: HashMap::new() }
    }

    fn cosines(&mut self, degree: usize, bits: u32) -> Arc<Vec<Interval>> {
        let order = self.order;
        let shared = || {
            // enclosures are costly; share them across embeddings and threads
            static SHARED: OnceLock<Mutex<CosineTable>> = OnceLock::new();
            let mut map = SHARED.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
            let entry = map
                .entry((order, bits))
                .or_insert_with(|| Arc::new((0..degree).map(|k| cos_two_pi_ratio(k, order, bits)).collect()));
            Arc::clone(entry)
        };
        Arc::clone(self.cache.entry(bits).or_insert_with(shared))
    }

    /// Enclosure of the real part at the given precision.
    pub fn enclose(&mut self, x: &CycloNumber, bits: u32) -> Interval {
        assert_eq!(x.order(), self.order);
        let cos = self.cosines(x.field.degree(), bits);
        x.coeffs
            .iter()
            .zip(cos.iter())
            .filter(|(c, _)| !c.is_zero())
            .fold(Interval::zero(), |acc, (c, iv)| acc.add(&iv.scale(c)))
    }

    /// Certified sign of a real element; refines until zero is excluded.
    pub fn sign(&mut self, x: &CycloNumber) -> Ordering {
        assert!(x.is_real(), "sign requested for a non-real cyclotomic number");
        if x.is_zero() {
            return Ordering::Equal;
        }
        if let Some(r) = x.as_rational() {
            return r.cmp(&Rational::zero());
        }
        let mut bits = START_BITS;
        loop {
            let iv = self.enclose(x, bits);
            if iv.lo.is_positive() {
                return Ordering::Greater;
            }
            if iv.hi.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }
}
