//! Dense univariate polynomials over ℤ and ℚ, kept deliberately small:
//! only what the Alexander oracle and the cyclotomic fields need.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cyclo::CycloNumber;
use crate::Rational;

/// Integer polynomial, coefficients from degree 0 upward, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Divides out the largest power of `t` and fixes the sign so the constant
    /// term is positive. The zero polynomial is returned unchanged.
    pub fn normalized(&self) -> IntPoly {
        let Some(low) = self.coeffs.iter().position(|c| !c.is_zero()) else {
            return IntPoly::zero();
        };
        let mut coeffs = self.coeffs[low..].to_vec();
        if coeffs[0].is_negative() {
            coeffs.iter_mut().for_each(|c| *c = -c.clone());
        }
        IntPoly::new(coeffs)
    }

    /// `t^deg · f(1/t)`.
    pub fn reversed(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Horner evaluation at an element of a cyclotomic field.
    pub fn eval_cyclo(&self, x: &CycloNumber) -> CycloNumber {
        let mut acc = x.field_zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &x.field_constant(Rational::from_integer(c.clone()));
        }
        acc
    }

    /// Exact division; `None` when `divisor` does not divide `self` over ℤ.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = divrem(&to_rational(&self.coeffs), &to_rational(&divisor.coeffs));
        if !r.iter().all(Zero::is_zero) || !q.iter().all(|c| c.is_integer()) {
            return None;
        }
        Some(IntPoly::new(q.into_iter().map(|c| c.to_integer()).collect()))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = deg == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{deg}")?,
            }
        }
        Ok(())
    }
}

/// The `d`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(d: usize) -> IntPoly {
    assert!(d > 0, "cyclotomic polynomial of order 0");
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[0] = BigInt::from(-1);
    coeffs[d] = BigInt::one();
    let mut result = IntPoly::new(coeffs);
    for e in (1..d).filter(|&e| d.is_multiple_of(e)) {
        result = result
            .exact_div(&cyclotomic_polynomial(e))
            .expect("cyclotomic factor divides x^d - 1");
    }
    result
}

pub(crate) fn to_rational(c: &[BigInt]) -> Vec<Rational> {
    c.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

pub(crate) fn trim_rational(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Polynomial long division over ℚ. Divisor must be nonzero.
pub(crate) fn divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut den = den.to_vec();
    trim_rational(&mut den);
    assert!(!den.is_empty(), "division by the zero polynomial");
    let mut rem = num.to_vec();
    trim_rational(&mut rem);
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = den.last().unwrap().recip();
    let mut quot = vec![Rational::zero(); rem.len() - den.len() + 1];
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (i, d) in den.iter().enumerate() {
            rem[shift + i] -= &c * d;
        }
        quot[shift] = c;
        rem.pop();
        trim_rational(&mut rem);
    }
    (quot, rem)
}

/// Coefficients of the unique polynomial of degree < `points.len()` through
/// the given points (Newton divided differences).
pub fn interpolate(points: &[(Rational, Rational)]) -> Vec<Rational> {
    let n = points.len();
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // expand the Newton form from the innermost term outward
    let mut coeffs: Vec<Rational> = Vec::new();
    for i in (0..n).rev() {
        // coeffs = coeffs * (t - x_i) + dd[i]
        let mut next = vec![Rational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    trim_rational(&mut coeffs);
    coeffs
}
