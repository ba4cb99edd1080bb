//! Closed rational intervals with outward dyadic rounding, enough to enclose
//! `cos(2πk/d)` to any requested precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

fn floor_dyadic(x: &Rational, bits: u32) -> Rational {
    let scaled = (x.numer() << bits).div_floor(x.denom());
    Rational::new(scaled, BigInt::one() << bits)
}

fn ceil_dyadic(x: &Rational, bits: u32) -> Rational {
    let scaled = (x.numer() << bits).div_ceil(x.denom());
    Rational::new(scaled, BigInt::one() << bits)
}

fn pow2_neg(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits)
}

impl Interval {
    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn zero() -> Self {
        Interval::point(Rational::zero())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        if c.is_negative() {
            Interval::new(&self.hi * c, &self.lo * c)
        } else {
            Interval::new(&self.lo * c, &self.hi * c)
        }
    }

    /// Widens the endpoints to multiples of `2^-bits`.
    pub fn round_outward(&self, bits: u32) -> Interval {
        Interval::new(floor_dyadic(&self.lo, bits), ceil_dyadic(&self.hi, bits))
    }

    pub fn widen(&self, r: &Rational) -> Interval {
        Interval::new(&self.lo - r, &self.hi + r)
    }

    pub fn midpoint_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        ((&self.lo + &self.hi) / Rational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

/// Enclosure of `arctan(1/x)` via its alternating series.
fn arctan_recip(x: u64, bits: u32) -> Interval {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let tol = pow2_neg(bits + 4);
    let mut power = x.clone(); // x^(2k+1)
    let mut sum = Rational::zero();
    let mut k: u64 = 0;
    loop {
        let term = Rational::new(BigInt::one(), &power * BigInt::from(2 * k + 1));
        if term < tol {
            // remainder of an alternating decreasing series is below the next term
            return Interval::new(&sum - &term, &sum + &term);
        }
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x2;
        k += 1;
    }
}

/// Enclosure of π (Machin's formula) of width about `2^-bits`.
pub fn pi(bits: u32) -> Interval {
    let a = arctan_recip(5, bits + 6).scale(&Rational::from_integer(16.into()));
    let b = arctan_recip(239, bits + 6).scale(&Rational::from_integer(4.into()));
    a.add(&b.neg()).round_outward(bits + 2)
}

/// Enclosure of `cos θ` for `θ` in a nonnegative interval bounded by 4.
fn cos_nonneg(theta: &Interval, bits: u32) -> Interval {
    debug_assert!(!theta.lo.is_negative());
    let tol = pow2_neg(bits + 4);
    let lo2 = &theta.lo * &theta.lo;
    let hi2 = &theta.hi * &theta.hi;
    let mut lo_pow = Rational::one();
    let mut hi_pow = Rational::one();
    let mut fact = BigInt::one();
    let mut acc = Interval::zero();
    let mut j: u64 = 0;
    loop {
        let fact_q = Rational::from_integer(fact.clone());
        let term = Interval::new(&lo_pow / &fact_q, &hi_pow / &fact_q);
        // remainder bound after summing terms 0..j-1 is the magnitude of term j
        if term.hi < tol {
            return acc.widen(&term.hi).round_outward(bits + 2);
        }
        acc = if j.is_multiple_of(2) { acc.add(&term) } else { acc.add(&term.neg()) };
        acc = acc.round_outward(bits + 8);
        lo_pow = floor_dyadic(&(&lo_pow * &lo2), bits + 16);
        hi_pow = ceil_dyadic(&(&hi_pow * &hi2), bits + 16);
        fact *= BigInt::from((2 * j + 1) * (2 * j + 2));
        j += 1;
    }
}

/// Enclosure of `cos(2πk/d)` of width roughly `2^-bits`.
pub fn cos_two_pi_ratio(k: usize, d: usize, bits: u32) -> Interval {
    assert!(d > 0);
    let k = k % d;
    let k = k.min(d - k);
    if k == 0 {
        return Interval::point(Rational::one());
    }
    // angle in [0, π]
    let ratio = Rational::new(BigInt::from(2 * k), BigInt::from(d));
    let theta = pi(bits + 8).scale(&ratio);
    cos_nonneg(&theta, bits)
}
