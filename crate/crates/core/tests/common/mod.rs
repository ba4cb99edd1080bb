#![allow(dead_code)]

use std::collections::BTreeMap;

use cyclic_d3::{parse_braid, BraidWord, CycloNumber, Matrix, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn braid(text: &str) -> BraidWord {
    parse_braid(text, None).unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Laurent polynomials in `t` with `i128` coefficients, for the Burau oracle.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent(pub BTreeMap<i64, i128>);

impl Laurent {
    pub fn monomial(c: i128, e: i64) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(e, c);
        }
        Laurent(m)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(c, 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut m = self.0.clone();
        for (&e, &c) in &o.0 {
            *m.entry(e).or_insert(0) += c;
        }
        m.retain(|_, c| *c != 0);
        Laurent(m)
    }

    pub fn neg(&self) -> Self {
        Laurent(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = BTreeMap::new();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &o.0 {
                *m.entry(e1 + e2).or_insert(0) += c1 * c2;
            }
        }
        m.retain(|_, c: &mut i128| *c != 0);
        Laurent(m)
    }

    /// Dense coefficients after shifting the lowest term to degree 0 and
    /// making that term positive.
    pub fn normalized(&self) -> Vec<i128> {
        let Some((&lo, &c0)) = self.0.iter().next() else {
            return vec![];
        };
        let hi = *self.0.keys().last().unwrap();
        let sign = c0.signum();
        (lo..=hi).map(|e| sign * self.0.get(&e).copied().unwrap_or(0)).collect()
    }
}

/// Exact division of dense polynomials (low degree first); panics if inexact.
pub fn divide_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dl = den.len();
    assert!(dl > 0 && *den.last().unwrap() != 0);
    if rem.len() < dl {
        assert!(rem.iter().all(|&c| c == 0));
        return vec![];
    }
    let mut out = vec![0i128; rem.len() - dl + 1];
    for k in (0..out.len()).rev() {
        let lead = rem[k + dl - 1];
        assert_eq!(lead % den[dl - 1], 0, "inexact division");
        let c = lead / den[dl - 1];
        out[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "nonzero remainder");
    out
}

pub fn determinant(m: &[Vec<Laurent>]) -> Laurent {
    let n = m.len();
    if n == 0 {
        return Laurent::constant(1);
    }
    let mut total = Laurent::default();
    for col in 0..n {
        if m[0][col].0.is_empty() {
            continue;
        }
        let minor: Vec<Vec<Laurent>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, x)| x.clone()).collect()).collect();
        let term = m[0][col].mul(&determinant(&minor));
        total = if col % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

/// Alexander polynomial from the reduced Burau representation `ψ`:
/// `det(I - ψ(β)) = (1 + t + ... + t^{m-1}) Δ(t)` up to units.
pub fn burau_alexander(w: &BraidWord) -> Vec<i128> {
    let n = w.strands() - 1;
    let zero = Laurent::default();
    let one = Laurent::constant(1);
    let t = Laurent::monomial(1, 1);
    let identity = |i: usize, j: usize| if i == j { one.clone() } else { zero.clone() };
    let mut b: Vec<Vec<Laurent>> = (0..n).map(|i| (0..n).map(|j| identity(i, j)).collect()).collect();
    for l in w.letters() {
        // only row r of the generator differs from the identity
        let r = l.index - 1;
        let mut row: Vec<Laurent> = (0..n).map(|j| identity(r, j)).collect();
        let (left, diag, right) = if l.sign.value() > 0 {
            (t.clone(), t.neg(), one.clone())
        } else {
            (one.clone(), Laurent::monomial(-1, -1), Laurent::monomial(1, -1))
        };
        row[r] = diag;
        if r > 0 {
            row[r - 1] = left;
        }
        if r + 1 < n {
            row[r + 1] = right;
        }
        // b <- b * g: column j of the product mixes column r of b into every column
        let col_r: Vec<Laurent> = b.iter().map(|bi| bi[r].clone()).collect();
        for (i, bi) in b.iter_mut().enumerate() {
            for j in 0..n {
                let base = if j == r { zero.clone() } else { bi[j].clone() };
                bi[j] = base.add(&col_r[i].mul(&row[j]));
            }
        }
    }
    let m: Vec<Vec<Laurent>> = (0..n).map(|i| (0..n).map(|j| identity(i, j).sub(&b[i][j])).collect()).collect();
    let det = determinant(&m).normalized();
    if det.is_empty() {
        return det;
    }
    let geometric = vec![1i128; n + 1];
    let delta = divide_exact(&det, &geometric);
    Laurent(delta.iter().enumerate().filter(|(_, &c)| c != 0).map(|(e, &c)| (e as i64, c)).collect()).normalized()
}

/// Signature of the torus knot `T(a, b)` at `ω = e^{2πiθ}`, `0 < θ < 1`,
/// from the lattice-point count; `None` when `ω` is a root of `Δ`.
pub fn torus_signature(a: i64, b: i64, theta: &Rational) -> Option<i64> {
    let one = Rational::from_integer(1.into());
    let upper = theta + &one;
    let mut sigma = 0;
    for i in 1..a {
        for j in 1..b {
            let x = q(i, a) + q(j, b);
            if &x == theta || x == upper {
                return None;
            }
            sigma += if &x > theta && x < upper { -1 } else { 1 };
        }
    }
    Some(sigma)
}

pub fn torus_braid(a: usize, b: usize) -> BraidWord {
    let tokens: Vec<i64> = (0..b).flat_map(|_| 1..a as i64).collect();
    BraidWord::from_tokens(&tokens).unwrap()
}

/// `P` as a product of random elementary operations; `det P = ±1`.
pub fn unimodular_i64(rng: &mut ChaCha8Rng, n: usize) -> Matrix<i64> {
    let mut p = Matrix::from_fn(n, n, |i, j| i64::from(i == j));
    for _ in 0..2 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            for r in 0..n {
                p[(r, i)] = -p[(r, i)];
            }
        } else {
            let c = rng.gen_range(-2..=2);
            for r in 0..n {
                p[(r, j)] += c * p[(r, i)];
            }
        }
    }
    p
}

pub fn congruent_i64(m: &Matrix<i64>, p: &Matrix<i64>) -> Matrix<i64> {
    let n = m.rows();
    Matrix::from_fn(n, n, |i, j| {
        let mut s = 0i64;
        for k in 0..n {
            for l in 0..n {
                s += p[(k, i)] * m[(k, l)] * p[(l, j)];
            }
        }
        s
    })
}

/// `P* H P` with `P` a product of elementary operations over `ℚ(ζ)`.
pub fn congruent_cyclo(h: &Matrix<CycloNumber>, rng: &mut ChaCha8Rng) -> Matrix<CycloNumber> {
    let n = h.rows();
    let field = h[(0, 0)].field().clone();
    let order = field.order() as i64;
    let mut p = Matrix::from_fn(n, n, |i, j| CycloNumber::from_integer(&field, i64::from(i == j)));
    for _ in 0..n + 1 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            // scale a column by a root of unity
            let u = CycloNumber::zeta_power(&field, rng.gen_range(0..order));
            for r in 0..n {
                p[(r, i)] = &p[(r, i)] * &u;
            }
        } else {
            let c = &CycloNumber::zeta_power(&field, rng.gen_range(0..order))
                * &CycloNumber::from_integer(&field, rng.gen_range(-1..=1));
            for r in 0..n {
                p[(r, j)] = &p[(r, j)] + &(&c * &p[(r, i)]);
            }
        }
    }
    Matrix::from_fn(n, n, |i, j| {
        let mut s = CycloNumber::from_integer(&field, 0);
        for k in 0..n {
            for l in 0..n {
                s = &s + &(&(&p[(k, i)].conj() * &h[(k, l)]) * &p[(l, j)]);
            }
        }
        s
    })
}

