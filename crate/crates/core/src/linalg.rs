//! Dense matrices and exact inertia of symmetric / Hermitian forms by
//! congruence diagonalization.

use std::cmp::Ordering;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::cyclo::{CycloNumber, RealEmbedding};
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix rows");
        Matrix { rows: n, cols: m, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[T]>::to_vec).collect()
    }

    /// Submatrix on the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Serialize + Clone> Serialize for Matrix<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl Matrix<i64> {
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SignatureTriple {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl SignatureTriple {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        SignatureTriple { n_plus, n_minus, n_zero }
    }

    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn dimension(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }
}

/// Field operations needed by the congruence algorithm. `conj` is the
/// identity for real fields.
pub trait FormScalar: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn recip(&self) -> Self;
}

/// Decides signs of real scalars and ranks candidate pivots.
pub trait SignOracle<T> {
    fn sign(&mut self, x: &T) -> Ordering;
    /// Larger is preferred as a pivot.
    fn pivot_score(&mut self, x: &T) -> f64;
}

impl FormScalar for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn recip(&self) -> Self {
        num_rational::Ratio::recip(self)
    }
}

impl FormScalar for CycloNumber {
    fn is_zero(&self) -> bool {
        CycloNumber::is_zero(self)
    }
    fn conj(&self) -> Self {
        CycloNumber::conj(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn recip(&self) -> Self {
        self.inverse().expect("inverse of a nonzero pivot")
    }
}

pub struct RationalOracle;

impl SignOracle<Rational> for RationalOracle {
    fn sign(&mut self, x: &Rational) -> Ordering {
        x.cmp(&Rational::zero())
    }
    /// Lowest height first: unit pivots keep integer matrices integral.
    fn pivot_score(&mut self, x: &Rational) -> f64 {
        -((x.numer().bits() + x.denom().bits()) as f64)
    }
}

impl SignOracle<CycloNumber> for RealEmbedding {
    fn sign(&mut self, x: &CycloNumber) -> Ordering {
        RealEmbedding::sign(self, x)
    }
    /// Largest magnitude first: fewer precision refinements.
    fn pivot_score(&mut self, x: &CycloNumber) -> f64 {
        x.real_f64().abs()
    }
}

/// Inertia of a self-adjoint matrix by congruence: diagonal pivots while
/// some diagonal entry is nonzero, otherwise a 2x2 hyperbolic block
/// (contributing one positive and one negative direction).
pub fn congruence_inertia<T: FormScalar, O: SignOracle<T>>(
    form: &Matrix<T>,
    oracle: &mut O,
) -> SignatureTriple {
    let mut h = form.clone();
    let mut active: Vec<usize> = (0..h.rows()).collect();
    let mut out = SignatureTriple::default();
    while !active.is_empty() {
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !h[(i, i)].is_zero())
            .map(|i| (i, oracle.pivot_score(&h[(i, i)])))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .map(|(i, _)| i);

        if let Some(k) = pivot {
            match oracle.sign(&h[(k, k)]) {
                Ordering::Greater => out.n_plus += 1,
                Ordering::Less => out.n_minus += 1,
                Ordering::Equal => unreachable!("nonzero pivot with zero sign"),
            }
            active.retain(|&i| i != k);
            let inv = h[(k, k)].recip();
            for (a, &i) in active.iter().enumerate() {
                if h[(i, k)].is_zero() {
                    continue;
                }
                let factor = h[(i, k)].times(&inv);
                // upper triangle only, mirrored by self-adjointness
                for &j in &active[a..] {
                    if h[(k, j)].is_zero() {
                        continue;
                    }
                    let updated = h[(i, j)].minus(&factor.times(&h[(k, j)]));
                    if i != j {
                        h[(j, i)] = updated.conj();
                    }
                    h[(i, j)] = updated;
                }
            }
            continue;
        }

        let pair = active
            .iter()
            .enumerate()
            .find_map(|(a, &i)| active[a + 1..].iter().find(|&&j| !h[(i, j)].is_zero()).map(|&j| (i, j)));
        let Some((i, j)) = pair else {
            out.n_zero += active.len();
            break;
        };
        out.n_plus += 1;
        out.n_minus += 1;
        active.retain(|&x| x != i && x != j);
        // Schur complement of [[0, a], [conj a, 0]]
        let inv_a = h[(i, j)].recip();
        let inv_b = h[(j, i)].recip();
        for (a, &x) in active.iter().enumerate() {
            let left_i = h[(x, i)].times(&inv_b);
            let left_j = h[(x, j)].times(&inv_a);
            if left_i.is_zero() && left_j.is_zero() {
                continue;
            }
            for &y in &active[a..] {
                let update = left_i.times(&h[(j, y)]).plus(&left_j.times(&h[(i, y)]));
                if !update.is_zero() {
                    let updated = h[(x, y)].minus(&update);
                    if x != y {
                        h[(y, x)] = updated.conj();
                    }
                    h[(x, y)] = updated;
                }
            }
        }
    }
    out
}

fn is_self_adjoint<T: FormScalar>(m: &Matrix<T>) -> bool {
    (0..m.rows()).all(|i| (0..=i).all(|j| m[(i, j)] == m[(j, i)].conj()))
}

/// Exact inertia of a Hermitian matrix over a cyclotomic field.
pub fn hermitian_signature(h: &Matrix<CycloNumber>) -> Result<SignatureTriple> {
    if !h.is_square() {
        return Err(Error::NotSquare { rows: h.rows(), cols: h.cols() });
    }
    if h.rows() == 0 {
        return Ok(SignatureTriple::default());
    }
    let order = h[(0, 0)].order();
    if !is_self_adjoint(h) {
        return Err(Error::NotSelfAdjoint { kind: "Hermitian" });
    }
    Ok(congruence_inertia(h, &mut RealEmbedding::new(order)))
}

/// Exact inertia of a symmetric integer matrix.
pub fn symmetric_signature(m: &Matrix<i64>) -> Result<SignatureTriple> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if !m.is_symmetric() {
        return Err(Error::NotSelfAdjoint { kind: "symmetric" });
    }
    let q = m.map(|&x| Rational::from_integer(x.into()));
    Ok(congruence_inertia(&q, &mut RationalOracle))
}

/// Rank by plain Gaussian elimination with row swaps.
pub fn rank<T: FormScalar>(m: &Matrix<T>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        for c in 0..cols {
            let tmp = a[(p, c)].clone();
            a[(p, c)] = a[(rank, c)].clone();
            a[(rank, c)] = tmp;
        }
        let inv = a[(rank, col)].recip();
        for r in rank + 1..rows {
            if a[(r, col)].is_zero() {
                continue;
            }
            let f = a[(r, col)].times(&inv);
            for c in col..cols {
                let v = f.times(&a[(rank, c)]);
                a[(r, c)] = a[(r, c)].minus(&v);
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn integer_determinant(m: &Matrix<BigInt>) -> BigInt {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a = m.clone();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                let tmp = a[(p, c)].clone();
                a[(p, c)] = a[(k, c)].clone();
                a[(k, c)] = tmp;
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    a[(n - 1, n - 1)].clone() * sign
}
