//! The canonical Seifert surface of a braid closure and its Seifert matrix.
//!
//! The surface has one disk per strand and one half-twisted band per letter
//! of `σ_{m-1} ⋯ σ_1 · f`, where `f` is the factorization built by
//! [`factorization_one`](crate::braid::factorization_one). The prefix
//! guarantees every index occurs, so the surface is connected.
//!
//! Homology basis: for each index `i`, every pair of consecutive bands at
//! `i` bounds a loop running down one band and up the next. A loop is
//! labelled by its closing band, which is always a letter of `f`, so loop
//! `j` corresponds to the `j`-th letter of `f`.

use num_bigint::BigInt;

use crate::braid::{BraidWord, Factorization, Letter, Sign};
use crate::error::{Error, Result};
use crate::linalg::{integer_determinant, Matrix};
use crate::poly::{interpolate, IntPoly};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandSurface {
    disks: usize,
    bands: Vec<Letter>,
}

impl BandSurface {
    pub fn disks(&self) -> usize {
        self.disks
    }

    pub fn bands(&self) -> &[Letter] {
        &self.bands
    }

    /// Bands after the `σ_{m-1} ⋯ σ_1` prefix, i.e. the 1-handles.
    pub fn handle_bands(&self) -> &[Letter] {
        &self.bands[self.disks - 1..]
    }

    pub fn is_connected(&self) -> bool {
        (1..self.disks).all(|i| self.bands.iter().any(|b| b.index == i))
    }

    pub fn betti(&self) -> usize {
        self.bands.len() + 1 - self.disks
    }
}

pub fn band_surface(w: &BraidWord, f: &Factorization) -> BandSurface {
    assert_eq!(w.strands(), f.strands(), "factorization of a different braid");
    let m = w.strands();
    let mut bands: Vec<Letter> = (1..m).rev().map(Letter::pos).collect();
    bands.extend_from_slice(f.letters());
    BandSurface { disks: m, bands }
}

/// Integer Seifert matrix `A[x][y] = lk(x, y⁺)` in the loop basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Matrix<i64>,
}

impl SeifertMatrix {
    pub fn from_matrix(entries: Matrix<i64>) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::NotSquare { rows: entries.rows(), cols: entries.cols() });
        }
        Ok(SeifertMatrix { entries })
    }

    pub fn entries(&self) -> &Matrix<i64> {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.rows()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries.to_rows()
    }

    /// `A + Aᵀ`, whose signature is the classical signature.
    pub fn symmetrized(&self) -> Matrix<i64> {
        let n = self.size();
        Matrix::from_fn(n, n, |i, j| self.entries[(i, j)] + self.entries[(j, i)])
    }

    /// `A - Aᵀ`, the intersection form of the surface.
    pub fn intersection_form(&self) -> Matrix<i64> {
        let n = self.size();
        Matrix::from_fn(n, n, |i, j| self.entries[(i, j)] - self.entries[(j, i)])
    }
}

#[derive(Clone, Copy, Debug)]
struct Loop {
    index: usize,
    open: usize,
    close: usize,
}

pub fn seifert_matrix(s: &BandSurface) -> Result<SeifertMatrix> {
    if !s.is_connected() {
        return Err(Error::DisconnectedSurface);
    }
    let bands = s.bands();
    let mut loops: Vec<Loop> = Vec::with_capacity(s.betti());
    for index in 1..s.disks() {
        let positions: Vec<usize> = (0..bands.len()).filter(|&k| bands[k].index == index).collect();
        loops.extend(positions.windows(2).map(|w| Loop { index, open: w[0], close: w[1] }));
    }
    loops.sort_by_key(|l| l.close);

    let n = loops.len();
    let mut a = Matrix::filled(n, n, 0i64);
    for (x, lx) in loops.iter().enumerate() {
        let (s1, s2) = (bands[lx.open].sign, bands[lx.close].sign);
        a[(x, x)] = match (s1, s2) {
            (Sign::Positive, Sign::Positive) => -1,
            (Sign::Negative, Sign::Negative) => 1,
            _ => 0,
        };
        for (y, ly) in loops.iter().enumerate() {
            if ly.index == lx.index && ly.open == lx.close {
                // consecutive loops sharing the band lx.close
                match bands[lx.close].sign {
                    Sign::Positive => a[(x, y)] = 1,
                    Sign::Negative => a[(y, x)] = -1,
                }
            } else if ly.index == lx.index + 1 {
                if lx.open < ly.open && ly.open < lx.close && lx.close < ly.close {
                    a[(x, y)] = -1;
                } else if ly.open < lx.open && lx.open < ly.close && ly.close < lx.close {
                    a[(x, y)] = 1;
                }
            }
        }
    }
    Ok(SeifertMatrix { entries: a })
}

/// `det(A - t Aᵀ)`, normalized by `±t^k` so the constant term is positive.
/// The empty matrix gives `1`.
pub fn alexander_polynomial(a: &SeifertMatrix) -> IntPoly {
    let n = a.size();
    // degree <= n, so n + 1 samples determine it
    let points: Vec<(Rational, Rational)> = (0..=n as i64)
        .map(|t| {
            let m = Matrix::from_fn(n, n, |i, j| {
                BigInt::from(a.entries[(i, j)]) - BigInt::from(t) * BigInt::from(a.entries[(j, i)])
            });
            (Rational::from_integer(t.into()), Rational::from_integer(integer_determinant(&m)))
        })
        .collect();
    let coeffs = interpolate(&points);
    debug_assert!(coeffs.iter().all(|c| c.is_integer()));
    IntPoly::new(coeffs.into_iter().map(|c| c.to_integer()).collect()).normalized()
}

/// `det(A - Aᵀ)`.
pub fn intersection_determinant(a: &SeifertMatrix) -> BigInt {
    integer_determinant(&a.intersection_form().map(|&x| BigInt::from(x)))
}
