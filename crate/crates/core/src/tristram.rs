//! Tristram–Levine forms `(1-ω)A + (1-ω̄)Aᵀ` at the `p`-th roots of unity.

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclo::{root_of_unity, CycloNumber};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_signature, Matrix, SignatureTriple};
use crate::seifert::SeifertMatrix;

pub fn tl_form(a: &SeifertMatrix, omega: &CycloNumber) -> Matrix<CycloNumber> {
    let one = omega.field_one();
    let left = &one - omega;
    let right = left.conj();
    let m = a.entries();
    let n = a.size();
    Matrix::from_fn(n, n, |i, j| {
        let x = CycloNumber::from_integer(omega.field(), m[(i, j)]);
        let y = CycloNumber::from_integer(omega.field(), m[(j, i)]);
        &(&left * &x) + &(&right * &y)
    })
}

/// Inertia of the form at `ω = e^{2πik/p}`.
pub fn tl_signature(a: &SeifertMatrix, k: usize, p: usize) -> Result<SignatureTriple> {
    let omega = root_of_unity(k, p)?;
    hermitian_signature(&tl_form(a, &omega))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TLValue {
    pub k: usize,
    /// Order of `ω` as a root of unity.
    pub d: usize,
    pub signature: i64,
    pub nullity: usize,
    pub inertia: SignatureTriple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TLSpectrum {
    pub p: usize,
    pub values: Vec<TLValue>,
    pub sum: i64,
}

impl TLSpectrum {
    pub fn signature(&self, k: usize) -> i64 {
        self.values[k].signature
    }
}

/// Signatures at every `ω` with `ω^p = 1`, including `ω = 1`.
pub fn tl_sum(a: &SeifertMatrix, p: usize) -> Result<TLSpectrum> {
    if p == 0 {
        return Err(Error::DegreeTooSmall { p, min: 1 });
    }
    let values = (0..p)
        .into_par_iter()
        .map(|k| {
            let inertia = tl_signature(a, k, p)?;
            Ok(TLValue {
                k,
                d: root_of_unity(k, p)?.order(),
                signature: inertia.signature(),
                nullity: inertia.n_zero,
                inertia,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let sum = values.iter().map(|v| v.signature).sum();
    Ok(TLSpectrum { p, values, sum })
}
