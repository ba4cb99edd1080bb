//! Cross-checks against independent computations: the Burau representation,
//! lattice-point signatures of torus knots, and floating-point eigenvalues.

mod common;

use common::{braid, burau_alexander, q, torus_braid, torus_signature};
use cyclic_d3::corpus::generate;
use cyclic_d3::cyclo::CycloField;
use cyclic_d3::{
    alexander_polynomial, band_surface, factorization_one, hermitian_signature, seifert_matrix, symmetric_signature,
    tl_form, tl_signature, CycloNumber, Matrix, SeifertMatrix, SignatureTriple,
};
use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn seifert(w: &cyclic_d3::BraidWord, reduce: bool) -> SeifertMatrix {
    seifert_matrix(&band_surface(w, &factorization_one(w, reduce))).unwrap()
}

fn coeffs(a: &SeifertMatrix) -> Vec<i128> {
    alexander_polynomial(a).coeffs().iter().map(|c| c.to_i128().unwrap()).collect()
}

#[test]
fn burau_matches_known_polynomials() {
    assert_eq!(burau_alexander(&braid("1 1 1")), vec![1, -1, 1]);
    assert_eq!(burau_alexander(&braid("1 -2 1 -2")), vec![1, -3, 1]);
    assert_eq!(burau_alexander(&braid("1 1")), vec![1, -1]);
    assert_eq!(burau_alexander(&braid("")), vec![1]);
}

#[test]
fn alexander_agrees_with_burau_on_corpus() {
    let mut checked = 0;
    for b in generate(2024, 150) {
        let w = &b.word;
        let oracle = burau_alexander(w);
        for reduce in [false, true] {
            assert_eq!(coeffs(&seifert(w, reduce)), oracle, "'{}' on {} strands", w.to_text(), w.strands());
        }
        checked += 1;
    }
    assert_eq!(checked, 150);
}

#[test]
fn torus_knot_signatures() {
    let mut compared = 0;
    for (a, b) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (2, 9), (4, 5)] {
        let m = seifert(&torus_braid(a, b), true);
        for p in 2..=7usize {
            for k in 1..p {
                let Some(expected) = torus_signature(a as i64, b as i64, &q(k as i64, p as i64)) else {
                    continue;
                };
                let got = tl_signature(&m, k, p).unwrap();
                assert_eq!(got.signature(), expected, "T({a},{b}) at {k}/{p}");
                assert_eq!(got.n_zero, 0, "T({a},{b}) at {k}/{p}");
                compared += 1;
            }
        }
    }
    assert!(compared > 100, "{compared}");
}

#[test]
fn mirror_negates_signatures() {
    for text in ["1 1 1", "1 1 1 1 1", "1 2 1 2", "1 -2 1 -2"] {
        let w = braid(text);
        let mirror = cyclic_d3::BraidWord::new(w.strands(), w.letters().iter().map(|l| l.inverse()).collect()).unwrap();
        let (a, b) = (seifert(&w, true), seifert(&mirror, true));
        for p in 2..=5 {
            for k in 1..p {
                let (x, y) = (tl_signature(&a, k, p).unwrap(), tl_signature(&b, k, p).unwrap());
                assert_eq!(x.signature(), -y.signature(), "{text} at {k}/{p}");
                assert_eq!(x.n_zero, y.n_zero);
            }
        }
    }
}

fn float_inertia(eigs: impl IntoIterator<Item = f64>, multiplicity: usize) -> SignatureTriple {
    let mut t = SignatureTriple::default();
    for e in eigs {
        if e > 1e-8 {
            t.n_plus += 1;
        } else if e < -1e-8 {
            t.n_minus += 1;
        } else {
            t.n_zero += 1;
        }
    }
    SignatureTriple::new(t.n_plus / multiplicity, t.n_minus / multiplicity, t.n_zero / multiplicity)
}

#[test]
fn symmetric_matches_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let n = rng.gen_range(1..=7);
        let mut m = Matrix::filled(n, n, 0i64);
        for i in 0..n {
            for j in i..n {
                let v = if rng.gen_bool(0.3) { 0 } else { rng.gen_range(-3..=3) };
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        let dm = DMatrix::from_fn(n, n, |i, j| m[(i, j)] as f64);
        let expected = float_inertia(dm.symmetric_eigenvalues().iter().copied(), 1);
        assert_eq!(symmetric_signature(&m).unwrap(), expected, "{:?}", m.to_rows());
    }
}

/// `H = X + iY` has the same inertia as the real symmetric `[[X, -Y], [Y, X]]`,
/// with every eigenvalue doubled.
fn complex_inertia(h: &Matrix<CycloNumber>) -> SignatureTriple {
    let n = h.rows();
    let dm = DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let (re, im) = h[(i % n, j % n)].to_complex_f64();
        match (i < n, j < n) {
            (true, true) | (false, false) => re,
            (true, false) => -im,
            (false, true) => im,
        }
    });
    float_inertia(dm.symmetric_eigenvalues().iter().copied(), 2)
}

#[test]
fn hermitian_matches_eigenvalues() {
    let mut compared = 0;
    for b in generate(99, 60) {
        let a = seifert(&b.word, true);
        if a.size() == 0 {
            continue;
        }
        for p in 2..=6usize {
            for k in 1..p {
                let omega = cyclic_d3::root_of_unity(k, p).unwrap();
                let h = tl_form(&a, &omega);
                let exact = hermitian_signature(&h).unwrap();
                assert_eq!(exact, complex_inertia(&h), "'{}' at {k}/{p}", b.word.to_text());
                compared += 1;
            }
        }
    }
    assert!(compared > 300, "{compared}");
}

#[test]
fn random_hermitian_matches_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for order in [3usize, 4, 5, 7, 8, 12] {
        let field = CycloField::new(order);
        for _ in 0..25 {
            let n = rng.gen_range(1..=5);
            let mut h = Matrix::filled(n, n, CycloNumber::from_integer(&field, 0));
            for i in 0..n {
                let d = rng.gen_range(-3..=3);
                h[(i, i)] = CycloNumber::from_integer(&field, d);
                for j in i + 1..n {
                    let c = rng.gen_range(-2..=2);
                    let z = &CycloNumber::zeta_power(&field, rng.gen_range(0..order as i64))
                        * &CycloNumber::from_integer(&field, c);
                    h[(j, i)] = z.conj();
                    h[(i, j)] = z;
                }
            }
            assert_eq!(hermitian_signature(&h).unwrap(), complex_inertia(&h), "order {order}");
        }
    }
}
