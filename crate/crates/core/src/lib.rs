//! Exact computation of the 3-dimensional homotopy invariant `d3` of a
//! `p`-fold cyclic contact branched cover of the standard contact 3-sphere,
//! branched along the closure of a braid.
//!
//! Two independent routes are provided:
//!
//! * the closed formula in terms of Tristram–Levine signatures of the
//!   closure and its self-linking number ([`invariant::d3_theorem`]), and
//! * a surgery-diagram route that builds the linking matrix of the
//!   2-handlebody bounded by the cover and evaluates `d3` from its
//!   signature, Euler characteristic and count of `(+1)`-surgeries
//!   ([`surgery::dgs_d3`]).
//!
//! [`invariant::d3_verified`] runs both and records whether they agree.

pub mod braid;
pub mod cli;
pub mod corpus;
pub mod cyclo;
pub mod error;
pub mod interval;
pub mod invariant;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod seifert;
pub mod surgery;
pub mod tristram;

pub use braid::{factorization_one, parse_braid, BraidWord, Factorization, Letter};
pub use cyclo::{root_of_unity, CycloNumber};
pub use error::{Error, Result};
pub use invariant::{d3_theorem, d3_verified, genus_bound, D3Report};
pub use linalg::{hermitian_signature, symmetric_signature, Matrix, SignatureTriple};
pub use seifert::{alexander_polynomial, band_surface, seifert_matrix, BandSurface, SeifertMatrix};
pub use surgery::{build_surgery, dgs_d3, verify_claim, ClaimReport, DgsBreakdown, LinkingRule, SurgeryDiagram};
pub use tristram::{tl_form, tl_signature, tl_sum, TLSpectrum};

/// Exact rational numbers used throughout.
pub type Rational = num_rational::BigRational;
