//! Localisation of dg-rings at homogeneous multiplicative sets.
//!
//! Fractions are pairs `(b, s)` standing for `s⁻¹b`. Two backends are
//! supported: finite-dimensional algebras, where homogeneous regular elements
//! are already units, and commutative polynomial rings localised at monomials.

mod findim;
mod fraction;
mod goldie;
mod homcompare;
mod poly;

use serde::Serialize;
use thiserror::Error;

use crate::dgcore::DgError;
use crate::dgideal::IdealError;
use crate::dgmod::DgModError;
use crate::dgpoly::PolyError;

pub use findim::{localise_findim, FindimLocal};
pub use fraction::{d_s, verify_localisation, Fraction, FractionRing, PropertyCheck, PropertyReport};
pub use goldie::{
    goldie_pipeline_findim, goldie_pipeline_poly, localisation_transfer_findim, localisation_transfer_poly,
    lying_over_findim, lying_over_poly, GoldieReport, Stage, TransferReport,
};
pub use homcompare::{homology_comparison_findim, homology_comparison_poly, IsoCheck, IsoReport};
pub use poly::{localise_poly, PolyLocal};

/// How the multiplicative set is admitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Every generator is regular in the ring.
    Regular,
    /// Every generator is a cycle; the ring is first divided by `ass(S)`.
    Kernel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Findim,
    Poly,
}

/// A multiplicative set given by homogeneous generators, closed under products.
#[derive(Clone, Debug, Serialize)]
pub struct MultSet {
    pub backend: Backend,
    pub generators: Vec<String>,
    pub degrees: Vec<i64>,
    pub mode: Mode,
    /// All generators are cycles.
    pub in_kernel: bool,
    /// All generators are regular in the original ring.
    pub regular: bool,
    /// How the hypotheses were certified.
    pub certificate: String,
}

#[derive(Debug, Error)]
pub enum LocError {
    #[error("denominator `{0}` is not homogeneous")]
    InhomogeneousDenominator(String),
    #[error("`{0}` is not regular{1}")]
    NotRegular(String, String),
    #[error("`{0}` is not a cycle")]
    NotACycle(String),
    #[error("cannot certify the Ore condition: {0}")]
    NotOre(String),
    #[error("degree window too small: {0}")]
    WindowTooSmall(String),
    #[error("hypothesis `{stage}` failed: {witness}")]
    HypothesisFailed { stage: String, witness: String },
    #[error("cannot certify a hereditary cycle ring: {0}")]
    NotHereditary(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Dg(#[from] DgError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Module(#[from] DgModError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[cfg(test)]
mod tests;
