//! Dg-ideals of finite-dimensional dg-algebras: products, annihilators,
//! radicals, primeness, `ass(S)` and singular ideals.

mod ass;
mod prime;
mod radicals;
mod semiprime;
mod singular;

use serde::Serialize;
use thiserror::Error;

use crate::dgcore::{DgAlgebra, DgError};
use crate::dgmod::{dg_generate, DgModError, DgModule, DgSubmodule, Side, View};
use crate::exactla::{Mat, Scalar, Subspace};

pub use ass::{ass_ideal, AssIdeal};
pub use prime::{is_dg_prime, is_gr_prime, PrimeAnswer};
pub use radicals::{dgnil, is_dg_semiprime, jacobson_radical, prad, radical_report, LatticeRadicals, RadicalReport};
pub use semiprime::{semiprime_ideal_properties, SemiprimeReport};
pub use singular::{singular_ideals, LinearMapFacts, SingularIdeals};

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("ideal sides do not combine: {0:?} times {1:?}")]
    SideMismatch(Side, Side),
    #[error("generator is not a cycle: {0}")]
    NotACycle(String),
    #[error("generator is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("algebra is not dg-semiprime; dgnil has dimension {0}")]
    NotSemiprime(usize),
    #[error("the ideal is the whole algebra")]
    WholeAlgebra,
    #[error("not a {0:?} dg-ideal")]
    NotAnIdeal(Side),
    #[error(transparent)]
    Module(#[from] DgModError),
    #[error(transparent)]
    Algebra(#[from] DgError),
}

/// A graded, d-stable subspace stable under the actions of its side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DgIdeal {
    #[serde(skip)]
    pub space: Subspace,
    pub side: Side,
    pub certificate: DgSubmodule,
}

impl DgIdeal {
    /// Wraps `space` after checking it against the regular module of `side`.
    pub fn new(alg: &DgAlgebra, space: Subspace, side: Side) -> Result<DgIdeal, IdealError> {
        let certificate = DgSubmodule::certify(&DgModule::regular(alg, side), &space);
        if !certificate.is_certified() {
            return Err(IdealError::NotAnIdeal(side));
        }
        Ok(DgIdeal { space, side, certificate })
    }

    /// Smallest dg-ideal of the given side containing `vectors`.
    pub fn generated(alg: &DgAlgebra, vectors: &[Vec<Scalar>], side: Side) -> DgIdeal {
        let certificate = dg_generate(&DgModule::regular(alg, side), vectors);
        DgIdeal {
            space: certificate.space.clone(),
            side,
            certificate,
        }
    }

    pub fn zero(alg: &DgAlgebra, side: Side) -> DgIdeal {
        DgIdeal::generated(alg, &[], side)
    }

    pub fn whole(alg: &DgAlgebra, side: Side) -> DgIdeal {
        DgIdeal::generated(alg, &[alg.unit().to_vec()], side)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }
}

/// Span of all products `xy` with `x ∈ a`, `y ∈ b`.
pub fn product_space(alg: &DgAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let xs = a.basis_vectors();
    let ys = b.basis_vectors();
    let mut prods = Vec::with_capacity(xs.len() * ys.len());
    for x in &xs {
        for y in &ys {
            prods.push(alg.mul(x, y));
        }
    }
    Subspace::span(alg.field(), alg.dim(), &prods)
}

/// `IJ`. It is closed on the left when `I` is, and on the right when `J` is.
pub fn ideal_product(alg: &DgAlgebra, i: &DgIdeal, j: &DgIdeal) -> Result<DgIdeal, IdealError> {
    let left = matches!(i.side, Side::Left | Side::Bi);
    let right = matches!(j.side, Side::Right | Side::Bi);
    let side = match (left, right) {
        (true, true) => Side::Bi,
        (true, false) => Side::Left,
        (false, true) => Side::Right,
        (false, false) => return Err(IdealError::SideMismatch(i.side, j.side)),
    };
    DgIdeal::new(alg, product_space(alg, &i.space, &j.space), side)
}

/// `I^k` for `k ≥ 1`.
pub fn ideal_power(alg: &DgAlgebra, i: &DgIdeal, k: usize) -> Result<DgIdeal, IdealError> {
    assert!(k >= 1, "powers start at 1");
    let mut p = i.clone();
    for _ in 1..k {
        p = ideal_product(alg, &p, i)?;
    }
    Ok(p)
}

/// Whether `I` is nilpotent, and the least `k` with `I^k = 0` when it is.
pub fn is_nilpotent(alg: &DgAlgebra, i: &Subspace) -> (bool, Option<usize>) {
    let mut p = i.clone();
    let mut k = 1;
    loop {
        if p.is_zero() {
            return (true, Some(k));
        }
        let next = product_space(alg, &p, i);
        if next == p {
            return (false, None);
        }
        p = next;
        k += 1;
    }
}

/// `lann(S) = {r : rs = 0 for all s ∈ S}`.
pub fn lann(alg: &DgAlgebra, s: &[Vec<Scalar>]) -> Subspace {
    annihilate(alg, s, |x| alg.right_mult(x))
}

/// `rann(S) = {r : sr = 0 for all s ∈ S}`.
pub fn rann(alg: &DgAlgebra, s: &[Vec<Scalar>]) -> Subspace {
    annihilate(alg, s, |x| alg.left_mult(x))
}

fn annihilate(alg: &DgAlgebra, s: &[Vec<Scalar>], op: impl Fn(&[Scalar]) -> Mat) -> Subspace {
    let n = alg.dim();
    if s.is_empty() {
        return Subspace::full(alg.field(), n);
    }
    let stacked = s.iter().skip(1).fold(op(&s[0]), |acc, x| acc.vstack(&op(x)));
    Subspace::kernel_of(&stacked)
}

/// An annihilator together with the largest dg-ideal of its side inside it.
#[derive(Clone, Debug)]
pub struct Annihilator {
    pub space: Subspace,
    pub side: Side,
    pub dg_inside: DgIdeal,
    /// The annihilator is itself a dg-ideal of `side`.
    pub is_dg_ideal: bool,
    /// The annihilator is also closed on the other side (a two-sided dg-ideal).
    pub is_two_sided: bool,
}

/// Left (`Side::Left`) or right (`Side::Right`) annihilator of a set.
pub fn annihilator(alg: &DgAlgebra, s: &[Vec<Scalar>], side: Side) -> Annihilator {
    let space = match side {
        Side::Left => lann(alg, s),
        Side::Right => rann(alg, s),
        Side::Bi => lann(alg, s).meet(&rann(alg, s)),
    };
    let module = DgModule::regular(alg, side).with_view(View::Dg);
    let inside = module.largest_inside(&space);
    let is_dg_ideal = inside == space;
    let is_two_sided = is_dg_ideal && DgModule::regular_bi(alg).is_submodule(&space);
    Annihilator {
        dg_inside: DgIdeal::new(alg, inside, side).expect("largest submodule inside is a submodule"),
        space,
        side,
        is_dg_ideal,
        is_two_sided,
    }
}

/// The two-sided dg-ideal lattice, when it is small enough to enumerate.
pub fn two_sided_lattice(alg: &DgAlgebra, budget: usize) -> Result<Vec<Subspace>, DgModError> {
    crate::dgmod::enumerate::all_submodules(&DgModule::regular_bi(alg), budget)
}

#[cfg(test)]
mod tests;
