//! Singular ideals as annihilators of socles.
//!
//! In finite dimension the socle of a module is its least essential submodule,
//! so `{a : aE = 0 for some essential E}` is just `lann(socle)`.

use serde::Serialize;

use crate::dgcore::{cycle_subalgebra, homology, subcomplex, DgAlgebra};
use crate::dgmod::{lift, DgModule, DgSubmodule, View};
use crate::exactla::Subspace;

use super::lann;

/// Rank data of a linear map between finite-dimensional spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinearMapFacts {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
    pub is_zero: bool,
}

impl LinearMapFacts {
    fn new(source_dim: usize, target_dim: usize, rank: usize) -> LinearMapFacts {
        LinearMapFacts {
            source_dim,
            target_dim,
            rank,
            injective: rank == source_dim,
            surjective: rank == target_dim,
            is_zero: rank == 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularIdeals {
    /// Singular ideal of the right regular module with d ignored.
    #[serde(skip)]
    pub zeta: Subspace,
    /// Dg-singular ideal: `lann` of the dg-socle of the right regular dg-module.
    #[serde(skip)]
    pub zeta_dg: Subspace,
    /// Closure flags of `zeta_dg` as a left ideal.
    pub zeta_dg_certificate: DgSubmodule,
    /// Singular ideal of the cycle algebra, in the ambient basis.
    #[serde(skip)]
    pub zeta_ker: Subspace,
    #[serde(skip)]
    pub dg_socle: Subspace,
    #[serde(skip)]
    pub socle: Subspace,
    /// Dimension of `H(zeta_dg, d)`.
    pub zeta_dg_homology: usize,
    /// Class map `zeta ∩ ker d → H(zeta_dg)`.
    pub from_zeta_cycles: LinearMapFacts,
    /// Class map `zeta(ker d) → H(zeta_dg)`.
    pub from_zeta_ker: LinearMapFacts,
    pub checks: Vec<(String, bool)>,
}

impl SingularIdeals {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

fn lann_of_socle(alg: &DgAlgebra, view: View) -> (Subspace, Subspace) {
    let soc = DgModule::regular_right(alg).with_view(view).socle();
    (lann(alg, &soc.basis_vectors()), soc)
}

pub fn singular_ideals(alg: &DgAlgebra) -> SingularIdeals {
    let f = alg.field();
    let n = alg.dim();
    let (zeta_dg, dg_socle) = lann_of_socle(alg, View::Dg);
    let (zeta, socle) = lann_of_socle(alg, View::Ungraded);
    let zeta_dg_certificate = DgSubmodule::certify(&DgModule::regular_left(alg), &zeta_dg);

    let (z, cycles) = cycle_subalgebra(alg);
    let (zeta_z, _) = lann_of_socle(&z, View::Ungraded);
    let zeta_ker = lift(&cycles, &zeta_z);

    let zeta_cycles = zeta.meet(&cycles);
    let zeta_dg_cycles = zeta_dg.meet(&cycles);

    let h = homology(alg);
    let (zeta_h, _) = lann_of_socle(&h.algebra, View::Ungraded);
    let projects_into = zeta_ker.basis_vectors().iter().all(|v| {
        h.project(v).is_some_and(|c| zeta_h.contains_vec(&c))
    });

    let (sub_cycles, sub_bounds) = match subcomplex(alg, &zeta_dg) {
        Ok(x) => x,
        Err(_) => (Subspace::zero(f, n), Subspace::zero(f, n)),
    };
    let target = sub_cycles.dim() - sub_bounds.dim();
    let class_map = |s: &Subspace| {
        let src = s.meet(&sub_cycles);
        let rank = src.plus(&sub_bounds).dim() - sub_bounds.dim();
        LinearMapFacts::new(s.dim(), target, rank)
    };

    let checks = vec![
        ("zeta-dg-left-dg-ideal".to_string(), zeta_dg_certificate.is_certified()),
        ("zeta-cycles-inside-zeta-dg".to_string(), zeta_dg_cycles.includes(&zeta_cycles)),
        ("zeta-ker-inside-zeta-dg".to_string(), zeta_dg_cycles.includes(&zeta_ker)),
        ("zeta-ker-projects-into-zeta-homology".to_string(), projects_into),
    ];
    SingularIdeals {
        from_zeta_cycles: class_map(&zeta_cycles),
        from_zeta_ker: class_map(&zeta_ker),
        zeta,
        zeta_dg,
        zeta_dg_certificate,
        zeta_ker,
        dg_socle,
        socle,
        zeta_dg_homology: target,
        checks,
    }
}
