//! Primeness through the two-sided socle.
//!
//! A finite-dimensional algebra is prime (for a given view of its ideals)
//! exactly when its two-sided socle is a single minimal ideal `T` with
//! `T·T ≠ 0`: two distinct minimal ideals multiply to zero, and every nonzero
//! ideal contains a minimal one.

use serde::Serialize;

use crate::dgcore::{cycle_subalgebra, DgAlgebra};
use crate::dgmod::{decompose, decompose_fine, lift, Count, DgModule, View};
use crate::exactla::{Field, Subspace};

use super::{product_space, two_sided_lattice};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "answer", rename_all = "lowercase")]
#[allow(clippy::large_enum_variant)]
pub enum PrimeAnswer {
    Yes {
        reason: String,
    },
    /// Not prime. `witness` holds nonzero ideals `I`, `J` with `IJ = 0` when one was found.
    No {
        #[serde(skip)]
        witness: Option<(Subspace, Subspace)>,
        reason: String,
    },
    Unknown {
        reason: String,
    },
}

impl PrimeAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, PrimeAnswer::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, PrimeAnswer::No { .. })
    }
}

/// Dg-primeness: nonzero two-sided dg-ideals have nonzero products.
pub fn is_dg_prime(alg: &DgAlgebra) -> PrimeAnswer {
    let direct = prime_by_socle(alg, View::Dg);
    if !matches!(direct, PrimeAnswer::Unknown { .. }) {
        return direct;
    }
    // A gr-prime cycle algebra forces dg-primeness.
    let (z, _) = cycle_subalgebra(alg);
    if is_gr_prime(&z).is_yes() {
        return PrimeAnswer::Yes {
            reason: "cycle subalgebra is gr-prime".into(),
        };
    }
    direct
}

/// Gr-primeness: nonzero graded two-sided ideals have nonzero products.
pub fn is_gr_prime(alg: &DgAlgebra) -> PrimeAnswer {
    prime_by_socle(alg, View::Graded)
}

fn prime_by_socle(alg: &DgAlgebra, view: View) -> PrimeAnswer {
    let bi = DgModule::regular_bi(alg).with_view(view);
    let soc = bi.socle();
    if soc.is_zero() {
        return PrimeAnswer::No {
            witness: None,
            reason: "zero algebra".into(),
        };
    }
    let local = bi.restrict(&soc);
    let pieces: Vec<(Subspace, Count)> = decompose(&local)
        .pieces
        .into_iter()
        .map(|p| (lift(&soc, &p.space), p.count))
        .collect();
    for (t, _) in &pieces {
        if product_space(alg, t, t).is_zero() {
            return PrimeAnswer::No {
                witness: Some((t.clone(), t.clone())),
                reason: "a socle piece squares to zero".into(),
            };
        }
    }
    if pieces.len() >= 2 {
        return PrimeAnswer::No {
            witness: Some((pieces[0].0.clone(), pieces[1].0.clone())),
            reason: "two socle pieces annihilate each other".into(),
        };
    }
    match pieces[0].1 {
        Count::Exact(1) => PrimeAnswer::Yes {
            reason: "the socle is one minimal ideal with nonzero square".into(),
        },
        Count::Exact(_) => {
            let fine = decompose_fine(&local);
            let witness = if fine.pieces.len() >= 2 {
                Some((lift(&soc, &fine.pieces[0].space), lift(&soc, &fine.pieces[1].space)))
            } else {
                lattice_witness(&bi, alg)
            };
            PrimeAnswer::No {
                witness,
                reason: "the socle holds several isomorphic minimal ideals".into(),
            }
        }
        Count::Between(..) => PrimeAnswer::Unknown {
            reason: "the socle could not be split over the ground field".into(),
        },
    }
}

fn lattice_witness(bi: &DgModule, alg: &DgAlgebra) -> Option<(Subspace, Subspace)> {
    if !matches!(alg.field(), Field::Prime(_)) {
        return None;
    }
    let lattice = if bi.view() == View::Dg {
        two_sided_lattice(alg, 4096).ok()?
    } else {
        crate::dgmod::enumerate::all_submodules(bi, 4096).ok()?
    };
    let nonzero: Vec<&Subspace> = lattice.iter().filter(|s| !s.is_zero()).collect();
    for a in &nonzero {
        for b in &nonzero {
            if product_space(alg, a, b).is_zero() {
                return Some(((*a).clone(), (*b).clone()));
            }
        }
    }
    None
}
