use serde::Serialize;

use crate::dgcore::DgAlgebra;
use crate::dgmod::enumerate::maximal_proper;
use crate::dgmod::radical::radical_coords;
use crate::dgmod::{decompose, lift, DgModule, Side, View};
use crate::exactla::{Field, Subspace};

use super::prime::{is_dg_prime, PrimeAnswer};
use super::{is_nilpotent, lann, product_space, two_sided_lattice, DgIdeal};

/// Jacobson radical, which for a finite-dimensional algebra is also its
/// classical prime radical and its nil radical.
pub fn jacobson_radical(alg: &DgAlgebra) -> Subspace {
    radical_coords(alg.field(), alg.left_matrices())
}

/// Largest nilpotent two-sided dg-ideal, with its nilpotency exponent.
///
/// Every nilpotent dg-ideal lies in the Jacobson radical, and the largest
/// dg-ideal inside that radical is nilpotent because the radical is.
pub fn dgnil(alg: &DgAlgebra) -> (DgIdeal, usize) {
    let j = jacobson_radical(alg);
    let space = DgModule::regular_bi(alg).largest_inside(&j);
    let (nil, exp) = is_nilpotent(alg, &space);
    assert!(nil, "a subspace of the radical is nilpotent");
    let ideal = DgIdeal::new(alg, space, Side::Bi).expect("largest submodule inside is an ideal");
    (ideal, exp.unwrap())
}

pub fn is_dg_semiprime(alg: &DgAlgebra) -> bool {
    dgnil(alg).0.is_zero()
}

/// Intersection of all dg-prime ideals; equal to dgnil in finite dimension.
pub fn prad(alg: &DgAlgebra) -> DgIdeal {
    radical_report(alg, 0).prad
}

/// Radicals computed by the exhaustive lattice, for small prime fields.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeRadicals {
    pub ideals: usize,
    #[serde(skip)]
    pub maximal: Vec<Subspace>,
    #[serde(skip)]
    pub primes: Vec<Subspace>,
    #[serde(skip)]
    pub dgrad2: Subspace,
    #[serde(skip)]
    pub prad: Subspace,
    #[serde(skip)]
    pub dgnil: Subspace,
}

#[derive(Clone, Debug, Serialize)]
pub struct RadicalReport {
    #[serde(skip)]
    pub classical: Subspace,
    pub dgnil: DgIdeal,
    pub dgnil_exponent: usize,
    pub prad: DgIdeal,
    /// Dg-prime ideals found as annihilators of the socle pieces of `R/dgnil`,
    /// each certified by a primeness test on its quotient.
    #[serde(skip)]
    pub certified_primes: Vec<Subspace>,
    /// The certified primes intersect to dgnil.
    pub prad_independent: bool,
    pub lattice: Option<LatticeRadicals>,
}

impl RadicalReport {
    /// `dgnil ⊆ Prad`, the independent route agrees, and the enumerated radicals
    /// (when present) all coincide with dgnil.
    pub fn agrees(&self) -> bool {
        let lat = self.lattice.as_ref().is_none_or(|l| {
            l.dgnil == self.dgnil.space && l.prad == self.dgnil.space && l.dgrad2 == self.dgnil.space
        });
        self.prad.space.includes(&self.dgnil.space) && self.prad_independent && lat
    }
}

/// All radicals. `budget` bounds the exhaustive lattice (0 skips it).
pub fn radical_report(alg: &DgAlgebra, budget: usize) -> RadicalReport {
    let classical = jacobson_radical(alg);
    let (nil, exponent) = dgnil(alg);
    let certified_primes = primes_over_socle(alg, &nil.space);
    let meet = certified_primes
        .iter()
        .fold(Subspace::full(alg.field(), alg.dim()), |acc, p| acc.meet(p));
    let prad_independent = !certified_primes.is_empty() && meet == nil.space;
    let lattice = match alg.field() {
        Field::Prime(_) if budget > 0 => lattice_radicals(alg, budget),
        _ => None,
    };
    RadicalReport {
        classical,
        prad: nil.clone(),
        dgnil: nil,
        dgnil_exponent: exponent,
        certified_primes,
        prad_independent,
        lattice,
    }
}

/// Preimages of `lann(T)` for the pieces `T` of the two-sided dg-socle of
/// `R/dgnil`, kept only when the quotient by `lann(T)` is certified dg-prime.
fn primes_over_socle(alg: &DgAlgebra, nil: &Subspace) -> Vec<Subspace> {
    let Ok((q, proj)) = alg.quotient(nil) else {
        return vec![];
    };
    let bi = DgModule::regular_bi(&q).with_view(View::Dg);
    let soc = bi.socle();
    let dec = decompose(&bi.restrict(&soc));
    let mut out: Vec<Subspace> = Vec::new();
    for piece in &dec.pieces {
        let t = lift(&soc, &piece.space);
        let ann = lann(&q, &t.basis_vectors());
        let Ok((quot, _)) = q.quotient(&ann) else { continue };
        if !matches!(is_dg_prime(&quot), PrimeAnswer::Yes { .. }) {
            continue;
        }
        let p = ann.preimage(&proj).expect("projection has matching shape");
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn lattice_radicals(alg: &DgAlgebra, budget: usize) -> Option<LatticeRadicals> {
    let lattice = two_sided_lattice(alg, budget).ok()?;
    if lattice.len() > 256 {
        return None;
    }
    let full = Subspace::full(alg.field(), alg.dim());
    let maximal = maximal_proper(&lattice);
    let dgrad2 = maximal.iter().fold(full.clone(), |a, m| a.meet(m));
    let dgnil = lattice
        .iter()
        .filter(|i| is_nilpotent(alg, i).0)
        .fold(Subspace::zero(alg.field(), alg.dim()), |a, i| a.plus(i));
    // Literal primeness: IJ ⊆ P forces I ⊆ P or J ⊆ P.
    let n = lattice.len();
    let prods: Vec<Vec<Subspace>> = lattice
        .iter()
        .map(|a| lattice.iter().map(|b| product_space(alg, a, b)).collect())
        .collect();
    let primes: Vec<Subspace> = lattice
        .iter()
        .filter(|p| !p.is_full())
        .filter(|p| {
            (0..n).all(|a| {
                (0..n).all(|b| {
                    !p.includes(&prods[a][b]) || p.includes(&lattice[a]) || p.includes(&lattice[b])
                })
            })
        })
        .cloned()
        .collect();
    let prad = primes.iter().fold(full, |a, p| a.meet(p));
    Some(LatticeRadicals {
        ideals: n,
        maximal,
        primes,
        dgrad2,
        prad,
        dgnil,
    })
}
