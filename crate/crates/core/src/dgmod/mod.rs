//! Dg-modules over finite-dimensional dg-algebras: closures, socles, essential
//! submodules, complements and uniform dimension.

pub mod enumerate;
pub mod length;
mod module;
pub mod radical;

use serde::Serialize;
use thiserror::Error;

use crate::exactla::{vector, LaError, Scalar, Subspace};

pub use length::{decompose, decompose_fine, semisimple_complement, Count, Decomposition, Piece};
pub use module::{DgModule, Side, View};

#[derive(Debug, Error)]
pub enum DgModError {
    #[error("shape: {0}")]
    Shape(String),
    #[error("not a submodule: {0}")]
    NotSubmodule(String),
    #[error("budget exceeded: needed {needed}, budget {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("not enumerable: {0}")]
    NotEnumerable(String),
    #[error(transparent)]
    La(#[from] LaError),
}

/// A subspace certified to be a submodule for the dg view.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DgSubmodule {
    #[serde(skip)]
    pub space: Subspace,
    pub graded: bool,
    pub d_stable: bool,
    pub action_stable: bool,
}

impl DgSubmodule {
    /// Checks the three closure properties of `s` inside `m` separately.
    pub fn certify(m: &DgModule, s: &Subspace) -> DgSubmodule {
        let vs = s.basis_vectors();
        let stable = |g: &crate::exactla::Mat| vs.iter().all(|v| s.contains_vec(&g.mul_vec(v)));
        let graded = crate::dgcore::degree_projectors(m.field(), m.degrees()).iter().all(&stable);
        let d_stable = stable(m.delta());
        let action_stable = m.left_actions().iter().chain(m.right_actions()).all(&stable);
        DgSubmodule {
            space: s.clone(),
            graded,
            d_stable,
            action_stable,
        }
    }

    pub fn is_certified(&self) -> bool {
        self.graded && self.d_stable && self.action_stable
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

fn dg(m: &DgModule) -> DgModule {
    m.with_view(View::Dg)
}

/// Smallest dg-submodule containing `vectors`.
pub fn dg_generate(m: &DgModule, vectors: &[Vec<Scalar>]) -> DgSubmodule {
    let s = dg(m).closure(vectors);
    DgSubmodule::certify(m, &s)
}

/// Largest dg-submodule contained in `w`.
pub fn largest_dg_submodule_inside(m: &DgModule, w: &Subspace) -> DgSubmodule {
    let s = dg(m).largest_inside(w);
    DgSubmodule::certify(m, &s)
}

/// Sum of the minimal dg-submodules.
pub fn dg_socle(m: &DgModule) -> DgSubmodule {
    let s = dg(m).socle();
    DgSubmodule::certify(m, &s)
}

/// Result of an essentiality test. When `n` is not essential, `witness` is a
/// nonzero submodule meeting `n` trivially.
#[derive(Clone, Debug)]
pub struct Essential {
    pub essential: bool,
    pub witness: Option<Subspace>,
}

/// Essentiality for the module's own view: `n` is essential iff it contains the socle.
pub fn essential_in(m: &DgModule, n: &Subspace) -> Result<Essential, DgModError> {
    if !m.is_submodule(n) {
        return Err(DgModError::NotSubmodule(format!("subspace of dimension {} is not closed", n.dim())));
    }
    let soc = m.socle();
    if n.includes(&soc) {
        return Ok(Essential { essential: true, witness: None });
    }
    // A complement of n ∩ soc inside the semisimple socle avoids n.
    let inner = soc.meet(n);
    let sm = m.restrict(&soc);
    let local = Subspace::span(m.field(), soc.dim(), &inner.basis_vectors().iter().map(|v| soc.coords(v).unwrap()).collect::<Vec<_>>());
    let comp = semisimple_complement(&sm, &local).expect("socle is semisimple");
    Ok(Essential {
        essential: false,
        witness: Some(lift(&soc, &comp)),
    })
}

/// Dg-essentiality of a dg-submodule.
pub fn is_dg_essential(n: &Subspace, m: &DgModule) -> Result<bool, DgModError> {
    Ok(essential_in(&dg(m), n)?.essential)
}

/// A local subspace of `sub` (in `sub`'s RREF coordinates) as a subspace of the ambient space.
pub fn lift(sub: &Subspace, local: &Subspace) -> Subspace {
    let rows = sub.basis_vectors();
    let f = sub.field();
    let vs: Vec<Vec<Scalar>> = local
        .basis_vectors()
        .iter()
        .map(|c| {
            let mut v = vector::zeros(f, sub.ambient());
            for (x, r) in c.iter().zip(&rows) {
                vector::axpy(&mut v, x, r);
            }
            v
        })
        .collect();
    Subspace::span(f, sub.ambient(), &vs)
}

/// A complement `x` of `n`: maximal among submodules with `n ∩ x = 0`.
#[derive(Clone, Debug)]
pub struct Complement {
    pub space: Subspace,
    /// `(n ⊕ x)/x` contains the socle of `m/x`, which certifies maximality.
    pub maximal_certified: bool,
    pub rounds: usize,
}

/// Complement for the module's own view.
///
/// Starting from `x = 0`, repeatedly adds the lift of a complement of
/// `(n + x)/x ∩ soc(m/x)` in `soc(m/x)` until `(n + x)/x` contains `soc(m/x)`.
pub fn complement_in(m: &DgModule, n: &Subspace) -> Result<Complement, DgModError> {
    if !m.is_submodule(n) {
        return Err(DgModError::NotSubmodule(format!("subspace of dimension {} is not closed", n.dim())));
    }
    let f = m.field();
    let dim = m.dim();
    let mut x = m.zero();
    let mut rounds = 0;
    loop {
        let q = m.quotient(&x);
        let keep = x.nonpivots();
        let image = |s: &Subspace| -> Subspace {
            let vs: Vec<Vec<Scalar>> = s
                .basis_vectors()
                .iter()
                .map(|v| {
                    let r = x.reduce(v);
                    keep.iter().map(|&i| r[i].clone()).collect()
                })
                .collect();
            Subspace::span(f, keep.len(), &vs)
        };
        let nq = image(&n.plus(&x));
        let soc = q.socle();
        if nq.includes(&soc) {
            return Ok(Complement {
                space: x,
                maximal_certified: true,
                rounds,
            });
        }
        let inner = soc.meet(&nq);
        let sm = q.restrict(&soc);
        let local = Subspace::span(f, soc.dim(), &inner.basis_vectors().iter().map(|v| soc.coords(v).unwrap()).collect::<Vec<_>>());
        let comp = lift(&soc, &semisimple_complement(&sm, &local).expect("socle is semisimple"));
        let lifted: Vec<Vec<Scalar>> = comp
            .basis_vectors()
            .iter()
            .map(|c| {
                let mut v = vector::zeros(f, dim);
                for (a, &i) in c.iter().zip(&keep) {
                    v[i] = a.clone();
                }
                v
            })
            .collect();
        x = x.plus(&Subspace::span(f, dim, &lifted));
        rounds += 1;
    }
}

/// Dg-complement of a dg-submodule.
pub fn dg_complement(n: &Subspace, m: &DgModule) -> Result<(DgSubmodule, Complement), DgModError> {
    let c = complement_in(&dg(m), n)?;
    Ok((DgSubmodule::certify(m, &c.space), c))
}

/// Checks the defining property of a complement directly: `x` is a submodule,
/// `n ∩ x = 0`, and `(n ⊕ x)/x` is essential in `m/x`.
pub fn is_complement(m: &DgModule, n: &Subspace, x: &Subspace) -> bool {
    if !m.is_submodule(x) || !m.is_submodule(n) || !n.meet(x).is_zero() {
        return false;
    }
    let q = m.quotient(x);
    let keep = x.nonpivots();
    let vs: Vec<Vec<Scalar>> = n
        .basis_vectors()
        .iter()
        .map(|v| {
            let r = x.reduce(v);
            keep.iter().map(|&i| r[i].clone()).collect()
        })
        .collect();
    let nq = Subspace::span(m.field(), keep.len(), &vs);
    nq.includes(&q.socle())
}

/// Uniform dimension for the module's own view: the length of the socle.
#[derive(Clone, Debug)]
pub struct UniformDim {
    pub socle: Subspace,
    pub decomposition: Decomposition,
}

impl UniformDim {
    pub fn bounds(&self) -> (usize, usize) {
        self.decomposition.bounds()
    }

    pub fn exact(&self) -> Option<usize> {
        self.decomposition.exact()
    }
}

pub fn udim_in(m: &DgModule) -> UniformDim {
    let socle = m.socle();
    let sm = m.restrict(&socle);
    let mut decomposition = decompose(&sm);
    for p in &mut decomposition.pieces {
        p.space = lift(&socle, &p.space);
    }
    UniformDim { socle, decomposition }
}

/// Dg-uniform dimension.
pub fn dg_udim(m: &DgModule) -> UniformDim {
    udim_in(&dg(m))
}

#[cfg(test)]
mod tests;
