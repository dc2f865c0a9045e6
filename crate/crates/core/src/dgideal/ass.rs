use serde::Serialize;

use crate::dgcore::DgAlgebra;
use crate::dgmod::{DgModule, DgSubmodule};
use crate::exactla::{vector, Field, Scalar, Subspace};

use super::IdealError;

/// `ass(S) = {r : rs = 0 for some s ∈ S}` for the monoid `S` generated by cycles.
#[derive(Clone, Debug, Serialize)]
pub struct AssIdeal {
    /// The span of the union; equal to the union when `union_is_subspace`.
    #[serde(skip)]
    pub space: Subspace,
    /// Graded, d-stable and two-sided closure flags, checked on `space`.
    pub certificate: DgSubmodule,
    /// Distinct left annihilators `lann(s)` met along the monoid.
    pub annihilators: usize,
    /// Some `lann(s)` contains all the others.
    pub directed: bool,
    pub union_is_subspace: bool,
    /// The search over monoid words ran to completion.
    pub complete: bool,
    /// Every generator maps to a regular element of `A/ass(S)`; `None` when the
    /// quotient is not defined.
    pub regular_in_quotient: Option<bool>,
}

impl AssIdeal {
    pub fn is_certified(&self) -> bool {
        self.certificate.is_certified() && self.union_is_subspace && self.complete
    }
}

const MAX_ANNIHILATORS: usize = 4096;

/// Builds `ass(S)` for the multiplicative closure of `gens ∪ {1}`.
///
/// `lann(g·w) = {r : rg ∈ lann(w)}`, so the annihilators of all words are the
/// orbit of `lann(1) = 0` under the preimage maps of right multiplication by
/// generators.
pub fn ass_ideal(alg: &DgAlgebra, gens: &[Vec<Scalar>]) -> Result<AssIdeal, IdealError> {
    let f = alg.field();
    let n = alg.dim();
    for g in gens {
        if !vector::is_zero(&alg.d(g)) {
            return Err(IdealError::NotACycle(alg.render(g)));
        }
        if alg.homogeneous_degree(g).is_none() {
            return Err(IdealError::NotHomogeneous(alg.render(g)));
        }
    }
    let rights: Vec<_> = gens.iter().map(|g| alg.right_mult(g)).collect();
    let mut seen: Vec<Subspace> = vec![Subspace::zero(f, n)];
    let mut queue = vec![0usize];
    let mut complete = true;
    while let Some(i) = queue.pop() {
        for r in &rights {
            let k = seen[i].preimage(r).expect("square matrix");
            if !seen.contains(&k) {
                if seen.len() >= MAX_ANNIHILATORS {
                    complete = false;
                    break;
                }
                seen.push(k);
                queue.push(seen.len() - 1);
            }
        }
    }
    let space = seen.iter().fold(Subspace::zero(f, n), |a, k| a.plus(k));
    let directed = seen.contains(&space);
    let union_is_subspace = directed || union_fills_span(f, &seen, &space);
    let certificate = DgSubmodule::certify(&DgModule::regular_bi(alg), &space);
    let regular_in_quotient = if certificate.is_certified() {
        alg.quotient(&space).ok().map(|(q, proj)| {
            gens.iter().all(|g| q.is_regular(&proj.mul_vec(g)))
        })
    } else {
        None
    };
    Ok(AssIdeal {
        space,
        certificate,
        annihilators: seen.len(),
        directed,
        union_is_subspace,
        complete,
        regular_in_quotient,
    })
}

/// Over a finite field, checks every vector of the span against the union.
/// Over ℚ a finite union of proper subspaces never fills a space.
fn union_fills_span(f: Field, parts: &[Subspace], span: &Subspace) -> bool {
    let Some(elems) = f.elements() else {
        return false;
    };
    let d = span.dim();
    let total = (elems.len() as f64).powi(d as i32);
    if total > 65536.0 {
        return false;
    }
    let mut digits = vec![0usize; d];
    loop {
        let coords: Vec<Scalar> = digits.iter().map(|&x| elems[x].clone()).collect();
        let v = span.combine(&coords);
        if !parts.iter().any(|p| p.contains_vec(&v)) {
            return false;
        }
        let mut i = 0;
        while i < d {
            digits[i] += 1;
            if digits[i] < elems.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == d {
            return true;
        }
    }
}
