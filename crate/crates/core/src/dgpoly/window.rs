//! Finite degree components and the differential between them.

use std::collections::BTreeMap;

use crate::exactla::{Mat, Subspace};

use super::poly::{Monomial, Poly};
use super::ring::PolyRing;
use super::PolyError;

/// A closed range of degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Window {
        Window { lo, hi }
    }

    pub fn symmetric(n: i64) -> Window {
        Window { lo: -n, hi: n }
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn contains(&self, k: i64) -> bool {
        self.lo <= k && k <= self.hi
    }
}

impl PolyRing {
    /// Whether every degree component is finite-dimensional (and enumerable here).
    pub fn has_finite_components(&self) -> bool {
        self.degree_basis(0).is_ok()
    }

    /// Monomials of degree `k`, in graded-lex order.
    ///
    /// Supported when no generator is Laurent and all degrees are nonzero of one
    /// sign, or when the ring has a single generator of nonzero degree.
    pub fn degree_basis(&self, k: i64) -> Result<Vec<Monomial>, PolyError> {
        let gens = self.generators();
        let n = gens.len();
        if n == 0 {
            return Ok(if k == 0 { vec![Monomial::one(0)] } else { vec![] });
        }
        if n == 1 && gens[0].degree != 0 {
            let d = gens[0].degree;
            if k % d != 0 {
                return Ok(vec![]);
            }
            let e = k / d;
            if e < 0 && !gens[0].laurent {
                return Ok(vec![]);
            }
            return Ok(vec![Monomial(vec![e])]);
        }
        let positive = gens.iter().all(|g| g.degree > 0);
        let negative = gens.iter().all(|g| g.degree < 0);
        if gens.iter().any(|g| g.laurent) || !(positive || negative) {
            return Err(PolyError::InfiniteComponent(k));
        }
        let target = k.abs();
        if (positive && k < 0) || (negative && k > 0) {
            return Ok(vec![]);
        }
        let degs: Vec<i64> = gens.iter().map(|g| g.degree.abs()).collect();
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        fill(&degs, 0, target, &mut cur, &mut out);
        out.sort();
        Ok(out)
    }

    /// Matrix of d from degree `k` to degree `k + 1` in the monomial bases.
    pub fn diff_block(&self, k: i64) -> Result<Mat, PolyError> {
        let src = self.degree_basis(k)?;
        let dst = self.degree_basis(k + 1)?;
        let f = self.field();
        let mut m = Mat::zeros(f, dst.len(), src.len());
        for (j, mono) in src.iter().enumerate() {
            let img = self.d(&Poly::term(f, mono.clone(), f.one()));
            for (mm, c) in img.terms() {
                let i = dst.iter().position(|x| x == mm).expect("d has degree +1");
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }

    /// Dimension of homology in each degree of the window.
    pub fn homology_dims(&self, w: Window) -> Result<BTreeMap<i64, usize>, PolyError> {
        let mut out = BTreeMap::new();
        for k in w.degrees() {
            let dim = self.degree_basis(k)?.len();
            let out_rank = self.diff_block(k)?.rank();
            let in_rank = self.diff_block(k - 1)?.rank();
            out.insert(k, dim - out_rank - in_rank);
        }
        Ok(out)
    }

    /// Cycles and boundaries in degree `k`, as subspaces of the monomial coordinates.
    pub fn cycles_and_boundaries(&self, k: i64) -> Result<(Subspace, Subspace), PolyError> {
        let out = self.diff_block(k)?;
        let inc = self.diff_block(k - 1)?;
        Ok((Subspace::kernel_of(&out), Subspace::column_space(&inc)))
    }

    /// Coordinates of a homogeneous polynomial of degree `k` in the monomial basis.
    pub fn coordinates(&self, p: &Poly, k: i64) -> Result<Vec<crate::exactla::Scalar>, PolyError> {
        let basis = self.degree_basis(k)?;
        let mut v = crate::exactla::vector::zeros(self.field(), basis.len());
        for (m, c) in p.terms() {
            let i = basis
                .iter()
                .position(|x| x == m)
                .ok_or_else(|| PolyError::Inhomogeneous(self.render(p)))?;
            v[i] = c.clone();
        }
        Ok(v)
    }
}

fn fill(degs: &[i64], i: usize, remaining: i64, cur: &mut Vec<i64>, out: &mut Vec<Monomial>) {
    if i == degs.len() {
        if remaining == 0 {
            out.push(Monomial(cur.clone()));
        }
        return;
    }
    let mut e = 0;
    while e * degs[i] <= remaining {
        cur[i] = e;
        fill(degs, i + 1, remaining - e * degs[i], cur, out);
        e += 1;
    }
    cur[i] = 0;
}
