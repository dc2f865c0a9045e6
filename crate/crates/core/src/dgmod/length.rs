//! Length of semisimple modules through their endomorphism algebras.
//!
//! For `P ≅ ⊕ S_i^{m_i}` the commutant is `∏ Mat_{m_i}(D_i)`. Over 𝔽_p each `D_i`
//! is a field, the Frobenius-fixed part of the centre separates the isotypic
//! pieces, and `m_i² = dim C_i / dim Z_i` exactly. Over ℚ pieces are separated by
//! rational eigenvalues of commutant elements; what cannot be separated is
//! bounded by `√(dim C_i / dim Z_i)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactla::upoly::minimal_polynomial;
use crate::exactla::{vector, Field, Mat, Scalar, Subspace};

use super::module::DgModule;

/// Multiplicity of a piece: known exactly or bracketed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Count {
    Exact(usize),
    Between(usize, usize),
}

impl Count {
    pub fn bounds(&self) -> (usize, usize) {
        match *self {
            Count::Exact(m) => (m, m),
            Count::Between(a, b) => (a, b),
        }
    }
}

/// A summand of a semisimple module, given in the module's coordinates.
#[derive(Clone, Debug)]
pub struct Piece {
    pub space: Subspace,
    pub count: Count,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
}

impl Decomposition {
    pub fn bounds(&self) -> (usize, usize) {
        self.pieces.iter().fold((0, 0), |(a, b), p| {
            let (x, y) = p.count.bounds();
            (a + x, b + y)
        })
    }

    pub fn exact(&self) -> Option<usize> {
        let (a, b) = self.bounds();
        (a == b).then_some(a)
    }
}

/// Decomposes a semisimple module into pieces of known (or bracketed) length.
///
/// The caller guarantees semisimplicity (e.g. by passing a socle).
pub fn decompose(m: &DgModule) -> Decomposition {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pieces = Vec::new();
    let emb = identity_basis(m);
    decompose_into(m, &emb, m.dim(), &mut pieces, &mut rng, true);
    Decomposition { pieces }
}

/// Like [`decompose`] but keeps splitting isotypic pieces into simple summands when it can.
pub fn decompose_fine(m: &DgModule) -> Decomposition {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pieces = Vec::new();
    let emb = identity_basis(m);
    decompose_into(m, &emb, m.dim(), &mut pieces, &mut rng, false);
    Decomposition { pieces }
}

/// `emb[i]` is the caller-coordinate vector of the local basis vector `i`.
fn decompose_into(m: &DgModule, emb: &[Vec<Scalar>], outer: usize, out: &mut Vec<Piece>, rng: &mut ChaCha8Rng, coarse: bool) {
    let n = m.dim();
    if n == 0 {
        return;
    }
    let field = m.field();
    let here = Subspace::span(field, outer, emb);
    let push = |out: &mut Vec<Piece>, count: Count| out.push(Piece { space: here.clone(), count });
    let comm = m.commutant();
    if comm.len() == 1 {
        push(out, Count::Exact(1));
        return;
    }
    let center = center_of(field, &comm);

    let split = if let Field::Prime(p) = field {
        let fixed = frobenius_fixed(p, &center);
        let by_center = if fixed.len() >= 2 { eigen_kernel(field, &fixed, n) } else { None };
        match by_center {
            Some(k) => Some(k),
            None => {
                // Isotypic: C ≅ Mat_k(F_q) with centre F_q.
                match exact_sqrt(comm.len() / center.len()) {
                    Some(1) => {
                        push(out, Count::Exact(1));
                        return;
                    }
                    Some(k) => {
                        let sub = if coarse { None } else { find_proper(m, &comm, rng) };
                        if sub.is_none() {
                            push(out, Count::Exact(k));
                            return;
                        }
                        sub
                    }
                    None => {
                        push(out, Count::Between(1, isqrt(comm.len())));
                        return;
                    }
                }
            }
        }
    } else {
        let mut candidates = center.clone();
        candidates.extend(comm.iter().cloned());
        eigen_kernel(field, &candidates, n).or_else(|| find_proper(m, &comm, rng))
    };

    match split {
        Some(k) => {
            let (a, b) = split_with(m, &k);
            for part in [a, b] {
                let child = m.restrict(&part);
                let child_emb: Vec<Vec<Scalar>> = part
                    .basis_vectors()
                    .iter()
                    .map(|u| {
                        let mut v = vector::zeros(field, outer);
                        for (c, e) in u.iter().zip(emb) {
                            vector::axpy(&mut v, c, e);
                        }
                        v
                    })
                    .collect();
                decompose_into(&child, &child_emb, outer, out, rng, coarse);
            }
        }
        None => {
            let z_is_field = center.len() == 1 || center_is_field(&center);
            let count = if z_is_field {
                match exact_sqrt(comm.len() / center.len()) {
                    Some(1) => Count::Exact(1),
                    Some(k) => Count::Between(1, k),
                    None => Count::Between(1, isqrt(comm.len() / center.len()).max(1)),
                }
            } else {
                Count::Between(1, isqrt(comm.len()).max(1))
            };
            push(out, count);
        }
    }
}

/// Splits along a submodule `k` of a semisimple module: returns `k` and a complement.
pub(crate) fn split_with(m: &DgModule, k: &Subspace) -> (Subspace, Subspace) {
    let w = semisimple_complement(m, k).expect("semisimple modules have complements");
    (k.clone(), w)
}

/// A submodule complement of the submodule `t` inside a semisimple module, as the
/// kernel of a module projection onto `t`.
pub fn semisimple_complement(m: &DgModule, t: &Subspace) -> Option<Subspace> {
    let f = m.field();
    let n = m.dim();
    let r = t.dim();
    if r == 0 {
        return Some(m.full());
    }
    if r == n {
        return Some(m.zero());
    }
    let ops_m = m.ops();
    let ops_t: Vec<Mat> = ops_m.iter().map(|g| restrict_op(g, t)).collect();
    // Unknown π: r×n, variables indexed (a, j) -> a*n + j.
    let vars = r * n;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for (gm, gt) in ops_m.iter().zip(&ops_t) {
        // (π gm - gt π)[a][j] = Σ_l π[a][l] gm[l][j] - Σ_b gt[a][b] π[b][j]
        for a in 0..r {
            for j in 0..n {
                let mut row = vector::zeros(f, vars);
                for l in 0..n {
                    let c = gm.get(l, j);
                    if !c.is_zero() {
                        row[a * n + l] = &row[a * n + l] + c;
                    }
                }
                for b in 0..r {
                    let c = gt.get(a, b);
                    if !c.is_zero() {
                        row[b * n + j] = &row[b * n + j] - c;
                    }
                }
                if !vector::is_zero(&row) {
                    rows.push(row);
                    rhs.push(f.zero());
                }
            }
        }
    }
    // π restricted to t is the identity in t's coordinates.
    let tb = t.basis_vectors();
    for (c, u) in tb.iter().enumerate() {
        for a in 0..r {
            let mut row = vector::zeros(f, vars);
            for j in 0..n {
                row[a * n + j] = u[j].clone();
            }
            rows.push(row);
            rhs.push(if a == c { f.one() } else { f.zero() });
        }
    }
    let a = Mat::from_rows(f, vars, rows).ok()?;
    let x = a.solve_vec(&rhs)?;
    let pi = Mat::unflatten(f, r, n, x);
    Some(Subspace::kernel_of(&pi))
}

/// Matrix of an operator restricted to an invariant subspace, in its RREF basis.
pub(crate) fn restrict_op(g: &Mat, t: &Subspace) -> Mat {
    let rows = t.basis_vectors();
    let r = rows.len();
    let mut out = Mat::zeros(g.field(), r, r);
    for (a, u) in rows.iter().enumerate() {
        let c = t.coords(&g.mul_vec(u)).expect("invariant subspace");
        for (k, x) in c.into_iter().enumerate() {
            out.set(k, a, x);
        }
    }
    out
}

/// Centre of the algebra spanned by `basis`, as matrices.
pub fn center_of(field: Field, basis: &[Mat]) -> Vec<Mat> {
    let k = basis.len();
    if k == 0 {
        return vec![];
    }
    let dim = basis[0].rows() * basis[0].cols();
    let mut current: Vec<Vec<Scalar>> = (0..k).map(|i| vector::unit(field, k, i)).collect();
    for b in basis {
        if current.is_empty() {
            break;
        }
        let elems: Vec<Mat> = current.iter().map(|c| super::radical::combine(field, basis, c)).collect();
        let cols: Vec<Vec<Scalar>> = elems.iter().map(|z| z.mul(b).sub(&b.mul(z)).flatten()).collect();
        let ker = Mat::from_cols(field, dim, &cols).kernel();
        current = ker
            .iter()
            .map(|l| {
                let mut v = vector::zeros(field, k);
                for (c, x) in l.iter().zip(&current) {
                    vector::axpy(&mut v, c, x);
                }
                v
            })
            .collect();
    }
    current.iter().map(|c| super::radical::combine(field, basis, c)).collect()
}

/// `{z : z^p = z}` inside a commutative algebra of characteristic `p`.
fn frobenius_fixed(p: u64, center: &[Mat]) -> Vec<Mat> {
    let f = center[0].field();
    let dim = center[0].rows() * center[0].cols();
    let cols: Vec<Vec<Scalar>> = center.iter().map(|z| z.pow(p).sub(z).flatten()).collect();
    let ker = Mat::from_cols(f, dim, &cols).kernel();
    ker.iter().map(|l| super::radical::combine(f, center, l)).collect()
}

/// `ker(c - a)` for the first candidate `c` with an eigenvalue `a` in the field and `c ≠ a`.
fn eigen_kernel(field: Field, candidates: &[Mat], n: usize) -> Option<Subspace> {
    let ident = Mat::identity(field, n);
    for c in candidates {
        for a in minimal_polynomial(c).roots() {
            let shifted = c.sub(&ident.scale(&a));
            if !shifted.is_zero() {
                return Some(Subspace::kernel_of(&shifted));
            }
        }
    }
    None
}

/// Seeded search for a singular nonzero commutant element with an eigenvalue in the field.
fn find_proper(m: &DgModule, comm: &[Mat], rng: &mut ChaCha8Rng) -> Option<Subspace> {
    let f = m.field();
    let n = m.dim();
    if let Some(k) = eigen_kernel(f, comm, n) {
        return Some(k);
    }
    for _ in 0..48 {
        let mut c = Mat::zeros(f, n, n);
        for b in comm {
            let x = f.int(rng.gen_range(-3..=3));
            c.axpy(&x, b);
        }
        if let Some(k) = eigen_kernel(f, std::slice::from_ref(&c), n) {
            return Some(k);
        }
    }
    None
}

/// Certifies that a commutative algebra of dimension ≤ 3 is a field: some element
/// has a minimal polynomial of full degree without roots in the ground field.
fn center_is_field(center: &[Mat]) -> bool {
    if center.len() > 3 {
        return false;
    }
    let f = center[0].field();
    let mut cands: Vec<Mat> = center.to_vec();
    for i in 0..center.len() {
        for j in i + 1..center.len() {
            cands.push(center[i].add(&center[j]));
            cands.push(center[i].add(&center[j].scale(&f.int(2))));
        }
    }
    cands.iter().any(|c| {
        let mp = minimal_polynomial(c);
        mp.degree() == Some(center.len()) && mp.roots().is_empty()
    })
}

fn exact_sqrt(x: usize) -> Option<usize> {
    let r = isqrt(x);
    (r * r == x).then_some(r)
}

fn isqrt(x: usize) -> usize {
    let mut r = (x as f64).sqrt() as usize;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

fn identity_basis(m: &DgModule) -> Vec<Vec<Scalar>> {
    (0..m.dim()).map(|i| vector::unit(m.field(), m.dim(), i)).collect()
}
