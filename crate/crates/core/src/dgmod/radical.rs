//! Jacobson radical of a matrix algebra given by a basis.
//!
//! Characteristic 0 and `p > n` use the trace form. Smaller primes use the
//! generalised traces of Cohen, Ivanyos and Wales: with integer lifts `ŷ`,
//! `g_i(y) = (Tr(ŷ^{p^i}) mod p^{i+1}) / p^i`, and the radical is the last
//! term of `I_i = {x ∈ I_{i-1} : g_i(xb) = 0 for all b}`, `i ≤ log_p n`.

use crate::exactla::{vector, Field, Mat, Scalar, Subspace};

/// Radical as a subspace of coordinates with respect to `basis`.
pub fn radical_coords(field: Field, basis: &[Mat]) -> Subspace {
    let k = basis.len();
    if k == 0 {
        return Subspace::zero(field, 0);
    }
    let n = basis[0].rows();
    match field {
        Field::Prime(p) if p <= n as u64 => generalised_trace(field, p, n, basis),
        _ => {
            let mut g = Mat::zeros(field, k, k);
            for i in 0..k {
                for j in i..k {
                    let t = trace_of_product(&basis[i], &basis[j]);
                    g.set(i, j, t.clone());
                    g.set(j, i, t);
                }
            }
            Subspace::kernel_of(&g)
        }
    }
}

/// Radical as a list of matrices spanning it.
pub fn radical(field: Field, basis: &[Mat]) -> Vec<Mat> {
    let coords = radical_coords(field, basis);
    coords.basis_vectors().iter().map(|c| combine(field, basis, c)).collect()
}

pub(crate) fn combine(field: Field, basis: &[Mat], c: &[Scalar]) -> Mat {
    let n = basis[0].rows();
    let mut m = Mat::zeros(field, n, basis[0].cols());
    for (x, b) in c.iter().zip(basis) {
        if !x.is_zero() {
            m.axpy(x, b);
        }
    }
    m
}

fn trace_of_product(a: &Mat, b: &Mat) -> Scalar {
    let n = a.rows();
    let mut t = a.field().zero();
    for i in 0..n {
        for j in 0..n {
            let x = a.get(i, j);
            let y = b.get(j, i);
            if !x.is_zero() && !y.is_zero() {
                t.add_mul_assign(x, y);
            }
        }
    }
    t
}

fn generalised_trace(field: Field, p: u64, n: usize, basis: &[Mat]) -> Subspace {
    let k = basis.len();
    let mut l = 0u32;
    while (p as u128).pow(l + 1) <= n as u128 {
        l += 1;
    }
    // Current I_{i-1}, as coordinate vectors over `basis`.
    let mut current: Vec<Vec<Scalar>> = (0..k).map(|i| vector::unit(field, k, i)).collect();
    for i in 0..=l {
        if current.is_empty() {
            break;
        }
        let elems: Vec<Mat> = current.iter().map(|c| combine(field, basis, c)).collect();
        let mut g = Mat::zeros(field, k, elems.len());
        for (j, b) in basis.iter().enumerate() {
            for (c, x) in elems.iter().enumerate() {
                g.set(j, c, field.int(g_i(&x.mul(b), p, i) as i64));
            }
        }
        let mu = g.kernel();
        current = mu
            .iter()
            .map(|m| {
                let mut v = vector::zeros(field, k);
                for (coef, c) in m.iter().zip(&current) {
                    vector::axpy(&mut v, coef, c);
                }
                v
            })
            .collect();
    }
    Subspace::span(field, k, &current)
}

/// `(Tr(ŷ^{p^i}) mod p^{i+1}) / p^i` for the lift of `y` with entries in `[0, p)`.
fn g_i(y: &Mat, p: u64, i: u32) -> u64 {
    let modulus = (p as u128).pow(i + 1);
    let n = y.rows();
    let lift: Vec<u128> = y.entries().iter().map(|s| s.residue().unwrap() as u128).collect();
    let mut acc = identity_int(n);
    let mut base = lift;
    let mut e = (p as u128).pow(i);
    while e > 0 {
        if e & 1 == 1 {
            acc = int_mul(&acc, &base, n, modulus);
        }
        e >>= 1;
        if e > 0 {
            base = int_mul(&base, &base, n, modulus);
        }
    }
    let tr = (0..n).fold(0u128, |t, d| (t + acc[d * n + d]) % modulus);
    (tr / (p as u128).pow(i)) as u64
}

fn identity_int(n: usize) -> Vec<u128> {
    let mut m = vec![0u128; n * n];
    for d in 0..n {
        m[d * n + d] = 1;
    }
    m
}

fn int_mul(a: &[u128], b: &[u128], n: usize, modulus: u128) -> Vec<u128> {
    let mut out = vec![0u128; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % modulus;
            }
        }
    }
    out
}
