//! Helpers on plain coordinate vectors.

use super::{Field, Scalar};

pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn from_ints(field: Field, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| field.int(x)).collect()
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

/// `a += c * b`
pub fn axpy(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            x.add_mul_assign(c, y);
        }
    }
}

pub fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc.add_mul_assign(x, y);
        }
    }
    acc
}

/// Index of the first nonzero entry.
pub fn leading(v: &[Scalar]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// Plain-text rendering used in witnesses: `[1, 0, -1/2]`.
pub fn render(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_text).collect()
}
