//! Small named algebras used as fixtures and as building blocks for test corpora.

use crate::dgcore::DgAlgebra;
use crate::exactla::{vector, Field, Mat};

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn build(field: Field, basis: &[&str], degrees: &[i64], unit: &[i64], mul: &[(usize, usize, usize, i64)], diff: &[(usize, usize, i64)]) -> DgAlgebra {
    DgAlgebra::new(
        field,
        names(basis),
        degrees.to_vec(),
        mul.iter().map(|&(i, j, k, c)| (i, j, k, field.int(c))).collect(),
        vector::from_ints(field, unit),
        diff.iter().map(|&(k, i, c)| (k, i, field.int(c))).collect(),
    )
    .expect("catalog algebras are well formed")
}

/// The ground field in degree 0.
pub fn field_k(field: Field) -> DgAlgebra {
    build(field, &["1"], &[0], &[1], &[(0, 0, 0, 1)], &[])
}

/// `K × K` with idempotents `e1`, `e2`, zero differential.
pub fn kxk(field: Field) -> DgAlgebra {
    build(field, &["e1", "e2"], &[0, 0], &[1, 1], &[(0, 0, 0, 1), (1, 1, 1, 1)], &[])
}

fn mat2_products() -> Vec<(usize, usize, usize, i64)> {
    // basis order e11, e12, e21, e22; e_ab e_cd = δ_bc e_ad
    let idx = |a: usize, b: usize| a * 2 + b;
    let mut out = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for d in 0..2 {
                out.push((idx(a, b), idx(b, d), idx(a, d), 1));
            }
        }
    }
    out
}

const MAT2: [&str; 4] = ["e11", "e12", "e21", "e22"];
const MAT2_DEG: [i64; 4] = [0, 1, -1, 0];

/// 2×2 matrices graded by `|e12| = 1`, `|e21| = -1`, with
/// `d(e21) = λ(e11 + e22)`, `d(e11) = -λ e12`, `d(e22) = λ e12`.
pub fn mat2_dg_lambda(field: Field, lambda: i64) -> DgAlgebra {
    build(
        field,
        &MAT2,
        &MAT2_DEG,
        &[1, 0, 0, 1],
        &mat2_products(),
        &[(0, 2, lambda), (3, 2, lambda), (1, 0, -lambda), (1, 3, lambda)],
    )
}

pub fn mat2_dg(field: Field) -> DgAlgebra {
    mat2_dg_lambda(field, 1)
}

/// The graded matrix algebra with zero differential.
pub fn mat2_graded(field: Field) -> DgAlgebra {
    mat2_dg_lambda(field, 0)
}

/// Negative control: `d(e21) = e11` only, which breaks Leibniz and `d² = 0`.
pub fn mat2_broken(field: Field) -> DgAlgebra {
    build(
        field,
        &MAT2,
        &MAT2_DEG,
        &[1, 0, 0, 1],
        &mat2_products(),
        &[(0, 2, 1), (1, 0, -1), (1, 3, 1)],
    )
}

/// Upper triangular 2×2 matrices, the dg-subalgebra `span{e11, e12, e22}` of [`mat2_dg`].
pub fn upper_triangular_dg(field: Field) -> DgAlgebra {
    build(
        field,
        &["e11", "e12", "e22"],
        &[0, 1, 0],
        &[1, 0, 1],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
        &[(1, 0, -1), (1, 2, 1)],
    )
}

/// `K[X]/X²` with `|X| = -1` and `d(X) = 1`.
pub fn dual_numbers_dg(field: Field) -> DgAlgebra {
    build(field, &["1", "X"], &[0, -1], &[1, 0], &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], &[(0, 1, 1)])
}

/// `K[x]/x²` with `|x| = 0` and zero differential.
pub fn dual_numbers_plain(field: Field) -> DgAlgebra {
    dual_numbers_graded(field, 0)
}

/// `K[x]/x²` with `|x| = deg` and zero differential.
pub fn dual_numbers_graded(field: Field, deg: i64) -> DgAlgebra {
    build(field, &["1", "x"], &[0, deg], &[1, 0], &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], &[])
}

/// `K[x]/x^n` with `|x| = deg` and zero differential.
pub fn truncated_poly(field: Field, n: usize, deg: i64) -> DgAlgebra {
    let basis: Vec<String> = (0..n).map(|k| if k == 0 { "1".to_string() } else { format!("x{k}") }).collect();
    let degrees: Vec<i64> = (0..n).map(|k| k as i64 * deg).collect();
    let unit = vector::unit(field, n, 0);
    DgAlgebra::from_fn(field, basis, degrees, unit, Mat::zeros(field, n, n), |i, j| {
        let mut v = vector::zeros(field, n);
        if i + j < n {
            v[i + j] = field.one();
        }
        v
    })
}

/// Graded-commutative exterior algebra on generators of the given (odd) degrees.
pub fn exterior(field: Field, degrees: &[i64]) -> DgAlgebra {
    degrees
        .iter()
        .fold(field_k(field), |acc, &d| acc.tensor(&dual_numbers_graded(field, d)))
}

/// Named corpus of at least twenty algebras over ℚ and prime fields, dims ≤ 16.
pub fn corpus() -> Vec<(String, DgAlgebra)> {
    let q = Field::Rational;
    let f2 = Field::Prime(2);
    let f3 = Field::Prime(3);
    let f5 = Field::Prime(5);
    let f7 = Field::Prime(7);
    vec![
        ("Q".into(), field_k(q)),
        ("QxQ".into(), kxk(q)),
        ("mat2-dg/Q".into(), mat2_dg(q)),
        ("mat2-dg-lambda2/Q".into(), mat2_dg_lambda(q, 2)),
        ("mat2-graded/Q".into(), mat2_graded(q)),
        ("dual-dg/Q".into(), dual_numbers_dg(q)),
        ("dual-plain/Q".into(), dual_numbers_plain(q)),
        ("upper-triangular-dg/Q".into(), upper_triangular_dg(q)),
        ("trunc3/Q".into(), truncated_poly(q, 3, 0)),
        ("exterior2/Q".into(), exterior(q, &[1, -1])),
        ("mat2-dg x dual-dg/Q".into(), mat2_dg(q).product(&dual_numbers_dg(q))),
        ("dual-plain (x) mat2-dg/Q".into(), dual_numbers_plain(q).tensor(&mat2_dg(q))),
        ("mat2-dg/F2".into(), mat2_dg(f2)),
        ("dual-dg/F2".into(), dual_numbers_dg(f2)),
        ("upper-triangular-dg/F3".into(), upper_triangular_dg(f3)),
        ("mat2-dg (x) mat2-dg/F3".into(), mat2_dg(f3).tensor(&mat2_dg(f3))),
        ("exterior3/F5".into(), exterior(f5, &[1, 1, 3])),
        ("trunc4 x F/F5".into(), truncated_poly(f5, 4, 2).product(&field_k(f5))),
        ("dual-dg (x) trunc2/F7".into(), dual_numbers_dg(f7).tensor(&truncated_poly(f7, 2, 0))),
        ("upper-triangular-dg x QxQ/F3".into(), upper_triangular_dg(f3).product(&kxk(f3))),
        ("mat2-graded (x) dual-dg/F2".into(), mat2_graded(f2).tensor(&dual_numbers_dg(f2))),
        ("exterior2 (x) upper-triangular-dg/F7".into(), exterior(f7, &[1, -1]).tensor(&upper_triangular_dg(f7))),
    ]
}

/// Small algebras over 𝔽₂ and 𝔽₃ whose ideal lattices can be enumerated exhaustively.
pub fn enumerable_corpus() -> Vec<(String, DgAlgebra)> {
    let mut out = Vec::new();
    for f in [Field::Prime(2), Field::Prime(3)] {
        let tag = f.to_string();
        out.push((format!("F/{tag}"), field_k(f)));
        out.push((format!("FxF/{tag}"), kxk(f)));
        out.push((format!("mat2-dg/{tag}"), mat2_dg(f)));
        out.push((format!("mat2-graded/{tag}"), mat2_graded(f)));
        out.push((format!("dual-dg/{tag}"), dual_numbers_dg(f)));
        out.push((format!("dual-plain/{tag}"), dual_numbers_plain(f)));
        out.push((format!("upper-triangular-dg/{tag}"), upper_triangular_dg(f)));
        out.push((format!("trunc3/{tag}"), truncated_poly(f, 3, 0)));
        out.push((format!("exterior2/{tag}"), exterior(f, &[1, -1])));
        out.push((format!("mat2-dg x dual-dg/{tag}"), mat2_dg(f).product(&dual_numbers_dg(f))));
        out.push((format!("dual-dg x FxF/{tag}"), dual_numbers_dg(f).product(&kxk(f))));
        out.push((format!("dual-plain (x) dual-dg/{tag}"), dual_numbers_plain(f).tensor(&dual_numbers_dg(f))));
    }
    out
}
