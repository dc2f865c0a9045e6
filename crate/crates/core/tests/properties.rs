use std::sync::OnceLock;

use proptest::prelude::*;

use dgforge::catalog;
use dgforge::dgcore::{sign, DgAlgebra};
use dgforge::dgideal::{dgnil, is_nilpotent, jacobson_radical};
use dgforge::dgpoly::{Poly, PolyRing};
use dgforge::exactla::{vector, Field, Scalar, Subspace};
use dgforge::orelocal::{d_s, localise_findim, localise_poly, Fraction, FractionRing, Mode};
use dgforge::report::{AnalysisReport, CheckEntry, Status};

fn corpus() -> &'static [(String, DgAlgebra)] {
    static C: OnceLock<Vec<(String, DgAlgebra)>> = OnceLock::new();
    C.get_or_init(catalog::corpus)
}

/// A homogeneous element of degree `degree_set[k % len]` with the given coefficients.
fn homogeneous(a: &DgAlgebra, k: usize, coeffs: &[i64]) -> (Vec<Scalar>, i64) {
    let degs = a.degree_set();
    let deg = degs[k % degs.len()];
    let mut v = a.zero();
    for (i, c) in a.degree_support(deg).into_iter().zip(coeffs) {
        v[i] = a.field().int(*c);
    }
    (v, deg)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn leibniz_and_d_squared_on_corpus(
        idx in 0usize..22, ka in 0usize..8, kb in 0usize..8,
        ca in prop::collection::vec(-4i64..5, 16), cb in prop::collection::vec(-4i64..5, 16),
    ) {
        let (_, a) = &corpus()[idx % corpus().len()];
        let (x, dx) = homogeneous(a, ka, &ca);
        let (y, _) = homogeneous(a, kb, &cb);
        let lhs = a.d(&a.mul(&x, &y));
        let rhs = vector::add(
            &a.mul(&a.d(&x), &y),
            &vector::scale(&sign(a.field(), dx), &a.mul(&x, &a.d(&y))),
        );
        prop_assert_eq!(lhs, rhs);
        prop_assert!(vector::is_zero(&a.d(&a.d(&x))));
    }

    #[test]
    fn dgnil_is_a_nilpotent_part_of_the_radical(idx in 0usize..22) {
        let (_, a) = &corpus()[idx % corpus().len()];
        let (nil, _) = dgnil(a);
        prop_assert!(jacobson_radical(a).includes(&nil.space));
        prop_assert!(is_nilpotent(a, &nil.space).0);
        for v in nil.space.basis_vectors() {
            prop_assert!(nil.space.contains_vec(&a.d(&v)));
        }
    }

    #[test]
    fn subspace_dimension_formula(
        p in prop::sample::select(vec![2u64, 3, 5]),
        us in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 0..5),
        vs in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 0..5),
    ) {
        let f = Field::prime(p).unwrap();
        let span = |xs: &Vec<Vec<i64>>| {
            let rows: Vec<Vec<Scalar>> = xs.iter().map(|x| vector::from_ints(f, x)).collect();
            Subspace::span(f, 5, &rows)
        };
        let (u, v) = (span(&us), span(&vs));
        prop_assert_eq!(u.plus(&v).dim() + u.meet(&v).dim(), u.dim() + v.dim());
        prop_assert!(u.plus(&v).includes(&u));
        prop_assert!(u.includes(&u.meet(&v)));
    }

    #[test]
    fn mat2_fraction_laws(
        num in prop::collection::vec(-5i64..6, 2), k in 0usize..3,
        dens in prop::collection::vec(0usize..3, 0..4), t in 0usize..3,
    ) {
        let a = catalog::mat2_dg(Field::Rational);
        let units = [
            a.named(&[(1, "e11"), (2, "e22")]),
            a.named(&[(3, "e11"), (1, "e22")]),
            a.named(&[(1, "e11"), (-1, "e22")]),
        ];
        let loc = localise_findim(&a, &units, Mode::Regular).unwrap();
        let (b, _) = homogeneous(&a, k, &num);
        let s = dens.iter().fold(a.unit().to_vec(), |acc, &i| a.mul(&acc, &units[i]));
        let q = Fraction::new(b.clone(), s.clone());
        let ds = d_s(&loc, &q);
        prop_assert!(loc.frac_eq(&ds, &loc.direct_d(&q)));
        prop_assert!(loc.frac_is_zero(&d_s(&loc, &ds)));
        let moved = Fraction::new(a.mul(&units[t], &b), a.mul(&units[t], &s));
        prop_assert!(loc.frac_eq(&moved, &q));
        prop_assert!(loc.frac_eq(&d_s(&loc, &moved), &ds));
    }

    #[test]
    fn laurent_fraction_laws(
        coeffs in prop::collection::vec(-5i64..6, 1..5), e in 0i64..5, t in 0i64..3,
    ) {
        let r = PolyRing::kx(Field::Rational);
        let loc = localise_poly(&r, &[r.var_power(0, 1)], Mode::Regular).unwrap();
        let b = coeffs.iter().enumerate().fold(r.zero(), |acc, (i, &c)| {
            acc.add(&r.var_power(0, i as i64).scale(&r.field().int(c)))
        });
        let q = Fraction::new(b.clone(), r.var_power(0, e));
        let ds = d_s(&loc, &q);
        prop_assert!(loc.frac_eq(&ds, &loc.direct_d(&q)));
        prop_assert!(loc.frac_is_zero(&d_s(&loc, &ds)));
        let xt = r.var_power(0, t);
        let moved = Fraction::new(b.mul(&xt), r.var_power(0, e + t));
        prop_assert!(loc.frac_eq(&d_s(&loc, &moved), &ds));
    }

    #[test]
    fn poly_leibniz(c in -5i64..6, k in 0i64..6, coeffs in prop::collection::vec(-5i64..6, 0..6)) {
        let r = PolyRing::kx(Field::Rational);
        let f = r.field();
        let p = r.var_power(0, k).scale(&f.int(c));
        let q = coeffs.iter().enumerate().fold(r.zero(), |acc: Poly, (i, &x)| {
            acc.add(&r.var_power(0, i as i64).scale(&f.int(x)))
        });
        let lhs = r.d(&p.mul(&q));
        let rhs = r.d(&p).mul(&q).add(&p.mul(&r.d(&q)).scale(&sign(f, -k)));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(r.d(&r.d(&q)).is_zero());
    }

    #[test]
    fn report_json_ignores_insertion_order(
        names in prop::collection::btree_set("[a-z]{1,6}", 0..8), rot in 0usize..8,
    ) {
        let entries: Vec<CheckEntry> = names
            .iter()
            .enumerate()
            .map(|(i, n)| CheckEntry::new(n.clone(), if i % 2 == 0 { Status::Pass } else { Status::Skipped }, "law"))
            .collect();
        let mut a = AnalysisReport::new();
        let mut b = AnalysisReport::new();
        for e in &entries {
            a.push(e.clone());
        }
        let n = entries.len().max(1);
        for i in 0..entries.len() {
            b.push(entries[(i + rot) % n].clone());
        }
        prop_assert_eq!(a.to_json(), b.to_json());
    }
}
