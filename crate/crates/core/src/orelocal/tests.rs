use super::*;
use crate::catalog;
use crate::dgpoly::{PolyRing, Window};
use crate::exactla::Field;

const Q: Field = Field::Rational;

fn mat2_units(alg: &crate::dgcore::DgAlgebra) -> Vec<Vec<crate::exactla::Scalar>> {
    vec![
        alg.named(&[(1, "e11"), (2, "e22")]),
        alg.named(&[(3, "e11"), (1, "e22")]),
        alg.named(&[(1, "e11"), (-1, "e22")]),
    ]
}

#[test]
fn findim_unit_denominators_pass() {
    for f in [Q, Field::Prime(5)] {
        let a = catalog::mat2_dg(f);
        let loc = localise_findim(&a, &mat2_units(&a), Mode::Regular).unwrap();
        let r = verify_localisation(&loc, 300, 7);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.checks.len(), 7);
        assert!(r.get("lambda-injective").is_some());
    }
}

#[test]
fn findim_rejects_bad_denominators() {
    let a = catalog::mat2_dg(Q);
    let mixed = a.named(&[(1, "e12"), (1, "e21")]);
    assert!(a.is_invertible(&mixed));
    assert!(matches!(
        localise_findim(&a, &[mixed], Mode::Regular),
        Err(LocError::InhomogeneousDenominator(_))
    ));
    let e11 = a.named(&[(1, "e11")]);
    assert!(matches!(localise_findim(&a, std::slice::from_ref(&e11), Mode::Regular), Err(LocError::NotRegular(..))));
    assert!(matches!(localise_findim(&a, &[e11], Mode::Kernel), Err(LocError::NotACycle(_))));
}

#[test]
fn kxk_kernel_set_quotients_by_ass() {
    let a = catalog::kxk(Q);
    let e1 = a.named(&[(1, "e1")]);
    let loc = localise_findim(&a, &[e1], Mode::Kernel).unwrap();
    assert_eq!(loc.target().dim(), 1);
    assert_eq!(loc.ass().dim(), 1);
    assert!(loc.ass().contains_vec(&a.named(&[(1, "e2")])));
    let r = verify_localisation(&loc, 200, 1);
    assert!(r.passed(), "{r:?}");
    assert!(r.get("lambda-kernel-is-ass").is_some());
}

#[test]
fn laurent_formula_values() {
    let r = PolyRing::kx(Q);
    let x = r.var_power(0, 1);
    let loc = localise_poly(&r, std::slice::from_ref(&x), Mode::Regular).unwrap();
    let q = d_s(&loc, &Fraction::new(r.one(), x.clone()));
    assert_eq!(loc.value(&q), loc.target().var_power(0, -2));
    // s a cycle of even degree: d_S(b, s) = (d(b), s).
    let x2 = r.var_power(0, 2);
    let loc2 = localise_poly(&r, std::slice::from_ref(&x2), Mode::Kernel).unwrap();
    for e in 0..6 {
        let b = r.var_power(0, e);
        let lhs = d_s(&loc2, &Fraction::new(b.clone(), x2.clone()));
        assert!(loc2.frac_eq(&lhs, &Fraction::new(r.d(&b), x2.clone())));
    }
    let rep = verify_localisation(&loc, 500, 3);
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn corrupted_sign_is_caught() {
    let r = PolyRing::kx(Q);
    let loc = localise_poly(&r, &[r.var_power(0, 1)], Mode::Regular).unwrap().with_corrupted_sign();
    let rep = verify_localisation(&loc, 200, 0);
    let l = rep.get("leibniz").unwrap();
    assert!(!l.passed);
    assert!(l.witness.as_ref().unwrap().contains("d(pq)"));
    let a = catalog::mat2_dg(Q);
    let loc = localise_findim(&a, &mat2_units(&a), Mode::Regular).unwrap().with_corrupted_sign();
    assert!(!verify_localisation(&loc, 200, 0).passed());
}

#[test]
fn poly_rejects_non_monomial_sets() {
    let r = PolyRing::kx(Q);
    let p = r.parse("1 + X^2").unwrap();
    assert!(matches!(localise_poly(&r, &[p], Mode::Regular), Err(LocError::Unsupported(_))));
    assert!(matches!(localise_poly(&r, &[r.var_power(0, 1)], Mode::Kernel), Err(LocError::NotACycle(_))));
}

#[test]
fn homology_comparisons() {
    let a = catalog::kxk(Q);
    let rep = homology_comparison_findim(&a, &[a.named(&[(1, "e1")])]).unwrap();
    assert!(rep.certified(), "{rep:?}");
    assert_eq!(rep.localised_homology.get(&0), Some(&1));

    let g = catalog::mat2_graded(Q);
    let rep = homology_comparison_findim(&g, &[g.named(&[(1, "e11"), (2, "e22")])]).unwrap();
    assert!(rep.certified(), "{rep:?}");
    assert_eq!(rep.localised_homology.values().sum::<usize>(), 4);

    let r = PolyRing::kx(Q);
    let rep = homology_comparison_poly(&r, &[r.var_power(0, 2)], Window::symmetric(20)).unwrap();
    assert!(rep.certified(), "{rep:?}");
    assert!(rep.localised_homology.values().all(|&d| d == 0));
    assert_eq!(rep.localised_homology.len(), 41);
}

#[test]
fn goldie_examples() {
    let r = PolyRing::kx(Q);
    let rep = goldie_pipeline_poly(&r, Window::symmetric(20)).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.stages.iter().any(|s| s.name == "dg-simple" && s.passed()));

    let m = goldie_pipeline_findim(&catalog::mat2_dg(Q));
    assert!(!m.passed());
    match m.failure() {
        Some(LocError::HypothesisFailed { stage, witness }) => {
            assert_eq!(stage, "gr-prime");
            assert!(witness.contains("e12"), "{witness}");
            assert!(witness.ends_with("= 0"));
        }
        other => panic!("{other:?}"),
    }

    for f in [Q, Field::Prime(3)] {
        let k = goldie_pipeline_findim(&catalog::field_k(f));
        assert!(k.passed(), "{k:?}");
    }
}

#[test]
fn transfer_and_lying_over() {
    for f in [Field::Prime(2), Field::Prime(3)] {
        let a = catalog::mat2_dg(f);
        let units: Vec<_> = mat2_units(&a).into_iter().filter(|u| a.is_regular(u)).collect();
        let rep = localisation_transfer_findim(&a, &units, 4096).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }
    let r = PolyRing::kx(Q);
    let x = r.var_power(0, 1);
    let rep = localisation_transfer_poly(&r, &r.var_power(0, 2), &[x], Window::symmetric(10)).unwrap();
    assert!(rep.passed(), "{rep:?}");

    assert!(lying_over_findim(&catalog::kxk(Field::Prime(3)), 4096).unwrap().passed());
    assert!(matches!(
        lying_over_findim(&catalog::mat2_dg(Q), 4096),
        Err(LocError::NotHereditary(_))
    ));
    let rep = lying_over_poly(&r, Window::symmetric(12), &[0, 1, 2, 3]).unwrap();
    assert!(rep.passed(), "{rep:?}");
}
