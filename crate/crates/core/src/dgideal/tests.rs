use super::*;
use crate::catalog;
use crate::dgcore::cycle_subalgebra;
use crate::dgmod::essential_in;
use crate::exactla::{vector, Field, Subspace};

const Q: Field = Field::Rational;
const F2: Field = Field::Prime(2);
const F3: Field = Field::Prime(3);

fn coord(f: Field, n: usize, idx: &[usize]) -> Subspace {
    Subspace::coordinate(f, n, idx)
}

#[test]
fn products_and_nilpotency() {
    let a = catalog::mat2_dg(Q);
    let i = DgIdeal::new(&a, coord(Q, 4, &[0, 1]), Side::Right).unwrap();
    let ii = ideal_product(&a, &i, &i).unwrap();
    assert_eq!(ii.space, i.space);
    assert_eq!(ii.side, Side::Right);
    assert_eq!(is_nilpotent(&a, &i.space), (false, None));
    assert_eq!(is_nilpotent(&a, &Subspace::zero(Q, 4)), (true, Some(1)));
    let left = DgIdeal::whole(&a, Side::Left);
    assert!(matches!(ideal_product(&a, &i, &left), Err(IdealError::SideMismatch(..))));
    let d = catalog::dual_numbers_plain(Q);
    let x = DgIdeal::new(&d, coord(Q, 2, &[1]), Side::Bi).unwrap();
    assert!(ideal_power(&d, &x, 2).unwrap().is_zero());
    assert_eq!(is_nilpotent(&d, &x.space), (true, Some(2)));
}

#[test]
fn annihilator_examples() {
    let a = catalog::mat2_dg(Q);
    let e22 = a.named(&[(1, "e22")]);
    let r = annihilator(&a, &[e22], Side::Right);
    assert_eq!(r.space, coord(Q, 4, &[0, 1]));
    assert_eq!(r.dg_inside.space, coord(Q, 4, &[0, 1]));
    assert!(rann(&a, &[a.unit().to_vec()]).is_zero());
    let d = catalog::dual_numbers_plain(Q);
    assert_eq!(rann(&d, &[d.named(&[(1, "x")])]), coord(Q, 2, &[1]));
}

#[test]
fn radical_examples() {
    for f in [Q, F2, F3] {
        let dual = catalog::dual_numbers_dg(f);
        assert!(dgnil(&dual).0.is_zero());
        assert_eq!(jacobson_radical(&dual), coord(f, 2, &[1]));
        assert!(prad(&dual).is_zero());
        let plain = catalog::dual_numbers_plain(f);
        let (nil, exp) = dgnil(&plain);
        assert_eq!((nil.space, exp), (coord(f, 2, &[1]), 2));
        assert_eq!(prad(&plain).space, coord(f, 2, &[1]));
        assert!(dgnil(&catalog::mat2_dg(f)).0.is_zero());
        assert!(prad(&catalog::mat2_dg(f)).is_zero());
    }
}

#[test]
fn radical_routes_agree_on_enumerable_corpus() {
    for (name, alg) in catalog::enumerable_corpus() {
        let rep = radical_report(&alg, 4096);
        assert!(rep.agrees(), "{name}");
        let (q, _) = alg.quotient(&rep.dgnil.space).unwrap();
        assert!(dgnil(&q).0.is_zero(), "{name}");
    }
}

#[test]
fn prime_examples() {
    for f in [Q, F2, F3] {
        assert!(is_dg_prime(&catalog::dual_numbers_dg(f)).is_yes());
        assert!(is_dg_prime(&catalog::mat2_dg(f)).is_yes());
        match is_dg_prime(&catalog::kxk(f)) {
            PrimeAnswer::No { witness: Some((i, j)), .. } => {
                let k = catalog::kxk(f);
                assert!(!i.is_zero() && !j.is_zero());
                assert!(product_space(&k, &i, &j).is_zero());
                assert_eq!(i.plus(&j), Subspace::full(f, 2));
            }
            other => panic!("{other:?}"),
        }
        let (z, _) = cycle_subalgebra(&catalog::mat2_dg(f));
        match is_gr_prime(&z) {
            PrimeAnswer::No { witness: Some((i, j)), .. } => {
                assert_eq!(i.dim(), 1);
                assert_eq!(i, j);
            }
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn prime_answers_match_lattice() {
    for (name, alg) in catalog::enumerable_corpus() {
        let lattice = two_sided_lattice(&alg, 4096).unwrap();
        let nonzero: Vec<&Subspace> = lattice.iter().filter(|s| !s.is_zero()).collect();
        let literal = nonzero
            .iter()
            .all(|a| nonzero.iter().all(|b| !product_space(&alg, a, b).is_zero()));
        let ans = is_dg_prime(&alg);
        assert_eq!(ans.is_yes(), literal, "{name}");
        assert_eq!(ans.is_no(), !literal, "{name}");
        if ans.is_yes() {
            assert!(is_dg_semiprime(&alg));
            let bi = DgModule::regular_bi(&alg);
            for i in &nonzero {
                assert!(essential_in(&bi, i).unwrap().essential, "{name}");
            }
        }
    }
}

#[test]
fn ass_examples() {
    let k = catalog::kxk(Q);
    let e1 = k.named(&[(1, "e1")]);
    let s = ass_ideal(&k, &[e1]).unwrap();
    assert_eq!(s.space, coord(Q, 2, &[1]));
    assert!(s.is_certified());
    assert_eq!(s.regular_in_quotient, Some(true));
    assert!(ass_ideal(&k, &[]).unwrap().space.is_zero());
    assert!(ass_ideal(&k, &[k.unit().to_vec()]).unwrap().space.is_zero());
    let m = catalog::mat2_dg(Q);
    assert!(matches!(ass_ideal(&m, &[m.named(&[(1, "e21")])]), Err(IdealError::NotACycle(_))));
    let one_plus = m.named(&[(1, "e11"), (1, "e22"), (1, "e12")]);
    assert!(matches!(ass_ideal(&m, &[one_plus]), Err(IdealError::NotHomogeneous(_))));
    let eps = m.named(&[(1, "e12")]);
    let a = ass_ideal(&m, &[eps]).unwrap();
    // ε² = 0 lies in S, so everything is annihilated.
    assert!(a.space.is_full() && a.is_certified());
}

#[test]
fn singular_examples() {
    for f in [Q, F2, F3] {
        let m = catalog::mat2_dg(f);
        let s = singular_ideals(&m);
        assert!(s.all_pass(), "{:?}", s.checks);
        assert_eq!(s.zeta_dg, coord(f, 4, &[1, 3]));
        assert!(DgIdeal::new(&m, s.zeta_dg.clone(), Side::Bi).is_err());
        assert_eq!(product_space(&m, &s.zeta_dg, &s.zeta_dg), s.zeta_dg);
        assert!(s.zeta.is_zero());
        assert_eq!(s.zeta_ker, coord(f, 4, &[1]));
        assert_eq!(s.zeta_dg_homology, 0);
        assert!(s.from_zeta_ker.is_zero && s.from_zeta_ker.surjective && !s.from_zeta_ker.injective);

        let d = singular_ideals(&catalog::dual_numbers_dg(f));
        assert!(d.all_pass());
        assert!(d.zeta_dg.is_zero());
        assert_eq!(d.zeta, d.socle);
        assert_eq!(d.zeta, coord(f, 2, &[1]));

        let k = singular_ideals(&catalog::kxk(f));
        assert!(k.zeta.is_zero() && k.zeta_dg.is_zero() && k.zeta_ker.is_zero());
    }
}

#[test]
fn semiprime_examples() {
    let m = catalog::mat2_dg(Q);
    assert!(matches!(semiprime_ideal_properties(&m, &Subspace::full(Q, 4)), Err(IdealError::WholeAlgebra)));
    let r = semiprime_ideal_properties(&m, &Subspace::zero(Q, 4)).unwrap();
    assert!(r.annihilator.is_full() && r.all_pass());
    let k = catalog::kxk(Q);
    let r = semiprime_ideal_properties(&k, &coord(Q, 2, &[0])).unwrap();
    assert_eq!(r.annihilator, coord(Q, 2, &[1]));
    assert!(!r.ideal_is_essential && r.all_pass());
    assert!(matches!(
        semiprime_ideal_properties(&catalog::dual_numbers_plain(Q), &Subspace::zero(Q, 2)),
        Err(IdealError::NotSemiprime(1))
    ));
    assert!(matches!(
        semiprime_ideal_properties(&k, &Subspace::span(Q, 2, &[vector::from_ints(Q, &[1, 1])])),
        Err(IdealError::NotAnIdeal(Side::Bi))
    ));
}
