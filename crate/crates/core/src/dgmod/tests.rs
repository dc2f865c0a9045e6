use super::enumerate::all_submodules;
use super::*;
use crate::catalog;
use crate::exactla::{Field, Mat, Subspace};

const F2: Field = Field::Prime(2);
const F3: Field = Field::Prime(3);
const Q: Field = Field::Rational;

fn coord(f: Field, n: usize, idx: &[usize]) -> Subspace {
    Subspace::coordinate(f, n, idx)
}

/// `x` with `x·y` nilpotent for every `y` in the span, by listing every element.
fn radical_by_brute_force(f: Field, basis: &[Mat]) -> Subspace {
    let elems = f.elements().unwrap();
    let k = basis.len();
    let n = basis[0].rows();
    let all: Vec<Vec<crate::exactla::Scalar>> = (0..elems.len().pow(k as u32))
        .map(|mut code| {
            (0..k)
                .map(|_| {
                    let d = code % elems.len();
                    code /= elems.len();
                    elems[d].clone()
                })
                .collect()
        })
        .collect();
    let mats: Vec<Mat> = all.iter().map(|c| radical::combine(f, basis, c)).collect();
    let nilpotent = |m: &Mat| m.pow(n as u64).is_zero();
    let members: Vec<_> = all
        .iter()
        .zip(&mats)
        .filter(|(_, x)| mats.iter().all(|y| nilpotent(&x.mul(y))))
        .map(|(c, _)| c.clone())
        .collect();
    Subspace::span(f, k, &members)
}

#[test]
fn radical_matches_brute_force() {
    for (name, alg) in catalog::enumerable_corpus() {
        if alg.dim() > 6 || alg.field() == F3 && alg.dim() > 5 {
            continue;
        }
        let basis = alg.right_matrices().to_vec();
        let got = radical::radical_coords(alg.field(), &basis);
        assert_eq!(got, radical_by_brute_force(alg.field(), &basis), "{name}");
    }
}

#[test]
fn radical_of_small_characteristic_envelope() {
    // p = 2 ≤ n = 4: the generalised-trace path.
    let m = DgModule::regular_right(&catalog::mat2_dg(F2));
    let env = m.envelope();
    let got = radical::radical_coords(F2, &env);
    assert_eq!(got, radical_by_brute_force(F2, &env));
}

#[test]
fn generate_examples() {
    for f in [Q, F2, F3] {
        let m = DgModule::regular_right(&catalog::mat2_dg(f));
        let g = dg_generate(&m, &[vector::unit(f, 4, 0)]);
        assert_eq!(g.space, coord(f, 4, &[0, 1]));
        assert!(g.is_certified());
        assert!(dg_generate(&m, &[vector::zeros(f, 4)]).space.is_zero());
        assert!(dg_generate(&m, &[vector::from_ints(f, &[1, 0, 0, 1])]).space.is_full());
    }
}

#[test]
fn largest_inside_examples() {
    let m = DgModule::regular_right(&catalog::mat2_dg(Q));
    assert!(largest_dg_submodule_inside(&m, &m.full()).space.is_full());
    let i = coord(Q, 4, &[0, 1]);
    assert_eq!(largest_dg_submodule_inside(&m, &i).space, i);
    assert!(largest_dg_submodule_inside(&m, &coord(Q, 4, &[2])).space.is_zero());
}

#[test]
fn socle_examples() {
    for f in [Q, F2, F3] {
        let m = DgModule::regular_right(&catalog::mat2_dg(f));
        assert_eq!(dg_socle(&m).space, coord(f, 4, &[0, 1]));
        assert!(dg_socle(&DgModule::regular_right(&catalog::kxk(f))).space.is_full());
        assert!(dg_socle(&DgModule::regular_right(&catalog::dual_numbers_dg(f))).space.is_full());
        let plain = DgModule::regular_right(&catalog::dual_numbers_plain(f));
        assert_eq!(dg_socle(&plain).space, coord(f, 2, &[1]));
    }
}

#[test]
fn essential_examples() {
    let m = DgModule::regular_right(&catalog::mat2_dg(Q));
    assert!(is_dg_essential(&coord(Q, 4, &[0, 1]), &m).unwrap());
    assert!(!is_dg_essential(&m.zero(), &m).unwrap());
    assert!(is_dg_essential(&m.full(), &m).unwrap());
    assert!(is_dg_essential(&coord(Q, 4, &[0]), &m).is_err());
    // Ungraded, the right ideal span{e21, e22} is a nonzero witness against span{e11, e12}.
    let u = m.with_view(View::Ungraded);
    let e = essential_in(&u, &coord(Q, 4, &[0, 1])).unwrap();
    assert!(!e.essential);
    let w = e.witness.unwrap();
    assert!(u.is_submodule(&w) && !w.is_zero() && w.meet(&coord(Q, 4, &[0, 1])).is_zero());
}

#[test]
fn complement_examples() {
    let m = DgModule::regular_right(&catalog::mat2_dg(Q));
    let (x, c) = dg_complement(&m.full(), &m).unwrap();
    assert!(x.space.is_zero() && c.maximal_certified);
    let (x, _) = dg_complement(&m.zero(), &m).unwrap();
    assert!(x.space.is_full());
    let (x, _) = dg_complement(&coord(Q, 4, &[0, 1]), &m).unwrap();
    assert!(x.space.is_zero());
    let k = DgModule::regular_right(&catalog::kxk(Q));
    let (x, _) = dg_complement(&coord(Q, 2, &[0]), &k).unwrap();
    assert_eq!(x.space, coord(Q, 2, &[1]));
}

#[test]
fn udim_examples() {
    for f in [Q, F2, F3, Field::Prime(5)] {
        let m = DgModule::regular_right(&catalog::mat2_dg(f));
        assert_eq!(dg_udim(&m).exact(), Some(1), "{f}");
        assert_eq!(udim_in(&m.with_view(View::Ungraded)).exact(), Some(2), "{f}");
        assert_eq!(dg_udim(&m.direct_sum(&m)).exact(), Some(2), "{f}");
        let k = DgModule::regular_right(&catalog::kxk(f));
        assert_eq!(dg_udim(&k).exact(), Some(2));
        assert_eq!(dg_udim(&k.direct_sum(&k)).exact(), Some(4));
    }
}

#[test]
fn udim_of_matrix_algebra_over_rationals_is_exact() {
    // Regular right Mat₂ with zero differential, ungraded: two copies of the column module.
    let m = DgModule::regular_right(&catalog::mat2_graded(Q)).with_view(View::Ungraded);
    assert_eq!(udim_in(&m).exact(), Some(2));
    let g = m.with_view(View::Graded);
    assert_eq!(udim_in(&g).exact(), Some(2));
}

#[test]
fn enumeration_agrees_with_socle_test() {
    for (name, alg) in catalog::enumerable_corpus() {
        for view in [View::Dg, View::Graded, View::Ungraded] {
            let m = DgModule::regular_right(&alg).with_view(view);
            let Ok(lattice) = all_submodules(&m, 4096) else { continue };
            for n in &lattice {
                let literal = lattice.iter().all(|x| x.is_zero() || !x.meet(n).is_zero());
                let by_socle = essential_in(&m, n).unwrap().essential;
                assert_eq!(literal, by_socle, "{name} {view:?}");
                let c = complement_in(&m, n).unwrap();
                let maximal = lattice
                    .iter()
                    .filter(|x| x.meet(n).is_zero())
                    .all(|x| !x.includes(&c.space) || *x == c.space);
                assert!(maximal && c.space.meet(n).is_zero(), "{name} {view:?}");
                assert!(is_complement(&m, n, &c.space));
            }
            let simples = enumerate::minimal_nonzero(&lattice);
            let soc = simples.iter().fold(m.zero(), |a, s| a.plus(s));
            assert_eq!(soc, m.socle(), "{name} {view:?}");
        }
    }
}
