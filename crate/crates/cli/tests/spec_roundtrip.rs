use std::collections::BTreeMap;

use proptest::prelude::*;

use dg_forge::spec::{
    emit_spec, parse_spec, AlgebraSpec, BackendTag, Budgets, FieldSpec, GeneratorSpec, LocalisationSpec, ModeTag,
    ModuleSpec, Num, RingSpec, SideTag, SpecFile, ViewTag, VERSION,
};

fn num() -> impl Strategy<Value = Num> {
    prop_oneof![
        (-9i64..10).prop_map(Num::Int),
        (-9i64..10, 1i64..7).prop_map(|(a, b)| Num::Text(format!("{a}/{b}"))),
    ]
}

fn name() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9]{0,4}"
}

fn algebra() -> impl Strategy<Value = AlgebraSpec> {
    (1usize..5).prop_flat_map(|n| {
        (
            prop::collection::vec(name(), n),
            prop::collection::vec(-2i64..3, n),
            prop::collection::vec(num(), n),
            prop::collection::vec((0..n, 0..n, 0..n, num()), 0..6),
            prop::collection::vec((0..n, 0..n, num()), 0..4),
        )
            .prop_map(|(basis, degrees, unit, mul, diff)| AlgebraSpec { basis, degrees, unit, mul, diff })
    })
}

fn ring() -> impl Strategy<Value = RingSpec> {
    prop::collection::vec((name(), -3i64..4, any::<bool>()), 1..3).prop_map(|gs| RingSpec {
        differential: gs.iter().take(1).map(|g| (g.0.clone(), "1".to_string())).collect(),
        generators: gs.into_iter().map(|(name, degree, laurent)| GeneratorSpec { name, degree, laurent }).collect(),
    })
}

fn spec() -> impl Strategy<Value = SpecFile> {
    let field = prop_oneof![
        Just(FieldSpec::Name("Q".into())),
        prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(|fp| FieldSpec::Prime { fp }),
    ];
    let module = (name(), prop::sample::select(vec![SideTag::Left, SideTag::Right, SideTag::Bi]),
        prop::sample::select(vec![ViewTag::Dg, ViewTag::Graded, ViewTag::Ungraded]),
        prop::collection::vec(name(), 0..3))
        .prop_map(|(name, side, view, generators)| ModuleSpec { name, side, view, generators });
    let loc = (name(), prop::collection::vec("[a-z]+ \\+ [0-9]\\*[a-z]+", 1..3), any::<bool>(), prop::option::of(name()))
        .prop_map(|(name, localise_at, k, ideal)| LocalisationSpec {
            name,
            localise_at,
            mode: if k { ModeTag::Kernel } else { ModeTag::Regular },
            ideal,
        });
    let budgets = (1usize..10_000, 1usize..5000, any::<u64>(), 0i64..50)
        .prop_map(|(enumeration, samples, seed, window)| Budgets { enumeration, samples, seed, window });
    (
        prop::option::of(name()),
        field,
        prop_oneof![algebra().prop_map(Ok), ring().prop_map(Err)],
        prop::collection::vec(module, 0..3),
        prop::collection::vec(loc, 0..3),
        budgets,
        prop::collection::btree_map("[a-z/-]{1,12}", "[a-z0-9]{1,5}", 0..4),
    )
        .prop_map(|(nm, field, payload, modules, localisations, budgets, expect)| {
            let (backend, algebra, ring) = match payload {
                Ok(a) => (BackendTag::Findim, Some(a), None),
                Err(r) => (BackendTag::Poly, None, Some(r)),
            };
            SpecFile {
                version: VERSION,
                name: nm,
                about: None,
                field,
                backend,
                algebra,
                ring,
                modules,
                analyses: vec![],
                localisations,
                budgets,
                expect: expect.into_iter().collect::<BTreeMap<_, _>>(),
            }
        })
}

proptest! {
    #[test]
    fn parse_inverts_emit(s in spec()) {
        let text = emit_spec(&s);
        let (back, warnings) = parse_spec(&text, true).unwrap();
        prop_assert!(warnings.is_empty());
        prop_assert_eq!(back, s);
    }
}
