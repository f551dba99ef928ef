use deltan::dsl::print_expansion;
use deltan::verifier::{builtin_rings, catalog};
use deltan::{
    enumerate_ideals, is_delta_n_ideal, is_n_ideal, parse_expansion, DeltaNMethod, ElemExpr, Expansion, Ideal, Recipe,
    Ring, RingSpec,
};
use proptest::prelude::*;

fn rings() -> impl Strategy<Value = RingSpec> {
    prop::sample::select(builtin_rings())
}

fn bind(spec: &RingSpec) -> (Ring, Vec<Ideal>) {
    let r = Ring::new(spec).unwrap();
    let ideals = enumerate_ideals(&r).unwrap();
    (r, ideals)
}

fn pick<T: Clone>(v: &[T], k: usize) -> T {
    v[k % v.len()].clone()
}

fn recipe() -> impl Strategy<Value = Recipe> {
    let gens = prop::collection::vec((-20i64..20).prop_map(ElemExpr::int), 1..3);
    let leaf = prop_oneof![
        Just(Recipe::Delta0),
        Just(Recipe::Delta1),
        Just(Recipe::Full),
        gens.clone().prop_map(Recipe::DeltaPlus),
        gens.prop_map(Recipe::DeltaStar),
    ];
    leaf.prop_recursive(3, 8, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| Recipe::Compose(Box::new(a), Box::new(b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn lattice_laws(spec in rings(), a in any::<usize>(), b in any::<usize>()) {
        let (_, ideals) = bind(&spec);
        let (i, j) = (pick(&ideals, a), pick(&ideals, b));
        let meet = i.intersect(&j).unwrap();
        let join = i.sum(&j).unwrap();
        prop_assert!(meet.is_subset(&i).unwrap() && meet.is_subset(&j).unwrap());
        prop_assert!(i.is_subset(&join).unwrap() && j.is_subset(&join).unwrap());
        prop_assert!(i.product(&j).unwrap().is_subset(&meet).unwrap());
        prop_assert_eq!(i.sum(&j).unwrap(), j.sum(&i).unwrap());
        let colon = i.colon_ideal(&j).unwrap();
        prop_assert!(colon.product(&j).unwrap().is_subset(&i).unwrap());
    }

    #[test]
    fn radical_is_a_closure(spec in rings(), a in any::<usize>()) {
        let (_, ideals) = bind(&spec);
        let i = pick(&ideals, a);
        let r = i.radical();
        prop_assert!(i.is_subset(&r).unwrap());
        prop_assert_eq!(r.radical(), r);
    }

    #[test]
    fn catalog_expansions_are_expansions(spec in rings(), k in any::<usize>(), a in any::<usize>(), b in any::<usize>()) {
        let (r, ideals) = bind(&spec);
        let d = Expansion::new(&r, &pick(&catalog(&r).unwrap(), k)).unwrap();
        let (i, j) = (pick(&ideals, a), pick(&ideals, b));
        let di = d.apply(&i).unwrap();
        prop_assert!(i.is_subset(&di).unwrap());
        if i.is_subset(&j).unwrap() {
            prop_assert!(di.is_subset(&d.apply(&j).unwrap()).unwrap());
        }
    }

    #[test]
    fn methods_agree(spec in rings(), k in any::<usize>(), a in any::<usize>()) {
        let (r, ideals) = bind(&spec);
        let d = Expansion::new(&r, &pick(&catalog(&r).unwrap(), k)).unwrap();
        let proper: Vec<Ideal> = ideals.into_iter().filter(|i| i.is_proper()).collect();
        let i = pick(&proper, a);
        let first = is_delta_n_ideal(&i, &d, DeltaNMethod::Definition).unwrap();
        for m in DeltaNMethod::ALL {
            prop_assert_eq!(is_delta_n_ideal(&i, &d, m).unwrap(), first, "{}", m.name());
        }
    }

    #[test]
    fn n_ideals_and_nilradical(spec in rings(), k in any::<usize>(), a in any::<usize>()) {
        let (r, ideals) = bind(&spec);
        let d = Expansion::new(&r, &pick(&catalog(&r).unwrap(), k)).unwrap();
        let proper: Vec<Ideal> = ideals.into_iter().filter(|i| i.is_proper()).collect();
        let i = pick(&proper, a);
        let dn = is_delta_n_ideal(&i, &d, DeltaNMethod::Definition).unwrap();
        if is_n_ideal(&i).unwrap() {
            prop_assert!(dn);
        }
        if dn && d.apply(&i).unwrap().is_proper() {
            prop_assert!(i.is_subset(&Ideal::zero(&r).radical()).unwrap());
        }
    }

    #[test]
    fn expansion_text_round_trips(e in recipe()) {
        prop_assert_eq!(parse_expansion(&e.to_string()).unwrap(), e.clone());
        prop_assert_eq!(parse_expansion(&print_expansion(&e)).unwrap(), e);
    }

    #[test]
    fn ring_axioms(spec in rings(), a in any::<usize>(), b in any::<usize>(), c in any::<usize>()) {
        let r = Ring::new(&spec).unwrap();
        let els = r.elements().unwrap();
        let (x, y, z) = (pick(&els, a), pick(&els, b), pick(&els, c));
        let lhs = r.mul(&x, &r.add(&y, &z).unwrap()).unwrap();
        let rhs = r.add(&r.mul(&x, &y).unwrap(), &r.mul(&x, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(r.mul(&x, &y).unwrap(), r.mul(&y, &x).unwrap());
        prop_assert_eq!(r.mul(&x, &r.one()).unwrap(), x.clone());
        prop_assert_eq!(r.add(&x, &r.neg(&x).unwrap()).unwrap(), r.zero());
    }
}
