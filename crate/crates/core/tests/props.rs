//! Property tests for the order layer and the functor/monad operations.

use proptest::prelude::*;

use altdet_core::{
    alt_bind, alt_map, alt_unit, expand_antichain, minimal_elements, pow_map, AltElement,
    FinitePoset, FiniteFunction, StateSet,
};

/// Builds a poset from an arbitrary relation by reflexive-transitive
/// closure, discarding it if antisymmetry breaks.
fn poset_from_pairs(n: usize, pairs: &[(usize, usize)]) -> Option<FinitePoset> {
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        leq[i][i] = true;
    }
    for &(x, y) in pairs {
        leq[x % n][y % n] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    FinitePoset::from_leq(n, |x, y| leq[x][y]).ok()
}

fn arb_poset() -> impl Strategy<Value = FinitePoset> {
    (1usize..=5, proptest::collection::vec((0usize..5, 0usize..5), 0..8)).prop_filter_map(
        "antisymmetric closure",
        |(n, pairs)| poset_from_pairs(n, &pairs),
    )
}

fn arb_subset(n: usize) -> impl Strategy<Value = StateSet> {
    (0u64..1 << n).prop_map(move |bits| StateSet::from_bits(n, bits).unwrap())
}

proptest! {
    #[test]
    fn up_closure_is_a_closure_operator(p in arb_poset(), bits in 0u64..32) {
        let s = StateSet::from_bits(p.size(), bits & ((1 << p.size()) - 1)).unwrap();
        let c = p.up_closure(&s).unwrap();
        // extensive
        prop_assert!(s.is_subset_of(&c));
        // idempotent
        prop_assert_eq!(p.up_closure(&c).unwrap(), c);
        // the down-closure dual is extensive too
        let d = p.down_closure(&s).unwrap();
        prop_assert!(s.is_subset_of(&d));
        prop_assert_eq!(p.down_closure(&d).unwrap(), d);
    }

    #[test]
    fn closures_are_monotone(p in arb_poset(), a in 0u64..32, b in 0u64..32) {
        let m = (1u64 << p.size()) - 1;
        let s = StateSet::from_bits(p.size(), a & m).unwrap();
        let t = StateSet::from_bits(p.size(), (a | b) & m).unwrap();
        prop_assert!(p.up_closure(&s).unwrap().is_subset_of(&p.up_closure(&t).unwrap()));
        prop_assert!(p.down_closure(&s).unwrap().is_subset_of(&p.down_closure(&t).unwrap()));
    }

    #[test]
    fn up_sets_complement_down_sets(p in arb_poset(), bits in 0u64..32) {
        let m = (1u64 << p.size()) - 1;
        let s = StateSet::from_bits(p.size(), bits & m).unwrap();
        let complement = StateSet::from_bits(p.size(), !s.bits() & m).unwrap();
        prop_assert_eq!(
            p.is_up_closed(&s).unwrap(),
            p.is_down_closed(&complement).unwrap()
        );
    }

    #[test]
    fn minimal_after_expand_is_identity(n in 1usize..=5, fams in proptest::collection::vec(0u64..32, 0..5)) {
        let m = (1u64 << n) - 1;
        let sets: Vec<StateSet> = fams.iter().map(|&b| StateSet::from_bits(n, b & m).unwrap()).collect();
        let a = minimal_elements(&sets);
        let expanded = expand_antichain(n, &a).unwrap();
        prop_assert_eq!(minimal_elements(&expanded), a.clone());
        // every original member has some minimal member below it
        for s in &sets {
            prop_assert!(a.iter().any(|t| t.is_subset_of(s)));
        }
        // expansion is exactly the supersets of minimal members
        for e in &expanded {
            prop_assert!(a.iter().any(|t| t.is_subset_of(e)));
        }
    }

    #[test]
    fn pow_map_functoriality(table1 in proptest::collection::vec(0usize..3, 4), table2 in proptest::collection::vec(0usize..4, 3), s in arb_subset(4)) {
        let f = FiniteFunction::new(4, 3, table1.clone()).unwrap();
        let g = FiniteFunction::new(3, 4, table2.clone()).unwrap();
        let gf = FiniteFunction::new(4, 4, table1.iter().map(|&x| table2[x]).collect()).unwrap();
        prop_assert_eq!(
            pow_map(&gf, &s).unwrap(),
            pow_map(&g, &pow_map(&f, &s).unwrap()).unwrap()
        );
    }

    #[test]
    fn alt_map_functoriality(table1 in proptest::collection::vec(0usize..3, 4), table2 in proptest::collection::vec(0usize..4, 3), forks in proptest::collection::vec(0u64..16, 0..4)) {
        let sets: Vec<StateSet> = forks.iter().map(|&b| StateSet::from_bits(4, b).unwrap()).collect();
        let e = AltElement::from_sets(4, &sets).unwrap();
        let f = FiniteFunction::new(4, 3, table1.clone()).unwrap();
        let g = FiniteFunction::new(3, 4, table2.clone()).unwrap();
        let gf = FiniteFunction::new(4, 4, table1.iter().map(|&x| table2[x]).collect()).unwrap();
        prop_assert_eq!(
            alt_map(&gf, &e).unwrap(),
            alt_map(&g, &alt_map(&f, &e).unwrap()).unwrap()
        );
    }

    /// Binding is insensitive to non-minimal members: adding a superset
    /// fork to the outer element never changes the result.
    #[test]
    fn alt_bind_ignores_dominated_forks(
        forks in proptest::collection::vec(0u64..8, 1..4),
        extra in 0u64..8,
        decs in proptest::collection::vec(proptest::collection::vec(0u64..16, 0..3), 3),
    ) {
        let sets: Vec<StateSet> = forks.iter().map(|&b| StateSet::from_bits(3, b).unwrap()).collect();
        let e = AltElement::from_sets(3, &sets).unwrap();
        // superset of an existing fork
        let dominated = StateSet::from_bits(3, sets[0].bits() | extra).unwrap();
        let mut with_extra = sets.clone();
        with_extra.push(dominated);
        let e2 = AltElement::from_sets(3, &with_extra).unwrap();
        let decode: Vec<AltElement> = decs
            .iter()
            .map(|fs| {
                let sets: Vec<StateSet> = fs.iter().map(|&b| StateSet::from_bits(4, b).unwrap()).collect();
                AltElement::from_sets(4, &sets).unwrap()
            })
            .collect();
        prop_assert_eq!(alt_bind(4, &decode, &e).unwrap(), alt_bind(4, &decode, &e2).unwrap());
    }

    /// Unit laws of the alternation monad, on arbitrary elements.
    #[test]
    fn alt_unit_laws(forks in proptest::collection::vec(0u64..16, 0..4)) {
        let sets: Vec<StateSet> = forks.iter().map(|&b| StateSet::from_bits(4, b).unwrap()).collect();
        let e = AltElement::from_sets(4, &sets).unwrap();
        // left: binding the unit over e recovers e
        let lifted = alt_unit(1, 0).unwrap();
        prop_assert_eq!(alt_bind(4, std::slice::from_ref(&e), &lifted).unwrap(), e.clone());
        // right: binding units recovers e
        let units: Vec<AltElement> = (0..4).map(|x| alt_unit(4, x).unwrap()).collect();
        prop_assert_eq!(alt_bind(4, &units, &e).unwrap(), e);
    }
}
