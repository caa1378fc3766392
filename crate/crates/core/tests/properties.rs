use std::sync::Arc;

use proptest::prelude::*;

use lyubeznik::complex::{is_preserved, lyubeznik_complex};
use lyubeznik::covers::is_cover;
use lyubeznik::invariants::{
    betti_from_preserved, is_minimal_resolution, l_length, min_l_length, minimality_conditions, obstruction,
    preserved_size, total_obstruction,
};
use lyubeznik::monomial::lcm_of;
use lyubeznik::oracle::{taylor_betti, verify_chain_complex, verify_resolution, verify_taylor_chain_complex};
use lyubeznik::{parse_ideal, FieldChoice, GenSet, Monomial, MonomialIdeal, OracleConfig, OrderedIdeal, SearchConfig, VariableContext};

const NAMES: [&str; 4] = ["x", "y", "z", "t"];

prop_compose! {
    fn ideal(max_gens: usize)(
        nvars in 1usize..=4,
        raw in prop::collection::vec(prop::collection::vec(0u32..=3, 4), 1..=max_gens),
    ) -> MonomialIdeal {
        let ctx = VariableContext::new(NAMES[..nvars].iter().copied()).unwrap();
        let gens: Vec<Monomial> = raw
            .into_iter()
            .map(|mut e| {
                e.truncate(nvars);
                if e.iter().all(|&x| x == 0) {
                    e[0] = 1;
                }
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal::new(ctx, gens).unwrap().0
    }
}

prop_compose! {
    fn ordered(max_gens: usize)(ideal in ideal(max_gens))(
        perm in Just((0..ideal.mu()).collect::<Vec<_>>()).prop_shuffle(),
        ideal in Just(ideal),
    ) -> OrderedIdeal {
        OrderedIdeal::new(Arc::new(ideal), perm).unwrap()
    }
}

/// Preservation straight from the definition.
fn preserved_direct(s: GenSet, o: &OrderedIdeal) -> bool {
    let ideal = o.ideal();
    s.subsets().filter(|d| !d.is_empty()).all(|d| {
        let l = lcm_of(d.iter().map(|g| ideal.generator(g))).unwrap();
        !(0..ideal.mu()).any(|u| {
            !d.contains(u) && ideal.generator(u).divides(&l).unwrap() && d.iter().all(|x| o.rank(u) < o.rank(x))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn preserved_matches_definition(o in ordered(6)) {
        let complex = lyubeznik_complex(&o);
        for s in o.ideal().all_generators().subsets() {
            let direct = preserved_direct(s, &o);
            prop_assert_eq!(is_preserved(s, &o), direct);
            prop_assert_eq!(complex.contains(s), direct);
        }
    }

    #[test]
    fn length_equals_preserved_size(o in ordered(6)) {
        prop_assert_eq!(l_length(&o), preserved_size(&o));
    }

    #[test]
    fn minimality_predicates_agree(o in ordered(6)) {
        let c = minimality_conditions(&o);
        prop_assert!(c.agree(), "{:?}", c);
        prop_assert_eq!(is_minimal_resolution(&o), obstruction(&o) == 0);
    }

    #[test]
    fn facets_of_minimal_complexes_are_not_covers(o in ordered(6)) {
        let complex = lyubeznik_complex(&o);
        let stable = complex.facets.iter().all(|&f| !is_cover(o.ideal(), f));
        prop_assert_eq!(stable, is_minimal_resolution(&o));
    }

    #[test]
    fn minimal_orders_reproduce_oracle(o in ordered(6)) {
        prop_assume!(is_minimal_resolution(&o));
        let truth = taylor_betti(o.ideal(), &OracleConfig::default()).unwrap();
        prop_assert_eq!(betti_from_preserved(&o).unwrap().to_quotient(), truth);
    }

    #[test]
    fn lyubeznik_complex_is_a_resolution(o in ordered(6)) {
        prop_assert!(verify_chain_complex(&o).passed());
        prop_assert!(verify_taylor_chain_complex(o.ideal()).passed());
        prop_assert!(verify_resolution(&o, &OracleConfig::default()).unwrap().passed());
    }

    #[test]
    fn projdim_never_exceeds_l(o in ordered(6)) {
        let t = taylor_betti(o.ideal(), &OracleConfig::default()).unwrap();
        prop_assert!(t.projective_dimension().unwrap() <= l_length(&o));
    }

    #[test]
    fn heuristic_bounds_exhaustive(i in ideal(6)) {
        let i = Arc::new(i);
        let ex = total_obstruction(&i, &SearchConfig::exhaustive()).unwrap();
        let cf = total_obstruction(&i, &SearchConfig::courts_first()).unwrap();
        prop_assert!(cf.value >= ex.value);
        prop_assert!(ex.exact);
        let l = min_l_length(&i, &SearchConfig::exhaustive()).unwrap();
        let w = l.witness_order(&i);
        prop_assert_eq!(l_length(&w), l.value);
    }

    #[test]
    fn ideal_files_round_trip(i in ideal(6)) {
        let back = parse_ideal(&i.to_ideal_file()).unwrap();
        prop_assert!(back.warnings.is_empty());
        prop_assert_eq!(back.ideal, i);
    }

    #[test]
    fn large_prime_field_agrees_with_rationals(i in ideal(5)) {
        let q = taylor_betti(&i, &OracleConfig::default()).unwrap();
        let p = taylor_betti(&i, &OracleConfig { field: FieldChoice::Prime(1_000_003), ..OracleConfig::default() }).unwrap();
        prop_assert_eq!(q, p);
    }
}
