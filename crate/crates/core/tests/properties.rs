//! Property tests for the structural invariants: Apéry sets hit every
//! residue class once, the Frobenius number sits one multiplicity below the
//! Apéry maximum, both genus routes agree, the symmetry criteria coincide,
//! and the family closed forms match the generic machinery.

use proptest::prelude::*;

use nsg_core::constructions::{ParamsS, ParamsT};
use nsg_core::oracle;
use nsg_core::presentations::{
    betti_elements, factorizations, minimal_presentation, presentation_cardinality,
};
use nsg_core::NumericalSemigroup;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Random coprime generator sets for the generic machinery.
fn generator_sets() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(2i64..=80, 2..=5)
        .prop_filter("gcd must be 1", |v| v.iter().fold(0, |a, &b| gcd(a, b)) == 1)
}

fn params_s() -> impl Strategy<Value = ParamsS> {
    (4i64..=7, 1i64..=4, 1i64..=8)
        .prop_filter_map("gcd(m, d) must be 1", |(e, q, d)| ParamsS::new(e, q, d).ok())
}

fn params_t() -> impl Strategy<Value = ParamsT> {
    (2i64..=4, 1i64..=3, 0i64..=4)
        .prop_filter_map("gcd(m, d) must be 1", |(he, hq, hd)| {
            ParamsT::new(2 * he, 2 * hq, 2 * hd + 1).ok()
        })
}

proptest! {
    #[test]
    fn apery_set_is_a_complete_residue_system(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let m = s.multiplicity();
        let ap = s.apery_set(m).unwrap();
        prop_assert_eq!(ap.len() as i64, m);
        for (r, &w) in ap.elements().iter().enumerate() {
            prop_assert_eq!(w.rem_euclid(m), r as i64);
            prop_assert!(s.contains(w));
            prop_assert!(!s.contains(w - m));
        }
        prop_assert_eq!(ap.elements()[0], 0);
    }

    #[test]
    fn frobenius_consistency(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let m = s.multiplicity();
        let f = s.frobenius();
        prop_assert_eq!(f, s.apery_set(m).unwrap().max() - m);
        prop_assert!(!s.contains(f));
        for k in 1..=m {
            prop_assert!(s.contains(f + k));
        }
    }

    #[test]
    fn genus_routes_agree(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let profile = s.gap_profile();
        prop_assert_eq!(s.genus_from_apery(), profile.genus());
        prop_assert_eq!(profile.genus(), profile.gaps().len() as i64);
        prop_assert_eq!(profile.gaps().iter().max().copied().unwrap_or(-1), profile.frobenius());
    }

    #[test]
    fn symmetry_criteria_coincide(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let f = s.frobenius();
        let mirror = (0..=f).all(|x| s.contains(x) != s.contains(f - x));
        prop_assert_eq!(s.is_symmetric(), mirror);
    }

    #[test]
    fn from_generators_is_idempotent(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let again = NumericalSemigroup::from_generators(s.generators()).unwrap();
        prop_assert_eq!(s.generators(), again.generators());
    }

    #[test]
    fn oracle_agrees_with_core(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assert_eq!(oracle::brute_frobenius(&s), s.frobenius());
        let m = s.multiplicity();
        prop_assert_eq!(oracle::brute_apery(&s, m).unwrap(), s.apery_set(m).unwrap());
        prop_assert_eq!(oracle::brute_symmetric(&s), s.is_symmetric());
        let bound = s.frobenius().max(0) + m;
        let sv = oracle::sieve(&s, bound);
        for n in 0..=bound {
            prop_assert_eq!(sv.contains(n), s.contains(n));
        }
    }

    #[test]
    fn factorizations_evaluate_to_their_element(gens in generator_sets(), n in 0i64..=400) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let fs = factorizations(&s, n);
        prop_assert_eq!(fs.is_empty(), !s.contains(n));
        let mut seen = std::collections::HashSet::new();
        for f in &fs {
            prop_assert_eq!(f.value(s.generators()), n);
            prop_assert!(seen.insert(f.clone()));
        }
    }

    #[test]
    fn two_generator_presentation_is_the_product_relation(
        pair in (2i64..=30, 2i64..=30).prop_filter("coprime a < b", |(a, b)| a < b && gcd(*a, *b) == 1)
    ) {
        let (a, b) = pair;
        let s = NumericalSemigroup::from_generators(&[a, b]).unwrap();
        prop_assert_eq!(betti_elements(&s), vec![a * b]);
        prop_assert_eq!(presentation_cardinality(&s), 1);
    }

    #[test]
    fn relation_count_matches_cardinality(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assert_eq!(minimal_presentation(&s).cardinality(), presentation_cardinality(&s));
    }

    #[test]
    fn family_s_closed_forms_match(p in params_s()) {
        let gamma = p.build();
        prop_assert_eq!(gamma.generators().len() as i64, p.e());
        prop_assert_eq!(gamma.multiplicity(), p.e() + 2 * p.q() + 1);
        prop_assert_eq!(gamma.generators()[1], p.m() + p.d());
        prop_assert_eq!(p.apery_closed_form(), gamma.apery_set(p.m()).unwrap());
        prop_assert_eq!(p.frobenius_closed_form(), gamma.frobenius());
        prop_assert!(gamma.is_symmetric());
    }

    #[test]
    fn family_t_closed_forms_match(p in params_t()) {
        let gamma = p.build();
        prop_assert_eq!(gamma.generators().len() as i64, p.e());
        prop_assert_eq!(gamma.multiplicity(), p.e() + 2 * p.q());
        prop_assert_eq!(gamma.generators()[1], p.m() + p.d());
        prop_assert_eq!(p.apery_closed_form(), gamma.apery_set(p.m()).unwrap());
        prop_assert_eq!(p.frobenius_closed_form(), gamma.frobenius());
        prop_assert!(gamma.is_symmetric());
        prop_assert!(p.max_gamma2() > p.max_gamma1());
    }
}
