use std::sync::Arc;

use proptest::prelude::*;
use twoagl::classify::{
    classify, hilbert_coefficients, sally_rank, CanonicalSetup, Classification, DossierJson,
    InvariantDossier,
};
use twoagl::ideal::{canonical_from_gap_duality, canonical_from_pseudo_frobenius, IdealJson};
use twoagl::{NumericalSemigroup, RelativeIdeal};

fn semigroup() -> impl Strategy<Value = Arc<NumericalSemigroup>> {
    prop::collection::vec(2i64..24, 2..5).prop_filter_map("gcd must be 1", |gens| {
        NumericalSemigroup::from_generators(&gens).ok().map(Arc::new)
    })
}

/// A semigroup with an ideal `min + ⟨offsets⟩ + H`.
fn with_ideal() -> impl Strategy<Value = (Arc<NumericalSemigroup>, Vec<i64>)> {
    semigroup().prop_flat_map(|h| {
        let c = h.conductor();
        (Just(h), prop::collection::vec(-3i64..c + 3, 1..4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_routes_agree(h in semigroup()) {
        prop_assert_eq!(canonical_from_pseudo_frobenius(&h), canonical_from_gap_duality(&h));
    }

    #[test]
    fn type_and_symmetry(h in semigroup()) {
        prop_assert_eq!(h.is_symmetric(), h.type_() == 1);
        prop_assert_eq!(h.is_symmetric(), 2 * h.genus() as i64 == h.conductor());
        let f = h.frobenius();
        for &x in h.gaps() {
            prop_assert!(x <= f);
        }
        prop_assert!(2 * h.genus() as i64 >= h.conductor());
    }

    #[test]
    fn apery_set_is_a_residue_system(h in semigroup()) {
        let e = h.multiplicity();
        let ap = h.apery_set(e).unwrap();
        prop_assert_eq!(ap.len() as i64, e);
        let mut residues: Vec<i64> = ap.iter().map(|w| w % e).collect();
        residues.sort_unstable();
        prop_assert_eq!(residues, (0..e).collect::<Vec<_>>());
        prop_assert_eq!(*ap.iter().max().unwrap() - e, h.frobenius());
        for &w in ap.iter() {
            prop_assert!(h.contains(w) && !h.contains(w - e));
        }
    }

    #[test]
    fn rank_routes_agree(h in semigroup()) {
        prop_assume!(!h.is_naturals());
        let setup = CanonicalSetup::new(&h).unwrap();
        let routes = setup.rank_routes().unwrap();
        prop_assert_eq!(routes[0], routes[1]);
        prop_assert_eq!(routes[0], routes[2]);
        prop_assert_eq!(classify(&h).unwrap(), Classification::from_rank(routes[0] as usize));
    }

    #[test]
    fn rank_does_not_depend_on_parameter(h in semigroup(), shift in 0i64..4) {
        prop_assume!(!h.is_naturals());
        let a = h.conductor() + shift;
        let setup = CanonicalSetup::with_parameter(&h, a).unwrap();
        prop_assert_eq!(setup.sally_rank().unwrap(), sally_rank(&h).unwrap());
        let (e0, e1) = hilbert_coefficients(&h, a).unwrap();
        prop_assert_eq!(e0, a);
        prop_assert_eq!(e1, setup.s.length_quotient(&setup.ring).unwrap() as i64);
    }

    #[test]
    fn theorem14_conditions_are_equivalent(h in semigroup()) {
        prop_assume!(!h.is_naturals());
        let conds = CanonicalSetup::new(&h).unwrap().theorem14_conditions(6).unwrap();
        prop_assert!(conds.iter().all(|&c| c == conds[0]), "{:?}", conds);
        prop_assert_eq!(conds[0], classify(&h).unwrap() == Classification::TwoAgl);
    }

    #[test]
    fn sum_and_colon_are_adjoint((h, offsets) in with_ideal(), shift in -4i64..8) {
        let e = RelativeIdeal::from_offsets(&h, &offsets).unwrap();
        let f = RelativeIdeal::from_offsets(&h, &[shift]).unwrap().union(&RelativeIdeal::maximal(&h)).unwrap();
        prop_assert_eq!(e.sum(&f).unwrap(), f.sum(&e).unwrap());
        let col = e.colon(&f).unwrap();
        prop_assert!(col.sum(&f).unwrap().is_subset(&e));
        // Maximality: nothing outside the colon maps into e.
        for z in col.min() - 5..col.min() {
            let single = RelativeIdeal::from_offsets(&h, &[z]).unwrap();
            prop_assert!(!single.sum(&f).unwrap().is_subset(&e));
        }
    }

    #[test]
    fn canonical_duality((h, offsets) in with_ideal()) {
        let k = canonical_from_pseudo_frobenius(&h);
        let e = RelativeIdeal::from_offsets(&h, &offsets).unwrap();
        let dual = k.colon(&e).unwrap();
        prop_assert_eq!(k.colon(&dual).unwrap(), e.clone());
        // Duality reverses inclusions and preserves lengths.
        let m_e = RelativeIdeal::maximal(&h).sum(&e).unwrap();
        let dual_m_e = k.colon(&m_e).unwrap();
        prop_assert_eq!(
            dual_m_e.length_quotient(&dual).unwrap(),
            e.length_quotient(&m_e).unwrap()
        );
    }

    #[test]
    fn lengths_add_along_chains((h, offsets) in with_ideal()) {
        let e = RelativeIdeal::from_offsets(&h, &offsets).unwrap();
        let m_e = RelativeIdeal::maximal(&h).sum(&e).unwrap();
        let mm_e = RelativeIdeal::maximal(&h).sum(&m_e).unwrap();
        let whole = e.length_quotient(&mm_e).unwrap();
        prop_assert_eq!(whole, e.length_quotient(&m_e).unwrap() + m_e.length_quotient(&mm_e).unwrap());
        prop_assert_eq!(e.length_quotient(&m_e).unwrap(), e.minimal_module_generators().len());
    }

    #[test]
    fn ideal_json_round_trips((h, offsets) in with_ideal()) {
        let e = RelativeIdeal::from_offsets(&h, &offsets).unwrap();
        let text = serde_json::to_string(&e.to_json()).unwrap();
        let back: IdealJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(RelativeIdeal::from_json(&h, &back).unwrap(), e);
    }

    #[test]
    fn dossier_json_round_trips(h in semigroup()) {
        let d = InvariantDossier::compute(&h).unwrap();
        let text = serde_json::to_string(&d.to_json()).unwrap();
        let back: DossierJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn blowup_is_a_semigroup_containing_k(h in semigroup()) {
        prop_assume!(!h.is_naturals());
        let setup = CanonicalSetup::new(&h).unwrap();
        let s = setup.s.to_semigroup().unwrap();
        prop_assert!(setup.k.is_subset(&setup.s));
        prop_assert!(s.frobenius() <= h.frobenius());
        prop_assert_eq!(setup.k_power(setup.reduction_number), setup.s.clone());
    }
}
