use hyperloci::grouptheory::{
    construct, coset_enumerate, find_monomorphism, find_monomorphism_budget, is_isomorphic, presentation, printed_presentation,
    Family, FiniteGroup, Presentation, Search, COSET_CAP,
};
use proptest::prelude::*;

fn group(f: Family, n: Option<u32>) -> FiniteGroup {
    construct(f, n).unwrap()
}

fn enumerated_order(p: &Presentation) -> usize {
    coset_enumerate(p, COSET_CAP).unwrap().order()
}

#[test]
fn extension_orders() {
    for n in 2..=8u32 {
        for f in [Family::H, Family::G] {
            assert_eq!(enumerated_order(&presentation(f, Some(n)).unwrap()), 4 * n as usize, "{f}{n}");
        }
        // V_n and U_n reach 4n only for even n; for odd n they have order 2n.
        let expected = if n % 2 == 0 { 4 * n } else { 2 * n } as usize;
        for f in [Family::V, Family::U] {
            assert_eq!(enumerated_order(&presentation(f, Some(n)).unwrap()), expected, "{f}{n}");
        }
    }
    assert_eq!(enumerated_order(&presentation(Family::W2, None).unwrap()), 48);
    assert_eq!(enumerated_order(&presentation(Family::W3, None).unwrap()), 48);
}

#[test]
fn printed_relators_collapse() {
    assert_eq!(enumerated_order(&printed_presentation(Family::U, Some(4)).unwrap()), 8);
    assert_eq!(enumerated_order(&printed_presentation(Family::W3, None).unwrap()), 24);
    let w3 = coset_enumerate(&printed_presentation(Family::W3, None).unwrap(), COSET_CAP).unwrap();
    assert!(is_isomorphic(&w3, &group(Family::Symmetric, Some(4))));
}

#[test]
fn matrix_group_orders() {
    assert_eq!(group(Family::SL23, None).order(), 24);
    assert_eq!(group(Family::GL23, None).order(), 48);
    assert_eq!(group(Family::SL25, None).order(), 120);
    assert_eq!(group(Family::Z2xA5, None).order(), 120);
    assert!(!is_isomorphic(&group(Family::SL25, None), &group(Family::Z2xA5, None)));
    assert!(!is_isomorphic(&group(Family::SL23, None), &group(Family::Z2xA4, None)));
}

#[test]
fn small_isomorphisms() {
    let h2 = group(Family::H, Some(2));
    assert!(is_isomorphic(&h2, &group(Family::U, Some(2))));
    assert!(is_isomorphic(&h2, &group(Family::Z2xZ, Some(4))));
    assert!(is_isomorphic(&group(Family::V, Some(2)), &group(Family::Dihedral, Some(4))));
    assert!(is_isomorphic(&group(Family::G, Some(2)), &group(Family::Quaternion, Some(8))));
    assert!(is_isomorphic(&group(Family::G, Some(4)), &group(Family::Quaternion, Some(16))));
    assert!(is_isomorphic(&group(Family::G, Some(8)), &group(Family::Quaternion, Some(32))));
}

#[test]
fn h_and_g_agree_exactly_for_odd_n() {
    for n in [3, 5, 7] {
        assert!(is_isomorphic(&group(Family::H, Some(n)), &group(Family::G, Some(n))), "n = {n}");
    }
    for n in [2, 4, 12] {
        assert!(!is_isomorphic(&group(Family::H, Some(n)), &group(Family::G, Some(n))), "n = {n}");
    }
}

#[test]
fn embeddings() {
    let q8 = group(Family::Quaternion, Some(8));
    let d4 = group(Family::Dihedral, Some(4));
    assert!(find_monomorphism(&group(Family::Cyclic, Some(4)), &q8).is_some());
    assert!(find_monomorphism(&group(Family::Z2xZ, Some(2)), &q8).is_none());
    assert!(find_monomorphism(&q8, &d4).is_none());
    assert!(find_monomorphism(&q8, &group(Family::SL23, None)).is_some());
    assert!(find_monomorphism(&d4, &group(Family::V, Some(10))).is_some());
    assert!(find_monomorphism(&q8, &group(Family::V, Some(10))).is_none());
    assert_eq!(find_monomorphism_budget(&q8, &group(Family::GL23, None), 0), Search::Exhausted);
}

#[test]
fn fingerprints_separate_order_sixteen() {
    let q16 = group(Family::Quaternion, Some(16));
    let sd16 = group(Family::SemiDihedral, Some(16));
    let d8 = group(Family::Dihedral, Some(8));
    assert_ne!(q16.fingerprint(), sd16.fingerprint());
    assert_ne!(q16.fingerprint(), d8.fingerprint());
    assert!(!is_isomorphic(&sd16, &d8));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cyclic_groups_embed_in_dihedral(n in 2u32..9, m in 1u32..4) {
        let h = group(Family::Cyclic, Some(n));
        let g = group(Family::Dihedral, Some(n * m));
        let Search::Found { generators, images } = find_monomorphism_budget(&h, &g, 1_000_000) else {
            return Err(TestCaseError::fail("no embedding found"));
        };
        for (a, b) in generators.iter().zip(&images) {
            prop_assert_eq!(h.element_order(*a), g.element_order(*b));
        }
        prop_assert_eq!(g.subgroup(&images).len(), h.order());
    }

    #[test]
    fn isomorphism_is_reflexive_on_families(n in 2u32..9) {
        for f in [Family::Dihedral, Family::Z2xZ, Family::H] {
            let g = group(f, Some(n));
            prop_assert!(is_isomorphic(&g, &g));
        }
    }
}
