use complementa::constructions::{dihedral, elementary_abelian, quaternion8, symmetric3, Fingerprint};
use complementa::lattice::{generated_subgroup, is_normal};
use complementa::{ActionSpec, Error, FiniteGroup};

#[test]
fn permutation_closure_orders() {
    let s4 = FiniteGroup::from_generators(&[vec![1, 2, 3, 0], vec![1, 0, 2, 3]]).unwrap();
    assert_eq!(s4.order(), 24);
    assert_eq!(s4.exponent(), 12);
    let a5 = FiniteGroup::from_generators(&[vec![1, 2, 0, 3, 4], vec![0, 1, 3, 4, 2]]).unwrap();
    assert_eq!(a5.order(), 60);
    assert_eq!(a5.primes(), vec![2, 3, 5]);
    let trivial = FiniteGroup::from_generators(&[vec![0, 1, 2]]).unwrap();
    assert_eq!(trivial.order(), 1);
}

#[test]
fn rejects_bad_permutations() {
    let e = FiniteGroup::from_generators(&[vec![0, 0, 1]]).unwrap_err();
    assert!(matches!(e, Error::InvalidPermutation(_)));
    let e = FiniteGroup::from_generators(&[vec![1, 0], vec![0, 1, 2]]).unwrap_err();
    assert!(matches!(e, Error::InvalidPermutation(_)));
}

#[test]
fn cap_is_enforced() {
    let s5 = [vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]];
    let e = FiniteGroup::from_generators_with_cap(&s5, 100).unwrap_err();
    assert!(matches!(e, Error::CapExceeded { .. }));
    assert_eq!(FiniteGroup::from_generators_with_cap(&s5, 120).unwrap().order(), 120);
}

#[test]
fn identity_and_inverses() {
    let g = dihedral(5).unwrap();
    assert_eq!(g.identity(), 0);
    for a in g.elements() {
        assert_eq!(g.mul(a, g.inv(a)), 0);
        assert_eq!(g.mul(0, a), a);
        assert_eq!(g.pow(a, g.element_order(a)), 0);
    }
}

#[test]
fn familiar_fingerprints() {
    let f = |g: &FiniteGroup| Fingerprint::of(g);
    assert_eq!(f(&dihedral(4).unwrap()), Fingerprint { order: 8, abelian: false, exponent: 4 });
    assert_eq!(f(&quaternion8().unwrap()), Fingerprint { order: 8, abelian: false, exponent: 4 });
    assert_eq!(f(&elementary_abelian(3, 3).unwrap()), Fingerprint { order: 27, abelian: true, exponent: 3 });
    assert_eq!(f(&symmetric3().unwrap()).exponent, 6);
}

#[test]
fn semidirect_product_conjugation_rule() {
    let c7 = FiniteGroup::cyclic(7).unwrap();
    let c3 = FiniteGroup::cyclic_named(3, "y").unwrap();
    let x2 = c7.element_by_word("x^2").unwrap();
    let g = ActionSpec::from_generator_images(&c3, &c7, &[vec![x2]])
        .unwrap()
        .semidirect_product()
        .unwrap();
    assert_eq!(g.order(), 21);
    assert!(!g.is_abelian());
    let x = g.element_by_word("x").unwrap();
    let y = g.element_by_word("y").unwrap();
    // y⁻¹ x y = x²
    assert_eq!(g.mul(g.mul(g.inv(y), x), y), g.pow(x, 2));
    assert_eq!(g.conj(x, y), g.pow(x, 2));
    assert!(is_normal(&g, &generated_subgroup(&g, &[x])));
    assert!(!is_normal(&g, &generated_subgroup(&g, &[y])));
}

#[test]
fn trivial_action_gives_direct_product() {
    let c4 = FiniteGroup::cyclic(4).unwrap();
    let c2 = FiniteGroup::cyclic_named(2, "y").unwrap();
    let semi = ActionSpec::trivial(&c2, &c4).semidirect_product().unwrap();
    let direct = c4.direct_product(&c2).unwrap();
    assert_eq!(Fingerprint::of(&semi), Fingerprint::of(&direct));
    assert!(semi.is_abelian());
}

#[test]
fn invalid_actions_are_rejected() {
    let c4 = FiniteGroup::cyclic(4).unwrap();
    let c2 = FiniteGroup::cyclic_named(2, "y").unwrap();
    // x ↦ x² is not injective on C4
    let x2 = c4.element_by_word("x^2").unwrap();
    let e = ActionSpec::from_generator_images(&c2, &c4, &[vec![x2]]).unwrap_err();
    assert!(matches!(e, Error::NotAnAutomorphism(_)));
    // an automorphism of order 3 cannot be the image of an involution
    let c7 = FiniteGroup::cyclic(7).unwrap();
    let sq = c7.element_by_word("x^2").unwrap();
    let e = ActionSpec::from_generator_images(&c2, &c7, &[vec![sq]]).unwrap_err();
    assert!(matches!(e, Error::InconsistentAction(_)));
}

#[test]
fn words_and_labels() {
    let g = dihedral(4).unwrap();
    let r = g.element_by_word("r").unwrap();
    let s = g.element_by_word("s").unwrap();
    assert_eq!(g.element_by_word("r^2*s").unwrap(), g.mul(g.pow(r, 2), s));
    assert_eq!(g.element_by_word("1").unwrap(), 0);
    assert_eq!(g.element_by_word(g.label(g.mul(s, r))).unwrap(), g.mul(s, r));
    assert!(matches!(g.element_by_word("z"), Err(Error::UnknownElement(_))));
}

#[test]
fn cayley_round_trip_and_rejection() {
    let g = quaternion8().unwrap();
    let back = FiniteGroup::from_json(&g.to_json()).unwrap();
    assert_eq!(back.table(), g.table());
    assert_eq!(back.labels(), g.labels());
    assert!(FiniteGroup::from_json("not json").is_err());
    let short = r#"{"format":"cayley-v1","order":2,"mult":[0,1,1],"generators":[1],"labels":["1","x"]}"#;
    assert!(FiniteGroup::from_json(short).is_err());
    // not a Latin square
    let bad = r#"{"format":"cayley-v1","order":2,"mult":[0,1,1,1],"generators":[1],"labels":["1","x"]}"#;
    assert!(matches!(FiniteGroup::from_json(bad), Err(Error::InvalidTable(_))));
}

#[test]
fn quotient_by_normal_subgroup() {
    let g = dihedral(4).unwrap();
    let r = g.element_by_word("r").unwrap();
    let rot = generated_subgroup(&g, &[r]);
    let (q, proj) = g.quotient(rot.members()).unwrap();
    assert_eq!(q.order(), 2);
    for a in g.elements() {
        for b in g.elements() {
            assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]));
        }
    }
    let s = g.element_by_word("s").unwrap();
    let reflection = generated_subgroup(&g, &[s]);
    assert!(matches!(g.quotient(reflection.members()), Err(Error::NotNormal(_))));
}
