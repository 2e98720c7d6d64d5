use complementa::complement::{
    c_separating_subgroups, complements, complements_by_search, complements_in,
    has_c_separating, is_complemented, is_completely_factorizable, is_supercomplemented,
    lemma1_transport_check, ComplementTable, Mode,
};
use complementa::constructions::{alternating4, catalog_entry, dihedral, elementary_abelian, symmetric3};
use complementa::lattice::{generated_subgroup, product_set};
use complementa::{Error, FiniteGroup, Subgroup, SubgroupLattice};

#[test]
fn complements_are_genuine() {
    let g = dihedral(4).unwrap();
    let lat = SubgroupLattice::build(&g).unwrap();
    for h in lat.subgroups() {
        for t in complements_in(&g, &lat, h, Mode::All).complements {
            let (prod, _) = product_set(&g, h, &t);
            assert_eq!(prod.len(), g.order());
            assert!(h.intersection(&g, &t).is_trivial());
        }
    }
}

#[test]
fn first_and_all_modes() {
    let g = symmetric3().unwrap();
    let r = generated_subgroup(&g, &[g.element_by_word("r").unwrap()]);
    let all = complements(&g, &r, Mode::All).unwrap();
    assert_eq!(all.complements.len(), 3);
    assert!(all.exhaustive);
    let first = complements(&g, &r, Mode::First).unwrap();
    assert_eq!(first.complements.len(), 1);
    assert!(all.complements.contains(&first.complements[0]));
}

#[test]
fn completely_factorizable_examples() {
    let decide = |g: &FiniteGroup| is_completely_factorizable(g, &SubgroupLattice::build(g).unwrap());
    assert!(decide(&symmetric3().unwrap()).holds);
    assert!(decide(&elementary_abelian(2, 3).unwrap()).holds);
    assert!(decide(&FiniteGroup::cyclic(30).unwrap()).holds);
    let c4 = decide(&FiniteGroup::cyclic(4).unwrap());
    assert!(!c4.holds);
    assert_eq!(c4.witness.unwrap().order(), 2);
    // the order-2 subgroups of A4 would need a complement of order 6
    let a4 = decide(&alternating4().unwrap());
    assert!(!a4.holds);
    assert_eq!(a4.witness.unwrap().order(), 2);
}

#[test]
fn supercomplemented_decisions() {
    let g = FiniteGroup::cyclic(4).unwrap();
    let x = generated_subgroup(&g, &[1]);
    assert!(is_supercomplemented(&g, &x).holds);
    let x2 = generated_subgroup(&g, &[2]);
    let d = is_supercomplemented(&g, &x2);
    assert!(!d.holds);
    assert_eq!(d.witness, Some(x2.clone()));
    assert!(!is_complemented(&g, &x2));
    assert!(!is_supercomplemented(&g, &Subgroup::trivial(&g)).holds);
}

#[test]
fn table_and_search_agree() {
    for name in ["d8xc2", "q8xc2", "a4xc2", "dic3xc2", "c9xc3"] {
        let g = catalog_entry(name).unwrap().build().unwrap().group;
        let lat = SubgroupLattice::build(&g).unwrap();
        let table = ComplementTable::build(&g, &lat);
        for (i, h) in lat.subgroups().iter().enumerate() {
            let search = complements_by_search(&g, h, Mode::First);
            assert_eq!(table.is_complemented(i), !search.complements.is_empty(), "{name} {i}");
            assert_eq!(
                table.is_supercomplemented(&lat, h).holds,
                is_supercomplemented(&g, h).holds,
                "{name} {i}"
            );
        }
    }
}

#[test]
fn c_separation() {
    let g = FiniteGroup::cyclic(4).unwrap();
    let lat = SubgroupLattice::build(&g).unwrap();
    let sep = c_separating_subgroups(&g, &lat);
    assert_eq!(sep, vec![generated_subgroup(&g, &[2])]);
    let t4 = catalog_entry("theorem4").unwrap().build().unwrap().group;
    assert!(!has_c_separating(&t4, &SubgroupLattice::build(&t4).unwrap()));
    // overgroups of a C-separating subgroup are C-separating
    let d8 = dihedral(4).unwrap();
    let lat = SubgroupLattice::build(&d8).unwrap();
    let sep = c_separating_subgroups(&d8, &lat);
    for h in &sep {
        for k in lat.overgroups_of(h) {
            assert!(k.order() == d8.order() || sep.contains(k));
        }
    }
}

#[test]
fn transport_through_quotients() {
    let g = dihedral(4).unwrap();
    let lat = SubgroupLattice::build(&g).unwrap();
    let whole = Subgroup::whole(&g);
    let r2 = generated_subgroup(&g, &[g.pow(g.element_by_word("r").unwrap(), 2)]);
    let mut checked = 0;
    for h in lat.subgroups() {
        if is_supercomplemented(&g, h).holds && r2.is_subgroup_of(h) {
            assert!(lemma1_transport_check(&g, h, &whole, &r2).unwrap());
            checked += 1;
        }
    }
    assert!(checked > 0);
    let c4 = FiniteGroup::cyclic(4).unwrap();
    let x2 = generated_subgroup(&c4, &[2]);
    let e = lemma1_transport_check(&c4, &x2, &Subgroup::whole(&c4), &Subgroup::trivial(&c4));
    assert!(matches!(e, Err(Error::Precondition(_))));
}
