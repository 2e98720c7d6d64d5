use complementa::constructions::{alternating4, catalog, dihedral, elementary_abelian, quaternion8, symmetric3};
use complementa::lattice::{
    conjugates, core, dedekind_identity_check, generated_subgroup, normal_closure, overgroups,
    product_set,
};
use complementa::verify::oracle::{all_subgroups_by_subsets, SUBSET_ORACLE_CAP};
use complementa::{Error, FiniteGroup, Subgroup, SubgroupLattice};

#[test]
fn subgroup_counts() {
    let count = |g: FiniteGroup| SubgroupLattice::build(&g).unwrap().len();
    assert_eq!(count(FiniteGroup::cyclic(12).unwrap()), 6);
    assert_eq!(count(symmetric3().unwrap()), 6);
    assert_eq!(count(dihedral(4).unwrap()), 10);
    assert_eq!(count(quaternion8().unwrap()), 6);
    assert_eq!(count(alternating4().unwrap()), 10);
    assert_eq!(count(elementary_abelian(2, 3).unwrap()), 16);
    assert_eq!(count(elementary_abelian(3, 2).unwrap()), 6);
}

#[test]
fn matches_subset_oracle_on_small_catalog_groups() {
    let mut checked = 0;
    for entry in catalog() {
        if entry.fingerprint.order > SUBSET_ORACLE_CAP {
            continue;
        }
        let g = entry.build().unwrap().group;
        let lat = SubgroupLattice::build(&g).unwrap();
        let mut ours: Vec<Vec<usize>> = lat.subgroups().iter().map(|h| h.members().to_vec()).collect();
        ours.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        assert_eq!(ours, all_subgroups_by_subsets(&g), "{}", entry.name);
        checked += 1;
    }
    assert!(checked > 20);
}

#[test]
fn lattice_structure() {
    let g = dihedral(4).unwrap();
    let lat = SubgroupLattice::build(&g).unwrap();
    assert!(lat.get(0).is_trivial());
    assert_eq!(lat.whole().order(), 8);
    assert_eq!(lat.normal_subgroups().count(), 6);
    assert_eq!(lat.maximal_subgroups().count(), 3);
    assert_eq!(lat.conjugacy_classes().len(), 8);
    for &(a, b) in lat.covers() {
        assert!(lat.get(a).is_subgroup_of(lat.get(b)));
        assert!(lat.get(a).order() < lat.get(b).order());
    }
    let over: Vec<Subgroup> = overgroups(&g, lat.get(0));
    assert_eq!(over.len(), 10);
}

#[test]
fn lattice_cap() {
    let g = elementary_abelian(2, 6).unwrap();
    assert!(matches!(SubgroupLattice::build_with_cap(&g, 32), Err(Error::CapExceeded { .. })));
}

#[test]
fn normality_tools() {
    let g = symmetric3().unwrap();
    let t = generated_subgroup(&g, &[g.element_by_word("t").unwrap()]);
    assert_eq!(conjugates(&g, &t).len(), 3);
    assert_eq!(normal_closure(&g, &t).order(), 6);
    assert!(core(&g, &t).is_trivial());
}

#[test]
fn product_sets() {
    let g = symmetric3().unwrap();
    let t = generated_subgroup(&g, &[g.element_by_word("t").unwrap()]);
    let r = generated_subgroup(&g, &[g.element_by_word("r").unwrap()]);
    let (prod, is_subgroup) = product_set(&g, &t, &r);
    assert_eq!(prod.len(), 6);
    assert!(is_subgroup);
    let t2 = t.conjugate(&g, g.element_by_word("r").unwrap());
    let (prod, is_subgroup) = product_set(&g, &t, &t2);
    assert_eq!(prod.len(), 4);
    assert!(!is_subgroup);
}

#[test]
fn modular_identity() {
    let g = dihedral(4).unwrap();
    let lat = SubgroupLattice::build(&g).unwrap();
    let mut checked = 0;
    for a in lat.subgroups() {
        for b in lat.overgroups_of(a) {
            for t in lat.subgroups() {
                if let Ok(holds) = dedekind_identity_check(&g, a, b, t) {
                    assert!(holds);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn export_formats() {
    let g = symmetric3().unwrap();
    let lat = SubgroupLattice::build(&g).unwrap();
    let doc = lat.to_document(&g);
    assert_eq!(doc.format, "lattice-v1");
    assert_eq!(doc.subgroups.len(), 6);
    assert_eq!(doc.subgroups.iter().filter(|s| s.normal).count(), 3);
    let json = serde_json::to_string(&doc).unwrap();
    let back: complementa::lattice::LatticeDocument = serde_json::from_str(&json).unwrap();
    assert_eq!(back, doc);
    let dot = lat.to_dot(&g);
    assert!(dot.starts_with("digraph lattice {"));
    assert_eq!(dot.matches("->").count(), lat.covers().len());
}
