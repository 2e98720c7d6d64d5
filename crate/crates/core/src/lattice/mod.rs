//! Subgroups as bitsets, subgroup generation, and the full subgroup lattice.

mod export;

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};

pub use export::{LatticeDocument, LatticeEntry};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Default cap on the group order for full lattice enumeration.
pub const DEFAULT_LATTICE_CAP: usize = 512;

/// A subgroup of some parent group, as a membership bitset over the parent's
/// element indices. Equality and hashing look only at the members.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: ElementSet,
    order: usize,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by order, then lexicographically by member list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp_members(&other.members))
    }
}

impl Subgroup {
    pub fn trivial(g: &FiniteGroup) -> Subgroup {
        Subgroup {
            members: ElementSet::from_indices(g.order(), [0]),
            order: 1,
            generators: Vec::new(),
        }
    }

    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup {
            members: ElementSet::full(g.order()),
            order: g.order(),
            generators: g.generators().to_vec(),
        }
    }

    /// Builds a subgroup from a member set, checking closure and Lagrange.
    pub fn from_members(g: &FiniteGroup, members: ElementSet) -> Result<Subgroup> {
        if !members.contains(0) {
            return Err(Error::Precondition("member set lacks the identity".into()));
        }
        let list = members.to_vec();
        for &a in &list {
            if !members.contains(g.inv(a)) {
                return Err(Error::Precondition("member set not closed under inverses".into()));
            }
            for &b in &list {
                if !members.contains(g.mul(a, b)) {
                    return Err(Error::Precondition("member set not closed".into()));
                }
            }
        }
        // Re-derive a generating set by extension so joins stay cheap.
        let mut sub = Subgroup::trivial(g);
        for &a in &list {
            sub = sub.extend(g, a);
        }
        debug_assert_eq!(sub.members, members);
        Ok(sub)
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn index_in(&self, g: &FiniteGroup) -> usize {
        g.order() / self.order
    }

    pub fn intersection(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let members = self.members.intersection(&other.members);
        let order = members.len();
        if order == self.order {
            return self.clone();
        }
        if order == other.order {
            return other.clone();
        }
        let mut sub = Subgroup::trivial(g);
        for a in members.iter() {
            sub = sub.extend(g, a);
        }
        sub
    }

    /// `⟨self, x⟩`, by coset enumeration over the right cosets of `self`.
    pub fn extend(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        if self.members.contains(x) {
            return self.clone();
        }
        let base: Vec<usize> = self.members.iter().collect();
        let h = base.len();
        let mut members = self.members.clone();
        let mut elements = base.clone();
        let mut generators = self.generators.clone();
        generators.push(x);
        let add_coset = |rep: usize, members: &mut ElementSet, elements: &mut Vec<usize>| {
            for &b in &base {
                let y = g.mul(b, rep);
                members.insert(y);
                elements.push(y);
            }
        };
        add_coset(x, &mut members, &mut elements);
        let mut rep_pos = h;
        while rep_pos < elements.len() {
            let rep = elements[rep_pos];
            for &s in &generators {
                let y = g.mul(rep, s);
                if !members.contains(y) {
                    add_coset(y, &mut members, &mut elements);
                }
            }
            rep_pos += h;
        }
        Subgroup {
            order: elements.len(),
            members,
            generators,
        }
    }

    pub fn join(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        other
            .generators
            .iter()
            .fold(self.clone(), |acc, &x| acc.extend(g, x))
    }

    /// `H^x = x⁻¹ H x`.
    pub fn conjugate(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        Subgroup {
            members: ElementSet::from_indices(g.order(), self.members.iter().map(|h| g.conj(h, x))),
            order: self.order,
            generators: self.generators.iter().map(|&h| g.conj(h, x)).collect(),
        }
    }

    /// Display form `⟨w₁, w₂, …⟩` using the parent's element labels.
    pub fn describe(&self, g: &FiniteGroup) -> String {
        let gens: Vec<&str> = self.generators.iter().map(|&x| g.label(x)).collect();
        format!("⟨{}⟩", gens.join(", "))
    }
}

/// The least subgroup containing `elems`.
pub fn generated_subgroup(g: &FiniteGroup, elems: &[usize]) -> Subgroup {
    elems
        .iter()
        .fold(Subgroup::trivial(g), |acc, &x| acc.extend(g, x))
}

/// Distinct cyclic subgroups, canonically sorted.
pub fn cyclic_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut out: Vec<Subgroup> = g
        .elements()
        .map(|x| generated_subgroup(g, &[x]))
        .filter(|c| seen.insert(c.members.clone()))
        .collect();
    out.sort();
    out
}

/// Nontrivial cyclic subgroups of prime-power order. Every subgroup is the
/// join of the ones it contains.
fn primary_cyclic_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    cyclic_subgroups(g)
        .into_iter()
        .filter(|c| {
            c.order > 1 && crate::group::prime_factors(c.order as u64).len() == 1
        })
        .collect()
}

/// Every subgroup containing `h`, found by repeatedly joining cyclic
/// subgroups onto `h`. Canonically sorted.
pub fn overgroups(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    let cyclics = primary_cyclic_subgroups(g);
    let mut seen: HashSet<ElementSet> = HashSet::from([h.members.clone()]);
    let mut found = vec![h.clone()];
    let mut i = 0;
    while i < found.len() {
        let current = found[i].clone();
        for c in &cyclics {
            if c.generators.iter().all(|&x| current.contains(x)) {
                continue;
            }
            let joined = current.join(g, c);
            if seen.insert(joined.members.clone()) {
                found.push(joined);
            }
        }
        i += 1;
    }
    found.sort();
    found
}

pub fn is_normal(g: &FiniteGroup, h: &Subgroup) -> bool {
    g.generators()
        .iter()
        .all(|&s| h.generators.iter().all(|&x| h.contains(g.conj(x, s))))
}

/// The conjugacy class of `h`, canonically sorted.
pub fn conjugates(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut seen: HashSet<ElementSet> = HashSet::from([h.members.clone()]);
    let mut orbit = vec![h.clone()];
    let mut i = 0;
    while i < orbit.len() {
        for &s in g.generators() {
            let c = orbit[i].conjugate(g, s);
            if seen.insert(c.members.clone()) {
                orbit.push(c);
            }
        }
        i += 1;
    }
    orbit.sort();
    orbit
}

/// The smallest normal subgroup containing `h`.
pub fn normal_closure(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut current = h.clone();
    loop {
        let mut grown = false;
        for &s in g.generators() {
            for x in current.generators.clone() {
                let y = g.conj(x, s);
                if !current.contains(y) {
                    current = current.extend(g, y);
                    grown = true;
                }
            }
        }
        if !grown {
            return current;
        }
    }
}

/// The largest normal subgroup contained in `h`: the intersection of its
/// conjugates.
pub fn core(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut members = h.members.clone();
    for c in conjugates(g, h) {
        members = members.intersection(&c.members);
    }
    Subgroup::from_members(g, members).expect("intersection of subgroups is a subgroup")
}

/// The product set `AB = {ab}` and whether it is a subgroup.
///
/// Panics if `|AB|·|A∩B| ≠ |A|·|B|`, which would mean a corrupt table.
pub fn product_set(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> (ElementSet, bool) {
    let ab = product_of_sets(g, &a.members, &b.members);
    let meet = a.members.intersection_len(&b.members);
    assert_eq!(
        ab.len() * meet,
        a.order * b.order,
        "product formula violated: table is not a group"
    );
    let ba = product_of_sets(g, &b.members, &a.members);
    let is_subgroup = ab == ba;
    (ab, is_subgroup)
}

pub(crate) fn product_of_sets(g: &FiniteGroup, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(g.order());
    let bs: Vec<usize> = b.iter().collect();
    for x in a.iter() {
        for &y in &bs {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// Checks `B = A(B∩T)` for `A ⊆ B` and `G = AT` (as sets).
///
/// Precondition failures are reported as [`Error::Precondition`]; `Ok(false)`
/// means the identity itself failed.
pub fn dedekind_identity_check(
    g: &FiniteGroup,
    a: &Subgroup,
    b: &Subgroup,
    t: &Subgroup,
) -> Result<bool> {
    if !a.is_subgroup_of(b) {
        return Err(Error::Precondition("A is not contained in B".into()));
    }
    if product_of_sets(g, &a.members, &t.members).len() != g.order() {
        return Err(Error::Precondition("G ≠ AT".into()));
    }
    let bt = b.members.intersection(&t.members);
    Ok(product_of_sets(g, &a.members, &bt) == b.members)
}

pub fn is_abelian(g: &FiniteGroup, h: &Subgroup) -> bool {
    h.generators.iter().enumerate().all(|(i, &x)| {
        h.generators[i + 1..]
            .iter()
            .all(|&y| g.mul(x, y) == g.mul(y, x))
    })
}

/// Abelian of prime exponent; the trivial subgroup counts.
pub fn is_elementary_abelian(g: &FiniteGroup, h: &Subgroup) -> bool {
    if h.is_trivial() {
        return true;
    }
    let primes = crate::group::prime_factors(h.order as u64);
    primes.len() == 1
        && is_abelian(g, h)
        && h.generators.iter().all(|&x| g.pow(x, primes[0]) == 0)
}

/// All subgroups of a group together with inclusion and conjugacy data.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    index: HashMap<ElementSet, usize>,
    covers: Vec<(usize, usize)>,
    conjugacy_classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    normal: Vec<bool>,
}

impl SubgroupLattice {
    pub fn build(g: &FiniteGroup) -> Result<SubgroupLattice> {
        Self::build_with_cap(g, DEFAULT_LATTICE_CAP)
    }

    /// Enumerates every subgroup by layered joins of prime-power cyclic
    /// subgroups, starting from the trivial subgroup.
    pub fn build_with_cap(g: &FiniteGroup, cap: usize) -> Result<SubgroupLattice> {
        if g.order() > cap {
            return Err(Error::CapExceeded {
                cap_name: "lattice cap",
                size: g.order(),
                cap,
            });
        }
        let mut subgroups = overgroups(g, &Subgroup::trivial(g));
        subgroups.sort();
        let index: HashMap<ElementSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members.clone(), i))
            .collect();

        let mut covers = Vec::new();
        for (j, big) in subgroups.iter().enumerate() {
            let mut maximal: Vec<usize> = Vec::new();
            for i in (0..j).rev() {
                let small = &subgroups[i];
                if small.order == big.order || big.order % small.order != 0 {
                    continue;
                }
                if !small.members.is_subset(&big.members) {
                    continue;
                }
                if maximal
                    .iter()
                    .all(|&m| !small.members.is_subset(&subgroups[m].members))
                {
                    maximal.push(i);
                }
            }
            maximal.sort_unstable();
            covers.extend(maximal.into_iter().map(|i| (i, j)));
        }

        let unassigned = usize::MAX;
        let mut class_of = vec![unassigned; subgroups.len()];
        let mut conjugacy_classes = Vec::new();
        for i in 0..subgroups.len() {
            if class_of[i] != unassigned {
                continue;
            }
            let class: Vec<usize> = conjugates(g, &subgroups[i])
                .iter()
                .map(|c| index[&c.members])
                .collect();
            for &c in &class {
                class_of[c] = conjugacy_classes.len();
            }
            conjugacy_classes.push(class);
        }
        let normal = conjugacy_classes
            .iter()
            .map(|c| c.len() == 1)
            .collect::<Vec<_>>();
        let normal = class_of.iter().map(|&c| normal[c]).collect();
        Ok(SubgroupLattice {
            subgroups,
            index,
            covers,
            conjugacy_classes,
            class_of,
            normal,
        })
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(&h.members).copied()
    }

    /// Covering pairs `(i, j)`: `subgroups[i]` is maximal in `subgroups[j]`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.conjugacy_classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &Subgroup> + '_ {
        self.subgroups
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.normal[i])
            .map(|(_, s)| s)
    }

    pub fn of_order(&self, order: usize) -> impl Iterator<Item = &Subgroup> + '_ {
        let start = self.subgroups.partition_point(|s| s.order < order);
        self.subgroups[start..]
            .iter()
            .take_while(move |s| s.order == order)
    }

    /// Subgroups containing `h`, canonically sorted.
    pub fn overgroups_of<'a>(&'a self, h: &'a Subgroup) -> impl Iterator<Item = &'a Subgroup> + 'a {
        self.subgroups.iter().filter(move |s| h.is_subgroup_of(s))
    }

    /// Subgroups contained in `h`, canonically sorted.
    pub fn subgroups_of<'a>(&'a self, h: &'a Subgroup) -> impl Iterator<Item = &'a Subgroup> + 'a {
        self.subgroups.iter().filter(move |s| s.is_subgroup_of(h))
    }

    /// Maximal subgroups: those covered by the whole group.
    pub fn maximal_subgroups(&self) -> impl Iterator<Item = &Subgroup> + '_ {
        let top = self.subgroups.len() - 1;
        self.covers
            .iter()
            .filter(move |&&(_, j)| j == top)
            .map(|&(i, _)| &self.subgroups[i])
    }

    pub fn whole(&self) -> &Subgroup {
        self.subgroups.last().expect("lattice contains the whole group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_generators(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    /// Independent oracle: test every identity-containing subset of size
    /// dividing |G| for closure.
    fn brute_force_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
        let n = g.order();
        assert!(n <= 16);
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 || !n.is_multiple_of(mask.count_ones() as usize) {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1));
            if closed {
                out.push(members);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn member_lists(lat: &SubgroupLattice) -> Vec<Vec<usize>> {
        lat.subgroups().iter().map(|s| s.members().to_vec()).collect()
    }

    #[test]
    fn generated_edge_cases() {
        let g = FiniteGroup::cyclic(8).unwrap();
        assert!(generated_subgroup(&g, &[]).is_trivial());
        assert_eq!(generated_subgroup(&g, &[1]).order(), 8);
        assert_eq!(generated_subgroup(&g, &[g.pow(1, 2)]).order(), 4);
    }

    #[test]
    fn lattice_of_c4_is_a_chain_of_three() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let lat = SubgroupLattice::build(&g).unwrap();
        let orders: Vec<usize> = lat.subgroups().iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 4]);
        assert_eq!(lat.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn lattice_of_s3_has_six_subgroups() {
        let g = s3();
        let lat = SubgroupLattice::build(&g).unwrap();
        assert_eq!(lat.len(), 6);
        assert_eq!(member_lists(&lat), brute_force_subgroups(&g));
        // the three involution subgroups are one conjugacy class
        let classes: Vec<usize> = lat.conjugacy_classes().iter().map(Vec::len).collect();
        assert_eq!(classes, vec![1, 3, 1, 1]);
    }

    #[test]
    fn lattice_matches_oracle_on_small_groups() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let v8 = c2.direct_product(&c2).unwrap().direct_product(&c2).unwrap();
        let q8 = FiniteGroup::from_generators(&[
            vec![1, 2, 3, 0, 5, 6, 7, 4],
            vec![4, 7, 6, 5, 2, 1, 0, 3],
        ])
        .unwrap();
        for g in [v8, q8, FiniteGroup::cyclic(12).unwrap()] {
            let lat = SubgroupLattice::build(&g).unwrap();
            assert_eq!(member_lists(&lat), brute_force_subgroups(&g));
        }
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let g = FiniteGroup::cyclic(20).unwrap();
        let err = SubgroupLattice::build_with_cap(&g, 10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn overgroups_edge_cases() {
        let g = s3();
        let lat = SubgroupLattice::build(&g).unwrap();
        assert_eq!(overgroups(&g, &Subgroup::whole(&g)), vec![Subgroup::whole(&g)]);
        assert_eq!(overgroups(&g, &Subgroup::trivial(&g)), lat.subgroups());
    }

    #[test]
    fn normality_in_s3() {
        let g = s3();
        let t = generated_subgroup(&g, &[g.generators()[0]]);
        let r = generated_subgroup(&g, &[g.generators()[1]]);
        assert!(!is_normal(&g, &t));
        assert!(is_normal(&g, &r));
        assert_eq!(conjugates(&g, &t).len(), 3);
        assert!(core(&g, &t).is_trivial());
        assert_eq!(normal_closure(&g, &t), Subgroup::whole(&g));
        assert_eq!(core(&g, &Subgroup::whole(&g)), Subgroup::whole(&g));
        assert!(normal_closure(&g, &Subgroup::trivial(&g)).is_trivial());
    }

    #[test]
    fn product_sets() {
        let g = s3();
        let lat = SubgroupLattice::build(&g).unwrap();
        let twos: Vec<&Subgroup> = lat.of_order(2).collect();
        let (ab, is_sub) = product_set(&g, twos[0], twos[1]);
        assert_eq!(ab.len(), 4);
        assert!(!is_sub);
        let h = twos[0];
        let (h1, is_sub) = product_set(&g, h, &Subgroup::trivial(&g));
        assert_eq!(&h1, h.members());
        assert!(is_sub);
    }

    #[test]
    fn dedekind_preconditions_are_distinct_from_failure() {
        let g = s3();
        let lat = SubgroupLattice::build(&g).unwrap();
        let t = lat.of_order(2).next().unwrap();
        let r = lat.of_order(3).next().unwrap();
        let whole = Subgroup::whole(&g);
        let trivial = Subgroup::trivial(&g);
        assert!(dedekind_identity_check(&g, r, &whole, t).unwrap());
        assert!(dedekind_identity_check(&g, &trivial, t, &whole).unwrap());
        assert!(dedekind_identity_check(&g, r, r, t).unwrap());
        assert!(matches!(
            dedekind_identity_check(&g, &whole, r, t),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            dedekind_identity_check(&g, &trivial, r, t),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn abelian_predicates() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let whole = Subgroup::whole(&g);
        assert!(is_abelian(&g, &whole));
        assert!(!is_elementary_abelian(&g, &whole));
        assert!(is_elementary_abelian(&g, &Subgroup::trivial(&g)));
        let s = s3();
        assert!(!is_abelian(&s, &Subgroup::whole(&s)));
    }

    #[test]
    fn canonical_order_is_by_order_then_members() {
        let g = FiniteGroup::cyclic(6).unwrap();
        let lat = SubgroupLattice::build(&g).unwrap();
        for w in lat.subgroups().windows(2) {
            assert!(w[0] < w[1]);
        }
    }
}
