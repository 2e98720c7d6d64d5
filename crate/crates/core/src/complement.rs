//! Complement search and the predicates built on it.
//!
//! `T` complements `H` in `G` when `G = HT` and `H ∩ T = 1`. In a finite
//! group `|HT| = |H||T| / |H∩T|`, so it suffices to look at subgroups of
//! order `|G|/|H|` meeting `H` trivially. Every hit is still cross-checked by
//! computing the product set.
//!
//! Two routes are provided. The lattice route ([`ComplementTable`]) decides
//! complementation for every subgroup at once from a prebuilt
//! [`SubgroupLattice`]. The search route ([`complements_by_search`],
//! [`is_supercomplemented`]) never enumerates the lattice: it grows candidate
//! complements by joining cyclic subgroups that avoid `H`, and reaches
//! overgroups by joins onto `H`.

use std::collections::HashSet;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::{self, cyclic_subgroups, product_of_sets, Subgroup, SubgroupLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    First,
    All,
}

#[derive(Clone, Debug)]
pub struct ComplementResult {
    pub subject: Subgroup,
    pub complements: Vec<Subgroup>,
    /// Whether `complements` lists every complement (mode `All`).
    pub exhaustive: bool,
}

/// A yes/no answer, with a witness on the negative side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub holds: bool,
    pub witness: Option<Subgroup>,
}

impl Decision {
    fn yes() -> Self {
        Decision {
            holds: true,
            witness: None,
        }
    }

    fn no(witness: Subgroup) -> Self {
        Decision {
            holds: false,
            witness: Some(witness),
        }
    }
}

fn assert_complement(g: &FiniteGroup, h: &Subgroup, t: &Subgroup) {
    assert_eq!(
        product_of_sets(g, h.members(), t.members()).len(),
        g.order(),
        "order criterion accepted a non-complement"
    );
}

/// Complements of `h`, scanning lattice subgroups of order `|G|/|H|` in
/// canonical order.
pub fn complements_in(
    g: &FiniteGroup,
    lattice: &SubgroupLattice,
    h: &Subgroup,
    mode: Mode,
) -> ComplementResult {
    let target = g.order() / h.order();
    let mut found = Vec::new();
    for t in lattice.of_order(target) {
        if h.members().meets_only_in_identity(t.members()) {
            assert_complement(g, h, t);
            found.push(t.clone());
            if mode == Mode::First {
                break;
            }
        }
    }
    ComplementResult {
        subject: h.clone(),
        complements: found,
        exhaustive: mode == Mode::All,
    }
}

/// Complements of `h` without enumerating the lattice: candidates are grown
/// from the trivial subgroup by joining cyclic subgroups of prime-power order
/// that meet `h` trivially, keeping only joins whose order divides
/// `|G|/|H|` and which still avoid `h`.
pub fn complements_by_search(g: &FiniteGroup, h: &Subgroup, mode: Mode) -> ComplementResult {
    let target = g.order() / h.order();
    let cyclics: Vec<Subgroup> = cyclic_subgroups(g)
        .into_iter()
        .filter(|c| {
            c.order() > 1
                && target.is_multiple_of(c.order())
                && crate::group::prime_factors(c.order() as u64).len() == 1
                && h.members().meets_only_in_identity(c.members())
        })
        .collect();
    let mut found = Vec::new();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut stack = vec![Subgroup::trivial(g)];
    seen.insert(stack[0].members().clone());
    while let Some(t) = stack.pop() {
        if t.order() == target {
            assert_complement(g, h, &t);
            found.push(t);
            if mode == Mode::First {
                break;
            }
            continue;
        }
        for c in cyclics.iter().rev() {
            if c.generators().iter().all(|&x| t.contains(x)) {
                continue;
            }
            let joined = t.join(g, c);
            if target.is_multiple_of(joined.order())
                && h.members().meets_only_in_identity(joined.members())
                && seen.insert(joined.members().clone())
            {
                stack.push(joined);
            }
        }
    }
    found.sort();
    ComplementResult {
        subject: h.clone(),
        complements: found,
        exhaustive: mode == Mode::All,
    }
}

/// Complements via the lattice when `|G|` is within the default lattice cap,
/// via search otherwise.
pub fn complements(g: &FiniteGroup, h: &Subgroup, mode: Mode) -> Result<ComplementResult> {
    if g.order() <= lattice::DEFAULT_LATTICE_CAP {
        let lat = SubgroupLattice::build(g)?;
        Ok(complements_in(g, &lat, h, mode))
    } else {
        Ok(complements_by_search(g, h, mode))
    }
}

pub fn is_complemented(g: &FiniteGroup, h: &Subgroup) -> bool {
    !complements_by_search(g, h, Mode::First).complements.is_empty()
}

/// Whether every subgroup containing `h` is complemented; on failure the
/// witness is the canonically first uncomplemented overgroup.
pub fn is_supercomplemented(g: &FiniteGroup, h: &Subgroup) -> Decision {
    for k in lattice::overgroups(g, h) {
        if !is_complemented(g, &k) {
            return Decision::no(k);
        }
    }
    Decision::yes()
}

/// Complementation decided for every subgroup of a lattice at once.
#[derive(Clone, Debug)]
pub struct ComplementTable {
    /// Lattice index of the canonically first complement, if any.
    first: Vec<Option<usize>>,
}

impl ComplementTable {
    pub fn build(g: &FiniteGroup, lattice: &SubgroupLattice) -> ComplementTable {
        let subgroups = lattice.subgroups();
        let first = subgroups
            .iter()
            .map(|h| {
                let target = g.order() / h.order();
                let start = subgroups.partition_point(|s| s.order() < target);
                subgroups[start..]
                    .iter()
                    .take_while(|t| t.order() == target)
                    .position(|t| h.members().meets_only_in_identity(t.members()))
                    .map(|offset| {
                        assert_complement(g, h, &subgroups[start + offset]);
                        start + offset
                    })
            })
            .collect();
        ComplementTable { first }
    }

    pub fn is_complemented(&self, i: usize) -> bool {
        self.first[i].is_some()
    }

    /// Lattice index of the canonically first complement of subgroup `i`.
    pub fn first_complement(&self, i: usize) -> Option<usize> {
        self.first[i]
    }

    /// Lattice indices of uncomplemented subgroups, ascending.
    pub fn uncomplemented(&self) -> impl Iterator<Item = usize> + '_ {
        self.first
            .iter()
            .enumerate()
            .filter(|(_, f)| f.is_none())
            .map(|(i, _)| i)
    }

    pub fn is_supercomplemented(&self, lattice: &SubgroupLattice, h: &Subgroup) -> Decision {
        match self
            .uncomplemented()
            .map(|i| lattice.get(i))
            .find(|u| h.is_subgroup_of(u))
        {
            Some(u) => Decision::no(u.clone()),
            None => Decision::yes(),
        }
    }

    /// Lattice indices of the C-separating subgroups, ascending.
    ///
    /// Scans proper subgroups from the top down. A subgroup fails when some
    /// uncomplemented subgroup escapes it, and that same escapee then rules
    /// out everything below it, so failures are propagated downward instead
    /// of being rechecked.
    pub fn c_separating(&self, lattice: &SubgroupLattice) -> Vec<usize> {
        let n = lattice.len();
        let bad: Vec<&Subgroup> = self.uncomplemented().map(|i| lattice.get(i)).collect();
        let mut failed = vec![false; n];
        let mut found = Vec::new();
        for i in (0..n.saturating_sub(1)).rev() {
            if failed[i] {
                continue;
            }
            let h = lattice.get(i);
            match bad.iter().find(|u| !u.is_subgroup_of(h)) {
                None => found.push(i),
                Some(_) => {
                    for (j, k) in lattice.subgroups()[..=i].iter().enumerate() {
                        if k.is_subgroup_of(h) {
                            failed[j] = true;
                        }
                    }
                }
            }
        }
        found.reverse();
        debug_assert!(found.iter().all(|&i| {
            let h = lattice.get(i);
            lattice.subgroups()[..n - 1]
                .iter()
                .enumerate()
                .filter(|(_, k)| h.is_subgroup_of(k))
                .all(|(j, _)| found.contains(&j))
        }));
        found
    }
}

/// Every subgroup complemented; the witness is the first that is not.
/// Agreement with `is_supercomplemented(G, 1)` is asserted.
pub fn is_completely_factorizable(g: &FiniteGroup, lattice: &SubgroupLattice) -> Decision {
    let table = ComplementTable::build(g, lattice);
    let decision = match table.uncomplemented().next() {
        Some(i) => Decision::no(lattice.get(i).clone()),
        None => Decision::yes(),
    };
    assert_eq!(
        decision.holds,
        table.is_supercomplemented(lattice, &Subgroup::trivial(g)).holds
    );
    decision
}

/// Proper subgroups `H` such that every subgroup not contained in `H` is
/// complemented. The scan includes `G` itself among the subgroups that must
/// be complemented; it always is.
pub fn c_separating_subgroups(g: &FiniteGroup, lattice: &SubgroupLattice) -> Vec<Subgroup> {
    let table = ComplementTable::build(g, lattice);
    table
        .c_separating(lattice)
        .into_iter()
        .map(|i| lattice.get(i).clone())
        .collect()
}

pub fn has_c_separating(g: &FiniteGroup, lattice: &SubgroupLattice) -> bool {
    !c_separating_subgroups(g, lattice).is_empty()
}

/// C-separating subgroups of the given index only.
pub fn c_separating_of_index(
    g: &FiniteGroup,
    lattice: &SubgroupLattice,
    index: usize,
) -> Vec<Subgroup> {
    c_separating_subgroups(g, lattice)
        .into_iter()
        .filter(|h| h.order() * index == g.order())
        .collect()
}

/// For each maximal subgroup `M`, an uncomplemented subgroup outside `M`:
/// the evidence that no subgroup is C-separating. Maximal subgroups with no
/// such escapee are omitted.
pub fn c_separation_obstructions(
    g: &FiniteGroup,
    lattice: &SubgroupLattice,
) -> Vec<(Subgroup, Subgroup)> {
    let table = ComplementTable::build(g, lattice);
    lattice
        .maximal_subgroups()
        .filter_map(|m| {
            table
                .uncomplemented()
                .map(|i| lattice.get(i))
                .find(|u| !u.is_subgroup_of(m))
                .map(|u| (m.clone(), u.clone()))
        })
        .collect()
}

/// Checks that the image of `h` in `K/N` is supercomplemented there, given
/// `H ⊆ K`, `N ⊴ K`, and `H` supercomplemented in `K`.
pub fn lemma1_transport_check(
    g: &FiniteGroup,
    h: &Subgroup,
    k: &Subgroup,
    n: &Subgroup,
) -> Result<bool> {
    if !h.is_subgroup_of(k) {
        return Err(Error::Precondition("H is not contained in K".into()));
    }
    if !n.is_subgroup_of(k) {
        return Err(Error::Precondition("N is not contained in K".into()));
    }
    let (kg, embedding) = g.subgroup_as_group(k.members(), k.generators())?;
    let local = |s: &Subgroup| -> Vec<usize> {
        s.generators()
            .iter()
            .map(|&x| embedding.binary_search(&x).expect("member of K"))
            .collect()
    };
    let h_local = lattice::generated_subgroup(&kg, &local(h));
    let n_local = lattice::generated_subgroup(&kg, &local(n));
    if !lattice::is_normal(&kg, &n_local) {
        return Err(Error::Precondition("N is not normal in K".into()));
    }
    if !is_supercomplemented(&kg, &h_local).holds {
        return Err(Error::Precondition("H is not supercomplemented in K".into()));
    }
    let (q, projection) = kg.quotient(n_local.members())?;
    let image: Vec<usize> = h_local.generators().iter().map(|&x| projection[x]).collect();
    let h_image = lattice::generated_subgroup(&q, &image);
    Ok(is_supercomplemented(&q, &h_image).holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::generated_subgroup;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_generators(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    #[test]
    fn trivial_and_whole_complement_each_other() {
        let g = s3();
        let lat = SubgroupLattice::build(&g).unwrap();
        let whole = Subgroup::whole(&g);
        let trivial = Subgroup::trivial(&g);
        assert_eq!(complements_in(&g, &lat, &whole, Mode::All).complements, vec![trivial.clone()]);
        assert_eq!(complements_in(&g, &lat, &trivial, Mode::All).complements, vec![whole.clone()]);
        assert_eq!(complements_by_search(&g, &whole, Mode::All).complements, vec![trivial]);
    }

    #[test]
    fn involution_in_s3_is_complemented_by_the_three_cycle() {
        let g = s3();
        let lat = SubgroupLattice::build(&g).unwrap();
        let t = generated_subgroup(&g, &[g.generators()[0]]);
        let r = generated_subgroup(&g, &[g.generators()[1]]);
        let result = complements_in(&g, &lat, &t, Mode::All);
        assert_eq!(result.complements, vec![r.clone()]);
        assert!(result.exhaustive);
        assert_eq!(complements_by_search(&g, &t, Mode::All).complements, vec![r]);
    }

    #[test]
    fn c4_is_not_completely_factorizable() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let lat = SubgroupLattice::build(&g).unwrap();
        let middle = generated_subgroup(&g, &[g.pow(1, 2)]);
        assert!(!is_complemented(&g, &middle));
        assert!(is_complemented(&g, &Subgroup::trivial(&g)));
        let d = is_supercomplemented(&g, &Subgroup::trivial(&g));
        assert!(!d.holds);
        assert_eq!(d.witness, Some(middle.clone()));
        let cf = is_completely_factorizable(&g, &lat);
        assert!(!cf.holds);
        assert_eq!(cf.witness, Some(middle.clone()));
        assert_eq!(c_separating_subgroups(&g, &lat), vec![middle]);
    }

    #[test]
    fn whole_group_is_supercomplemented() {
        let g = FiniteGroup::cyclic(4).unwrap();
        assert!(is_supercomplemented(&g, &Subgroup::whole(&g)).holds);
    }

    #[test]
    fn completely_factorizable_groups() {
        let one = FiniteGroup::cyclic(1).unwrap();
        assert!(is_completely_factorizable(&one, &SubgroupLattice::build(&one).unwrap()).holds);
        let g = s3();
        let lat = SubgroupLattice::build(&g).unwrap();
        assert!(is_completely_factorizable(&g, &lat).holds);
        // every proper subgroup is C-separating
        assert_eq!(c_separating_subgroups(&g, &lat).len(), lat.len() - 1);
        assert!(c_separation_obstructions(&g, &lat).is_empty());
    }

    #[test]
    fn lemma1_edge_cases() {
        let g = s3();
        let whole = Subgroup::whole(&g);
        let t = generated_subgroup(&g, &[g.generators()[0]]);
        let trivial = Subgroup::trivial(&g);
        // N = K: trivial image in the trivial group
        assert!(lemma1_transport_check(&g, &t, &whole, &whole).unwrap());
        // N = 1 reduces to the original predicate
        assert!(lemma1_transport_check(&g, &t, &whole, &trivial).unwrap());
        assert!(matches!(
            lemma1_transport_check(&g, &whole, &t, &trivial),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            lemma1_transport_check(&g, &trivial, &whole, &t),
            Err(Error::Precondition(_))
        ));
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert!(matches!(
            lemma1_transport_check(&c4, &Subgroup::trivial(&c4), &Subgroup::whole(&c4), &Subgroup::trivial(&c4)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn table_and_search_routes_agree() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c4 = FiniteGroup::cyclic(4).unwrap();
        for g in [c2.direct_product(&c4).unwrap(), s3().direct_product(&c2).unwrap()] {
            let lat = SubgroupLattice::build(&g).unwrap();
            let table = ComplementTable::build(&g, &lat);
            for (i, h) in lat.subgroups().iter().enumerate() {
                let all = complements_in(&g, &lat, h, Mode::All).complements;
                assert_eq!(complements_by_search(&g, h, Mode::All).complements, all);
                assert_eq!(table.is_complemented(i), !all.is_empty());
                assert_eq!(
                    table.is_supercomplemented(&lat, h).holds,
                    is_supercomplemented(&g, h).holds
                );
            }
        }
    }
}
