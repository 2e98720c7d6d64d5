//! Series and characteristic subgroups: derived and lower central series,
//! centre, Frattini subgroup, Sylow subgroups, minimal normal subgroups,
//! chief series and normalizers.
//!
//! Most functions take a subgroup `h` of `g` and work inside it, so the
//! same code serves a group (pass [`Subgroup::whole`]) and its subgroups.

use std::collections::HashSet;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{is_prime, prime_factors, FiniteGroup};
use crate::lattice::{self, Subgroup, SubgroupLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    Chief,
}

/// One step `terms[i] / terms[i+1]` of a series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorDescription {
    pub order: usize,
    pub abelian: bool,
    pub elementary_abelian: bool,
    /// The prime when the factor order is a nontrivial prime power.
    pub prime: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Descending terms, starting with the group itself.
    pub terms: Vec<Subgroup>,
    /// Derived length or nilpotency class; `None` when the series stalls
    /// above the trivial subgroup.
    pub length: Option<usize>,
    pub factors: Vec<FactorDescription>,
}

#[derive(Serialize)]
struct SeriesTermJson {
    order: usize,
    generators: Vec<String>,
    members: Vec<usize>,
}

impl SeriesReport {
    fn new(g: &FiniteGroup, kind: SeriesKind, terms: Vec<Subgroup>) -> SeriesReport {
        let reaches_trivial = terms.last().is_some_and(Subgroup::is_trivial);
        let length = reaches_trivial.then(|| terms.len() - 1);
        let factors = terms
            .windows(2)
            .map(|w| describe_factor(g, &w[0], &w[1]))
            .collect();
        SeriesReport {
            kind,
            terms,
            length,
            factors,
        }
    }

    pub fn to_json(&self, g: &FiniteGroup) -> serde_json::Value {
        let terms: Vec<SeriesTermJson> = self
            .terms
            .iter()
            .map(|t| SeriesTermJson {
                order: t.order(),
                generators: t.generators().iter().map(|&x| g.label(x).to_string()).collect(),
                members: t.members().to_vec(),
            })
            .collect();
        serde_json::json!({
            "kind": self.kind,
            "terms": terms,
            "length": self.length,
            "factors": self.factors,
        })
    }
}

fn describe_factor(g: &FiniteGroup, upper: &Subgroup, lower: &Subgroup) -> FactorDescription {
    let order = upper.order() / lower.order();
    let abelian = commutator_subgroup(g, upper, upper).is_subgroup_of(lower);
    let primes = prime_factors(order as u64);
    let prime = (primes.len() == 1).then(|| primes[0]);
    let elementary_abelian = abelian
        && match prime {
            None => order == 1,
            Some(p) => upper.generators().iter().all(|&x| lower.contains(g.pow(x, p))),
        };
    FactorDescription {
        order,
        abelian,
        elementary_abelian,
        prime,
    }
}

/// `[A, B]`: the normal closure in `⟨A, B⟩` of the commutators of
/// generators.
pub fn commutator_subgroup(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut current = Subgroup::trivial(g);
    for &x in a.generators() {
        for &y in b.generators() {
            current = current.extend(g, g.commutator(x, y));
        }
    }
    let conjugators: Vec<usize> = a.generators().iter().chain(b.generators()).copied().collect();
    close_under_conjugation(g, current, &conjugators)
}

fn close_under_conjugation(g: &FiniteGroup, mut current: Subgroup, by: &[usize]) -> Subgroup {
    loop {
        let mut grown = false;
        for &s in by {
            for x in current.generators().to_vec() {
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

pub fn derived_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    commutator_subgroup(g, h, h)
}

pub fn derived_series(g: &FiniteGroup, h: &Subgroup) -> SeriesReport {
    let mut terms = vec![h.clone()];
    loop {
        let last = terms.last().expect("series is nonempty");
        let next = derived_subgroup(g, last);
        if next == *last {
            break;
        }
        terms.push(next);
    }
    SeriesReport::new(g, SeriesKind::Derived, terms)
}

/// Derived length, or `None` when `h` is not solvable.
pub fn derived_length(g: &FiniteGroup, h: &Subgroup) -> Option<usize> {
    derived_series(g, h).length
}

pub fn is_solvable(g: &FiniteGroup, h: &Subgroup) -> bool {
    derived_length(g, h).is_some()
}

/// The centre of `h`.
pub fn center(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let members = ElementSet::from_indices(
        g.order(),
        h.elements()
            .filter(|&z| h.generators().iter().all(|&x| g.mul(x, z) == g.mul(z, x))),
    );
    Subgroup::from_members(g, members).expect("the centre is a subgroup")
}

pub fn lower_central_series(g: &FiniteGroup, h: &Subgroup) -> SeriesReport {
    let mut terms = vec![h.clone()];
    loop {
        let last = terms.last().expect("series is nonempty");
        let next = commutator_subgroup(g, last, h);
        if next == *last {
            break;
        }
        terms.push(next);
    }
    SeriesReport::new(g, SeriesKind::LowerCentral, terms)
}

pub fn is_nilpotent(g: &FiniteGroup, h: &Subgroup) -> bool {
    lower_central_series(g, h).length.is_some()
}

/// Intersection of the maximal subgroups; the whole group if it has none.
pub fn frattini(g: &FiniteGroup, lattice: &SubgroupLattice) -> Subgroup {
    let mut members = ElementSet::full(g.order());
    for m in lattice.maximal_subgroups() {
        members = members.intersection(m.members());
    }
    Subgroup::from_members(g, members).expect("intersection of subgroups is a subgroup")
}

/// The largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: u64) -> usize {
    let p = p as usize;
    let mut part = 1;
    let mut n = n;
    while n.is_multiple_of(p) {
        part *= p;
        n /= p;
    }
    part
}

fn is_power_of(n: usize, p: u64) -> bool {
    p_part(n, p) == n
}

/// Subgroups of `p`-power order, including the trivial one.
pub fn p_subgroups(lattice: &SubgroupLattice, p: u64) -> Result<Vec<&Subgroup>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(lattice
        .subgroups()
        .iter()
        .filter(|s| is_power_of(s.order(), p))
        .collect())
}

/// All Sylow `p`-subgroups, canonically sorted.
pub fn sylow_subgroups(g: &FiniteGroup, lattice: &SubgroupLattice, p: u64) -> Result<Vec<Subgroup>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(lattice.of_order(p_part(g.order(), p)).cloned().collect())
}

/// The canonically first Sylow `p`-subgroup.
pub fn sylow_subgroup(g: &FiniteGroup, lattice: &SubgroupLattice, p: u64) -> Result<Subgroup> {
    sylow_subgroups(g, lattice, p)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Precondition("lattice lacks a Sylow subgroup".into()))
}

/// A Sylow `p`-subgroup containing the `p`-subgroup `h`, grown one
/// normalizing `p`-element at a time. No lattice needed.
pub fn sylow_containing(g: &FiniteGroup, p: u64, h: &Subgroup) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !is_power_of(h.order(), p) {
        return Err(Error::Precondition(format!("subgroup order {} is not a power of {p}", h.order())));
    }
    let target = p_part(g.order(), p);
    let mut current = h.clone();
    while current.order() < target {
        let norm = normalizer(g, &current);
        let next = norm
            .elements()
            .filter(|&x| !current.contains(x) && is_power_of(g.element_order(x) as usize, p))
            .map(|x| current.extend(g, x))
            .find(|s| is_power_of(s.order(), p))
            .ok_or_else(|| Error::Precondition("no p-element extends the subgroup".into()))?;
        current = next;
    }
    Ok(current)
}

/// Minimal normal subgroups, canonically sorted. Each is the normal closure
/// of any of its nontrivial elements, so they are the minimal members among
/// normal closures of single elements.
pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut closures: Vec<Subgroup> = Vec::new();
    let mut covered = ElementSet::from_indices(g.order(), [0]);
    for x in g.elements().skip(1) {
        if covered.contains(x) {
            continue;
        }
        let ncl = lattice::normal_closure(g, &lattice::generated_subgroup(g, &[x]));
        // Conjugates of x have the same closure.
        for y in lattice::conjugates(g, &lattice::generated_subgroup(g, &[x])) {
            for z in y.generators() {
                covered.insert(*z);
            }
        }
        if seen.insert(ncl.members().clone()) {
            closures.push(ncl);
        }
    }
    closures.sort();
    let minimal: Vec<Subgroup> = closures
        .iter()
        .filter(|c| {
            !closures
                .iter()
                .any(|d| d.order() < c.order() && d.is_subgroup_of(c))
        })
        .cloned()
        .collect();
    minimal
}

/// A chief series, built upward by taking the canonically first minimal
/// normal subgroup of each successive quotient and pulling it back.
pub fn chief_series(g: &FiniteGroup) -> Result<SeriesReport> {
    let mut ascending = vec![Subgroup::trivial(g)];
    loop {
        let current = ascending.last().expect("series is nonempty").clone();
        if current.order() == g.order() {
            break;
        }
        let (quotient, projection) = g.quotient(current.members())?;
        let first = minimal_normal_subgroups(&quotient)
            .into_iter()
            .next()
            .expect("nontrivial group has a minimal normal subgroup");
        let preimage = ElementSet::from_indices(
            g.order(),
            g.elements().filter(|&x| first.contains(projection[x])),
        );
        let mut next = current.clone();
        for x in preimage.iter() {
            next = next.extend(g, x);
        }
        debug_assert_eq!(next.members(), &preimage);
        ascending.push(next);
    }
    ascending.reverse();
    Ok(SeriesReport::new(g, SeriesKind::Chief, ascending))
}

pub fn normalizer(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let members = ElementSet::from_indices(
        g.order(),
        g.elements()
            .filter(|&x| h.generators().iter().all(|&y| h.contains(g.conj(y, x)))),
    );
    Subgroup::from_members(g, members).expect("the normalizer is a subgroup")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::generated_subgroup;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_generators(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    /// Oracle: the subgroup generated by every commutator of every pair.
    fn naive_derived(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = h.elements().collect();
        let comms: Vec<usize> = elems
            .iter()
            .flat_map(|&x| elems.iter().map(move |&y| g.commutator(x, y)))
            .collect();
        generated_subgroup(g, &comms)
    }

    #[test]
    fn derived_lengths() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(derived_length(&c6, &Subgroup::whole(&c6)), Some(1));
        let one = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(derived_length(&one, &Subgroup::whole(&one)), Some(0));
        let g = s3();
        let whole = Subgroup::whole(&g);
        assert_eq!(derived_length(&g, &whole), Some(2));
        assert_eq!(derived_subgroup(&g, &whole), naive_derived(&g, &whole));
        assert_eq!(derived_subgroup(&g, &whole).order(), 3);
    }

    #[test]
    fn non_solvable_is_reported_not_thrown() {
        // A5 from (0 1 2 3 4) and (0 1 2)
        let a5 = FiniteGroup::from_generators(&[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]]).unwrap();
        assert_eq!(a5.order(), 60);
        let whole = Subgroup::whole(&a5);
        assert_eq!(derived_length(&a5, &whole), None);
        assert!(!is_solvable(&a5, &whole));
        assert_eq!(minimal_normal_subgroups(&a5), vec![whole]);
    }

    #[test]
    fn centre_and_nilpotency() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let whole = Subgroup::whole(&c4);
        assert!(is_nilpotent(&c4, &whole));
        assert_eq!(center(&c4, &whole), whole);
        let g = s3();
        let whole = Subgroup::whole(&g);
        assert!(!is_nilpotent(&g, &whole));
        assert!(center(&g, &whole).is_trivial());
    }

    #[test]
    fn frattini_examples() {
        let c8 = FiniteGroup::cyclic(8).unwrap();
        let lat = SubgroupLattice::build(&c8).unwrap();
        let phi = frattini(&c8, &lat);
        assert_eq!(phi, generated_subgroup(&c8, &[c8.pow(1, 2)]));
        assert_eq!(phi.order(), 4);
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let v8 = c2.direct_product(&c2).unwrap().direct_product(&c2).unwrap();
        assert!(frattini(&v8, &SubgroupLattice::build(&v8).unwrap()).is_trivial());
        let one = FiniteGroup::cyclic(1).unwrap();
        assert!(frattini(&one, &SubgroupLattice::build(&one).unwrap()).is_trivial());
    }

    #[test]
    fn sylow_subgroups_of_s3() {
        let g = s3();
        let lat = SubgroupLattice::build(&g).unwrap();
        let twos = sylow_subgroups(&g, &lat, 2).unwrap();
        assert_eq!(twos.len(), 3);
        assert!(twos.iter().all(|s| s.order() == 2));
        assert!(sylow_subgroup(&g, &lat, 5).unwrap().is_trivial());
        assert!(matches!(sylow_subgroup(&g, &lat, 4), Err(Error::NotPrime(4))));
        let t = &twos[2];
        assert_eq!(&sylow_containing(&g, 2, t).unwrap(), t);
        assert_eq!(sylow_containing(&g, 3, &Subgroup::trivial(&g)).unwrap().order(), 3);
    }

    #[test]
    fn minimal_normal_and_chief() {
        let c5 = FiniteGroup::cyclic(5).unwrap();
        assert_eq!(minimal_normal_subgroups(&c5), vec![Subgroup::whole(&c5)]);
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = c2.direct_product(&c2).unwrap();
        let mins = minimal_normal_subgroups(&v4);
        assert_eq!(mins.len(), 3);
        assert!(mins.iter().all(|m| m.order() == 2));
        let g = s3();
        let chief = chief_series(&g).unwrap();
        let orders: Vec<usize> = chief.terms.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![6, 3, 1]);
        assert!(chief.factors.iter().all(|f| f.elementary_abelian));
        assert_eq!(chief.length, Some(2));
    }

    #[test]
    fn normalizers() {
        let g = s3();
        let t = generated_subgroup(&g, &[g.generators()[0]]);
        assert_eq!(normalizer(&g, &t), t);
        let r = generated_subgroup(&g, &[g.generators()[1]]);
        assert_eq!(normalizer(&g, &r), Subgroup::whole(&g));
        assert_eq!(normalizer(&g, &Subgroup::trivial(&g)), Subgroup::whole(&g));
    }
}
