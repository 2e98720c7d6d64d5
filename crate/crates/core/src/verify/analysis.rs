//! Per-group data shared by the property suites: the lattice, the
//! complement table, and cached facts about `p`-subgroups.

use std::collections::HashSet;

use num_bigint::BigUint;

use super::Witness;
use crate::bounds::{derived_length_bound, factorial_index_bound, prop1_bound};
use crate::complement::ComplementTable;
use crate::error::Result;
use crate::group::{prime_factors, FiniteGroup};
use crate::lattice::{cyclic_subgroups, is_elementary_abelian, Subgroup, SubgroupLattice};
use crate::structure::{derived_length, is_nilpotent, minimal_normal_subgroups};

/// Lattice cap used by the catalog suites; admits the order-625 entry.
pub const CATALOG_LATTICE_CAP: usize = 1024;

#[derive(Clone, Copy, Debug)]
struct PMetrics {
    nilpotent: bool,
    derived_length: Option<usize>,
    /// Smallest index of a normal elementary abelian subgroup.
    ea_index: usize,
}

pub struct Analysis<'a> {
    pub g: &'a FiniteGroup,
    pub lattice: SubgroupLattice,
    pub table: ComplementTable,
    pub derived_length: Option<usize>,
    /// Indexed like the lattice; `Some` for subgroups of prime-power order
    /// and the trivial subgroup.
    pmetrics: Vec<Option<PMetrics>>,
    /// Lattice indices of cyclic subgroups of prime-power order, including
    /// the trivial subgroup.
    cyclic_pp: Vec<usize>,
    minimal_normal: Vec<Subgroup>,
}

/// A failed check inside a battery: which claim, and the evidence.
pub(crate) struct Failure {
    pub claim: &'static str,
    pub witnesses: Vec<Witness>,
}

pub(crate) const NILPOTENT: &str = "iv.p-subgroups-nilpotent";
pub(crate) const DERIVED_3: &str = "iv.p-subgroups-derived-length-3";
pub(crate) const METABELIAN_ODD: &str = "iv.p-subgroups-metabelian-odd-p";
pub(crate) const ALMOST_EA: &str = "iv.p-subgroups-almost-elementary-abelian";
pub(crate) const BATTERY: [&str; 4] = [NILPOTENT, DERIVED_3, METABELIAN_ODD, ALMOST_EA];

fn prime_power_base(n: usize) -> Option<u64> {
    let f = prime_factors(n as u64);
    (f.len() == 1).then(|| f[0])
}

impl<'a> Analysis<'a> {
    pub fn new(g: &'a FiniteGroup, lattice_cap: usize) -> Result<Analysis<'a>> {
        let lattice = SubgroupLattice::build_with_cap(g, lattice_cap)?;
        let table = ComplementTable::build(g, &lattice);
        let whole = Subgroup::whole(g);
        let subgroups = lattice.subgroups();
        let pmetrics = subgroups
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if p.order() > 1 && prime_power_base(p.order()).is_none() {
                    return None;
                }
                let ea = subgroups[..=i]
                    .iter()
                    .rev()
                    .find(|e| {
                        e.is_subgroup_of(p)
                            && is_elementary_abelian(g, e)
                            && e.generators()
                                .iter()
                                .all(|&y| p.generators().iter().all(|&x| e.contains(g.conj(y, x))))
                    })
                    .expect("the trivial subgroup qualifies");
                Some(PMetrics {
                    nilpotent: is_nilpotent(g, p),
                    derived_length: derived_length(g, p),
                    ea_index: p.order() / ea.order(),
                })
            })
            .collect();
        let mut cyclic_pp: Vec<usize> = cyclic_subgroups(g)
            .iter()
            .filter(|c| c.order() == 1 || prime_power_base(c.order()).is_some())
            .map(|c| lattice.index_of(c).expect("cyclic subgroups are in the lattice"))
            .collect();
        cyclic_pp.push(0);
        cyclic_pp.sort_unstable();
        cyclic_pp.dedup();
        Ok(Analysis {
            g,
            derived_length: derived_length(g, &whole),
            lattice,
            table,
            pmetrics,
            cyclic_pp,
            minimal_normal: minimal_normal_subgroups(g),
        })
    }

    pub fn minimal_normal(&self) -> &[Subgroup] {
        &self.minimal_normal
    }

    pub fn is_completely_factorizable(&self) -> bool {
        self.table.uncomplemented().next().is_none()
    }

    pub fn is_supercomplemented(&self, h: &Subgroup) -> bool {
        self.table.is_supercomplemented(&self.lattice, h).holds
    }

    /// Supercomplemented cyclic subgroups of prime-power order, trivial
    /// subgroup included.
    pub fn supercomplemented_cyclic_p_subgroups(&self) -> Vec<&Subgroup> {
        self.cyclic_pp
            .iter()
            .map(|&i| self.lattice.get(i))
            .filter(|c| self.is_supercomplemented(c))
            .collect()
    }

    /// The primes a subgroup of order `m` is a `p`-subgroup for: its prime,
    /// or every prime dividing `|G|` when `m = 1`.
    pub(crate) fn primes_for(&self, m: usize) -> Vec<u64> {
        match m {
            1 => prime_factors(self.g.order() as u64),
            _ => prime_power_base(m).into_iter().collect(),
        }
    }

    /// Structure of the `p`-subgroups (for each `p` in `primes`) required
    /// when a cyclic `p`-subgroup of order `m` is supercomplemented: nilpotent,
    /// derived length at most 3 (2 for odd `p`), and a normal elementary
    /// abelian subgroup of index at most `m!`.
    pub(crate) fn p_battery(&self, primes: &[u64], m: usize) -> Vec<Failure> {
        let factorial = factorial_index_bound(m as u64);
        let mut failures = Vec::new();
        let mut failed: HashSet<&'static str> = HashSet::new();
        for (i, p) in self.lattice.subgroups().iter().enumerate() {
            let Some(metrics) = self.pmetrics[i] else { continue };
            let Some(prime) = prime_power_base(p.order()) else { continue };
            if !primes.contains(&prime) {
                continue;
            }
            let d = metrics.derived_length.unwrap_or(usize::MAX);
            let checks = [
                (NILPOTENT, metrics.nilpotent),
                (DERIVED_3, d <= 3),
                (METABELIAN_ODD, prime == 2 || d <= 2),
                (ALMOST_EA, BigUint::from(metrics.ea_index) <= factorial),
            ];
            for (claim, ok) in checks {
                if !ok && failed.insert(claim) {
                    failures.push(Failure {
                        claim,
                        witnesses: vec![
                            Witness::subgroup(self.g, p),
                            Witness::number("derived_length", d),
                            Witness::number("elementary_abelian_index", metrics.ea_index),
                            Witness::number("m", m),
                        ],
                    });
                }
            }
        }
        failures
    }

    /// `d(G)` against the bound for `m`.
    pub(crate) fn derived_length_within_bound(&self, m: usize) -> (bool, Vec<Witness>) {
        let bound = derived_length_bound(m as u64);
        let witnesses = vec![
            Witness::number("derived_length", self.derived_length.unwrap_or(usize::MAX)),
            Witness::real("bound", bound.value),
            Witness::number("bound_floor", bound.floor),
        ];
        let ok = self
            .derived_length
            .is_some_and(|d| d as u64 <= bound.floor);
        (ok, witnesses)
    }

    /// Each elementary abelian minimal normal `q`-subgroup `Q` satisfies
    /// `|Q| ≤ q^((m−1)m)·m^m`, and `|Q| = q` when `m = 1`.
    pub(crate) fn minimal_normal_bound(&self, m: usize) -> Option<Vec<Witness>> {
        for q_sub in &self.minimal_normal {
            if !is_elementary_abelian(self.g, q_sub) {
                continue;
            }
            let q = prime_power_base(q_sub.order()).expect("nontrivial elementary abelian");
            let bound = prop1_bound(q, m as u64).expect("q is prime");
            let ok = if m == 1 {
                q_sub.order() as u64 == q
            } else {
                BigUint::from(q_sub.order()) <= bound
            };
            if !ok {
                return Some(vec![
                    Witness::subgroup(self.g, q_sub),
                    Witness::number("q", q),
                    Witness::number("m", m),
                    Witness::note(format!("bound {bound}")),
                ]);
            }
        }
        None
    }

    /// Every `q`-subgroup with `q ≠ p` is elementary abelian.
    pub(crate) fn other_primes_elementary_abelian(&self, p: u64) -> Option<&Subgroup> {
        self.lattice.subgroups().iter().find(|s| {
            prime_power_base(s.order()).is_some_and(|q| q != p) && !is_elementary_abelian(self.g, s)
        })
    }

    /// Candidates for the structure forced by a C-separating subgroup:
    /// supercomplemented nontrivial cyclic `p`-subgroups, each paired with
    /// whether the `p`-battery and the elementary-abelian condition on the
    /// other primes all hold.
    pub(crate) fn theorem3_candidates(&self) -> Vec<(&Subgroup, u64, bool)> {
        self.supercomplemented_cyclic_p_subgroups()
            .into_iter()
            .filter(|c| c.order() > 1)
            .map(|c| {
                let p = prime_power_base(c.order()).expect("prime-power order");
                let ok = self.p_battery(&[p], c.order()).is_empty()
                    && self.other_primes_elementary_abelian(p).is_none();
                (c, p, ok)
            })
            .collect()
    }
}
