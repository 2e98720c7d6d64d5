//! Finite groups as closed multiplication tables.
//!
//! Every group is stored densely: elements are the indices `0..order`, the
//! identity is always `0`, and products are looked up in a row-major table.
//! Constructors enumerate elements breadth-first from the identity, applying
//! generators on the right in declaration order, so identical inputs always
//! produce identical numberings.

mod action;
mod serial;

use std::collections::HashMap;
use std::hash::Hash;

pub use action::{automorphism_from_images, ActionSpec};
pub use serial::CayleyDocument;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

/// Default cap on the order of any constructed group.
pub const DEFAULT_CONSTRUCTION_CAP: usize = 4096;
/// Groups up to this order get an exhaustive associativity audit.
pub const ASSOCIATIVITY_AUDIT_CAP: usize = 512;

/// A finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    labels: Vec<String>,
}

/// How much of the table audit to run after building a table.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Audit {
    /// Latin square, identity, inverses, and associativity.
    Full,
    /// Associativity is inherited from a verified parent group.
    Inherited,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mult
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `g^k` for a non-negative exponent.
    pub fn pow(&self, g: usize, k: u64) -> usize {
        let (mut acc, mut base, mut k) = (0, g, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Conjugate `g^h = h⁻¹ g h`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// Commutator `[g, h] = g⁻¹ h⁻¹ g h`.
    #[inline]
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
    }

    pub fn element_order(&self, g: usize) -> u64 {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<u64> {
        self.elements().map(|g| self.element_order(g)).collect()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.elements()
            .map(|g| self.element_order(g))
            .fold(1, |acc, o| acc / gcd(acc, o) * o)
    }

    /// The primes dividing some element order.
    pub fn primes(&self) -> Vec<u64> {
        let mut primes: Vec<u64> = self
            .elements()
            .flat_map(|g| prime_factors(self.element_order(g)))
            .collect();
        primes.sort_unstable();
        primes.dedup();
        primes
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, &a)| {
            self.generators[i + 1..]
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    /// The element whose label or generator name is `name`.
    ///
    /// Accepts `1` for the identity, a plain index, or a word such as
    /// `x^2*a` in the generator names.
    pub fn element_by_word(&self, word: &str) -> Result<usize> {
        let word = word.trim();
        if let Some(i) = self.labels.iter().position(|l| l == word) {
            return Ok(i);
        }
        if let Ok(i) = word.parse::<usize>() {
            return if i < self.order {
                Ok(i)
            } else {
                Err(Error::UnknownElement(word.to_string()))
            };
        }
        let names = self.generator_names();
        let mut acc = 0;
        for factor in word.split('*').map(str::trim).filter(|f| !f.is_empty()) {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (
                    b.trim(),
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::UnknownElement(word.to_string()))?,
                ),
                None => (factor, 1),
            };
            let g = names
                .iter()
                .position(|n| n == base)
                .map(|i| self.generators[i])
                .ok_or_else(|| Error::UnknownElement(word.to_string()))?;
            let g = if exp < 0 { self.inv(g) } else { g };
            acc = self.mul(acc, self.pow(g, exp.unsigned_abs()));
        }
        Ok(acc)
    }

    /// Generator names, recovered from the generator labels.
    pub fn generator_names(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|&g| self.labels[g].clone())
            .collect()
    }

    // ---------------------------------------------------------------- builders

    /// The group generated by permutations of `0..degree`, composed left to
    /// right (`(p·q)(i) = q(p(i))`), with the default construction cap.
    pub fn from_generators(perms: &[Vec<usize>]) -> Result<FiniteGroup> {
        Self::from_generators_with_cap(perms, DEFAULT_CONSTRUCTION_CAP)
    }

    pub fn from_generators_with_cap(perms: &[Vec<usize>], cap: usize) -> Result<FiniteGroup> {
        let degree = perms.first().map_or(0, Vec::len);
        for p in perms {
            if p.len() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "degree {} differs from {degree}",
                    p.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &i in p {
                if i >= degree || std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidPermutation(format!("{p:?}")));
                }
            }
        }
        let gens: Vec<Vec<u32>> = perms
            .iter()
            .map(|p| p.iter().map(|&i| i as u32).collect())
            .collect();
        let identity: Vec<u32> = (0..degree as u32).collect();
        let names = default_names(gens.len());
        closure(identity, &gens, &names, cap, |p, q| {
            p.iter().map(|&i| q[i as usize]).collect()
        })
    }

    /// Cyclic group of order `n`; the generator is element `1`.
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        Self::cyclic_named(n, "x")
    }

    pub fn cyclic_named(n: usize, name: &str) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::Precondition("cyclic group order must be ≥ 1".into()));
        }
        let gens: Vec<usize> = if n == 1 { vec![] } else { vec![1] };
        closure(0usize, &gens, &[name.to_string()], DEFAULT_CONSTRUCTION_CAP, |a, b| {
            (a + b) % n
        })
    }

    /// Direct product with componentwise multiplication; generators are the
    /// embedded generators of `self` followed by those of `other`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        self.direct_product_with_cap(other, DEFAULT_CONSTRUCTION_CAP)
    }

    pub fn direct_product_with_cap(&self, other: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
        check_cap(self.order * other.order, cap)?;
        let (gens, names) = embedded_generators(self, other);
        closure((0usize, 0usize), &gens, &names, cap, |&(a, b), &(c, d)| {
            (self.mul(a, c), other.mul(b, d))
        })
    }

    /// Renames the generators and recomputes every label.
    pub fn with_generator_names(mut self, names: &[&str]) -> Result<FiniteGroup> {
        if names.len() != self.generators.len() {
            return Err(Error::Precondition(format!(
                "{} names for {} generators",
                names.len(),
                self.generators.len()
            )));
        }
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        self.labels = words_by_bfs(&self, &names);
        Ok(self)
    }

    /// The quotient by a normal subgroup.
    ///
    /// Cosets are numbered by ascending minimal representative, so the
    /// subgroup itself is coset `0`. Returns the quotient and the projection
    /// taking each element index to its coset index.
    pub fn quotient(&self, normal: &ElementSet) -> Result<(FiniteGroup, Vec<usize>)> {
        if !normal.contains(0) {
            return Err(Error::Precondition("subgroup must contain the identity".into()));
        }
        for &s in &self.generators {
            if normal.iter().any(|n| !normal.contains(self.conj(n, s))) {
                return Err(Error::NotNormal(format!(
                    "not invariant under conjugation by {}",
                    self.labels[s]
                )));
            }
        }
        let unassigned = usize::MAX;
        let mut projection = vec![unassigned; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if projection[g] != unassigned {
                continue;
            }
            let coset = reps.len();
            reps.push(g);
            for n in normal.iter() {
                projection[self.mul(n, g)] = coset;
            }
        }
        let q = reps.len();
        let mut mult = vec![0u32; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mult[i * q + j] = projection[self.mul(a, b)] as u32;
            }
        }
        let mut generators: Vec<usize> = Vec::new();
        for &s in &self.generators {
            let c = projection[s];
            if c != 0 && !generators.contains(&c) {
                generators.push(c);
            }
        }
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let quotient = from_parts(mult, generators, labels, Audit::Inherited)?;
        for a in self.elements() {
            for b in self.elements() {
                if projection[self.mul(a, b)] != quotient.mul(projection[a], projection[b]) {
                    return Err(Error::InvalidTable("projection is not a homomorphism".into()));
                }
            }
        }
        Ok((quotient, projection))
    }

    /// A subgroup as a group in its own right.
    ///
    /// Elements keep their relative order, so the returned embedding is
    /// increasing and maps `0` to `0`. `generators` are taken as the new
    /// group's generators and must generate the subgroup.
    pub fn subgroup_as_group(
        &self,
        members: &ElementSet,
        generators: &[usize],
    ) -> Result<(FiniteGroup, Vec<usize>)> {
        let embedding: Vec<usize> = members.iter().collect();
        let mut local = vec![usize::MAX; self.order];
        for (i, &g) in embedding.iter().enumerate() {
            local[g] = i;
        }
        let k = embedding.len();
        let mut mult = vec![0u32; k * k];
        for (i, &a) in embedding.iter().enumerate() {
            for (j, &b) in embedding.iter().enumerate() {
                let c = local[self.mul(a, b)];
                if c == usize::MAX {
                    return Err(Error::Precondition("member set is not closed".into()));
                }
                mult[i * k + j] = c as u32;
            }
        }
        let gens = generators
            .iter()
            .map(|&g| match local[g] {
                usize::MAX => Err(Error::Precondition("generator outside subgroup".into())),
                l => Ok(l),
            })
            .collect::<Result<Vec<_>>>()?;
        let labels = embedding.iter().map(|&g| self.labels[g].clone()).collect();
        let group = from_parts(mult, gens, labels, Audit::Inherited)?;
        Ok((group, embedding))
    }

    /// Exhaustive table audit: Latin square, identity at 0, inverses,
    /// associativity (all triples up to [`ASSOCIATIVITY_AUDIT_CAP`], Light's
    /// generator test above it), and generation by the listed generators.
    pub fn audit(&self) -> Result<()> {
        audit_table(&self.mult, self.order, &self.generators, Audit::Full)
    }
}

// ------------------------------------------------------------------ internals

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded {
            cap_name: "construction cap",
            size,
            cap,
        })
    } else {
        Ok(())
    }
}

fn default_names(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("g{i}")).collect()
}

fn embedded_generators(
    left: &FiniteGroup,
    right: &FiniteGroup,
) -> (Vec<(usize, usize)>, Vec<String>) {
    let mut gens: Vec<(usize, usize)> = left.generators.iter().map(|&g| (g, 0)).collect();
    gens.extend(right.generators.iter().map(|&h| (0, h)));
    let mut names = left.generator_names();
    for name in right.generator_names() {
        let mut name = name;
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
    }
    (gens, names)
}

/// Breadth-first closure of `gens` under an associative `mul`.
///
/// Element `i > 0` is discovered as `parent(i) · gens[s]`; the full table is
/// then filled column by column via `a·i = (a·parent(i))·gens[s]`.
pub(crate) fn closure<T, F>(
    identity: T,
    gens: &[T],
    names: &[String],
    cap: usize,
    mul: F,
) -> Result<FiniteGroup>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let k = gens.len();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
    let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
    let mut right: Vec<u32> = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        for (s, g) in gens.iter().enumerate() {
            let y = mul(&elements[i], g);
            let next = index.len();
            let j = *index.entry(y.clone()).or_insert(next);
            if j == next {
                check_cap(next + 1, cap)?;
                elements.push(y);
                parent.push((i, s));
            }
            right.push(j as u32);
        }
        i += 1;
    }
    let n = elements.len();
    let mut mult = vec![0u32; n * n];
    for a in 0..n {
        mult[a * n] = a as u32;
    }
    for b in 1..n {
        let (p, s) = parent[b];
        for a in 0..n {
            let ap = mult[a * n + p] as usize;
            mult[a * n + b] = right[ap * k + s];
        }
    }
    let generators: Vec<usize> = (0..k).map(|s| right[s] as usize).collect();
    let mut labels = vec![String::new(); n];
    let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
    for b in 1..n {
        let (p, s) = parent[b];
        let mut w = words[p].clone();
        w.push(s);
        words[b] = w;
    }
    for (b, w) in words.iter().enumerate() {
        labels[b] = render_word(w, names);
    }
    from_parts(mult, generators, labels, Audit::Full)
}

/// Labels for an existing table, recomputed by the same BFS rule.
fn words_by_bfs(group: &FiniteGroup, names: &[String]) -> Vec<String> {
    let n = group.order;
    let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
    words[0] = Some(Vec::new());
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let a = queue[i];
        for (s, &g) in group.generators.iter().enumerate() {
            let b = group.mul(a, g);
            if words[b].is_none() {
                let mut w = words[a].clone().unwrap_or_default();
                w.push(s);
                words[b] = Some(w);
                queue.push(b);
            }
        }
        i += 1;
    }
    words
        .into_iter()
        .map(|w| render_word(&w.unwrap_or_default(), names))
        .collect()
}

fn render_word(word: &[usize], names: &[String]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let name = &names[word[i]];
        parts.push(if j - i == 1 {
            name.clone()
        } else {
            format!("{name}^{}", j - i)
        });
        i = j;
    }
    parts.join("*")
}

fn from_parts(
    mult: Vec<u32>,
    generators: Vec<usize>,
    labels: Vec<String>,
    audit: Audit,
) -> Result<FiniteGroup> {
    let n = labels.len();
    if mult.len() != n * n {
        return Err(Error::InvalidTable(format!(
            "table has {} entries, expected {}",
            mult.len(),
            n * n
        )));
    }
    audit_table(&mult, n, &generators, audit)?;
    let mut inv = vec![0u32; n];
    for a in 0..n {
        inv[a] = (0..n)
            .find(|&b| mult[a * n + b] == 0)
            .ok_or_else(|| Error::InvalidTable(format!("element {a} has no inverse")))?
            as u32;
    }
    Ok(FiniteGroup {
        order: n,
        mult,
        inv,
        generators,
        labels,
    })
}

fn audit_table(mult: &[u32], n: usize, generators: &[usize], audit: Audit) -> Result<()> {
    let at = |a: usize, b: usize| mult[a * n + b] as usize;
    if n == 0 {
        return Err(Error::InvalidTable("empty group".into()));
    }
    let mut seen = vec![0usize; n];
    for a in 0..n {
        for b in 0..n {
            let c = at(a, b);
            if c >= n || seen[c] == a + 1 {
                return Err(Error::InvalidTable(format!("row {a} is not a permutation")));
            }
            seen[c] = a + 1;
        }
    }
    seen.iter_mut().for_each(|s| *s = 0);
    for b in 0..n {
        for a in 0..n {
            let c = at(a, b);
            if seen[c] == b + 1 {
                return Err(Error::InvalidTable(format!("column {b} is not a permutation")));
            }
            seen[c] = b + 1;
        }
    }
    for g in 0..n {
        if at(0, g) != g || at(g, 0) != g {
            return Err(Error::InvalidTable("element 0 is not the identity".into()));
        }
    }
    if let Some(&g) = generators.iter().find(|&&g| g >= n) {
        return Err(Error::InvalidTable(format!("generator {g} out of range")));
    }
    if audit == Audit::Full {
        if n <= ASSOCIATIVITY_AUDIT_CAP {
            for a in 0..n {
                for b in 0..n {
                    let ab = at(a, b);
                    for c in 0..n {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::InvalidTable(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // Light's test: associativity on (a, s, c) for generators s suffices.
            for &s in generators {
                for a in 0..n {
                    let as_ = at(a, s);
                    for c in 0..n {
                        if at(as_, c) != at(a, at(s, c)) {
                            return Err(Error::InvalidTable(format!(
                                "associativity fails at ({a}, {s}, {c})"
                            )));
                        }
                    }
                }
            }
        }
    }
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut queue = vec![0];
    while let Some(a) = queue.pop() {
        for &s in generators {
            let b = at(a, s);
            if !std::mem::replace(&mut reached[b], true) {
                queue.push(b);
            }
        }
    }
    if reached.iter().any(|r| !r) {
        return Err(Error::InvalidTable("generators do not generate the group".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_generators(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    #[test]
    fn single_involution_has_order_two() {
        let g = FiniteGroup::from_generators(&[vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn transposition_and_three_cycle_give_nonabelian_order_six() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn empty_generator_list_is_trivial() {
        let g = FiniteGroup::from_generators(&[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
        assert!(g.primes().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let err = FiniteGroup::from_generators_with_cap(&[vec![1, 2, 3, 0]], 3).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn bad_permutations_are_rejected() {
        assert!(FiniteGroup::from_generators(&[vec![0, 0]]).is_err());
        assert!(FiniteGroup::from_generators(&[vec![0, 1], vec![0]]).is_err());
    }

    #[test]
    fn cyclic_element_orders() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let mut orders = c4.element_orders();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 4, 4]);
        assert_eq!(FiniteGroup::cyclic(1).unwrap().order(), 1);
        let c8 = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(c8.element_order(1), 8);
        assert_eq!(c8.element_order(0), 1);
    }

    #[test]
    fn direct_products() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = c2.direct_product(&c2).unwrap();
        assert_eq!((v4.order(), v4.exponent()), (4, 2));
        let v8 = v4.direct_product(&c2).unwrap();
        assert_eq!((v8.order(), v8.exponent()), (8, 2));
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let g = c3.direct_product(&s3()).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(g.generator_names(), vec!["x", "g1", "g2"]);
    }

    #[test]
    fn primes_of_small_groups() {
        assert_eq!(s3().primes(), vec![2, 3]);
    }

    #[test]
    fn quotient_edge_cases() {
        let g = s3();
        let (q, proj) = g.quotient(&ElementSet::full(6)).unwrap();
        assert_eq!(q.order(), 1);
        assert!(proj.iter().all(|&c| c == 0));
        let (q, proj) = g.quotient(&ElementSet::from_indices(6, [0])).unwrap();
        assert_eq!(q.order(), 6);
        let mut sorted = proj.clone();
        sorted.sort();
        assert_eq!(sorted, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = s3();
        let t = g.generators()[0];
        let err = g.quotient(&ElementSet::from_indices(6, [0, t])).unwrap_err();
        assert!(matches!(err, Error::NotNormal(_)));
    }

    #[test]
    fn words_resolve_to_elements() {
        let g = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(g.element_by_word("x^3").unwrap(), g.pow(1, 3));
        assert_eq!(g.element_by_word("x^-1").unwrap(), g.inv(1));
        assert_eq!(g.element_by_word("1").unwrap(), 0);
        assert!(g.element_by_word("y").is_err());
    }

    #[test]
    fn renaming_generators_relabels() {
        let g = s3().with_generator_names(&["t", "r"]).unwrap();
        assert_eq!(g.label(g.generators()[1]), "r");
        assert_eq!(g.element_by_word("r^3").unwrap(), 0);
    }

    #[test]
    fn construction_is_deterministic() {
        assert_eq!(s3(), s3());
    }
}
