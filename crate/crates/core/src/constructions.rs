//! Named constructions: the two `p`-group examples with their distinguished
//! subgroups, holomorphs of cyclic groups, and the small-group catalog that
//! the property suites run over.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{gcd, is_prime, ActionSpec, FiniteGroup};
use crate::lattice::{generated_subgroup, Subgroup};

/// Default cap on the order of [`example_group`]: admits `p = 2, 3`
/// (orders 32 and 243) and rejects `p ≥ 5`.
pub const EXAMPLE_CAP: usize = 256;

/// A group together with named subgroups that verification code refers to.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
    handles: Vec<(String, Subgroup)>,
}

impl NamedGroup {
    /// Wraps a group with one handle per generator.
    pub fn new(name: impl Into<String>, group: FiniteGroup) -> NamedGroup {
        let handles = group
            .generator_names()
            .into_iter()
            .zip(group.generators().to_vec())
            .map(|(n, g)| (n, generated_subgroup(&group, &[g])))
            .collect();
        NamedGroup {
            name: name.into(),
            group,
            handles,
        }
    }

    fn with_handle(mut self, name: &str, words: &[&str]) -> Result<NamedGroup> {
        let elems = words
            .iter()
            .map(|w| self.group.element_by_word(w))
            .collect::<Result<Vec<_>>>()?;
        let h = generated_subgroup(&self.group, &elems);
        self.handles.retain(|(n, _)| n != name);
        self.handles.push((name.to_string(), h));
        Ok(self)
    }

    pub fn handle(&self, name: &str) -> Option<&Subgroup> {
        self.handles.iter().find(|(n, _)| n == name).map(|(_, h)| h)
    }

    pub fn handles(&self) -> &[(String, Subgroup)] {
        &self.handles
    }

    /// A subgroup named by a handle, or generated by a comma-separated list
    /// of element words or indices (`x^2,a`, `3,5`).
    pub fn subgroup(&self, spec: &str) -> Result<Subgroup> {
        if let Some(h) = self.handle(spec.trim()) {
            return Ok(h.clone());
        }
        let elems = spec
            .split(',')
            .map(|w| self.group.element_by_word(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(generated_subgroup(&self.group, &elems))
    }
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn check_relation(g: &FiniteGroup, what: &str, lhs: usize, rhs: usize) -> Result<()> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::InvalidTable(format!(
            "relation {what} fails: {} ≠ {}",
            g.label(lhs),
            g.label(rhs)
        )))
    }
}

fn check_order(g: &FiniteGroup, name: &str, expected: u64) -> Result<usize> {
    let x = g.element_by_word(name)?;
    if g.element_order(x) == expected {
        Ok(x)
    } else {
        Err(Error::InvalidTable(format!(
            "{name} has order {}, expected {expected}",
            g.element_order(x)
        )))
    }
}

/// `G = A ⋊ F` of order `p⁵`, where `A = ⟨b⟩ × ⟨c⟩ ≅ C_p²`,
/// `F = ⟨x⟩ ⋊ ⟨a⟩` with `|x| = p²`, `|a| = p`, `x^a = x^(p+1)`, and
/// `b^x = bc`, `c^x = c`, `b^a = b`, `c^a = c`.
///
/// Handles: `x`, `a`, `b`, `c`, `A`, `F`, and `B = ⟨a, b, c⟩`.
pub fn example_group(p: u64) -> Result<NamedGroup> {
    example_group_with_cap(p, EXAMPLE_CAP)
}

pub fn example_group_with_cap(p: u64, cap: usize) -> Result<NamedGroup> {
    require_prime(p)?;
    let order = (p as usize)
        .checked_pow(5)
        .ok_or(Error::CapExceeded {
            cap_name: "construction",
            size: usize::MAX,
            cap,
        })?;
    if order > cap {
        return Err(Error::CapExceeded {
            cap_name: "construction",
            size: order,
            cap,
        });
    }
    let pu = p as usize;

    let cx = FiniteGroup::cyclic_named(pu * pu, "x")?;
    let ca = FiniteGroup::cyclic_named(pu, "a")?;
    let x = cx.generators()[0];
    let f = ActionSpec::from_generator_images(&ca, &cx, &[vec![cx.pow(x, p + 1)]])?
        .semidirect_product_with_cap(cap)?;

    let a_grp = FiniteGroup::cyclic_named(pu, "b")?
        .direct_product(&FiniteGroup::cyclic_named(pu, "c")?)?;
    let (b, c) = (a_grp.generators()[0], a_grp.generators()[1]);
    let action = ActionSpec::from_generator_images(
        &f,
        &a_grp,
        &[vec![a_grp.mul(b, c), c], vec![b, c]],
    )?;
    let g = action.semidirect_product_with_cap(cap)?;

    // relation audit
    let x = check_order(&g, "x", p * p)?;
    let a = check_order(&g, "a", p)?;
    let b = check_order(&g, "b", p)?;
    let c = check_order(&g, "c", p)?;
    check_relation(&g, "x^a = x^(p+1)", g.conj(x, a), g.pow(x, p + 1))?;
    check_relation(&g, "b^x = bc", g.conj(b, x), g.mul(b, c))?;
    check_relation(&g, "c^x = c", g.conj(c, x), c)?;
    check_relation(&g, "b^a = b", g.conj(b, a), b)?;
    check_relation(&g, "c^a = c", g.conj(c, a), c)?;
    check_relation(&g, "bc = cb", g.mul(b, c), g.mul(c, b))?;
    if g.order() != order {
        return Err(Error::InvalidTable(format!("order {} ≠ p⁵", g.order())));
    }

    NamedGroup::new(format!("example-p{p}"), g)
        .with_handle("A", &["b", "c"])?
        .with_handle("F", &["x", "a"])?
        .with_handle("B", &["a", "b", "c"])
}

/// `⟨x⟩ ⋊ (⟨a⟩ × ⟨b⟩)` with `|x| = 8`, `|a| = |b| = 2`, `x^a = x⁻¹` and
/// `x^b = x⁵`: the holomorph of the cyclic group of order 8.
///
/// Handles: `x`, `a`, `b`, and `AB = ⟨a, b⟩`.
pub fn theorem4_group() -> Result<NamedGroup> {
    let cx = FiniteGroup::cyclic_named(8, "x")?;
    let ab = FiniteGroup::cyclic_named(2, "a")?.direct_product(&FiniteGroup::cyclic_named(2, "b")?)?;
    let x = cx.generators()[0];
    let g = ActionSpec::from_generator_images(&ab, &cx, &[vec![cx.inv(x)], vec![cx.pow(x, 5)]])?
        .semidirect_product()?;

    let x = check_order(&g, "x", 8)?;
    let a = check_order(&g, "a", 2)?;
    let b = check_order(&g, "b", 2)?;
    check_relation(&g, "x^a = x^-1", g.conj(x, a), g.inv(x))?;
    check_relation(&g, "x^b = x^5", g.conj(x, b), g.pow(x, 5))?;
    check_relation(&g, "ab = ba", g.mul(a, b), g.mul(b, a))?;

    NamedGroup::new("theorem4", g).with_handle("AB", &["a", "b"])
}

/// `C_n ⋊ Aut(C_n)`, the units mod `n` acting by exponentiation.
/// Generators of the unit group are chosen greedily in increasing order
/// and named `u<k>`.
pub fn holomorph_cyclic(n: usize) -> Result<FiniteGroup> {
    holomorph_cyclic_with_cap(n, crate::group::DEFAULT_CONSTRUCTION_CAP)
}

pub fn holomorph_cyclic_with_cap(n: usize, cap: usize) -> Result<FiniteGroup> {
    let cn = FiniteGroup::cyclic_named(n, "x")?;
    let units: Vec<usize> = (1..n.max(2))
        .filter(|&u| gcd(u as u64, n as u64) == 1)
        .collect();
    let size = n.saturating_mul(units.len().max(1));
    if size > cap {
        return Err(Error::CapExceeded {
            cap_name: "construction",
            size,
            cap,
        });
    }
    if n <= 2 {
        return Ok(cn);
    }
    // element k of cn is x^k
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = vec![false; n];
    reached[1] = true;
    let mut span = vec![1];
    for &u in &units {
        if reached[u] {
            continue;
        }
        gens.push(u);
        let mut i = 0;
        while i < span.len() {
            for &s in &gens {
                let next = span[i] * s % n;
                if !reached[next] {
                    reached[next] = true;
                    span.push(next);
                }
            }
            i += 1;
        }
    }
    let perms: Vec<Vec<usize>> = gens
        .iter()
        .map(|&u| (0..n).map(|k| k * u % n).collect())
        .collect();
    let names: Vec<String> = gens.iter().map(|u| format!("u{u}")).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let aut = FiniteGroup::from_generators(&perms)?.with_generator_names(&name_refs)?;
    // the automorphism group's generators act as the permutations above
    let images: Vec<Vec<usize>> = perms;
    ActionSpec::new(&aut, &cn, images)?.semidirect_product_with_cap(cap)
}

/// Dihedral group of order `2n` (`n ≥ 3`) as symmetries of an `n`-gon,
/// generated by the rotation `r` and a reflection `s`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::Precondition(format!("dihedral group needs n ≥ 3, got {n}")));
    }
    let r: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let s: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_generators(&[r, s])?.with_generator_names(&["r", "s"])
}

/// Elementary abelian group `C_p^rank`, generators `e1 … e_rank`.
pub fn elementary_abelian(p: u64, rank: usize) -> Result<FiniteGroup> {
    require_prime(p)?;
    let mut g = FiniteGroup::cyclic_named(1, "1")?;
    for i in 1..=rank {
        g = g.direct_product(&FiniteGroup::cyclic_named(p as usize, &format!("e{i}"))?)?;
    }
    Ok(g)
}

/// Symmetric group on three points, generated by a transposition `t` and a
/// 3-cycle `r`.
pub fn symmetric3() -> Result<FiniteGroup> {
    FiniteGroup::from_generators(&[vec![1, 0, 2], vec![1, 2, 0]])?.with_generator_names(&["t", "r"])
}

/// Alternating group on four points, generated by `(0 1)(2 3)` and `(0 1 2)`.
pub fn alternating4() -> Result<FiniteGroup> {
    FiniteGroup::from_generators(&[vec![1, 0, 3, 2], vec![1, 2, 0, 3]])?
        .with_generator_names(&["v", "r"])
}

/// `C_n ⋊ C_4` for odd `n`, with `y` of order 4 inverting `x`. For `n = 3`
/// this is the dicyclic group of order 12.
pub fn dicyclic_odd(n: usize) -> Result<FiniteGroup> {
    if n.is_multiple_of(2) {
        return Err(Error::Precondition("split dicyclic form needs n odd".into()));
    }
    let cx = FiniteGroup::cyclic_named(n, "x")?;
    let cy = FiniteGroup::cyclic_named(4, "y")?;
    let x = cx.generators().first().copied().unwrap_or(0);
    ActionSpec::from_generator_images(&cy, &cx, &[vec![cx.inv(x)]])?.semidirect_product()
}

/// Quaternion group of order 8 as permutations of its own elements.
pub fn quaternion8() -> Result<FiniteGroup> {
    // elements ±1, ±i, ±j, ±k as 0..8: (sign, unit) ↦ 2·unit + sign
    let mul = |(s1, u1): (usize, usize), (s2, u2): (usize, usize)| -> (usize, usize) {
        // unit products: 0=1, 1=i, 2=j, 3=k
        const T: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let (s, u) = T[u1][u2];
        ((s1 + s2 + s) % 2, u)
    };
    let right = |q: (usize, usize)| -> Vec<usize> {
        (0..8)
            .map(|e| {
                let (s, u) = mul((e % 2, e / 2), q);
                2 * u + s
            })
            .collect()
    };
    FiniteGroup::from_generators(&[right((0, 1)), right((0, 2))])?.with_generator_names(&["i", "j"])
}

/// Order, commutativity, exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub exponent: u64,
}

impl Fingerprint {
    pub fn of(g: &FiniteGroup) -> Fingerprint {
        Fingerprint {
            order: g.order(),
            abelian: g.is_abelian(),
            exponent: g.exponent(),
        }
    }

    fn product(self, other: Fingerprint) -> Fingerprint {
        Fingerprint {
            order: self.order * other.order,
            abelian: self.abelian && other.abelian,
            exponent: self.exponent / gcd(self.exponent, other.exponent) * other.exponent,
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order {}, {}, exponent {}",
            self.order,
            if self.abelian { "abelian" } else { "nonabelian" },
            self.exponent
        )
    }
}

/// How to build a catalog group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(usize),
    ElementaryAbelian { p: u64, rank: usize },
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Symmetric3,
    Alternating4,
    Dicyclic3,
    Quaternion8,
    Example(u64),
    Theorem4,
    Holomorph(usize),
    Product(Box<Recipe>, Box<Recipe>),
}

impl Recipe {
    pub fn name(&self) -> String {
        match self {
            Recipe::Cyclic(n) => format!("c{n}"),
            Recipe::ElementaryAbelian { p, rank } => format!("c{p}^{rank}"),
            Recipe::Dihedral(n) => format!("d{}", 2 * n),
            Recipe::Symmetric3 => "s3".into(),
            Recipe::Alternating4 => "a4".into(),
            Recipe::Dicyclic3 => "dic3".into(),
            Recipe::Quaternion8 => "q8".into(),
            Recipe::Example(p) => format!("example-p{p}"),
            Recipe::Theorem4 => "theorem4".into(),
            Recipe::Holomorph(n) => format!("hol{n}"),
            Recipe::Product(a, b) => format!("{}x{}", a.name(), b.name()),
        }
    }

    pub fn build(&self) -> Result<NamedGroup> {
        let plain = |g: FiniteGroup| Ok(NamedGroup::new(self.name(), g));
        match self {
            Recipe::Cyclic(n) => plain(FiniteGroup::cyclic(*n)?),
            Recipe::ElementaryAbelian { p, rank } => plain(elementary_abelian(*p, *rank)?),
            Recipe::Dihedral(n) => plain(dihedral(*n)?),
            Recipe::Symmetric3 => plain(symmetric3()?),
            Recipe::Alternating4 => plain(alternating4()?),
            Recipe::Dicyclic3 => plain(dicyclic_odd(3)?),
            Recipe::Quaternion8 => plain(quaternion8()?),
            Recipe::Example(p) => example_group(*p),
            Recipe::Theorem4 => theorem4_group(),
            Recipe::Holomorph(n) => plain(holomorph_cyclic(*n)?),
            Recipe::Product(a, b) => plain(a.build()?.group.direct_product(&b.build()?.group)?),
        }
    }

    /// The fingerprint this recipe should produce, worked out from the
    /// construction rather than from a built table.
    pub fn expected_fingerprint(&self) -> Fingerprint {
        let fp = |order, abelian, exponent| Fingerprint {
            order,
            abelian,
            exponent,
        };
        match self {
            Recipe::Cyclic(n) => fp(*n, true, *n as u64),
            Recipe::ElementaryAbelian { p, rank } => {
                fp((*p as usize).pow(*rank as u32), true, if *rank == 0 { 1 } else { *p })
            }
            Recipe::Dihedral(n) => {
                let n = *n as u64;
                fp(2 * n as usize, false, if n.is_multiple_of(2) { n } else { 2 * n })
            }
            Recipe::Symmetric3 => fp(6, false, 6),
            Recipe::Alternating4 => fp(12, false, 6),
            Recipe::Dicyclic3 => fp(12, false, 12),
            Recipe::Quaternion8 => fp(8, false, 4),
            Recipe::Example(p) => fp((*p as usize).pow(5), false, p * p),
            Recipe::Theorem4 => fp(32, false, 8),
            Recipe::Holomorph(n) => {
                let units = (1..*n.max(&2)).filter(|&u| gcd(u as u64, *n as u64) == 1).count();
                let (order, abelian) = (n * units, *n <= 2);
                fp(order, abelian, holomorph_exponent(*n))
            }
            Recipe::Product(a, b) => a.expected_fingerprint().product(b.expected_fingerprint()),
        }
    }

    /// Parses a recipe name as produced by [`Recipe::name`], or one of the
    /// parametrised families `cyclic`, `dihedral`, `elementary-abelian`,
    /// `example`, `holomorph` with the `p` and `n` arguments.
    pub fn parse(name: &str, p: Option<u64>, n: Option<usize>) -> Result<Recipe> {
        let unknown = || Error::UnknownRecipe(name.to_string());
        let need_n = || n.ok_or_else(|| Error::Precondition(format!("recipe {name} needs --n")));
        let need_p = || p.ok_or_else(|| Error::Precondition(format!("recipe {name} needs --p")));
        let recipe = match name {
            "cyclic" => Recipe::Cyclic(need_n()?),
            "dihedral" => match need_n()? {
                order if order % 2 == 0 => Recipe::Dihedral(order / 2),
                order => {
                    return Err(Error::Precondition(format!(
                        "dihedral group order must be even, got {order}"
                    )))
                }
            },
            "elementary-abelian" => Recipe::ElementaryAbelian {
                p: need_p()?,
                rank: need_n()?,
            },
            "example" => Recipe::Example(need_p()?),
            "holomorph" => Recipe::Holomorph(need_n()?),
            "s3" | "sym3" => Recipe::Symmetric3,
            "a4" => Recipe::Alternating4,
            "dic3" => Recipe::Dicyclic3,
            "q8" => Recipe::Quaternion8,
            "theorem4" => Recipe::Theorem4,
            _ => {
                for (i, _) in name.match_indices('x') {
                    let (a, b) = (&name[..i], &name[i + 1..]);
                    if let (Ok(a), Ok(b)) = (Recipe::parse(a, p, n), Recipe::parse(b, p, n)) {
                        return Ok(Recipe::Product(Box::new(a), Box::new(b)));
                    }
                }
                parse_atom(name).ok_or_else(unknown)?
            }
        };
        Ok(recipe)
    }
}

fn parse_atom(name: &str) -> Option<Recipe> {
    if let Some(rest) = name.strip_prefix("example-p") {
        return rest.parse().ok().map(Recipe::Example);
    }
    if let Some(rest) = name.strip_prefix("hol") {
        return rest.parse().ok().map(Recipe::Holomorph);
    }
    if let Some(rest) = name.strip_prefix('d') {
        let order: usize = rest.parse().ok()?;
        return (order.is_multiple_of(2) && order >= 6).then_some(Recipe::Dihedral(order / 2));
    }
    let rest = name.strip_prefix('c')?;
    match rest.split_once('^') {
        Some((p, r)) => Some(Recipe::ElementaryAbelian {
            p: p.parse().ok()?,
            rank: r.parse().ok()?,
        }),
        None => rest.parse().ok().map(Recipe::Cyclic),
    }
}

/// Exponent of the holomorph of `C_n`, by direct computation on pairs
/// `(k, u)` with `(k, u)^j = (k(1 + u + … + u^(j−1)), u^j)`.
fn holomorph_exponent(n: usize) -> u64 {
    if n <= 1 {
        return 1;
    }
    let mut exp = 1u64;
    for u in (1..n.max(2)).filter(|&u| gcd(u as u64, n as u64) == 1) {
        for k in 0..n {
            let (mut kk, mut uu, mut j) = (k, u, 1u64);
            while !(kk % n == 0 && uu % n == 1 % n) {
                kk = (kk + k * uu) % n;
                uu = uu * u % n;
                j += 1;
            }
            exp = exp / gcd(exp, j) * j;
        }
    }
    exp
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub recipe: Recipe,
    pub fingerprint: Fingerprint,
}

impl CatalogEntry {
    fn new(recipe: Recipe) -> CatalogEntry {
        CatalogEntry {
            name: recipe.name(),
            fingerprint: recipe.expected_fingerprint(),
            recipe,
        }
    }

    /// Builds the group and checks it against the expected fingerprint.
    pub fn build(&self) -> Result<NamedGroup> {
        let g = self.recipe.build()?;
        let actual = Fingerprint::of(&g.group);
        if actual != self.fingerprint {
            return Err(Error::InvalidTable(format!(
                "{} built with {actual}, expected {}",
                self.name, self.fingerprint
            )));
        }
        Ok(g)
    }
}

/// The default catalog, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    use Recipe::*;
    let b = Box::new;
    let mut recipes: Vec<Recipe> = (1..=32).map(Cyclic).collect();
    for p in [2, 3, 5] {
        for rank in 2..=4 {
            recipes.push(ElementaryAbelian { p, rank });
        }
    }
    recipes.extend((3..=16).map(Dihedral));
    recipes.extend([Symmetric3, Alternating4, Dicyclic3, Quaternion8]);
    recipes.extend([Example(2), Example(3), Theorem4]);
    recipes.extend([5, 7, 8, 9, 10, 12].map(Holomorph));
    recipes.extend([
        Product(b(Cyclic(4)), b(Cyclic(2))),
        Product(b(Cyclic(4)), b(Cyclic(4))),
        Product(b(Cyclic(6)), b(Cyclic(2))),
        Product(b(Cyclic(9)), b(Cyclic(3))),
        Product(b(Symmetric3), b(Cyclic(2))),
        Product(b(Symmetric3), b(Cyclic(3))),
        Product(b(Symmetric3), b(Symmetric3)),
        Product(b(Dihedral(4)), b(Cyclic(2))),
        Product(b(Quaternion8), b(Cyclic(2))),
        Product(b(Alternating4), b(Cyclic(2))),
        Product(b(Alternating4), b(Cyclic(3))),
        Product(b(Dicyclic3), b(Cyclic(2))),
        Product(b(Symmetric3), b(Dihedral(4))),
        Product(b(Theorem4), b(Cyclic(3))),
        Product(b(Example(2)), b(Cyclic(3))),
    ]);
    recipes.into_iter().map(CatalogEntry::new).collect()
}

/// Looks up a catalog entry by name.
pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{is_normal, product_set};

    #[test]
    fn example_group_p2_relations_and_factorisation() {
        let e = example_group(2).unwrap();
        let g = &e.group;
        assert_eq!(g.order(), 32);
        let x = e.handle("x").unwrap();
        let b = e.handle("B").unwrap();
        assert_eq!(b.order(), 8);
        let (prod, _) = product_set(g, x, b);
        assert_eq!(prod.len(), 32);
        assert!(x.intersection(g, b).is_trivial());
        assert!(!is_normal(g, x));
        assert!(!is_normal(g, b));
    }

    #[test]
    fn example_group_p5_exceeds_default_cap() {
        assert!(matches!(example_group(5), Err(Error::CapExceeded { .. })));
        assert!(matches!(example_group(4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn theorem4_group_basics() {
        let t = theorem4_group().unwrap();
        assert_eq!(t.group.order(), 32);
        assert_eq!(t.handle("x").unwrap().order(), 8);
        assert_eq!(t.handle("AB").unwrap().order(), 4);
        assert_eq!(Fingerprint::of(&t.group), Fingerprint::of(&holomorph_cyclic(8).unwrap()));
    }

    #[test]
    fn holomorphs() {
        assert_eq!(holomorph_cyclic(1).unwrap().order(), 1);
        let h3 = holomorph_cyclic(3).unwrap();
        assert_eq!(h3.order(), 6);
        assert!(!h3.is_abelian());
        assert_eq!(holomorph_cyclic(2).unwrap().order(), 2);
    }

    #[test]
    fn subgroup_specs() {
        let t = theorem4_group().unwrap();
        let xa = t.subgroup("x,a").unwrap();
        assert_eq!(xa.order(), 16);
        assert_eq!(t.subgroup("x^2").unwrap().order(), 4);
        assert!(t.subgroup("q").is_err());
    }

    #[test]
    fn recipe_names_round_trip() {
        for e in catalog() {
            assert_eq!(Recipe::parse(&e.name, None, None).unwrap(), e.recipe, "{}", e.name);
        }
        assert_eq!(Recipe::parse("example", Some(3), None).unwrap(), Recipe::Example(3));
        assert!(matches!(Recipe::parse("nope", None, None), Err(Error::UnknownRecipe(_))));
    }

    #[test]
    fn catalog_entries_rebuild_to_their_fingerprints() {
        let entries = catalog();
        assert!(entries.iter().any(|e| e.name == "c4"));
        assert!(entries.iter().any(|e| e.name == "s3"));
        for e in &entries {
            e.build().unwrap_or_else(|err| panic!("{}: {err}", e.name));
        }
        let names: std::collections::HashSet<_> = entries.iter().map(|e| &e.name).collect();
        assert_eq!(names.len(), entries.len());
    }
}
