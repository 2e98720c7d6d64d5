use super::{check_cap, closure, embedded_generators, FiniteGroup, DEFAULT_CONSTRUCTION_CAP};
use crate::error::{Error, Result};

/// An action of `acting` on `acted` by automorphisms.
///
/// `images[i]` is the permutation `n ↦ n^h` of the acted group's elements for
/// the `i`-th generator `h` of the acting group. The action is on the right,
/// matching exponent notation: `n^(h₁h₂) = (n^h₁)^h₂`, and in the semidirect
/// product the conjugate `h⁻¹ n h` equals `n^h`.
#[derive(Clone, Debug)]
pub struct ActionSpec<'a> {
    acting: &'a FiniteGroup,
    acted: &'a FiniteGroup,
    images: Vec<Vec<usize>>,
    /// `table[h][n] = n^h` for every element `h` of the acting group.
    table: Vec<Vec<u32>>,
}

impl<'a> ActionSpec<'a> {
    /// Validates that each image is an automorphism and that the assignment
    /// extends consistently over the whole acting group.
    pub fn new(
        acting: &'a FiniteGroup,
        acted: &'a FiniteGroup,
        images: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if images.len() != acting.generators().len() {
            return Err(Error::Precondition(format!(
                "{} images for {} generators",
                images.len(),
                acting.generators().len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            check_automorphism(acted, img)
                .map_err(|e| Error::NotAnAutomorphism(format!("image of generator {i}: {e}")))?;
        }
        let table = extend(acting, acted, &images)?;
        Ok(ActionSpec {
            acting,
            acted,
            images,
            table,
        })
    }

    /// Each generator image given by the images of the acted group's
    /// generators.
    pub fn from_generator_images(
        acting: &'a FiniteGroup,
        acted: &'a FiniteGroup,
        generator_images: &[Vec<usize>],
    ) -> Result<Self> {
        let images = generator_images
            .iter()
            .map(|imgs| automorphism_from_images(acted, imgs))
            .collect::<Result<Vec<_>>>()?;
        Self::new(acting, acted, images)
    }

    pub fn trivial(acting: &'a FiniteGroup, acted: &'a FiniteGroup) -> Self {
        let id: Vec<usize> = acted.elements().collect();
        Self::new(acting, acted, vec![id; acting.generators().len()])
            .expect("identity action is always valid")
    }

    pub fn acting(&self) -> &FiniteGroup {
        self.acting
    }

    pub fn acted(&self) -> &FiniteGroup {
        self.acted
    }

    pub fn images(&self) -> &[Vec<usize>] {
        &self.images
    }

    /// `n^h`.
    #[inline]
    pub fn apply(&self, n: usize, h: usize) -> usize {
        self.table[h][n] as usize
    }

    /// The semidirect product `acted ⋊ acting` on pairs `(n, h)` with
    /// `(n₁, h₁)(n₂, h₂) = (n₁ · n₂^(h₁⁻¹), h₁h₂)`.
    ///
    /// Generators are the embedded generators of the acted group followed by
    /// those of the acting group, so a trivial action reproduces
    /// [`FiniteGroup::direct_product`] table for table.
    pub fn semidirect_product(&self) -> Result<FiniteGroup> {
        self.semidirect_product_with_cap(DEFAULT_CONSTRUCTION_CAP)
    }

    pub fn semidirect_product_with_cap(&self, cap: usize) -> Result<FiniteGroup> {
        let (n, h) = (self.acted, self.acting);
        check_cap(n.order() * h.order(), cap)?;
        let (gens, names) = embedded_generators(n, h);
        closure((0usize, 0usize), &gens, &names, cap, |&(n1, h1), &(n2, h2)| {
            (n.mul(n1, self.apply(n2, h.inv(h1))), h.mul(h1, h2))
        })
    }
}

/// Extends generator images to every element of the acting group along its
/// Cayley graph, checking every edge (hence every relation).
fn extend(acting: &FiniteGroup, acted: &FiniteGroup, images: &[Vec<usize>]) -> Result<Vec<Vec<u32>>> {
    let identity: Vec<u32> = acted.elements().map(|i| i as u32).collect();
    let mut table: Vec<Option<Vec<u32>>> = vec![None; acting.order()];
    table[0] = Some(identity);
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let h = queue[i];
        let current = table[h].clone().expect("queued elements are assigned");
        for (s, &g) in acting.generators().iter().enumerate() {
            let next = acting.mul(h, g);
            let composed: Vec<u32> = current.iter().map(|&n| images[s][n as usize] as u32).collect();
            match &table[next] {
                None => {
                    table[next] = Some(composed);
                    queue.push(next);
                }
                Some(existing) if *existing != composed => {
                    return Err(Error::InconsistentAction(format!(
                        "two words for {} act differently",
                        acting.label(next)
                    )));
                }
                Some(_) => {}
            }
        }
        i += 1;
    }
    Ok(table.into_iter().map(|t| t.expect("generators reach every element")).collect())
}

fn check_automorphism(group: &FiniteGroup, perm: &[usize]) -> Result<(), String> {
    if perm.len() != group.order() {
        return Err(format!("length {} for order {}", perm.len(), group.order()));
    }
    let mut seen = vec![false; perm.len()];
    for &i in perm {
        if i >= perm.len() || std::mem::replace(&mut seen[i], true) {
            return Err("not a permutation".into());
        }
    }
    for a in group.elements() {
        for b in group.elements() {
            if perm[group.mul(a, b)] != group.mul(perm[a], perm[b]) {
                return Err(format!(
                    "does not preserve the product of {} and {}",
                    group.label(a),
                    group.label(b)
                ));
            }
        }
    }
    Ok(())
}

/// The endomorphism determined by images of the generators, as a permutation
/// of element indices. Fails unless the images define an automorphism.
pub fn automorphism_from_images(group: &FiniteGroup, images: &[usize]) -> Result<Vec<usize>> {
    if images.len() != group.generators().len() {
        return Err(Error::Precondition(format!(
            "{} images for {} generators",
            images.len(),
            group.generators().len()
        )));
    }
    let unset = usize::MAX;
    let mut perm = vec![unset; group.order()];
    perm[0] = 0;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let a = queue[i];
        for (s, &g) in group.generators().iter().enumerate() {
            let b = group.mul(a, g);
            let image = group.mul(perm[a], images[s]);
            if perm[b] == unset {
                perm[b] = image;
                queue.push(b);
            } else if perm[b] != image {
                return Err(Error::NotAnAutomorphism(
                    "generator images violate a relation".into(),
                ));
            }
        }
        i += 1;
    }
    check_automorphism(group, &perm).map_err(Error::NotAnAutomorphism)?;
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dihedral16_perms() -> FiniteGroup {
        let rotation: Vec<usize> = (0..8).map(|i| (i + 1) % 8).collect();
        let reflection: Vec<usize> = (0..8).map(|i| (8 - i) % 8).collect();
        FiniteGroup::from_generators(&[rotation, reflection]).unwrap()
    }

    #[test]
    fn trivial_action_matches_direct_product() {
        let n = FiniteGroup::cyclic(4).unwrap();
        let h = FiniteGroup::cyclic_named(3, "y").unwrap();
        let action = ActionSpec::trivial(&h, &n);
        assert_eq!(action.semidirect_product().unwrap(), n.direct_product(&h).unwrap());
    }

    #[test]
    fn inversion_on_c8_gives_dihedral_of_order_16() {
        let n = FiniteGroup::cyclic(8).unwrap();
        let h = FiniteGroup::cyclic_named(2, "a").unwrap();
        let action = ActionSpec::from_generator_images(&h, &n, &[vec![n.inv(1)]]).unwrap();
        let g = action.semidirect_product().unwrap();
        let d16 = dihedral16_perms();
        assert_eq!(g.order(), 16);
        let mut ours = g.element_orders();
        let mut theirs = d16.element_orders();
        ours.sort();
        theirs.sort();
        assert_eq!(ours, theirs);
        assert!(!g.is_abelian());
        let x = g.element_by_word("x").unwrap();
        let a = g.element_by_word("a").unwrap();
        assert_eq!(g.conj(x, a), g.inv(x));
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let n = FiniteGroup::cyclic(4).unwrap();
        let h = FiniteGroup::cyclic_named(2, "a").unwrap();
        let square = n.pow(1, 2);
        let err = ActionSpec::from_generator_images(&h, &n, &[vec![square]]).unwrap_err();
        assert!(matches!(err, Error::NotAnAutomorphism(_)));
    }

    #[test]
    fn inconsistent_extension_is_rejected() {
        // 3 has order 4 modulo 5, so x ↦ x³ cannot be the image of an involution.
        let n = FiniteGroup::cyclic(5).unwrap();
        let h = FiniteGroup::cyclic_named(2, "a").unwrap();
        let cube = n.pow(1, 3);
        let err = ActionSpec::from_generator_images(&h, &n, &[vec![cube]]).unwrap_err();
        assert!(matches!(err, Error::InconsistentAction(_)));
    }
}
