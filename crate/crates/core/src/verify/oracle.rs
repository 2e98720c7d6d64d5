//! Independent brute-force oracles used to cross-check the fast paths.

use crate::group::FiniteGroup;

/// Largest order the subset oracle accepts (subsets are `u32` masks).
pub const SUBSET_ORACLE_CAP: usize = 24;

/// Every subgroup as a sorted member list, found by testing each subset of
/// Lagrange-admissible size that contains the identity for closure.
/// Subsets of a fixed size are walked with Gosper's hack. Results are sorted
/// by (order, members).
///
/// # Panics
/// If `|G|` exceeds [`SUBSET_ORACLE_CAP`].
pub fn all_subgroups_by_subsets(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= SUBSET_ORACLE_CAP, "subset oracle is limited to order {SUBSET_ORACLE_CAP}");
    let mut found: Vec<Vec<usize>> = Vec::new();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        // choose d-1 of the n-1 non-identity elements
        let k = d - 1;
        if k == 0 {
            found.push(vec![0]);
            continue;
        }
        let free = n - 1;
        let mut mask: u32 = (1u32 << k) - 1;
        let limit: u32 = 1u32 << free;
        while mask < limit {
            let members: Vec<usize> = std::iter::once(0)
                .chain((0..free).filter(|i| mask >> i & 1 == 1).map(|i| i + 1))
                .collect();
            let full = (mask << 1) | 1;
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| full >> g.mul(a, b) & 1 == 1));
            if closed {
                found.push(members);
            }
            // Gosper's hack: next mask with the same popcount
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let s3 = FiniteGroup::from_generators(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(all_subgroups_by_subsets(&s3).len(), 6);
        assert_eq!(all_subgroups_by_subsets(&FiniteGroup::cyclic(12).unwrap()).len(), 6);
        assert_eq!(all_subgroups_by_subsets(&FiniteGroup::cyclic(1).unwrap()), vec![vec![0]]);
        let v4 = FiniteGroup::cyclic(2)
            .unwrap()
            .direct_product(&FiniteGroup::cyclic(2).unwrap())
            .unwrap();
        assert_eq!(all_subgroups_by_subsets(&v4).len(), 5);
    }
}
