//! Ideals of finite cBCK-algebras: membership, generation, enumeration,
//! primality and the ideal lattice.

use crate::algebra::FiniteCbck;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::LatticeDiagram;
use crate::Caps;

/// `0 ∈ S`, and `x·y ∈ S` with `y ∈ S` forces `x ∈ S`.
pub fn is_ideal(algebra: &FiniteCbck, subset: &BitSet) -> bool {
    assert_eq!(
        subset.universe_len(),
        algebra.size(),
        "subset width differs from carrier"
    );
    subset.contains(algebra.zero())
        && algebra
            .elements()
            .filter(|&x| !subset.contains(x))
            .all(|x| subset.iter().all(|y| !subset.contains(algebra.op(x, y))))
}

/// True iff `subset` is closed downward in the induced order.
pub fn is_downset(algebra: &FiniteCbck, subset: &BitSet) -> bool {
    subset.iter().all(|y| {
        algebra
            .elements()
            .all(|x| !algebra.leq(x, y) || subset.contains(x))
    })
}

/// The least ideal containing `generators`, as the least fixpoint of
/// `I ↦ I ∪ {x : x·y ∈ I for some y ∈ I}` starting from `generators ∪ {0}`.
pub fn generated_ideal(algebra: &FiniteCbck, generators: &BitSet) -> BitSet {
    let mut ideal = generators.clone();
    ideal.insert(algebra.zero());
    loop {
        let fresh: Vec<usize> = algebra
            .elements()
            .filter(|&x| {
                !ideal.contains(x) && ideal.iter().any(|y| ideal.contains(algebra.op(x, y)))
            })
            .collect();
        if fresh.is_empty() {
            return ideal;
        }
        for x in fresh {
            ideal.insert(x);
        }
    }
}

/// All ideals, in canonical order (cardinality, then bit pattern).
///
/// Ideals are downsets, so the search walks downsets of the induced order
/// and keeps those closed under the ideal rule.
pub fn enumerate_ideals(algebra: &FiniteCbck, caps: &Caps) -> Result<Vec<BitSet>> {
    let n = algebra.size();
    let below: Vec<BitSet> = algebra
        .elements()
        .map(|x| {
            BitSet::from_indices(
                n,
                algebra.elements().filter(|&y| y != x && algebra.leq(y, x)),
            )
        })
        .collect();
    // x < y implies strictly fewer elements below x, so this is a linear extension.
    let mut order: Vec<usize> = algebra.elements().collect();
    order.sort_by_key(|&x| (below[x].count(), x));

    let mut ideals = Vec::new();
    let mut visited = 0u128;
    let mut current = BitSet::empty(n);
    let mut search = DownsetSearch {
        algebra,
        below: &below,
        order: &order,
        caps,
        visited: &mut visited,
        out: &mut ideals,
    };
    search.walk(0, &mut current)?;
    ideals.sort();
    Ok(ideals)
}

struct DownsetSearch<'a> {
    algebra: &'a FiniteCbck,
    below: &'a [BitSet],
    order: &'a [usize],
    caps: &'a Caps,
    visited: &'a mut u128,
    out: &'a mut Vec<BitSet>,
}

impl DownsetSearch<'_> {
    fn walk(&mut self, depth: usize, current: &mut BitSet) -> Result<()> {
        if depth == self.order.len() {
            *self.visited += 1;
            if *self.visited > self.caps.downsets as u128 {
                return Err(Error::CapExceeded {
                    what: "downset enumeration",
                    needed: *self.visited,
                    cap: self.caps.downsets as u128,
                });
            }
            if is_ideal(self.algebra, current) {
                self.out.push(current.clone());
            }
            return Ok(());
        }
        let x = self.order[depth];
        // Every ideal contains zero.
        if x != self.algebra.zero() {
            self.walk(depth + 1, current)?;
        }
        if self.below[x].is_subset(current) {
            current.insert(x);
            self.walk(depth + 1, current)?;
            current.remove(x);
        }
        Ok(())
    }
}

/// All ideals by testing every subset of the carrier. Only for small carriers;
/// serves as a cross-check for [`enumerate_ideals`].
pub fn enumerate_ideals_brute_force(algebra: &FiniteCbck, caps: &Caps) -> Result<Vec<BitSet>> {
    let n = algebra.size();
    let needed = 1u128 << n.min(127);
    if n > 63 || needed > caps.raw_subsets as u128 {
        return Err(Error::CapExceeded {
            what: "raw subset enumeration",
            needed,
            cap: caps.raw_subsets as u128,
        });
    }
    let mut ideals: Vec<BitSet> = (0..1u64 << n)
        .map(|mask| BitSet::from_mask(n, mask))
        .filter(|s| is_ideal(algebra, s))
        .collect();
    ideals.sort();
    Ok(ideals)
}

/// A proper ideal `P` with `x∧y ∈ P` forcing `x ∈ P` or `y ∈ P`.
pub fn is_prime(algebra: &FiniteCbck, ideal: &BitSet) -> Result<bool> {
    if !is_ideal(algebra, ideal) {
        return Err(Error::NotAnIdeal(ideal.to_string()));
    }
    if ideal.count() == algebra.size() {
        return Ok(false);
    }
    let outside: Vec<usize> = algebra.elements().filter(|&x| !ideal.contains(x)).collect();
    Ok(outside
        .iter()
        .all(|&x| outside.iter().all(|&y| !ideal.contains(algebra.meet(x, y)))))
}

/// The ideals of an algebra together with their lattice.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    pub ideals: Vec<BitSet>,
    pub diagram: LatticeDiagram,
}

/// Lattice of all ideals: meet is intersection, join is the ideal generated
/// by the union. The tables are checked against containment.
pub fn ideal_lattice(algebra: &FiniteCbck, caps: &Caps) -> Result<IdealLattice> {
    let ideals = enumerate_ideals(algebra, caps)?;
    let diagram = lattice_of_ideals(algebra, &ideals)?;
    Ok(IdealLattice { ideals, diagram })
}

pub(crate) fn lattice_of_ideals(algebra: &FiniteCbck, ideals: &[BitSet]) -> Result<LatticeDiagram> {
    let position = |set: &BitSet| {
        ideals
            .binary_search(set)
            .map_err(|_| Error::NotAnIdeal(format!("{set} is missing from the enumeration")))
    };
    let n = ideals.len();
    let order: Vec<Vec<bool>> = ideals
        .iter()
        .map(|a| ideals.iter().map(|b| a.is_subset(b)).collect())
        .collect();
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for (a, ia) in ideals.iter().enumerate() {
        for (b, ib) in ideals.iter().enumerate() {
            meet[a][b] = position(&ia.intersection(ib))?;
            join[a][b] = position(&generated_ideal(algebra, &ia.union(ib)))?;
        }
    }
    let labels = ideals.iter().map(BitSet::to_string).collect();
    LatticeDiagram::with_operations(labels, order, meet, join)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::chain_as_finite_algebra;
    use crate::lattice::is_isomorphic_to_powerset;
    use crate::support::{fs_as_finite_algebra, Universe, DEFAULT_MATERIALIZATION_CAP};

    fn set(n: usize, xs: &[usize]) -> BitSet {
        BitSet::from_indices(n, xs.iter().copied())
    }

    fn square() -> FiniteCbck {
        let c2 = chain_as_finite_algebra(1);
        c2.product(&c2)
    }

    #[test]
    fn ideal_membership() {
        let c3 = chain_as_finite_algebra(2);
        assert!(is_ideal(&c3, &set(3, &[0])));
        assert!(is_ideal(&c3, &set(3, &[0, 1, 2])));
        // 2·1 = 1 and 1 both lie in {0,1}, which forces 2.
        assert!(!is_ideal(&c3, &set(3, &[0, 1])));
        // 1·2 = 0 and 2 lie in {0,2}, which forces 1.
        assert!(!is_ideal(&c3, &set(3, &[0, 2])));
        assert!(!is_ideal(&c3, &set(3, &[1, 2])));
    }

    #[test]
    fn generated_ideals() {
        let c3 = chain_as_finite_algebra(2);
        assert_eq!(generated_ideal(&c3, &BitSet::empty(3)), set(3, &[0]));
        assert_eq!(generated_ideal(&c3, &set(3, &[1])), set(3, &[0, 1, 2]));
        // (1,0) has index 1 in the product.
        assert_eq!(generated_ideal(&square(), &set(4, &[1])), set(4, &[0, 1]));
    }

    #[test]
    fn enumeration_examples() {
        let caps = Caps::default();
        assert_eq!(
            enumerate_ideals(&chain_as_finite_algebra(1), &caps)
                .unwrap()
                .len(),
            2
        );
        let c3 = enumerate_ideals(&chain_as_finite_algebra(2), &caps).unwrap();
        assert_eq!(c3, vec![set(3, &[0]), set(3, &[0, 1, 2])]);
        let t2 = fs_as_finite_algebra(
            &Universe::abstract_of_size(2),
            2,
            DEFAULT_MATERIALIZATION_CAP,
        )
        .unwrap();
        let sizes: Vec<usize> = enumerate_ideals(t2.algebra(), &caps)
            .unwrap()
            .iter()
            .map(BitSet::count)
            .collect();
        assert_eq!(sizes, vec![1, 3, 3, 9]);
    }

    #[test]
    fn downset_search_matches_brute_force() {
        let caps = Caps::default();
        let c2 = chain_as_finite_algebra(1);
        let c3 = chain_as_finite_algebra(2);
        for a in [
            c3.clone(),
            square(),
            c3.product(&c2),
            c3.horizontal_sum(&c2),
            c2.product(&square()),
        ] {
            let fast = enumerate_ideals(&a, &caps).unwrap();
            assert_eq!(fast, enumerate_ideals_brute_force(&a, &caps).unwrap());
            assert!(fast.iter().all(|i| is_downset(&a, i)));
        }
    }

    #[test]
    fn caps_are_enforced() {
        let tight = Caps {
            downsets: 2,
            raw_subsets: 4,
            ..Caps::default()
        };
        let sq = square();
        assert!(matches!(
            enumerate_ideals(&sq, &tight),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_ideals_brute_force(&sq, &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn primality() {
        let sq = square();
        assert!(!is_prime(&sq, &BitSet::full(4)).unwrap());
        // V({a}) = {(0,0),(0,1)} = indices {0, 2}.
        assert!(is_prime(&sq, &set(4, &[0, 2])).unwrap());
        assert!(!is_prime(&sq, &set(4, &[0])).unwrap());
        assert!(matches!(
            is_prime(&sq, &set(4, &[0, 3])),
            Err(Error::NotAnIdeal(_))
        ));
        assert!(is_prime(&chain_as_finite_algebra(2), &set(3, &[0])).unwrap());
    }

    #[test]
    fn ideal_lattices() {
        let caps = Caps::default();
        let c3 = ideal_lattice(&chain_as_finite_algebra(2), &caps).unwrap();
        assert_eq!(c3.diagram.len(), 2);
        assert!(c3.diagram.flags.is_distributive && c3.diagram.flags.is_boolean);

        let sq = ideal_lattice(&square(), &caps).unwrap();
        assert_eq!(sq.diagram.len(), 4);
        assert!(is_isomorphic_to_powerset(&sq.diagram, 2));

        let one = ideal_lattice(&FiniteCbck::trivial(), &caps).unwrap();
        assert_eq!(one.diagram.len(), 1);

        let t2 = fs_as_finite_algebra(
            &Universe::abstract_of_size(2),
            2,
            DEFAULT_MATERIALIZATION_CAP,
        )
        .unwrap();
        assert!(is_isomorphic_to_powerset(
            &ideal_lattice(t2.algebra(), &caps).unwrap().diagram,
            2
        ));
    }
}
