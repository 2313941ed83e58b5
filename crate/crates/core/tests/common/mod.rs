//! Test-side oracles, written directly from the definitions and sharing no
//! code with the library beyond the operation table.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cbck::chain::chain_as_finite_algebra;
use cbck::{BitSet, CayleyTable, FiniteCbck};
use rand::seq::SliceRandom;
use rand::Rng;

/// The four identities checked one instance at a time.
pub fn naive_is_cbck(t: &CayleyTable) -> bool {
    let n = t.size();
    let z = t.zero();
    let op = |x, y| t.op(x, y);
    for x in 0..n {
        if op(x, x) != z || op(x, z) != x {
            return false;
        }
        for y in 0..n {
            if op(x, op(x, y)) != op(y, op(y, x)) {
                return false;
            }
            for w in 0..n {
                if op(op(x, y), w) != op(op(x, w), y) {
                    return false;
                }
            }
        }
    }
    true
}

/// Re-evaluates a reported witness without the library's evaluator.
pub fn witness_fails(t: &CayleyTable, axiom: &str, w: &[usize]) -> bool {
    let op = |x, y| t.op(x, y);
    let z = t.zero();
    match (axiom, w) {
        ("BCK1", [x, y, v]) => op(op(*x, *y), *v) != op(op(*x, *v), *y),
        ("BCK2", [x, y]) => op(*x, op(*x, *y)) != op(*y, op(*y, *x)),
        ("BCK3", [x]) => op(*x, *x) != z,
        ("BCK4", [x]) => op(*x, z) != *x,
        _ => false,
    }
}

pub fn naive_is_ideal(a: &FiniteCbck, s: &BTreeSet<usize>) -> bool {
    if !s.contains(&a.zero()) {
        return false;
    }
    a.elements().all(|x| {
        s.contains(&x)
            || a.elements()
                .all(|y| !(s.contains(&y) && s.contains(&a.op(x, y))))
    })
}

/// Every ideal, by testing every subset of the carrier.
pub fn naive_ideals(a: &FiniteCbck) -> Vec<BTreeSet<usize>> {
    let n = a.size();
    assert!(n <= 20, "subset oracle limited to 20 elements");
    (0..1u32 << n)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect::<BTreeSet<_>>())
        .filter(|s| naive_is_ideal(a, s))
        .collect()
}

/// Intersection of every ideal containing `s`.
pub fn intersection_oracle(
    ideals: &[BTreeSet<usize>],
    a: &FiniteCbck,
    s: &BTreeSet<usize>,
) -> BTreeSet<usize> {
    let mut out: BTreeSet<usize> = a.elements().collect();
    for i in ideals.iter().filter(|i| s.is_subset(i)) {
        out = out.intersection(i).copied().collect();
    }
    out
}

/// `x ∈ (S]` iff `(…(x·s₁)·…)·sₙ = 0` for some `s₁,…,sₙ ∈ S`, found by
/// searching the elements reachable from `x` by repeated subtraction.
pub fn star_oracle(a: &FiniteCbck, s: &BTreeSet<usize>) -> BTreeSet<usize> {
    a.elements()
        .filter(|&x| {
            let mut seen = BTreeSet::from([x]);
            let mut frontier = vec![x];
            while let Some(u) = frontier.pop() {
                for &g in s {
                    let v = a.op(u, g);
                    if seen.insert(v) {
                        frontier.push(v);
                    }
                }
            }
            seen.contains(&a.zero())
        })
        .collect()
}

pub fn to_set(b: &BitSet) -> BTreeSet<usize> {
    b.iter().collect()
}

pub fn to_bits(n: usize, s: &BTreeSet<usize>) -> BitSet {
    BitSet::from_indices(n, s.iter().copied())
}

/// A random verified algebra with at most `max` elements, built from chains
/// by products, horizontal sums and relabelings, followed by single-entry
/// mutations that are kept only when the axioms still hold.
pub fn random_algebra<R: Rng>(rng: &mut R, max: usize) -> FiniteCbck {
    let mut a = random_construction(rng, max, 3);
    let n = a.size();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    a = a.relabel(&perm).expect("shuffled permutation");
    for _ in 0..rng.random_range(0..4) {
        let (x, y, v) = (
            rng.random_range(0..n),
            rng.random_range(0..n),
            rng.random_range(0..n),
        );
        let candidate = a.table().with_entry(x, y, v).expect("entry in range");
        if naive_is_cbck(&candidate) {
            a = FiniteCbck::new(candidate).expect("oracle accepted the table");
        }
    }
    a
}

fn random_construction<R: Rng>(rng: &mut R, max: usize, depth: u32) -> FiniteCbck {
    if max < 2 {
        return FiniteCbck::trivial();
    }
    let leaf = |rng: &mut R| chain_as_finite_algebra(rng.random_range(1..=(max as u32 - 1).min(4)));
    if depth == 0 || max < 4 {
        return leaf(rng);
    }
    match rng.random_range(0..3) {
        0 => leaf(rng),
        1 => {
            let a = random_construction(rng, max / 2, depth - 1);
            let b = random_construction(rng, max / a.size(), depth - 1);
            a.product(&b)
        }
        _ => {
            let a = random_construction(rng, max - 2, depth - 1);
            let b = random_construction(rng, max + 1 - a.size(), depth - 1);
            a.horizontal_sum(&b)
        }
    }
}
