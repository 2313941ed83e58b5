//! Congruences of finite cBCK-algebras and their correspondence with ideals.

use std::fmt;

use serde::Serialize;

use crate::algebra::FiniteCbck;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, is_ideal};
use crate::lattice::LatticeDiagram;
use crate::Caps;

/// An equivalence relation on the carrier as a block assignment, normalized
/// so blocks are numbered in order of first occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    blocks: Vec<usize>,
}

impl Partition {
    /// Normalizes an arbitrary block labelling.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let mut renumber: Vec<(usize, usize)> = Vec::new();
        let blocks = labels
            .iter()
            .map(|&l| match renumber.iter().find(|(old, _)| *old == l) {
                Some(&(_, new)) => new,
                None => {
                    let new = renumber.len();
                    renumber.push((l, new));
                    new
                }
            })
            .collect();
        Partition { blocks }
    }

    pub fn identity(n: usize) -> Partition {
        Partition {
            blocks: (0..n).collect(),
        }
    }

    pub fn single_block(n: usize) -> Partition {
        Partition { blocks: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.blocks[x]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    pub fn assignment(&self) -> &[usize] {
        &self.blocks
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.blocks[x] == self.blocks[y]
    }

    /// The members of block `b`.
    pub fn block(&self, b: usize) -> BitSet {
        BitSet::from_indices(self.len(), (0..self.len()).filter(|&x| self.blocks[x] == b))
    }

    /// True iff every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        (0..self.len()).all(|x| (0..self.len()).all(|y| !self.related(x, y) || other.related(x, y)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = (0..self.block_count())
            .map(|b| self.block(b).to_string())
            .collect();
        f.write_str(&blocks.join(""))
    }
}

/// Exhaustive compatibility check.
///
/// Compatibility in each argument separately is equivalent to full
/// compatibility for an equivalence relation.
pub fn is_congruence(algebra: &FiniteCbck, partition: &Partition) -> bool {
    assert_eq!(
        partition.len(),
        algebra.size(),
        "partition width differs from carrier"
    );
    let n = algebra.size();
    (0..n).all(|x| {
        (x + 1..n).filter(|&x2| partition.related(x, x2)).all(|x2| {
            (0..n).all(|y| {
                partition.related(algebra.op(x, y), algebra.op(x2, y))
                    && partition.related(algebra.op(y, x), algebra.op(y, x2))
            })
        })
    })
}

/// `x θ y` iff `x·y ∈ I` and `y·x ∈ I`. The result is verified to be a
/// congruence whose zero-block is exactly `I`.
pub fn theta_from_ideal(algebra: &FiniteCbck, ideal: &BitSet) -> Result<Partition> {
    if !is_ideal(algebra, ideal) {
        return Err(Error::NotAnIdeal(ideal.to_string()));
    }
    let n = algebra.size();
    let related =
        |x: usize, y: usize| ideal.contains(algebra.op(x, y)) && ideal.contains(algebra.op(y, x));
    let mut labels = vec![usize::MAX; n];
    for x in 0..n {
        if labels[x] == usize::MAX {
            for (y, label) in labels.iter_mut().enumerate().skip(x) {
                if related(x, y) {
                    *label = x;
                }
            }
        }
    }
    let partition = Partition::from_labels(&labels);
    let consistent = (0..n).all(|x| (0..n).all(|y| related(x, y) == partition.related(x, y)));
    if !consistent
        || !is_congruence(algebra, &partition)
        || partition.block(partition.block_of(algebra.zero())) != *ideal
    {
        return Err(Error::CompatibilityFailure(ideal.to_string()));
    }
    Ok(partition)
}

/// All congruences, ordered by block count (descending) then assignment.
///
/// Restricted-growth strings are extended one element at a time; a prefix is
/// abandoned as soon as a compatibility constraint among assigned elements
/// fails.
pub fn enumerate_congruences(algebra: &FiniteCbck, caps: &Caps) -> Result<Vec<Partition>> {
    let n = algebra.size();
    if n > caps.partition_carrier {
        return Err(Error::CapExceeded {
            what: "partition enumeration carrier",
            needed: n as u128,
            cap: caps.partition_carrier as u128,
        });
    }
    let mut found = Vec::new();
    let mut labels = Vec::with_capacity(n);
    extend(algebra, &mut labels, 0, &mut found);
    found.sort_by(|a: &Partition, b: &Partition| {
        b.block_count()
            .cmp(&a.block_count())
            .then_with(|| a.assignment().cmp(b.assignment()))
    });
    Ok(found)
}

fn extend(
    algebra: &FiniteCbck,
    labels: &mut Vec<usize>,
    blocks: usize,
    found: &mut Vec<Partition>,
) {
    let n = algebra.size();
    let k = labels.len();
    if k == n {
        found.push(Partition {
            blocks: labels.clone(),
        });
        return;
    }
    for b in 0..=blocks {
        labels.push(b);
        if prefix_compatible(algebra, labels) {
            extend(algebra, labels, blocks.max(b + 1), found);
        }
        labels.pop();
    }
}

/// Checks the constraints that became decidable once element `labels.len()-1`
/// was assigned: every one whose indices are all assigned and involve it.
fn prefix_compatible(algebra: &FiniteCbck, labels: &[usize]) -> bool {
    let k = labels.len() - 1;
    let assigned = |v: usize| v <= k;
    for x in 0..=k {
        for x2 in x + 1..=k {
            if labels[x] != labels[x2] {
                continue;
            }
            for y in 0..=k {
                for (r1, r2) in [
                    (algebra.op(x, y), algebra.op(x2, y)),
                    (algebra.op(y, x), algebra.op(y, x2)),
                ] {
                    let touches = [x, x2, y, r1, r2].contains(&k);
                    if touches && assigned(r1) && assigned(r2) && labels[r1] != labels[r2] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Congruences ordered by refinement.
pub fn congruence_lattice(congruences: &[Partition]) -> Result<LatticeDiagram> {
    let order = congruences
        .iter()
        .map(|a| congruences.iter().map(|b| a.refines(b)).collect())
        .collect();
    LatticeDiagram::from_order(
        congruences.iter().map(Partition::to_string).collect(),
        order,
    )
}

/// Outcome of checking that `I ↦ θ_I` is an order isomorphism from ideals
/// onto congruences.
#[derive(Clone, Debug, Serialize)]
pub struct ConIsoReport {
    pub holds: bool,
    pub ideal_count: usize,
    pub congruence_count: usize,
    pub bijective: bool,
    pub order_preserving: bool,
    /// `(ideal, θ_I)` in canonical ideal order.
    #[serde(serialize_with = "serialize_pairs")]
    pub pairs: Vec<(BitSet, Partition)>,
}

fn serialize_pairs<S: serde::Serializer>(
    pairs: &[(BitSet, Partition)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(pairs.len()))?;
    for (ideal, theta) in pairs {
        seq.serialize_element(&(ideal.to_hex(), theta.to_string()))?;
    }
    seq.end()
}

pub fn verify_con_iso_id(algebra: &FiniteCbck, caps: &Caps) -> Result<ConIsoReport> {
    let ideals = enumerate_ideals(algebra, caps)?;
    let congruences = enumerate_congruences(algebra, caps)?;
    let pairs: Vec<(BitSet, Partition)> = ideals
        .iter()
        .map(|i| Ok((i.clone(), theta_from_ideal(algebra, i)?)))
        .collect::<Result<_>>()?;

    let mut images: Vec<&Partition> = pairs.iter().map(|(_, t)| t).collect();
    images.sort();
    images.dedup();
    let mut targets: Vec<&Partition> = congruences.iter().collect();
    targets.sort();
    let bijective = images.len() == pairs.len() && images == targets;

    let order_preserving = pairs
        .iter()
        .all(|(i, ti)| pairs.iter().all(|(j, tj)| i.is_subset(j) == ti.refines(tj)));
    Ok(ConIsoReport {
        holds: bijective && order_preserving,
        ideal_count: ideals.len(),
        congruence_count: congruences.len(),
        bijective,
        order_preserving,
        pairs,
    })
}
