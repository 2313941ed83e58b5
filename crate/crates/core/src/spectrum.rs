//! Prime spectra of finite cBCK-algebras with the topology
//! `{σ(I) : I an ideal}`, where `σ(I)` is the set of primes not containing `I`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::FiniteCbck;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, is_ideal, is_prime, lattice_of_ideals};
use crate::lattice::LatticeDiagram;
use crate::Caps;

/// All prime ideals in canonical ideal order.
pub fn prime_spectrum(algebra: &FiniteCbck, caps: &Caps) -> Result<Vec<BitSet>> {
    primes_among(algebra, &enumerate_ideals(algebra, caps)?)
}

fn primes_among(algebra: &FiniteCbck, ideals: &[BitSet]) -> Result<Vec<BitSet>> {
    let mut primes = Vec::new();
    for ideal in ideals {
        if is_prime(algebra, ideal)? {
            primes.push(ideal.clone());
        }
    }
    Ok(primes)
}

fn sigma_over(primes: &[BitSet], subset: &BitSet) -> BitSet {
    BitSet::from_indices(
        primes.len(),
        primes
            .iter()
            .enumerate()
            .filter(|(_, p)| !subset.is_subset(p))
            .map(|(k, _)| k),
    )
}

/// `σ(I)` as a set of indices into [`prime_spectrum`].
pub fn sigma(algebra: &FiniteCbck, ideal: &BitSet, caps: &Caps) -> Result<BitSet> {
    if !is_ideal(algebra, ideal) {
        return Err(Error::NotAnIdeal(ideal.to_string()));
    }
    Ok(sigma_over(&prime_spectrum(algebra, caps)?, ideal))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenSet {
    /// Indices into the spectrum's points.
    pub points: BitSet,
    /// Indices into the algebra's canonical ideal list of every ideal whose
    /// `σ` is this open. More than one entry means `σ` is not injective.
    pub generators: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SpectrumSpace {
    pub ideals: Vec<BitSet>,
    pub points: Vec<BitSet>,
    /// Distinct opens, canonically ordered.
    pub opens: Vec<OpenSet>,
    pub is_t0: bool,
    pub is_discrete: bool,
}

impl SpectrumSpace {
    pub fn of(algebra: &FiniteCbck, caps: &Caps) -> Result<SpectrumSpace> {
        let ideals = enumerate_ideals(algebra, caps)?;
        let points = primes_among(algebra, &ideals)?;
        let mut opens: Vec<OpenSet> = Vec::new();
        for (k, ideal) in ideals.iter().enumerate() {
            let open = sigma_over(&points, ideal);
            match opens.iter_mut().find(|o| o.points == open) {
                Some(existing) => existing.generators.push(k),
                None => opens.push(OpenSet {
                    points: open,
                    generators: vec![k],
                }),
            }
        }
        opens.sort_by(|a, b| a.points.cmp(&b.points));

        let n = points.len();
        let is_t0 = (0..n).all(|p| {
            (p + 1..n).all(|q| {
                opens
                    .iter()
                    .any(|o| o.points.contains(p) != o.points.contains(q))
            })
        });
        let mut space = SpectrumSpace {
            ideals,
            points,
            opens,
            is_t0,
            is_discrete: false,
        };
        space.is_discrete = is_discrete(&space);
        Ok(space)
    }

    /// `σ(I)` for an ideal given by its members.
    pub fn sigma(&self, ideal: &BitSet) -> Result<BitSet> {
        if self.ideals.binary_search(ideal).is_err() {
            return Err(Error::NotAnIdeal(ideal.to_string()));
        }
        Ok(sigma_over(&self.points, ideal))
    }

    /// True iff distinct ideals always have distinct opens.
    pub fn sigma_is_injective(&self) -> bool {
        self.opens.iter().all(|o| o.generators.len() == 1)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Open {
            points: Vec<usize>,
            generators: Vec<String>,
        }
        #[derive(Serialize)]
        struct Flags {
            is_t0: bool,
            is_discrete: bool,
            sigma_injective: bool,
        }
        #[derive(Serialize)]
        struct Out {
            points: Vec<String>,
            opens: Vec<Open>,
            flags: Flags,
        }
        let out = Out {
            points: self.points.iter().map(BitSet::to_string).collect(),
            opens: self
                .opens
                .iter()
                .map(|o| Open {
                    points: o.points.iter().collect(),
                    generators: o
                        .generators
                        .iter()
                        .map(|&k| self.ideals[k].to_string())
                        .collect(),
                })
                .collect(),
            flags: Flags {
                is_t0: self.is_t0,
                is_discrete: self.is_discrete,
                sigma_injective: self.sigma_is_injective(),
            },
        };
        serde_json::to_string(&out).expect("spectrum serializes")
    }

    /// Graphviz rendering of the specialization order (containment of primes).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph spectrum {\n  rankdir=BT;\n");
        for (k, p) in self.points.iter().enumerate() {
            writeln!(
                out,
                "  p{k} [label={}];",
                serde_json::to_string(&p.to_string()).unwrap()
            )
            .unwrap();
        }
        let strictly = |a: &BitSet, b: &BitSet| a != b && a.is_subset(b);
        for (i, a) in self.points.iter().enumerate() {
            for (j, b) in self.points.iter().enumerate() {
                if strictly(a, b) && !self.points.iter().any(|c| strictly(a, c) && strictly(c, b)) {
                    writeln!(out, "  p{i} -> p{j};").unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// True iff every singleton set of points is open.
pub fn is_discrete(space: &SpectrumSpace) -> bool {
    let n = space.points.len();
    (0..n).all(|p| {
        space
            .opens
            .iter()
            .any(|o| o.points.count() == 1 && o.points.contains(p))
    })
}

/// The lattice of opens and the comparison of `σ` with the ideal lattice.
#[derive(Clone, Debug)]
pub struct TopologyReport {
    pub space: SpectrumSpace,
    pub ideal_lattice: LatticeDiagram,
    pub open_lattice: LatticeDiagram,
    /// `(ideal index, open index)` for every ideal.
    pub pairing: Vec<(usize, usize)>,
    pub injective: bool,
    /// `σ` is a bijection with `I ⊆ J ⇔ σ(I) ⊆ σ(J)`.
    pub is_isomorphism: bool,
}

pub fn topology_lattice(algebra: &FiniteCbck, caps: &Caps) -> Result<TopologyReport> {
    let space = SpectrumSpace::of(algebra, caps)?;
    let ideal_lattice = lattice_of_ideals(algebra, &space.ideals)?;
    let labels = space
        .opens
        .iter()
        .map(|o| {
            let names: Vec<String> = o.points.iter().map(|p| format!("P{p}")).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    let order = space
        .opens
        .iter()
        .map(|a| {
            space
                .opens
                .iter()
                .map(|b| a.points.is_subset(&b.points))
                .collect()
        })
        .collect();
    let open_lattice = LatticeDiagram::from_order(labels, order)?;

    let mut pairing: Vec<(usize, usize)> = space
        .opens
        .iter()
        .enumerate()
        .flat_map(|(o, open)| open.generators.iter().map(move |&i| (i, o)))
        .collect();
    pairing.sort();
    let injective = space.sigma_is_injective();
    let monotone_both_ways = pairing.iter().all(|&(i, oi)| {
        pairing.iter().all(|&(j, oj)| {
            space.ideals[i].is_subset(&space.ideals[j])
                == space.opens[oi].points.is_subset(&space.opens[oj].points)
        })
    });
    Ok(TopologyReport {
        is_isomorphism: injective && monotone_both_ways && space.opens.len() == space.ideals.len(),
        space,
        ideal_lattice,
        open_lattice,
        pairing,
        injective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::chain_as_finite_algebra;
    use crate::support::{fs_as_finite_algebra, Universe, DEFAULT_MATERIALIZATION_CAP};

    fn square() -> FiniteCbck {
        let c2 = chain_as_finite_algebra(1);
        c2.product(&c2)
    }

    #[test]
    fn spectra_of_small_algebras() {
        let caps = Caps::default();
        assert_eq!(
            prime_spectrum(&chain_as_finite_algebra(1), &caps).unwrap(),
            vec![BitSet::from_indices(2, [0])]
        );
        assert_eq!(
            prime_spectrum(&chain_as_finite_algebra(2), &caps).unwrap(),
            vec![BitSet::from_indices(3, [0])]
        );
        let sq = prime_spectrum(&square(), &caps).unwrap();
        // V({b}) = {0, 1} sorts before V({a}) = {0, 2}.
        assert_eq!(
            sq,
            vec![
                BitSet::from_indices(4, [0, 1]),
                BitSet::from_indices(4, [0, 2])
            ]
        );
        assert!(prime_spectrum(&FiniteCbck::trivial(), &caps)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn sigma_examples() {
        let caps = Caps::default();
        let c3 = chain_as_finite_algebra(2);
        assert!(sigma(&c3, &BitSet::from_indices(3, [0]), &caps)
            .unwrap()
            .is_empty());
        assert_eq!(sigma(&c3, &BitSet::full(3), &caps).unwrap().count(), 1);
        assert!(matches!(
            sigma(&c3, &BitSet::from_indices(3, [0, 1]), &caps),
            Err(Error::NotAnIdeal(_))
        ));
        let sq = square();
        assert_eq!(
            sigma(&sq, &BitSet::from_indices(4, [0, 2]), &caps).unwrap(),
            BitSet::from_indices(2, [0])
        );
    }

    #[test]
    fn topologies() {
        let caps = Caps::default();
        let one = topology_lattice(&FiniteCbck::trivial(), &caps).unwrap();
        assert_eq!(one.open_lattice.len(), 1);
        assert!(one.is_isomorphism && one.space.is_discrete);

        let c3 = topology_lattice(&chain_as_finite_algebra(2), &caps).unwrap();
        assert_eq!(c3.open_lattice.len(), 2);
        assert!(c3.is_isomorphism);

        let t2 = fs_as_finite_algebra(
            &Universe::abstract_of_size(2),
            2,
            DEFAULT_MATERIALIZATION_CAP,
        )
        .unwrap();
        let report = topology_lattice(t2.algebra(), &caps).unwrap();
        assert_eq!(report.open_lattice.len(), 4);
        assert!(report.is_isomorphism);
        assert!(crate::lattice::is_isomorphic_to_powerset(
            &report.open_lattice,
            2
        ));
    }

    #[test]
    fn discreteness() {
        let caps = Caps::default();
        let sq = SpectrumSpace::of(&square(), &caps).unwrap();
        assert!(sq.is_discrete && sq.is_t0);
        assert!(
            SpectrumSpace::of(&FiniteCbck::trivial(), &caps)
                .unwrap()
                .is_discrete
        );
        // A single prime {0}: its singleton is σ of the whole carrier.
        assert!(
            SpectrumSpace::of(&chain_as_finite_algebra(2), &caps)
                .unwrap()
                .is_discrete
        );
    }

    #[test]
    fn renderings() {
        let sq = SpectrumSpace::of(&square(), &Caps::default()).unwrap();
        let json = sq.to_json();
        assert!(json.contains("\"is_discrete\":true"));
        assert!(sq.to_dot().starts_with("digraph spectrum"));
    }
}
