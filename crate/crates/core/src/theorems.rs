//! End-to-end structural checks on the materialized algebra `T_h^X`.
//!
//! Each check compares a structural claim about finite-support algebras
//! against brute-force enumeration of the materialized table.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::chain::{ChainSpec, ChainValue};
use crate::congruence::{congruence_lattice, enumerate_congruences, verify_con_iso_id};
use crate::error::Result;
use crate::ideal::{enumerate_ideals, generated_ideal, ideal_lattice, is_prime};
use crate::lattice::is_isomorphic_to_powerset;
use crate::spectrum::topology_lattice;
use crate::support::{
    annihilate, distinguishing_function, fs_as_finite_algebra, fs_diff, join_certificate, p_of,
    support, symbolic_complement, symbolic_join, symbolic_meet, FsAlgebra, PointSet,
    SparseFunction, SymbolicIdeal, Universe,
};
use crate::Caps;

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub x_size: usize,
    pub height: u32,
    pub seed: u64,
    /// Random function pairs per chain kind for the support check.
    pub random_pairs: usize,
    pub caps: Caps,
}

impl SuiteConfig {
    pub fn new(x_size: usize, height: u32) -> Self {
        SuiteConfig {
            x_size,
            height,
            seed: DEFAULT_SEED,
            random_pairs: 10_000,
            caps: Caps::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:<28} {}", self.status, self.name, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
    pub ideal_count: usize,
}

impl SuiteReport {
    /// True iff no check failed. Skipped checks do not count as failures.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        status: if passed { Status::Pass } else { Status::Fail },
        detail,
    }
}

/// A random element of `spec`: levels up to `h`, naturals up to `max`,
/// rationals `p/q` with `p ≤ max`, `1 ≤ q ≤ max`.
pub fn random_value<R: Rng>(rng: &mut R, spec: ChainSpec, max: u64) -> ChainValue {
    match spec {
        ChainSpec::Finite(h) => ChainValue::Level(rng.random_range(0..=h)),
        ChainSpec::Naturals => ChainValue::Natural(rng.random_range(0..=max)),
        ChainSpec::NonnegRationals => {
            ChainValue::rational(rng.random_range(0..=max), rng.random_range(1..=max.max(1)))
        }
    }
}

/// A random function where each point is non-zero with probability one half.
pub fn random_function<R: Rng>(
    rng: &mut R,
    spec: ChainSpec,
    universe: &Arc<Universe>,
    max: u64,
) -> SparseFunction {
    let mut values = Vec::new();
    for p in 0..universe.len() {
        if rng.random_bool(0.5) {
            values.push((p, random_value(rng, spec, max)));
        }
    }
    SparseFunction::from_values(spec, universe, values).expect("values drawn from the spec")
}

fn all_subsets(universe: &Arc<Universe>) -> Vec<PointSet> {
    let n = universe.len();
    (0..1u64 << n)
        .map(|m| PointSet::from_bits(universe, BitSet::from_mask(n, m)))
        .collect()
}

fn support_shrinks(
    config: &SuiteConfig,
    universe: &Arc<Universe>,
    rng: &mut ChaCha8Rng,
) -> Result<Check> {
    let mut tested = 0;
    let mut failures = 0;
    for spec in [
        ChainSpec::Finite(config.height),
        ChainSpec::Naturals,
        ChainSpec::NonnegRationals,
    ] {
        for _ in 0..config.random_pairs {
            let f = random_function(rng, spec, universe, 1000);
            let g = random_function(rng, spec, universe, 1000);
            if !support(&fs_diff(&f, &g)?).is_subset(&support(&f))? {
                failures += 1;
            }
            tested += 1;
        }
    }
    Ok(check(
        "support-shrinks",
        failures == 0,
        format!("pairs={tested} failures={failures}"),
    ))
}

fn ideals_are_vanishing_sets(
    fs: &FsAlgebra,
    ideals: &[BitSet],
    subsets: &[PointSet],
) -> Result<Check> {
    let universe = fs.universe();
    let mut vanishing: Vec<BitSet> = subsets
        .iter()
        .map(|s| fs.vanishing_ideal(s))
        .collect::<Result<_>>()?;
    vanishing.sort();
    let mut closed = 0;
    for ideal in ideals {
        let members: Vec<SparseFunction> = ideal.iter().map(|i| fs.decode(i)).collect();
        if fs.vanishing_ideal(&p_of(universe, &members)?)? == *ideal {
            closed += 1;
        }
    }
    let expected = 1usize << universe.len();
    let passed = vanishing == ideals && closed == ideals.len() && ideals.len() == expected;
    Ok(check(
        "ideals-are-vanishing-sets",
        passed,
        format!(
            "ideals={} expected={expected} closed={closed}",
            ideals.len()
        ),
    ))
}

fn primes_are_point_ideals(fs: &FsAlgebra, ideals: &[BitSet]) -> Result<Check> {
    let universe = fs.universe();
    let mut points: Vec<BitSet> = (0..universe.len())
        .map(|p| {
            fs.vanishing_ideal(&PointSet::from_bits(
                universe,
                BitSet::from_indices(universe.len(), [p]),
            ))
        })
        .collect::<Result<_>>()?;
    points.sort();
    let mut primes = Vec::new();
    for ideal in ideals {
        if is_prime(fs.algebra(), ideal)? {
            primes.push(ideal.clone());
        }
    }
    Ok(check(
        "primes-are-point-ideals",
        primes == points,
        format!("primes={} points={}", primes.len(), universe.len()),
    ))
}

fn vanishing_map_laws(fs: &FsAlgebra, subsets: &[PointSet]) -> Result<Check> {
    let spec = fs.spec();
    let algebra = fs.algebra();
    let materialized: Vec<BitSet> = subsets
        .iter()
        .map(|s| fs.vanishing_ideal(s))
        .collect::<Result<_>>()?;
    let mut pairs = 0;
    let mut failures = Vec::new();
    for (y, vy) in subsets.iter().zip(&materialized) {
        let iy = SymbolicIdeal::new(y.clone());
        let complement = symbolic_complement(&iy);
        let vc = fs.vanishing_ideal(complement.vanishing_set())?;
        if vy.intersection(&vc).count() != 1
            || generated_ideal(algebra, &vy.union(&vc)).count() != algebra.size()
        {
            failures.push(format!("complement of {iy}"));
        }
        for (z, vz) in subsets.iter().zip(&materialized) {
            pairs += 1;
            let iz = SymbolicIdeal::new(z.clone());
            let meet = fs.vanishing_ideal(symbolic_meet(&iy, &iz)?.vanishing_set())?;
            let join = fs.vanishing_ideal(symbolic_join(&iy, &iz)?.vanishing_set())?;
            if vy.intersection(vz) != meet {
                failures.push(format!("meet {iy} {iz}"));
            }
            if generated_ideal(algebra, &vy.union(vz)) != join {
                failures.push(format!("join {iy} {iz}"));
            }
            match distinguishing_function(spec, &iy, &iz)? {
                None if y != z => failures.push(format!("no witness for {iy} != {iz}")),
                Some(w) if iy.contains(&w)? == iz.contains(&w)? => {
                    failures.push(format!("bad witness {iy} {iz}"))
                }
                _ => {}
            }
            if vy == vz && y != z {
                failures.push(format!("{iy} and {iz} coincide"));
            }
            for i in join.iter() {
                let f = fs.decode(i);
                let certified = match join_certificate(&f, &iy, &iz)? {
                    Some(cert) => {
                        cert.iter().all(|(_, g)| {
                            iy.contains(g).unwrap_or(false) || iz.contains(g).unwrap_or(false)
                        }) && annihilate(&f, &cert)?.residual.is_zero()
                    }
                    None => false,
                };
                if !certified {
                    failures.push(format!("uncertified {f} in {iy} v {iz}"));
                }
            }
        }
    }
    let detail = match failures.first() {
        None => format!("subsets={} pairs={pairs}", subsets.len()),
        Some(first) => format!("failures={} first: {first}", failures.len()),
    };
    Ok(check(
        "vanishing-map-lattice-laws",
        failures.is_empty(),
        detail,
    ))
}

/// Runs every check on `T_h^X` with `|X| = x_size`.
pub fn verify_theorems(config: &SuiteConfig) -> Result<SuiteReport> {
    let universe = Universe::abstract_of_size(config.x_size);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let fs = fs_as_finite_algebra(&universe, config.height, config.caps.materialization)?;
    let algebra = fs.algebra();
    let subsets = all_subsets(&universe);
    let ideals = enumerate_ideals(algebra, &config.caps)?;
    let n = universe.len() as u32;

    let mut checks = vec![
        support_shrinks(config, &universe, &mut rng)?,
        ideals_are_vanishing_sets(&fs, &ideals, &subsets)?,
        primes_are_point_ideals(&fs, &ideals)?,
        vanishing_map_laws(&fs, &subsets)?,
    ];

    let lattice = ideal_lattice(algebra, &config.caps)?;
    checks.push(check(
        "ideal-lattice-is-powerset",
        is_isomorphic_to_powerset(&lattice.diagram, n),
        format!(
            "nodes={} atoms={} boolean={} distributive={}",
            lattice.diagram.len(),
            lattice.diagram.flags.atom_count,
            lattice.diagram.flags.is_boolean,
            lattice.diagram.flags.is_distributive
        ),
    ));

    if algebra.size() <= config.caps.partition_carrier {
        let report = verify_con_iso_id(algebra, &config.caps)?;
        let congruences = enumerate_congruences(algebra, &config.caps)?;
        let con_lattice = congruence_lattice(&congruences)?;
        checks.push(check(
            "congruences-match-ideals",
            report.holds && is_isomorphic_to_powerset(&con_lattice, n),
            format!(
                "congruences={} ideals={} bijective={} order={}",
                report.congruence_count,
                report.ideal_count,
                report.bijective,
                report.order_preserving
            ),
        ));
    } else {
        checks.push(Check {
            name: "congruences-match-ideals",
            status: Status::Skip,
            detail: format!(
                "carrier {} above partition cap {}",
                algebra.size(),
                config.caps.partition_carrier
            ),
        });
    }

    let topology = topology_lattice(algebra, &config.caps)?;
    let points = topology.space.points.len();
    checks.push(check(
        "discrete-spectrum",
        points == universe.len() && topology.is_isomorphism && topology.space.is_discrete,
        format!(
            "points={points} opens={} discrete={}",
            topology.space.opens.len(),
            topology.space.is_discrete
        ),
    ));

    Ok(SuiteReport {
        checks,
        ideal_count: ideals.len(),
    })
}
