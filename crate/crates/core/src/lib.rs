//! A workbench for finite commutative BCK-algebras.
//!
//! * [`algebra`]: operation tables, axiom checking, induced order and meet.
//! * [`chain`]: chains under truncated subtraction (finite, naturals, rationals).
//! * [`support`]: finite-support functions `X → T`, the vanishing-set Galois
//!   connection and materialized algebras `T_h^X`.
//! * [`ideal`], [`congruence`], [`spectrum`]: enumeration of ideals,
//!   congruences and prime spectra, with lattice analysis in [`lattice`].
//! * [`theorems`]: the end-to-end verification suite over `T_h^X`.

pub mod algebra;
pub mod bitset;
pub mod chain;
pub mod congruence;
pub mod error;
pub mod ideal;
pub mod lattice;
pub mod spectrum;
pub mod support;
pub mod theorems;

pub use algebra::{verify_axioms, Axiom, AxiomReport, CayleyTable, FiniteCbck, Violation};
pub use bitset::BitSet;
pub use chain::{ChainSpec, ChainValue};
pub use error::{Error, Result};
pub use lattice::LatticeDiagram;

/// Bounds on the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest materialized finite-support algebra.
    pub materialization: usize,
    /// Largest number of raw subsets tested by brute-force ideal enumeration.
    pub raw_subsets: usize,
    /// Largest number of downsets visited while enumerating ideals.
    pub downsets: usize,
    /// Largest carrier for which set partitions are enumerated.
    pub partition_carrier: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            materialization: support::DEFAULT_MATERIALIZATION_CAP,
            raw_subsets: 1 << 20,
            downsets: 1_000_000,
            partition_carrier: 10,
        }
    }
}
