//! Finite commutative BCK-algebras given by operation tables.
//!
//! A [`CayleyTable`] is a range-checked candidate; [`verify_axioms`] checks it
//! against the four cBCK identities and [`FiniteCbck::new`] only accepts
//! tables that pass. Elements are carrier indices `0..size`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal;

/// A square operation table whose entries are all valid carrier indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    size: usize,
    zero: usize,
    entries: Vec<usize>,
}

/// On-disk form of an algebra: `{"size":n,"zero":0,"table":[[..],..]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct AlgebraFile {
    size: usize,
    zero: usize,
    table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn new(size: usize, zero: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if size == 0 {
            return Err(Error::MalformedTable("carrier must be non-empty".into()));
        }
        if zero >= size {
            return Err(Error::MalformedTable(format!(
                "zero {zero} outside carrier of size {size}"
            )));
        }
        if rows.len() != size {
            return Err(Error::MalformedTable(format!(
                "expected {size} rows, found {}",
                rows.len()
            )));
        }
        let mut entries = Vec::with_capacity(size * size);
        for (x, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::MalformedTable(format!(
                    "row {x} has {} entries, expected {size}",
                    row.len()
                )));
            }
            if let Some((y, &v)) = row.iter().enumerate().find(|(_, &v)| v >= size) {
                return Err(Error::MalformedTable(format!(
                    "entry ({x},{y}) = {v} out of range"
                )));
            }
            entries.extend(row);
        }
        Ok(CayleyTable {
            size,
            zero,
            entries,
        })
    }

    /// Builds a table by evaluating `op` on every pair.
    pub fn from_fn(size: usize, zero: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows = (0..size)
            .map(|x| (0..size).map(|y| op(x, y)).collect())
            .collect();
        Self::new(size, zero, rows)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        Self::new(file.size, file.zero, file.table)
    }

    /// Canonical serialization: row-major, no whitespace.
    pub fn to_json(&self) -> String {
        let file = AlgebraFile {
            size: self.size,
            zero: self.zero,
            table: self.rows(),
        };
        serde_json::to_string(&file).expect("plain integer table serializes")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        assert!(x < self.size && y < self.size, "element out of range");
        self.entries[x * self.size + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries
            .chunks(self.size)
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Copy of the table with the single entry `x·y` replaced by `value`.
    pub fn with_entry(&self, x: usize, y: usize, value: usize) -> Result<Self> {
        if x >= self.size || y >= self.size || value >= self.size {
            return Err(Error::MalformedTable(format!(
                "entry ({x},{y}) = {value} out of range"
            )));
        }
        let mut next = self.clone();
        next.entries[x * self.size + y] = value;
        Ok(next)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axiom {
    /// `(x·y)·z = (x·z)·y`
    Bck1,
    /// `x·(x·y) = y·(y·x)`
    Bck2,
    /// `x·x = 0`
    Bck3,
    /// `x·0 = x`
    Bck4,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Axiom::Bck1 => "BCK1",
            Axiom::Bck2 => "BCK2",
            Axiom::Bck3 => "BCK3",
            Axiom::Bck4 => "BCK4",
        };
        f.write_str(tag)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// `(x, y, z)` for BCK1, `(x, y)` for BCK2, `(x)` for BCK3 and BCK4.
    pub witness: Vec<usize>,
}

impl Violation {
    /// Re-evaluates the witness against `table`; true iff the identity fails there.
    pub fn reproduces(&self, table: &CayleyTable) -> bool {
        let w = &self.witness;
        let zero = table.zero();
        let in_range = |arity: usize| w.len() == arity && w.iter().all(|&v| v < table.size());
        match self.axiom {
            Axiom::Bck1 => {
                in_range(3)
                    && table.op(table.op(w[0], w[1]), w[2]) != table.op(table.op(w[0], w[2]), w[1])
            }
            Axiom::Bck2 => {
                in_range(2)
                    && table.op(w[0], table.op(w[0], w[1])) != table.op(w[1], table.op(w[1], w[0]))
            }
            Axiom::Bck3 => in_range(1) && table.op(w[0], w[0]) != zero,
            Axiom::Bck4 => in_range(1) && table.op(w[0], zero) != w[0],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return writeln!(f, "valid");
        }
        writeln!(f, "invalid: {} violations", self.violations.len())?;
        for v in &self.violations {
            let args: Vec<String> = v.witness.iter().map(usize::to_string).collect();
            writeln!(f, "  {} at ({})", v.axiom, args.join(","))?;
        }
        Ok(())
    }
}

/// Exhaustively checks BCK1 over all triples and BCK2–BCK4 over all pairs and
/// singletons. Violations come out ordered by `(axiom, x, y, z)`.
pub fn verify_axioms(table: &CayleyTable) -> AxiomReport {
    let n = table.size();
    let zero = table.zero();
    let mut violations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let xy = table.op(x, y);
            for z in 0..n {
                if table.op(xy, z) != table.op(table.op(x, z), y) {
                    violations.push(Violation {
                        axiom: Axiom::Bck1,
                        witness: vec![x, y, z],
                    });
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if table.op(x, table.op(x, y)) != table.op(y, table.op(y, x)) {
                violations.push(Violation {
                    axiom: Axiom::Bck2,
                    witness: vec![x, y],
                });
            }
        }
    }
    for x in 0..n {
        if table.op(x, x) != zero {
            violations.push(Violation {
                axiom: Axiom::Bck3,
                witness: vec![x],
            });
        }
    }
    for x in 0..n {
        if table.op(x, zero) != x {
            violations.push(Violation {
                axiom: Axiom::Bck4,
                witness: vec![x],
            });
        }
    }
    AxiomReport {
        valid: violations.is_empty(),
        violations,
    }
}

/// A finite cBCK-algebra. Construction guarantees the table passed
/// [`verify_axioms`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteCbck {
    table: CayleyTable,
}

impl FiniteCbck {
    pub fn new(table: CayleyTable) -> Result<Self> {
        let report = verify_axioms(&table);
        if !report.valid {
            return Err(Error::NotCbck(Box::new(report)));
        }
        let zero = table.zero();
        // 0·x = 0 follows from the identities; a failure here is a checker bug.
        assert!(
            (0..table.size()).all(|x| table.op(zero, x) == zero),
            "verified table has 0·x != 0"
        );
        Ok(FiniteCbck { table })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::new(CayleyTable::from_json(text)?)
    }

    /// The one-element algebra `{0}`.
    pub fn trivial() -> Self {
        FiniteCbck::new(CayleyTable::from_fn(1, 0, |_, _| 0).expect("1x1 table"))
            .expect("trivial algebra")
    }

    /// Direct product with pointwise operation. Element `(a, b)` has index
    /// `a + |A|·b`.
    pub fn product(&self, other: &FiniteCbck) -> FiniteCbck {
        let (na, nb) = (self.size(), other.size());
        let split = |i: usize| (i % na, i / na);
        let zero = self.zero() + na * other.zero();
        let table = CayleyTable::from_fn(na * nb, zero, |x, y| {
            let ((xa, xb), (ya, yb)) = (split(x), split(y));
            self.op(xa, ya) + na * other.op(xb, yb)
        })
        .expect("product table in range");
        FiniteCbck::new(table).expect("products of cBCK-algebras are cBCK-algebras")
    }

    /// Union of two algebras glued at zero, with `x·y = x` across components.
    ///
    /// The zero is index 0, then the non-zero elements of `self` in order,
    /// then those of `other`.
    pub fn horizontal_sum(&self, other: &FiniteCbck) -> FiniteCbck {
        let left: Vec<usize> = (0..self.size()).filter(|&x| x != self.zero()).collect();
        let right: Vec<usize> = (0..other.size()).filter(|&x| x != other.zero()).collect();
        let n = 1 + left.len() + right.len();
        // (component, original index); component 0 is the shared zero.
        let origin = |i: usize| -> (u8, usize) {
            if i == 0 {
                (0, 0)
            } else if i <= left.len() {
                (1, left[i - 1])
            } else {
                (2, right[i - 1 - left.len()])
            }
        };
        let embed_left = |v: usize| {
            if v == self.zero() {
                0
            } else {
                1 + left.iter().position(|&l| l == v).unwrap()
            }
        };
        let embed_right = |v: usize| {
            if v == other.zero() {
                0
            } else {
                1 + left.len() + right.iter().position(|&r| r == v).unwrap()
            }
        };
        let table = CayleyTable::from_fn(n, 0, |x, y| match (origin(x), origin(y)) {
            ((0, _), _) => 0,
            (_, (0, _)) => x,
            ((1, a), (1, b)) => embed_left(self.op(a, b)),
            ((2, a), (2, b)) => embed_right(other.op(a, b)),
            _ => x,
        })
        .expect("horizontal sum table in range");
        FiniteCbck::new(table).expect("horizontal sums of cBCK-algebras are cBCK-algebras")
    }

    /// Isomorphic copy where element `x` is renamed `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteCbck> {
        let n = self.size();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::MalformedTable(
                "relabeling is not a permutation of the carrier".into(),
            ));
        }
        let mut inverse = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inverse[p] = x;
        }
        let table = CayleyTable::from_fn(n, perm[self.zero()], |x, y| {
            perm[self.op(inverse[x], inverse[y])]
        })?;
        FiniteCbck::new(table)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn size(&self) -> usize {
        self.table.size()
    }

    pub fn zero(&self) -> usize {
        self.table.zero()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    /// `x·y`. Panics if either index is outside the carrier.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table.op(x, y)
    }

    /// Induced order: `x ≤ y` iff `x·y = 0`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.op(x, y) == self.zero()
    }

    /// Greatest lower bound, `y·(y·x)`.
    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.op(y, self.op(y, x))
    }

    /// `x·yⁿ`: `x` with `y` subtracted `n` times.
    pub fn pow_diff(&self, x: usize, y: usize, n: u64) -> usize {
        let mut acc = x;
        for _ in 0..n {
            let next = self.op(acc, y);
            if next == acc {
                break;
            }
            acc = next;
        }
        acc
    }

    /// True iff the induced order is total.
    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    /// True iff every `x` is annihilated by every non-zero `y`: some `n ≤ size`
    /// has `x·yⁿ = 0`.
    pub fn satisfies_annihilation_criterion(&self) -> bool {
        let n = self.size() as u64;
        self.elements().all(|x| {
            self.elements()
                .filter(|&y| y != self.zero())
                .all(|y| self.pow_diff(x, y, n) == self.zero())
        })
    }

    /// True iff the only ideals are `{0}` and the whole carrier.
    ///
    /// Every non-trivial ideal contains some principal ideal `(a]` with
    /// `a ≠ 0`, so it suffices that each of those is the whole carrier.
    pub fn is_simple(&self) -> bool {
        let simple = self.elements().filter(|&a| a != self.zero()).all(|a| {
            let generated =
                ideal::generated_ideal(self, &crate::BitSet::from_indices(self.size(), [a]));
            generated.count() == self.size()
        });
        if self.is_chain() {
            assert_eq!(
                simple,
                self.satisfies_annihilation_criterion(),
                "chain simplicity disagrees with the annihilation criterion"
            );
        }
        simple
    }

    pub fn to_json(&self) -> String {
        self.table.to_json()
    }
}
