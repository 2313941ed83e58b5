//! Finite lattices given by an order matrix, with meet/join tables, Hasse
//! edges and distributivity / Boolean flags.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct LatticeFlags {
    pub is_distributive: bool,
    pub is_boolean: bool,
    pub atom_count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeDiagram {
    pub nodes: Vec<String>,
    /// `order[i][j]` iff node `i` is below or equal to node `j`.
    #[serde(skip)]
    pub order: Vec<Vec<bool>>,
    /// Covering pairs `(lower, upper)`.
    pub edges: Vec<(usize, usize)>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
    pub flags: LatticeFlags,
}

fn is_partial_order(order: &[Vec<bool>]) -> bool {
    let n = order.len();
    if order.iter().any(|row| row.len() != n) {
        return false;
    }
    (0..n).all(|a| order[a][a])
        && (0..n).all(|a| (0..n).all(|b| a == b || !(order[a][b] && order[b][a])))
        && (0..n)
            .all(|a| (0..n).all(|b| !order[a][b] || (0..n).all(|c| !order[b][c] || order[a][c])))
}

fn greatest_lower_bound(order: &[Vec<bool>], a: usize, b: usize) -> Option<usize> {
    let n = order.len();
    let lower: Vec<usize> = (0..n).filter(|&m| order[m][a] && order[m][b]).collect();
    lower
        .iter()
        .copied()
        .find(|&m| lower.iter().all(|&l| order[l][m]))
}

fn least_upper_bound(order: &[Vec<bool>], a: usize, b: usize) -> Option<usize> {
    let n = order.len();
    let upper: Vec<usize> = (0..n).filter(|&m| order[a][m] && order[b][m]).collect();
    upper
        .iter()
        .copied()
        .find(|&m| upper.iter().all(|&u| order[m][u]))
}

impl LatticeDiagram {
    /// Builds the diagram of a finite poset, computing meets and joins from
    /// the order. Fails if the poset is empty or some pair lacks a glb or lub.
    pub fn from_order(nodes: Vec<String>, order: Vec<Vec<bool>>) -> Result<Self> {
        if nodes.is_empty() || nodes.len() != order.len() || !is_partial_order(&order) {
            return Err(Error::NotALattice("not a non-empty partial order".into()));
        }
        let n = nodes.len();
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                meet[a][b] = greatest_lower_bound(&order, a, b).ok_or_else(|| {
                    Error::NotALattice(format!("{} and {} have no meet", nodes[a], nodes[b]))
                })?;
                join[a][b] = least_upper_bound(&order, a, b).ok_or_else(|| {
                    Error::NotALattice(format!("{} and {} have no join", nodes[a], nodes[b]))
                })?;
            }
        }
        Ok(Self::assemble(nodes, order, meet, join))
    }

    /// Builds the diagram from externally computed meet and join tables,
    /// checking that they are the glb and lub of the order.
    pub fn with_operations(
        nodes: Vec<String>,
        order: Vec<Vec<bool>>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let expected = Self::from_order(nodes, order)?;
        let n = expected.nodes.len();
        for a in 0..n {
            for b in 0..n {
                if meet[a][b] != expected.meet[a][b] || join[a][b] != expected.join[a][b] {
                    return Err(Error::NotALattice(format!(
                        "operation tables disagree with the order at ({}, {})",
                        expected.nodes[a], expected.nodes[b]
                    )));
                }
            }
        }
        Ok(expected)
    }

    fn assemble(
        nodes: Vec<String>,
        order: Vec<Vec<bool>>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
    ) -> Self {
        let n = nodes.len();
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| order[b][x]))
            .expect("finite lattice has a bottom");
        let top = (0..n)
            .find(|&t| (0..n).all(|x| order[x][t]))
            .expect("finite lattice has a top");
        let strictly = |a: usize, b: usize| a != b && order[a][b];
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if strictly(a, b) && !(0..n).any(|c| strictly(a, c) && strictly(c, b)) {
                    edges.push((a, b));
                }
            }
        }
        let is_distributive = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]]))
        });
        let complemented =
            (0..n).all(|a| (0..n).any(|b| meet[a][b] == bottom && join[a][b] == top));
        let atom_count = edges.iter().filter(|&&(lo, _)| lo == bottom).count();
        LatticeDiagram {
            nodes,
            order,
            edges,
            meet,
            join,
            bottom,
            top,
            flags: LatticeFlags {
                is_distributive,
                is_boolean: is_distributive && complemented,
                atom_count,
            },
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order[a][b]
    }

    /// Graphviz rendering of the Hasse diagram, bottom at the bottom.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {name} {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for (i, label) in self.nodes.iter().enumerate() {
            writeln!(
                out,
                "  n{i} [label={}];",
                serde_json::to_string(label).unwrap()
            )
            .unwrap();
        }
        for (lo, hi) in &self.edges {
            writeln!(out, "  n{lo} -> n{hi};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("lattice diagram serializes")
    }
}

/// True iff `lattice` is Boolean with `n` atoms and `2ⁿ` elements, i.e.
/// isomorphic to the powerset of an `n`-element set.
pub fn is_isomorphic_to_powerset(lattice: &LatticeDiagram, n: u32) -> bool {
    lattice.flags.is_boolean
        && lattice.flags.atom_count == n as usize
        && 1usize
            .checked_shl(n)
            .is_some_and(|size| size == lattice.len())
}
