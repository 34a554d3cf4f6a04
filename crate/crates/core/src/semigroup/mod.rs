//! Commutative semigroups with zero presented by multiplication tables over
//! `{0} ∪ V(G)`, and the search for tables realizing a graph.

mod candidates;
mod solver;
mod table;

use core::fmt;

pub use candidates::{compute_candidates, pair_candidates, square_candidates, CandidateSet, Product};
pub use solver::{find_realization, Budget, Solver, WitnessCertificate};
pub use table::{Element, ElementSet, MulTable, Spectrum};

use crate::error::TableError;
use crate::graph::Graph;

/// Why a table fails to witness a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessError {
    Table(TableError),
    NotAssociative([Element; 3]),
    /// `uv = 0` disagrees with adjacency of `u` and `v`.
    EdgeMismatch {
        u: usize,
        v: usize,
        adjacent: bool,
    },
    /// `v` annihilates no nonzero element, so it is not a zero-divisor.
    NotZeroDivisor(usize),
}

impl From<TableError> for WitnessError {
    fn from(e: TableError) -> Self {
        WitnessError::Table(e)
    }
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::Table(e) => e.fmt(f),
            WitnessError::NotAssociative([x, y, z]) => {
                write!(f, "not associative: ({x:?}{y:?}){z:?} != {x:?}({y:?}{z:?})")
            }
            WitnessError::EdgeMismatch { u, v, adjacent: true } => {
                write!(f, "vertices {u} and {v} are adjacent but their product is nonzero")
            }
            WitnessError::EdgeMismatch { u, v, adjacent: false } => {
                write!(f, "vertices {u} and {v} are not adjacent but their product is zero")
            }
            WitnessError::NotZeroDivisor(v) => write!(f, "vertex {v} is not a zero-divisor"),
        }
    }
}

impl core::error::Error for WitnessError {}

/// Checks that `t` is a total commutative associative table whose
/// zero-divisor graph is exactly `g` (same labels).
pub fn verify_witness(g: &Graph, t: &MulTable) -> Result<(), WitnessError> {
    if t.n() != g.n() {
        return Err(TableError::DimensionMismatch { table: t.n(), graph: g.n() }.into());
    }
    t.require_total()?;
    t.require_commutative()?;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let zero = t.product(u, v) == Some(Element::Zero);
            if zero != g.has_edge(u, v) {
                return Err(WitnessError::EdgeMismatch { u, v, adjacent: g.has_edge(u, v) });
            }
        }
        if g.degree(u) == 0 && t.product(u, u) != Some(Element::Zero) {
            return Err(WitnessError::NotZeroDivisor(u));
        }
    }
    if let Some(triple) = t.first_associativity_violation()? {
        return Err(WitnessError::NotAssociative(triple));
    }
    Ok(())
}

/// Every product of nonadjacent vertices lies in `D(ab)` and every square in
/// `D(a²)`. Holds for any witness; used as a cross-check.
pub fn products_within_candidates(g: &Graph, t: &MulTable) -> bool {
    (0..g.n()).all(|a| {
        (0..g.n()).all(|b| match t.product(a, b) {
            None => false,
            Some(p) if a == b => square_candidates(g, a).contains(p),
            Some(p) if !g.has_edge(a, b) => pair_candidates(g, a, b).contains(p),
            Some(p) => p.is_zero(),
        })
    })
}

#[cfg(test)]
mod tests;
