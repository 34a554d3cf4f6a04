//! Exhaustive search for a commutative semigroup table realizing a graph.
//!
//! Every vertex product is a variable whose domain is a set of element
//! codes. Adjacent pairs are fixed to zero, nonadjacent pairs start at
//! `D(ab)`, squares at `D(a²)`. After each assignment, constraints
//! `(xy)z = x(yz)` are propagated for every triple whose inner products are
//! decided, narrowing the domains of the outer products, until a fixpoint.
//! Branching picks the undecided product with the fewest remaining values,
//! ties to the smallest pair.

use super::candidates::{pair_candidates, square_candidates};
use super::table::{MulTable, DIM};
use super::verify_witness;
use crate::error::GraphError;
use crate::graph::Graph;

/// Limit on the number of search nodes (value assignments tried).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Budget {
    #[default]
    Unlimited,
    Nodes(u64),
}

/// Result of a realization search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessCertificate {
    /// A verified table whose zero-divisor graph is the input graph.
    Sat(MulTable),
    /// No table was found. `exhaustive` is true only when the whole pruned
    /// search space was explored, which proves the graph unrealizable.
    Unsat { nodes_explored: u64, exhaustive: bool },
}

impl WitnessCertificate {
    pub fn table(&self) -> Option<&MulTable> {
        match self {
            WitnessCertificate::Sat(t) => Some(t),
            WitnessCertificate::Unsat { .. } => None,
        }
    }

    pub fn is_sat(&self) -> bool {
        matches!(self, WitnessCertificate::Sat(_))
    }

    /// True for a completed proof that no realization exists.
    pub fn is_exhaustive_unsat(&self) -> bool {
        matches!(self, WitnessCertificate::Unsat { exhaustive: true, .. })
    }
}

type Domains = [[u16; DIM]; DIM];

#[inline]
fn single(mask: u16) -> Option<usize> {
    (mask != 0 && mask & (mask - 1) == 0).then(|| mask.trailing_zeros() as usize)
}

enum Outcome {
    Found(MulTable),
    Exhausted,
    OutOfBudget,
}

/// Search state for one graph. Single-threaded; owns its domains.
pub struct Solver<'g> {
    graph: &'g Graph,
    budget: Budget,
    nodes: u64,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Solver { graph, budget: Budget::Unlimited, nodes: 0 }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    /// Search nodes explored so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn initial_domains(&self) -> Option<Domains> {
        let g = self.graph;
        let n = g.n();
        let mut dom = [[0u16; DIM]; DIM];
        dom[0][..=n].fill(1);
        for row in &mut dom[..=n] {
            row[0] = 1;
        }
        for a in 0..n {
            for b in 0..n {
                dom[a + 1][b + 1] = if a == b {
                    if g.degree(a) == 0 {
                        // An isolated vertex is a zero-divisor only through its square.
                        1
                    } else {
                        square_candidates(g, a).bits()
                    }
                } else if g.has_edge(a, b) {
                    1
                } else {
                    pair_candidates(g, a, b).bits()
                };
                if dom[a + 1][b + 1] == 0 {
                    return None;
                }
            }
        }
        Some(dom)
    }

    pub fn run(&mut self) -> Result<WitnessCertificate, GraphError> {
        if !self.graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        self.nodes = 0;
        let Some(mut dom) = self.initial_domains() else {
            return Ok(WitnessCertificate::Unsat { nodes_explored: 0, exhaustive: true });
        };
        let outcome = if propagate(self.graph.n(), &mut dom) { self.search(dom) } else { Outcome::Exhausted };
        Ok(match outcome {
            Outcome::Found(t) => WitnessCertificate::Sat(t),
            Outcome::Exhausted => WitnessCertificate::Unsat { nodes_explored: self.nodes, exhaustive: true },
            Outcome::OutOfBudget => WitnessCertificate::Unsat { nodes_explored: self.nodes, exhaustive: false },
        })
    }

    #[allow(clippy::needless_range_loop)]
    fn search(&mut self, dom: Domains) -> Outcome {
        let n = self.graph.n();
        let mut pick: Option<(u32, usize, usize)> = None;
        for x in 1..=n {
            for y in x..=n {
                let k = dom[x][y].count_ones();
                if k > 1 && pick.is_none_or(|(best, _, _)| k < best) {
                    pick = Some((k, x, y));
                }
            }
        }
        let Some((_, x, y)) = pick else {
            let table =
                MulTable::from_codes(n, dom.map(|row| row.map(|m| single(m).map_or(super::table::UNSET, |c| c as u8))));
            // Propagation has already checked every triple; this is the final full pass.
            return if verify_witness(self.graph, &table).is_ok() {
                Outcome::Found(table)
            } else {
                debug_assert!(false, "propagated table failed verification");
                Outcome::Exhausted
            };
        };
        let mut values = dom[x][y];
        while values != 0 {
            let bit = values & values.wrapping_neg();
            values &= values - 1;
            self.nodes += 1;
            if let Budget::Nodes(limit) = self.budget {
                if self.nodes > limit {
                    return Outcome::OutOfBudget;
                }
            }
            let mut next = dom;
            next[x][y] = bit;
            next[y][x] = bit;
            if propagate(n, &mut next) {
                match self.search(next) {
                    Outcome::Exhausted => {}
                    done => return done,
                }
            }
        }
        Outcome::Exhausted
    }
}

/// Narrows `dom[p][q]` (and its mirror) to `mask`. Returns `None` on a wipeout.
#[inline]
fn restrict(dom: &mut Domains, p: usize, q: usize, mask: u16, changed: &mut bool) -> Option<()> {
    let cur = dom[p][q];
    let next = cur & mask;
    if next == 0 {
        return None;
    }
    if next != cur {
        dom[p][q] = next;
        dom[q][p] = next;
        *changed = true;
    }
    Some(())
}

/// Enforces `(xy)z = x(yz)` over all vertex triples until nothing changes.
/// Returns false if some domain becomes empty.
pub(crate) fn propagate(n: usize, dom: &mut Domains) -> bool {
    propagate_inner(n, dom).is_some()
}

fn propagate_inner(n: usize, dom: &mut Domains) -> Option<()> {
    loop {
        let mut changed = false;
        for x in 1..=n {
            for y in 1..=n {
                let xy = dom[x][y];
                for z in 1..=n {
                    let yz = dom[y][z];
                    match (single(xy), single(yz)) {
                        (Some(a), Some(b)) => {
                            let both = dom[a][z] & dom[x][b];
                            restrict(dom, a, z, both, &mut changed)?;
                            restrict(dom, x, b, both, &mut changed)?;
                        }
                        (Some(a), None) => {
                            // (xy)z is known: keep only yz = b with r ∈ dom[x][b].
                            if let Some(r) = single(dom[a][z]) {
                                let keep = mask_where(yz, |b| dom[x][b] & (1 << r) != 0);
                                restrict(dom, y, z, keep, &mut changed)?;
                            }
                        }
                        (None, Some(b)) => {
                            if let Some(r) = single(dom[x][b]) {
                                let keep = mask_where(xy, |a| dom[a][z] & (1 << r) != 0);
                                restrict(dom, x, y, keep, &mut changed)?;
                            }
                        }
                        (None, None) => {}
                    }
                }
            }
        }
        if !changed {
            return Some(());
        }
    }
}

#[inline]
fn mask_where(mask: u16, mut keep: impl FnMut(usize) -> bool) -> u16 {
    let mut out = 0;
    let mut bits = mask;
    while bits != 0 {
        let c = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if keep(c) {
            out |= 1 << c;
        }
    }
    out
}

/// Searches for a realization of `g` within `budget`.
pub fn find_realization(g: &Graph, budget: Budget) -> Result<WitnessCertificate, GraphError> {
    Solver::new(g).with_budget(budget).run()
}
