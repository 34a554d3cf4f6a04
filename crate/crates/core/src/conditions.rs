//! Necessary conditions for a graph to be the zero-divisor graph of a
//! commutative semigroup: connectivity, diameter at most three, the
//! triangle/quadrilateral core structure, and the neighborhood-cover
//! condition ⋆ (every nonadjacent pair `x, y` has some `z` with
//! `N(x) ∪ N(y) ⊆ N̄(z)`).

use alloc::collections::BTreeMap;

use crate::error::GraphError;
use crate::graph::{Distance, Graph, VertexSet};

/// Outcome of evaluating every condition on one graph.
///
/// When the graph is disconnected the remaining flags are `false` and the
/// witness map is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub connected: bool,
    pub diameter3: bool,
    pub core_ok: bool,
    pub star_ok: bool,
    /// For each nonadjacent pair `(x, y)` with `x < y`, every `z` satisfying ⋆.
    pub star_witnesses: BTreeMap<(usize, usize), VertexSet>,
    /// A pair with no witness: among those, the one whose neighborhoods
    /// cover the most vertices, ties broken lexicographically.
    pub failing_pair: Option<(usize, usize)>,
}

fn require_connected(g: &Graph) -> Result<(), GraphError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(GraphError::Disconnected)
    }
}

pub fn check_diameter3(g: &Graph) -> Result<bool, GraphError> {
    require_connected(g)?;
    Ok(matches!(g.diameter(), Distance::Finite(d) if d <= 3))
}

/// Edges that lie on at least one cycle, i.e. the non-bridges.
pub fn cycle_edges(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    g.edges().filter(move |&(u, v)| {
        let mut h = *g;
        h.remove_edge(u, v);
        h.component_of(u).contains(v)
    })
}

/// Whether edge `u-v` lies on a triangle or on a quadrilateral of `g`.
fn on_short_cycle(g: &Graph, u: usize, v: usize) -> bool {
    let nu = g.open_neighborhood(u).without(v);
    let nv = g.open_neighborhood(v).without(u);
    if !nu.intersection(nv).is_empty() {
        return true;
    }
    // u - v - w - x - u with w, x distinct from u, v and from each other.
    nv.iter().any(|w| !g.open_neighborhood(w).intersection(nu).without(w).is_empty())
}

/// Core condition: if `g` has a cycle, every edge of its core (the union of
/// all cycles) lies on a triangle or quadrilateral, and every vertex outside
/// the core is an end.
pub fn check_core_condition(g: &Graph) -> Result<bool, GraphError> {
    require_connected(g)?;
    let mut core = VertexSet::EMPTY;
    let mut has_cycle = false;
    for (u, v) in cycle_edges(g) {
        has_cycle = true;
        if !on_short_cycle(g, u, v) {
            return Ok(false);
        }
        core = core.with(u).with(v);
    }
    if !has_cycle {
        return Ok(true);
    }
    Ok(g.vertices().difference(core).iter().all(|v| g.degree(v) == 1))
}

/// Vertices `z` with `N(x) ∪ N(y) ⊆ N̄(z)`.
pub fn star_witnesses(g: &Graph, x: usize, y: usize) -> VertexSet {
    let need = g.open_neighborhood(x).union(g.open_neighborhood(y));
    (0..g.n()).filter(|&z| need.is_subset(g.closed_neighborhood(z))).collect()
}

/// Unordered nonadjacent pairs `(x, y)`, `x < y`, in lexicographic order.
pub fn nonadjacent_pairs(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..g.n()).flat_map(move |x| (x + 1..g.n()).filter(move |&y| !g.has_edge(x, y)).map(move |y| (x, y)))
}

pub fn satisfies_star(g: &Graph) -> bool {
    nonadjacent_pairs(g).all(|(x, y)| !star_witnesses(g, x, y).is_empty())
}

pub fn check_star_condition(g: &Graph) -> Result<ConditionReport, GraphError> {
    require_connected(g)?;
    let mut report = ConditionReport {
        connected: true,
        diameter3: false,
        core_ok: false,
        star_ok: true,
        star_witnesses: BTreeMap::new(),
        failing_pair: None,
    };
    for (x, y) in nonadjacent_pairs(g) {
        let w = star_witnesses(g, x, y);
        if w.is_empty() {
            report.star_ok = false;
            let spread = |(a, b): (usize, usize)| g.open_neighborhood(a).union(g.open_neighborhood(b)).len();
            if report.failing_pair.is_none_or(|p| spread((x, y)) > spread(p)) {
                report.failing_pair = Some((x, y));
            }
        }
        report.star_witnesses.insert((x, y), w);
    }
    Ok(report)
}

/// Evaluates all four conditions without short-circuiting.
pub fn check_all_conditions(g: &Graph) -> ConditionReport {
    match check_star_condition(g) {
        Ok(mut report) => {
            report.diameter3 = check_diameter3(g).expect("graph is connected");
            report.core_ok = check_core_condition(g).expect("graph is connected");
            report
        }
        Err(_) => ConditionReport {
            connected: false,
            diameter3: false,
            core_ok: false,
            star_ok: false,
            star_witnesses: BTreeMap::new(),
            failing_pair: None,
        },
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Builds a graph from neighborhood strings over single-character labels.
    pub fn lettered(labels: &str, rows: &[&str]) -> Graph {
        let idx = |c: char| labels.find(c).expect("label");
        let sets: alloc::vec::Vec<VertexSet> = rows.iter().map(|r| r.chars().map(idx).collect()).collect();
        Graph::from_neighborhoods(&sets).expect("symmetric fixture")
    }

    /// Seven vertices, diameter 3, but ⋆ fails.
    pub fn diameter_counterexample() -> Graph {
        lettered("abcdefg", &["beg", "ac", "bd", "cf", "af", "deg", "af"])
    }

    /// Eleven vertices covered by triangles and quadrilaterals, diameter 4.
    pub fn core_counterexample() -> Graph {
        lettered("abcdefghijk", &["bc", "acde", "abfg", "beh", "bdfi", "cegi", "cfj", "dik", "efhjk", "gik", "hij"])
    }

    pub fn g319() -> Graph {
        lettered("1234567", &["23", "14", "14", "23567", "4", "4", "4"])
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn diameter_examples() {
        assert!(check_diameter3(&Graph::cycle(6).unwrap()).unwrap());
        assert!(!check_diameter3(&Graph::cycle(8).unwrap()).unwrap());
        assert!(check_diameter3(&diameter_counterexample()).unwrap());
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(check_diameter3(&split), Err(GraphError::Disconnected));
    }

    #[test]
    fn core_examples() {
        assert!(!check_core_condition(&Graph::cycle(6).unwrap()).unwrap());
        assert!(check_core_condition(&Graph::complete(3).unwrap()).unwrap());
        assert!(check_core_condition(&core_counterexample()).unwrap());
        assert!(!check_diameter3(&core_counterexample()).unwrap());
        assert!(check_core_condition(&Graph::path(5).unwrap()).unwrap());
        // Triangle with a two-edge tail: the middle tail vertex is not an end.
        let tail = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert!(!check_core_condition(&tail).unwrap());
    }

    #[test]
    fn star_examples() {
        let c6 = check_star_condition(&Graph::cycle(6).unwrap()).unwrap();
        assert!(!c6.star_ok);
        assert_eq!(c6.failing_pair, Some((0, 3)));
        let g = check_star_condition(&g319()).unwrap();
        assert!(g.star_ok);
        assert_eq!(g.failing_pair, None);
        assert!(g.star_witnesses.values().all(|w| !w.is_empty()));
        assert!(!check_star_condition(&diameter_counterexample()).unwrap().star_ok);
    }

    #[test]
    fn all_conditions() {
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = check_all_conditions(&split);
        assert!(!r.connected && !r.star_ok && !r.diameter3 && !r.core_ok);
        let r = check_all_conditions(&Graph::star(6).unwrap());
        assert!(r.connected && r.diameter3 && r.core_ok && r.star_ok);
        let r = check_all_conditions(&Graph::cycle(6).unwrap());
        assert!(r.connected && r.diameter3 && !r.core_ok && !r.star_ok);
    }
}
