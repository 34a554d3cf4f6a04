//! Legal values for each undetermined product.
//!
//! If `ab = c` for nonadjacent `a, b`, every `u ∈ N(a)` satisfies
//! `uc = (ua)b = 0`, so `u` is adjacent to `c` or equal to it; the same holds
//! for `N(b)`. Hence `c ∈ D(ab) = { c : N(a) ∪ N(b) ⊆ N̄(c) }`. Likewise a
//! nonzero square `a² = c` needs `N(a) ⊆ N̄(c)`.

use alloc::collections::BTreeMap;

use super::table::{Element, ElementSet};
use crate::conditions::nonadjacent_pairs;
use crate::graph::Graph;

/// The product a candidate set constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Product {
    /// `ab` for nonadjacent `a < b`.
    Pair(usize, usize),
    /// `a²`.
    Square(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    pub product: Product,
    pub allowed: ElementSet,
}

/// `D(ab)` for a nonadjacent pair: never contains zero.
pub fn pair_candidates(g: &Graph, a: usize, b: usize) -> ElementSet {
    let need = g.open_neighborhood(a).union(g.open_neighborhood(b));
    (0..g.n()).filter(|&c| need.is_subset(g.closed_neighborhood(c))).map(Element::Vertex).collect()
}

/// `D(a²)`: zero plus every `c` with `N(a) ⊆ N̄(c)`.
pub fn square_candidates(g: &Graph, a: usize) -> ElementSet {
    let need = g.open_neighborhood(a);
    let mut set: ElementSet =
        (0..g.n()).filter(|&c| need.is_subset(g.closed_neighborhood(c))).map(Element::Vertex).collect();
    set.insert(Element::Zero);
    set
}

/// Candidate sets for every nonadjacent pair and every square.
pub fn compute_candidates(g: &Graph) -> BTreeMap<Product, CandidateSet> {
    let mut out = BTreeMap::new();
    for (a, b) in nonadjacent_pairs(g) {
        let product = Product::Pair(a, b);
        out.insert(product, CandidateSet { product, allowed: pair_candidates(g, a, b) });
    }
    for a in 0..g.n() {
        let product = Product::Square(a);
        out.insert(product, CandidateSet { product, allowed: square_candidates(g, a) });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::fixtures::lettered;

    fn set(g: &str, labels: &str) -> ElementSet {
        labels.chars().map(|c| Element::Vertex(g.find(c).unwrap())).collect()
    }

    #[test]
    fn worked_example_pair() {
        let labels = "abcxyzw";
        let g = lettered(labels, &["xy", "xy", "y", "abyzw", "abcx", "x", "x"]);
        // x is adjacent to a and b, yet N(a) ∪ N(b) = {x, y} ⊆ N̄(x) still holds.
        assert_eq!(pair_candidates(&g, 0, 1), set(labels, "abxy"));
        let all = compute_candidates(&g);
        assert_eq!(all[&Product::Pair(0, 1)].allowed, set(labels, "abxy"));
        assert!(all[&Product::Square(0)].allowed.contains(Element::Zero));
    }

    #[test]
    fn path_and_cycle() {
        // a - c - b
        let g = lettered("acb", &["c", "ab", "c"]);
        assert_eq!(pair_candidates(&g, 0, 2), set("acb", "acb"));
        let c6 = Graph::cycle(6).unwrap();
        assert!(pair_candidates(&c6, 0, 3).is_empty());
    }
}
