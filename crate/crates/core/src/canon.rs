//! Canonical labeling by colour refinement plus individualization.
//!
//! The search tree branches on every vertex of the first non-singleton cell
//! of an equitable ordered partition, except that vertices which are twins of
//! an already explored vertex in the same cell are skipped (swapping twins is
//! an automorphism fixing everything else, so their subtrees yield the same
//! leaf codes). Each leaf is a discrete partition, read as a relabeling; the
//! canonical labeling is the leaf whose adjacency string is largest.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::graph6::emit_graph6;

/// Isomorphism-invariant encoding of a graph: the graph6 string of its
/// canonically relabeled copy.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// Lowercase hex of the code bytes, safe for file names.
    pub fn to_hex(&self) -> String {
        use core::fmt::Write;
        let mut s = String::with_capacity(self.0.len() * 2);
        for b in self.0.bytes() {
            write!(s, "{b:02x}").expect("writing to a String cannot fail");
        }
        s
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({:?})", self.0)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type Colors = [u8; MAX_VERTICES];

/// Renumbers colours to dense ranks, preserving their order.
fn normalize(colors: &mut Colors, n: usize) -> usize {
    let mut present = [false; 256];
    for &c in &colors[..n] {
        present[c as usize] = true;
    }
    let mut rank = [0u8; 256];
    let mut next = 0u8;
    for (c, &p) in present.iter().enumerate() {
        if p {
            rank[c] = next;
            next += 1;
        }
    }
    for c in &mut colors[..n] {
        *c = rank[*c as usize];
    }
    next as usize
}

/// Refines `colors` until equitable. Vertices are split by their current
/// colour first and then by the sorted counts of neighbour colours, so the
/// result depends only on the coloured graph, not on vertex names.
fn refine(g: &Graph, colors: &mut Colors) {
    let n = g.n();
    let mut classes = normalize(colors, n);
    loop {
        let mut sigs: Vec<(u8, [u8; MAX_VERTICES], usize)> = (0..n)
            .map(|v| {
                let mut counts = [0u8; MAX_VERTICES];
                for u in g.open_neighborhood(v) {
                    counts[colors[u] as usize] += 1;
                }
                (colors[v], counts, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = [0u8; MAX_VERTICES];
        let mut rank = 0u8;
        for i in 0..n {
            if i > 0 && (sigs[i].0, sigs[i].1) != (sigs[i - 1].0, sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        let refined = rank as usize + 1;
        *colors = next;
        if refined == classes {
            return;
        }
        classes = refined;
    }
}

/// Adjacency bits of `g` relabeled by `colors` (a discrete colouring), in
/// graph6 order, first bit most significant.
fn leaf_key(g: &Graph, colors: &Colors) -> u128 {
    let n = g.n();
    let mut at = [0usize; MAX_VERTICES];
    for v in 0..n {
        at[colors[v] as usize] = v;
    }
    let mut key = 0u128;
    for j in 1..n {
        for i in 0..j {
            key = key << 1 | g.has_edge(at[i], at[j]) as u128;
        }
    }
    key
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.open_neighborhood(u).without(v) == g.open_neighborhood(v).without(u)
}

fn search(g: &Graph, colors: Colors, best: &mut Option<(u128, Colors)>) {
    let n = g.n();
    let classes = colors[..n].iter().copied().max().map_or(0, |m| m as usize + 1);
    if classes == n {
        let key = leaf_key(g, &colors);
        if best.as_ref().is_none_or(|(k, _)| key > *k) {
            *best = Some((key, colors));
        }
        return;
    }
    // First colour class with more than one member.
    let mut sizes = [0u8; MAX_VERTICES];
    for &c in &colors[..n] {
        sizes[c as usize] += 1;
    }
    let target = (0..classes).find(|&c| sizes[c] > 1).expect("partition is not discrete") as u8;
    let cell: VertexSet = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried = VertexSet::EMPTY;
    for v in cell {
        if tried.iter().any(|u| are_twins(g, u, v)) {
            continue;
        }
        tried.insert(v);
        let mut next = colors;
        for c in &mut next[..n] {
            *c = *c * 2 + 1;
        }
        next[v] -= 1;
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// Permutation taking `g` to its canonical relabeling: vertex `v` maps to `perm[v]`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors = [0u8; MAX_VERTICES];
    for (v, c) in colors.iter_mut().enumerate().take(n) {
        *c = g.degree(v) as u8;
    }
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    let (_, colors) = best.expect("search visits at least one leaf");
    colors[..n].iter().map(|&c| c as usize).collect()
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_pair(g).1
}

/// The canonical copy of `g` together with its code.
pub fn canonical_pair(g: &Graph) -> (Graph, CanonicalCode) {
    let h = canonical_graph(g);
    let code = CanonicalCode(emit_graph6(&h));
    (h, code)
}
