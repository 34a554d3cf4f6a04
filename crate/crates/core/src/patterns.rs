//! Graph families whose realizability is settled without search, and the
//! twin-duplication and end-emanation constructions.
//!
//! Positive families come with an explicit table. Most are built by
//! *inflation*: a small fixed semigroup `T` on vertex types, a map from
//! vertices to types, and one representative vertex per type; the product of
//! `x` and `y` is the representative of `type(x)·type(y)`. Inflation is
//! associative whenever `T` is. Every constructed table is verified before it
//! is returned.

use alloc::vec::Vec;

use crate::conditions::satisfies_star;
use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};
use crate::semigroup::{verify_witness, Element, MulTable, WitnessError};

/// How a duplicated vertex relates to its original.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwinMode {
    /// Nonadjacent with equal open neighborhoods; needs `x² != 0`.
    Open,
    /// Adjacent with equal closed neighborhoods; needs `x² = 0`.
    Closed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternFamily {
    /// A vertex adjacent to every other vertex.
    StarRefinement,
    /// Two adjacent centers, every other vertex an end on one of them.
    DoubleStar,
    CompleteBipartitePlusEndsOneVertex,
    CompletePlusEndsAtMostTwoVertices,
    K3PlusEndsThreeVertices,
    /// `K_m`, `m >= 4`, with ends on at least three vertices: never realizable.
    CompletePlusEndsThreePlusVertices,
    /// Complete bipartite core with ends on at least two vertices: never realizable.
    BipartitePlusEndsTwoVertices,
    /// Twin of `vertex` added to a realized `parent`.
    Duplication {
        parent: Graph,
        vertex: usize,
        mode: TwinMode,
    },
    None,
}

impl PatternFamily {
    /// Stable name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            PatternFamily::StarRefinement => "StarRefinement",
            PatternFamily::DoubleStar => "DoubleStar",
            PatternFamily::CompleteBipartitePlusEndsOneVertex => "CompleteBipartitePlusEndsOneVertex",
            PatternFamily::CompletePlusEndsAtMostTwoVertices => "CompletePlusEndsAtMostTwoVertices",
            PatternFamily::K3PlusEndsThreeVertices => "K3PlusEndsThreeVertices",
            PatternFamily::CompletePlusEndsThreePlusVertices => "CompletePlusEndsThreePlusVertices",
            PatternFamily::BipartitePlusEndsTwoVertices => "BipartitePlusEndsTwoVertices",
            PatternFamily::Duplication { .. } => "Duplication",
            PatternFamily::None => "None",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternVerdict {
    pub family: PatternFamily,
    /// `Some(true)` comes with a verified table; `Some(false)` marks an
    /// impossibility family; `None` means undecided.
    pub realizable: Option<bool>,
    pub constructive_table: Option<MulTable>,
}

impl PatternVerdict {
    pub fn none() -> Self {
        PatternVerdict { family: PatternFamily::None, realizable: None, constructive_table: None }
    }

    fn impossible(family: PatternFamily) -> Self {
        PatternVerdict { family, realizable: Some(false), constructive_table: None }
    }

    /// Realizable with `table` if it verifies; otherwise the family is
    /// reported undecided so callers fall back to search.
    fn constructed(g: &Graph, family: PatternFamily, table: Option<MulTable>) -> Self {
        match table.filter(|t| verify_witness(g, t).is_ok()) {
            Some(t) => PatternVerdict { family, realizable: Some(true), constructive_table: Some(t) },
            None => PatternVerdict { family, realizable: None, constructive_table: None },
        }
    }
}

/// A small commutative semigroup on type codes `0..=k` (0 is zero), used
/// as the template for inflation. Rows are given for nonzero types only.
struct TypeSemigroup<const K: usize> {
    products: [[u8; K]; K],
}

impl<const K: usize> TypeSemigroup<K> {
    fn product(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            0
        } else {
            self.products[a as usize - 1][b as usize - 1]
        }
    }

    /// Builds the inflated table, or `None` if a product type has no
    /// representative vertex.
    fn inflate(&self, types: &[u8]) -> Option<MulTable> {
        let n = types.len();
        let mut rep = [None; 16];
        for (v, &ty) in types.iter().enumerate() {
            rep[ty as usize].get_or_insert(v);
        }
        let mut t = MulTable::new(n).ok()?;
        for x in 0..n {
            for y in x..n {
                let p = self.product(types[x], types[y]);
                let e = if p == 0 { Element::Zero } else { Element::Vertex(rep[p as usize]?) };
                t.set(x, y, e);
            }
        }
        Some(t)
    }
}

// Double star. Types: 1 = first center, 2 = its ends, 3 = ends of the
// second center, 4 = second center. This is {(1,0),(0,1),(1,2),(0,2)}
// inside Z2 x Z4 under multiplication.
const DOUBLE_STAR: TypeSemigroup<4> =
    TypeSemigroup { products: [[1, 0, 1, 0], [0, 2, 4, 4], [1, 4, 1, 0], [0, 4, 0, 0]] };

// K_m (m >= 3) with ends on exactly two core vertices u and v.
// Types: 1 = u, 2 = v, 3 = one further core vertex (idempotent), 4 = the
// remaining core vertices, 5 = ends on u, 6 = ends on v.
const COMPLETE_TWO_ENDS: TypeSemigroup<6> = TypeSemigroup {
    products: [
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 2, 0],
        [0, 0, 3, 0, 3, 3],
        [0, 0, 0, 0, 2, 1],
        [0, 2, 3, 2, 5, 3],
        [1, 0, 3, 1, 3, 6],
    ],
};

// K3 with ends on each corner: nonzero proper subsets of {1,2,3} under
// intersection. Types 1, 2, 4 are the corners; 6, 5, 3 their ends.
const K3_THREE_ENDS: TypeSemigroup<6> = TypeSemigroup {
    products: {
        let mut p = [[0u8; 6]; 6];
        let mut a = 0;
        while a < 6 {
            let mut b = 0;
            while b < 6 {
                p[a][b] = ((a + 1) & (b + 1)) as u8;
                b += 1;
            }
            a += 1;
        }
        p
    },
};

// Complete bipartite X | Y with ends on x0 in X.
// Types: 1 = X \ {x0}, 2 = x0, 3 = Y, 4 = ends.
const BIPARTITE_ENDS: TypeSemigroup<4> =
    TypeSemigroup { products: [[1, 2, 0, 2], [2, 0, 0, 0], [0, 0, 3, 3], [2, 0, 3, 3]] };

/// Vertices adjacent to every other vertex.
fn dominating(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| g.degree(v) + 1 == g.n()).collect()
}

/// If some vertex `c` is adjacent to all others: `c` annihilates
/// everything, and every other product that must be nonzero is `c`.
pub fn recognize_star_refinement(g: &Graph) -> Option<MulTable> {
    let c = dominating(g).first()?;
    let n = g.n();
    let mut t = MulTable::new(n).ok()?;
    for x in 0..n {
        for y in x..n {
            let e = if x == c || y == c || g.has_edge(x, y) { Element::Zero } else { Element::Vertex(c) };
            t.set(x, y, e);
        }
    }
    verify_witness(g, &t).is_ok().then_some(t)
}

/// Centers `(c1, c2)` of a double star with at least one end on each.
fn double_star_centers(g: &Graph) -> Option<(usize, usize)> {
    if g.n() < 4 {
        return None;
    }
    let mut centers = (0..g.n()).filter(|&v| g.degree(v) > 1);
    let (c1, c2) = (centers.next()?, centers.next()?);
    if centers.next().is_some() || !g.has_edge(c1, c2) || !g.is_connected() {
        return None;
    }
    Some((c1, c2))
}

pub fn recognize_double_star(g: &Graph) -> Option<MulTable> {
    let (c1, c2) = double_star_centers(g)?;
    let types: Vec<u8> = (0..g.n())
        .map(|v| match v {
            _ if v == c1 => 1,
            _ if v == c2 => 4,
            _ if g.has_edge(v, c1) => 2,
            _ => 3,
        })
        .collect();
    DOUBLE_STAR.inflate(&types).filter(|t| verify_witness(g, t).is_ok())
}

/// Core after stripping ends, with the set of core vertices carrying ends.
struct EndDecomposition {
    core: VertexSet,
    attachments: VertexSet,
}

fn strip_ends(g: &Graph) -> Option<EndDecomposition> {
    if g.n() < 3 || !g.is_connected() {
        return None;
    }
    let ends = g.ends();
    let core = g.vertices().difference(ends);
    let mut attachments = VertexSet::EMPTY;
    for e in ends {
        let a = g.open_neighborhood(e).first()?;
        if !core.contains(a) {
            return None;
        }
        attachments.insert(a);
    }
    Some(EndDecomposition { core, attachments })
}

fn is_clique(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| s.without(v).is_subset(g.open_neighborhood(v)))
}

/// Complete core `K_m` plus ends.
pub fn recognize_complete_plus_ends(g: &Graph) -> PatternVerdict {
    let Some(EndDecomposition { core, attachments }) = strip_ends(g) else {
        return PatternVerdict::none();
    };
    if core.is_empty() || !is_clique(g, core) {
        return PatternVerdict::none();
    }
    let m = core.len();
    let family = PatternFamily::CompletePlusEndsAtMostTwoVertices;
    match attachments.len() {
        0 | 1 => PatternVerdict::constructed(g, family, recognize_star_refinement(g)),
        2 if m == 2 => PatternVerdict::constructed(g, family, recognize_double_star(g)),
        2 => {
            let mut corners = attachments.iter();
            let (u, v) = (corners.next().unwrap(), corners.next().unwrap());
            let w0 = core.difference(attachments).first().expect("m >= 3");
            let types: Vec<u8> = (0..g.n())
                .map(|x| match x {
                    _ if x == u => 1,
                    _ if x == v => 2,
                    _ if x == w0 => 3,
                    _ if core.contains(x) => 4,
                    _ if g.has_edge(x, u) => 5,
                    _ => 6,
                })
                .collect();
            PatternVerdict::constructed(g, family, COMPLETE_TWO_ENDS.inflate(&types))
        }
        3 if m == 3 => {
            let corners: Vec<usize> = core.iter().collect();
            let types: Vec<u8> = (0..g.n())
                .map(|x| {
                    let k = corners.iter().position(|&c| c == x || g.has_edge(x, c) && !core.contains(x));
                    let k = k.expect("every vertex is a corner or an end on one");
                    let corner = 1u8 << k;
                    if core.contains(x) {
                        corner
                    } else {
                        7 & !corner
                    }
                })
                .collect();
            PatternVerdict::constructed(g, PatternFamily::K3PlusEndsThreeVertices, K3_THREE_ENDS.inflate(&types))
        }
        _ if m >= 4 => PatternVerdict::impossible(PatternFamily::CompletePlusEndsThreePlusVertices),
        _ => PatternVerdict::none(),
    }
}

/// Parts of a complete bipartite graph induced on `s`, if it is one.
fn complete_bipartition(g: &Graph, s: VertexSet) -> Option<(VertexSet, VertexSet)> {
    let start = s.first()?;
    let left = g.open_neighborhood(start).intersection(s);
    let right = s.difference(left);
    if left.is_empty() {
        return None;
    }
    let complete = right.iter().all(|v| g.open_neighborhood(v).intersection(s) == left)
        && left.iter().all(|v| g.open_neighborhood(v).intersection(s) == right);
    complete.then_some((right, left))
}

/// Complete bipartite core `K_{s,t}` (at least three vertices) plus ends.
pub fn recognize_complete_bipartite_plus_ends(g: &Graph) -> PatternVerdict {
    let Some(EndDecomposition { core, attachments }) = strip_ends(g) else {
        return PatternVerdict::none();
    };
    if core.len() < 3 {
        return PatternVerdict::none();
    }
    let Some((side_a, side_b)) = complete_bipartition(g, core) else {
        return PatternVerdict::none();
    };
    if attachments.len() >= 2 {
        return PatternVerdict::impossible(PatternFamily::BipartitePlusEndsTwoVertices);
    }
    let x0 = attachments.first().or(side_a.first()).expect("core is nonempty");
    let (xs, _) = if side_a.contains(x0) { (side_a, side_b) } else { (side_b, side_a) };
    let types: Vec<u8> = (0..g.n())
        .map(|v| match v {
            _ if v == x0 => 2,
            _ if xs.contains(v) => 1,
            _ if core.contains(v) => 3,
            _ => 4,
        })
        .collect();
    PatternVerdict::constructed(g, PatternFamily::CompleteBipartitePlusEndsOneVertex, BIPARTITE_ENDS.inflate(&types))
}

/// Tries every recognizer; the first decided verdict wins.
pub fn recognize(g: &Graph) -> PatternVerdict {
    if let Some(t) = recognize_star_refinement(g) {
        return PatternVerdict::constructed(g, PatternFamily::StarRefinement, Some(t));
    }
    if let Some(t) = recognize_double_star(g) {
        return PatternVerdict::constructed(g, PatternFamily::DoubleStar, Some(t));
    }
    let v = recognize_complete_plus_ends(g);
    if v.realizable.is_some() {
        return v;
    }
    let v = recognize_complete_bipartite_plus_ends(g);
    if v.realizable.is_some() {
        return v;
    }
    PatternVerdict::none()
}

/// Adds a twin `y` of `x` to a realized graph: `N(y) = N(x)` if `x² != 0`,
/// otherwise `N(y) = N̄(x)`. Products copy those of `x`, with
/// `xy = y² = x²`. Returns the new graph, the extended table, and `y`.
pub fn duplicate_vertex(g: &Graph, t: &MulTable, x: usize) -> Result<(Graph, MulTable), WitnessError> {
    verify_witness(g, t)?;
    if x >= g.n() {
        return Err(WitnessError::Table(crate::TableError::ElementOutOfRange { x, y: x }));
    }
    let square = t.product(x, x).expect("verified table is total");
    let neighbors = if square.is_zero() { g.closed_neighborhood(x) } else { g.open_neighborhood(x) };
    let (h, y) =
        g.add_vertex(neighbors).map_err(|_| WitnessError::Table(crate::TableError::UnsupportedOrder(g.n() + 1)))?;
    let mut rows = t.rows();
    for (z, row) in rows.iter_mut().enumerate() {
        row.push(if z == x { Some(square) } else { row[x] });
    }
    let mut last: Vec<_> = (0..g.n()).map(|z| rows[z][y]).collect();
    last.push(Some(square));
    rows.push(last);
    let extended = MulTable::from_rows(&rows)?;
    verify_witness(&h, &extended)?;
    Ok((h, extended))
}

/// Lifts a realization of `g - y` to `g`, where `(x, y)` is a twin pair
/// and `parent` is labeled as [`Graph::remove_vertex`] leaves it. Needs
/// `x² != 0` for open twins and `x² = 0` for closed twins.
pub fn lift_twin(g: &Graph, x: usize, y: usize, parent: &MulTable) -> Option<MulTable> {
    let n = g.n();
    if parent.n() + 1 != n || x == y || y >= n {
        return None;
    }
    let down = |v: usize| if v > y { v - 1 } else { v };
    let up = |e: Element| match e {
        Element::Vertex(v) if v >= y => Element::Vertex(v + 1),
        e => e,
    };
    let proxy = |v: usize| if v == y { x } else { v };
    let mut t = MulTable::new(n).ok()?;
    for u in 0..n {
        for v in u..n {
            t.set(u, v, up(parent.product(down(proxy(u)), down(proxy(v)))?));
        }
    }
    verify_witness(g, &t).is_ok().then_some(t)
}

/// All twin pairs `(x, y)`, `x < y`, in lexicographic order.
pub fn twin_pairs(g: &Graph) -> impl Iterator<Item = (usize, usize, TwinMode)> + '_ {
    (0..g.n()).flat_map(move |x| {
        (x + 1..g.n()).filter_map(move |y| {
            if g.has_edge(x, y) {
                (g.closed_neighborhood(x) == g.closed_neighborhood(y)).then_some((x, y, TwinMode::Closed))
            } else {
                (g.open_neighborhood(x) == g.open_neighborhood(y)).then_some((x, y, TwinMode::Open))
            }
        })
    })
}

/// First twin pair `(x, y, mode)`: removing `y` leaves a graph that `y`
/// duplicates `x` in.
pub fn find_duplication_parent(g: &Graph) -> Option<(usize, usize, TwinMode)> {
    twin_pairs(g).next()
}

/// Adds an end `w` with `N(w) = {x}`.
pub fn emanate_end(g: &Graph, x: usize) -> Result<Graph, GraphError> {
    if x >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: x, n: g.n() });
    }
    g.add_vertex(VertexSet::singleton(x)).map(|(h, _)| h)
}

/// For `g` satisfying ⋆ and `x` of maximum degree, whether adding an end at
/// `x` preserves ⋆. `None` when the preconditions fail.
pub fn lemma_end_preserves_star(g: &Graph, x: usize) -> Option<bool> {
    if x >= g.n() || !g.is_connected() || g.degree(x) != g.max_degree() || !satisfies_star(g) {
        return None;
    }
    emanate_end(g, x).ok().map(|h| satisfies_star(&h))
}
