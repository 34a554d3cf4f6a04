use alloc::vec::Vec;
use core::fmt;

use crate::error::TableError;
use crate::graph::{Graph, MAX_VERTICES};

/// Side length of the code-indexed backing array: zero plus every vertex.
pub(crate) const DIM: usize = MAX_VERTICES + 1;

/// Marks an unassigned entry in the backing array.
pub(crate) const UNSET: u8 = u8::MAX;

/// An element of `S = {0} ∪ V(G)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Zero,
    Vertex(usize),
}

impl Element {
    /// Dense code: zero is 0, vertex `v` is `v + 1`.
    #[inline]
    pub const fn code(self) -> usize {
        match self {
            Element::Zero => 0,
            Element::Vertex(v) => v + 1,
        }
    }

    #[inline]
    pub const fn from_code(code: usize) -> Self {
        if code == 0 {
            Element::Zero
        } else {
            Element::Vertex(code - 1)
        }
    }

    pub const fn is_zero(self) -> bool {
        matches!(self, Element::Zero)
    }

    pub const fn vertex(self) -> Option<usize> {
        match self {
            Element::Zero => None,
            Element::Vertex(v) => Some(v),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Zero => f.write_str("0"),
            Element::Vertex(v) => write!(f, "v{v}"),
        }
    }
}

/// A set of elements, as a bitmask over element codes.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(pub(crate) u16);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn bits(self) -> u16 {
        self.0
    }

    pub const fn contains(self, e: Element) -> bool {
        self.0 & (1 << e.code()) != 0
    }

    pub fn insert(&mut self, e: Element) {
        self.0 |= 1 << e.code();
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Element> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(Element::from_code(c))
        })
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

/// A multiplication table on `{0} ∪ {v_0, …, v_{n-1}}`, possibly partial.
///
/// Row and column zero are always zero. Entries between vertices start
/// unassigned. [`MulTable::set`] writes both `xy` and `yx`; tables read from
/// untrusted sources may still be asymmetric, which
/// [`verify_witness`](super::verify_witness) reports.
#[derive(Clone)]
pub struct MulTable {
    n: usize,
    entries: [[u8; DIM]; DIM],
}

impl MulTable {
    /// A table with every vertex product unassigned.
    pub fn new(n: usize) -> Result<Self, TableError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(TableError::UnsupportedOrder(n));
        }
        let mut entries = [[UNSET; DIM]; DIM];
        entries[0] = [0; DIM];
        for row in &mut entries {
            row[0] = 0;
        }
        Ok(MulTable { n, entries })
    }

    /// The null semigroup: every product is zero.
    pub fn null(n: usize) -> Result<Self, TableError> {
        let mut t = MulTable::new(n)?;
        for row in t.entries.iter_mut().take(n + 1) {
            row[..=n].fill(0);
        }
        Ok(t)
    }

    /// Builds a table from `n` rows of vertex products (`None` = unassigned),
    /// exactly as given.
    pub fn from_rows(rows: &[Vec<Option<Element>>]) -> Result<Self, TableError> {
        let n = rows.len();
        let mut t = MulTable::new(n)?;
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(TableError::DimensionMismatch { table: row.len(), graph: n });
            }
            for (y, e) in row.iter().enumerate() {
                if let Some(e) = e {
                    if e.code() > n {
                        return Err(TableError::ElementOutOfRange { x, y });
                    }
                    t.entries[x + 1][y + 1] = e.code() as u8;
                }
            }
        }
        Ok(t)
    }

    pub(crate) fn from_codes(n: usize, entries: [[u8; DIM]; DIM]) -> Self {
        MulTable { n, entries }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Option<Element> {
        match self.entries[x.code()][y.code()] {
            UNSET => None,
            c => Some(Element::from_code(c as usize)),
        }
    }

    /// Product of two vertices.
    #[inline]
    pub fn product(&self, x: usize, y: usize) -> Option<Element> {
        self.get(Element::Vertex(x), Element::Vertex(y))
    }

    /// Sets `xy = yx = value`.
    pub fn set(&mut self, x: usize, y: usize, value: Element) {
        debug_assert!(value.code() <= self.n);
        self.entries[x + 1][y + 1] = value.code() as u8;
        self.entries[y + 1][x + 1] = value.code() as u8;
    }

    pub fn clear(&mut self, x: usize, y: usize) {
        self.entries[x + 1][y + 1] = UNSET;
        self.entries[y + 1][x + 1] = UNSET;
    }

    pub fn is_total(&self) -> bool {
        self.first_unassigned().is_none()
    }

    fn first_unassigned(&self) -> Option<(usize, usize)> {
        (0..self.n).flat_map(|x| (0..self.n).map(move |y| (x, y))).find(|&(x, y)| self.entries[x + 1][y + 1] == UNSET)
    }

    pub(crate) fn require_total(&self) -> Result<(), TableError> {
        match self.first_unassigned() {
            Some((x, y)) => Err(TableError::Partial { x, y }),
            None => Ok(()),
        }
    }

    pub(crate) fn require_commutative(&self) -> Result<(), TableError> {
        for x in 0..self.n {
            for y in x + 1..self.n {
                if self.entries[x + 1][y + 1] != self.entries[y + 1][x + 1] {
                    return Err(TableError::NotCommutative { x, y });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn code_at(&self, x: usize, y: usize) -> usize {
        self.entries[x][y] as usize
    }

    /// Row spectrum: products of `x` with each vertex in label order.
    pub fn row_spectrum(&self, x: Element) -> Result<Spectrum, TableError> {
        self.require_total()?;
        Ok(Spectrum((0..self.n).map(|v| self.get(x, Element::Vertex(v)).expect("table is total")).collect()))
    }

    /// First violating triple `(x, y, z)` with `(xy)z != x(yz)`, scanning
    /// triples lexicographically with zero ordered before the vertices.
    pub fn first_associativity_violation(&self) -> Result<Option<[Element; 3]>, TableError> {
        self.require_total()?;
        let m = self.n + 1;
        for x in 0..m {
            for y in 0..m {
                let xy = self.code_at(x, y);
                for z in 0..m {
                    let left = self.code_at(xy, z);
                    let right = self.code_at(x, self.code_at(y, z));
                    if left != right {
                        return Ok(Some([x, y, z].map(Element::from_code)));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_associative(&self) -> Result<bool, TableError> {
        Ok(self.first_associativity_violation()?.is_none())
    }

    /// The zero-divisor graph read off the table: `u - v` iff `u != v` and `uv = 0`.
    pub fn graph_of_table(&self) -> Result<Graph, TableError> {
        self.require_total()?;
        self.require_commutative()?;
        let mut g = Graph::empty(self.n).expect("table order is in range");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.entries[u + 1][v + 1] == 0 {
                    g.add_edge(u, v).expect("indices are in range");
                }
            }
        }
        Ok(g)
    }

    /// Vertex rows as elements, `None` for unassigned entries.
    pub fn rows(&self) -> Vec<Vec<Option<Element>>> {
        (0..self.n).map(|x| (0..self.n).map(|y| self.product(x, y)).collect()).collect()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> MulTable {
        let map = |c: u8| match c {
            0 | UNSET => c,
            c => perm[c as usize - 1] as u8 + 1,
        };
        let mut t = MulTable::new(self.n).expect("same order");
        for x in 0..self.n {
            for y in 0..self.n {
                t.entries[perm[x] + 1][perm[y] + 1] = map(self.entries[x + 1][y + 1]);
            }
        }
        t
    }
}

impl MulTable {
    fn live(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.entries[..=self.n].iter().map(|row| &row[..=self.n])
    }
}

// Cells beyond `n` are scratch space and take no part in equality.
impl PartialEq for MulTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.live().eq(other.live())
    }
}

impl Eq for MulTable {}

impl core::hash::Hash for MulTable {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        for row in self.live() {
            row.hash(state);
        }
    }
}

impl fmt::Debug for MulTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MulTable(n={})", self.n)?;
        for x in 0..self.n {
            for y in 0..self.n {
                match self.entries[x + 1][y + 1] {
                    UNSET => f.write_str(" .")?,
                    0 => f.write_str(" 0")?,
                    c => write!(f, " {}", c)?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The row of one element: `(x v_0, …, x v_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum(pub Vec<Element>);
