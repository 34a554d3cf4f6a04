use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Vertex count outside `1..=MAX_VERTICES`.
    VertexCount(usize),
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    SelfLoop(usize),
    /// `v` is listed as a neighbor of `u` but not the other way round.
    Asymmetric {
        u: usize,
        v: usize,
    },
    /// The operation requires a connected graph.
    Disconnected,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexCount(n) => write!(f, "unsupported vertex count {n}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::Asymmetric { u, v } => {
                write!(f, "neighborhood lists disagree: {v} in N({u}) but {u} not in N({v})")
            }
            GraphError::Disconnected => f.write_str("graph is not connected"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// A byte outside the printable range `63..=126`.
    InvalidByte {
        position: usize,
        byte: u8,
    },
    /// Headers for more than `MAX_VERTICES` vertices (including the long forms).
    UnsupportedOrder(usize),
    Length {
        expected: usize,
        found: usize,
    },
    /// Unused low bits of the final byte must be zero.
    NonZeroPadding,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => f.write_str("empty graph6 string"),
            Graph6Error::InvalidByte { position, byte } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at position {position}")
            }
            Graph6Error::UnsupportedOrder(n) => write!(f, "graph6 order {n} is not supported"),
            Graph6Error::Length { expected, found } => {
                write!(f, "graph6 body has {found} bytes, expected {expected}")
            }
            Graph6Error::NonZeroPadding => f.write_str("graph6 padding bits are not zero"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    UnsupportedOrder(usize),
    /// An entry is still unassigned.
    Partial {
        x: usize,
        y: usize,
    },
    DimensionMismatch {
        table: usize,
        graph: usize,
    },
    ElementOutOfRange {
        x: usize,
        y: usize,
    },
    NotCommutative {
        x: usize,
        y: usize,
    },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::UnsupportedOrder(n) => write!(f, "unsupported table order {n}"),
            TableError::Partial { x, y } => write!(f, "table entry ({x},{y}) is unassigned"),
            TableError::DimensionMismatch { table, graph } => {
                write!(f, "table has {table} vertices but the graph has {graph}")
            }
            TableError::ElementOutOfRange { x, y } => {
                write!(f, "table entry ({x},{y}) names a vertex out of range")
            }
            TableError::NotCommutative { x, y } => {
                write!(f, "table entries ({x},{y}) and ({y},{x}) differ")
            }
        }
    }
}

impl core::error::Error for GraphError {}
impl core::error::Error for Graph6Error {}
impl core::error::Error for TableError {}
