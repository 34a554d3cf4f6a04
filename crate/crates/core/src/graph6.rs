//! The graph6 interchange format (short header form only, `n <= 62`).
//!
//! The body lists the upper triangle of the adjacency matrix column by
//! column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per byte, most
//! significant first, each byte offset by 63. Unused trailing bits are zero.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end().as_bytes();
    let (&header, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (position, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { position, byte });
        }
    }
    if header == 126 {
        // Long header: only used for n >= 63.
        return Err(Graph6Error::UnsupportedOrder(63));
    }
    let n = (header - OFFSET) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length { expected, found: body.len() });
    }
    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if (bit_count..expected * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut g = Graph::empty(n).map_err(|_| Graph6Error::UnsupportedOrder(n))?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j).expect("indices are in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push(OFFSET + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
