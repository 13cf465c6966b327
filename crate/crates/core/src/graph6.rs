//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix in column order, packed big-endian into 6-bit groups
//! offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
    }
    let body = text[start..].trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    let at = |i: usize| -> Result<u32> {
        match bytes.get(i) {
            None => Err(Error::parse(start + i, "unexpected end of graph6 data")),
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u32),
            Some(_) => Err(Error::parse(start + i, "byte outside the graph6 range 63..=126")),
        }
    };
    let (n, mut pos) = if bytes.first() == Some(&126) {
        if bytes.get(1) == Some(&126) {
            let mut n = 0usize;
            for k in 0..6 {
                n = (n << 6) | at(2 + k)? as usize;
            }
            (n, 8)
        } else {
            let mut n = 0usize;
            for k in 0..3 {
                n = (n << 6) | at(1 + k)? as usize;
            }
            (n, 4)
        }
    } else {
        (at(0)? as usize, 1)
    };
    if n == 0 {
        return Err(Error::parse(start, "graph6 graph with no vertices"));
    }
    let total_bits = n * (n - 1) / 2;
    let groups = total_bits.div_ceil(6);
    if bytes.len() != pos + groups {
        return Err(Error::parse(
            start + bytes.len().min(pos + groups),
            format!("expected {} data bytes, found {}", groups, bytes.len().saturating_sub(pos)),
        ));
    }
    let mut edges = Vec::new();
    let mut bit_index = 0;
    let mut current = 0u32;
    for j in 1..n {
        for i in 0..j {
            if bit_index % 6 == 0 {
                current = at(pos)?;
                pos += 1;
            }
            let bit = (current >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    if bit_index % 6 != 0 && current & ((1 << (6 - bit_index % 6)) - 1) != 0 {
        return Err(Error::parse(start + pos - 1, "non-zero padding bits"));
    }
    Graph::new(n, &edges)
}
