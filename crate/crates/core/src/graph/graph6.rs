//! graph6 codec: printable bytes offset by 63, upper triangle in
//! column-major order, big-endian 6-bit groups, zero padded.

use super::{Graph, GraphError, DEFAULT_MAX_N};

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    parse_graph6_with_cap(text, DEFAULT_MAX_N)
}

pub fn parse_graph6_with_cap(text: &str, cap: usize) -> Result<Graph, GraphError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6Char { offset, byte });
    }
    let (n, header_len) = decode_order(bytes)?;
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if n > cap {
        return Err(GraphError::TooManyVertices { n, cap });
    }
    let payload = &bytes[header_len..];
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(GraphError::Graph6Length { expected, found: payload.len() });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = payload[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges_with_cap(n, edges, cap)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let sextets = |from: usize, count: usize| -> Result<usize, GraphError> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or(GraphError::Graph6Length { expected: from + count, found: bytes.len() })?;
        Ok(chunk.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    match bytes {
        [126, 126, ..] => Ok((sextets(2, 6)?, 8)),
        [126, ..] => Ok((sextets(1, 3)?, 4)),
        [b, ..] => Ok(((b - 63) as usize, 1)),
        [] => Err(GraphError::Graph6Empty),
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}
