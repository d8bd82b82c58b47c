// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! graph6: vertex count in the `N(n)` prefix form, then the upper triangle
//! of the adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), …`,
//! packed six bits per byte, each byte offset by 63.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    BadChar { offset: usize, byte: u8 },
    #[error("graph6 input ends before the adjacency data is complete")]
    TruncatedPayload,
    #[error("unexpected data after the graph6 adjacency payload")]
    TrailingGarbage,
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    let groups = match n {
        0..=62 => {
            out.push(n as u8 + BIAS);
            return;
        }
        63..=258_047 => {
            out.push(126);
            3
        }
        _ => {
            out.extend_from_slice(&[126, 126]);
            6
        }
    };
    for g in (0..groups).rev() {
        out.push(((n >> (6 * g)) & 0x3f) as u8 + BIAS);
    }
}

pub fn encode_graph6(graph: &Graph) -> String {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut chunk = 0u8;
    let mut filled = 0;
    for b in 1..n {
        for a in 0..b {
            chunk = chunk << 1 | u8::from(graph.has_edge(a, b));
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. Surrounding whitespace and a leading
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim();
    let body = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    let mut values = Vec::with_capacity(body.len());
    for (offset, &byte) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&byte) {
            return Err(Graph6Error::BadChar { offset, byte });
        }
        values.push(byte - BIAS);
    }
    let (n, rest) = match values.as_slice() {
        [] => return Err(Graph6Error::TruncatedPayload),
        [63, 63, tail @ ..] => split_size(tail, 6)?,
        [63, tail @ ..] => split_size(tail, 3)?,
        [x, tail @ ..] => (*x as usize, tail),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if rest.len() < needed {
        return Err(Graph6Error::TruncatedPayload);
    }
    if rest.len() > needed {
        return Err(Graph6Error::TrailingGarbage);
    }
    let bit = |i: usize| rest[i / 6] >> (5 - i % 6) & 1 == 1;
    if (bits..needed * 6).any(bit) {
        return Err(Graph6Error::TrailingGarbage);
    }
    let mut edges = Vec::new();
    let mut i = 0;
    for b in 1..n {
        for a in 0..b {
            if bit(i) {
                edges.push((a, b));
            }
            i += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("upper-triangle bits describe a simple graph"))
}

fn split_size(tail: &[u8], groups: usize) -> Result<(usize, &[u8]), Graph6Error> {
    if tail.len() < groups {
        return Err(Graph6Error::TruncatedPayload);
    }
    let n = tail[..groups]
        .iter()
        .fold(0usize, |acc, &v| acc << 6 | v as usize);
    Ok((n, &tail[groups..]))
}
