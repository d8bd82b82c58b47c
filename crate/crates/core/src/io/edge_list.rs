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

//! Plain edge-list text: a header line `n m`, then `m` lines `a b` with
//! 0-based endpoints. `#` starts a comment; blank lines are ignored.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {a}-{b}")]
    DuplicateEdge { line: usize, a: usize, b: usize },
}

fn parse_pair(text: &str, line: usize) -> Result<(usize, usize), EdgeListError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let bad = |message: String| EdgeListError::Parse { line, message };
    if fields.len() != 2 {
        return Err(bad(format!(
            "expected two integers, found {:?}",
            text.trim()
        )));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|e| bad(format!("{s:?}: {e}")));
    Ok((num(fields[0])?, num(fields[1])?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    let Some((header_line, header)) = lines.next() else {
        return Err(EdgeListError::Parse {
            line: 1,
            message: "missing \"n m\" header".into(),
        });
    };
    let (n, m) = parse_pair(header, header_line)?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    let mut last_line = header_line;
    for _ in 0..m {
        let Some((line, body)) = lines.next() else {
            return Err(EdgeListError::Parse {
                line: last_line + 1,
                message: format!("expected {m} edges, found {}", edges.len()),
            });
        };
        last_line = line;
        let (a, b) = parse_pair(body, line)?;
        if a == b {
            return Err(EdgeListError::SelfLoop { line, vertex: a });
        }
        if a >= n || b >= n {
            return Err(EdgeListError::Parse {
                line,
                message: format!("endpoint {} out of range for {n} vertices", a.max(b)),
            });
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(EdgeListError::DuplicateEdge { line, a, b });
        }
        edges.push((a, b));
    }
    if let Some((line, _)) = lines.next() {
        return Err(EdgeListError::Parse {
            line,
            message: format!("more than the declared {m} edges"),
        });
    }
    Graph::new(n, edges).map_err(|e| EdgeListError::Parse {
        line: last_line,
        message: e.to_string(),
    })
}

/// Edge list in canonical order.
pub fn emit_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for &(a, b) in graph.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}
