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

use std::fmt::Write;

use thiserror::Error;

use crate::coloring::TotalColoring;
use crate::corona::CoronaMap;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DotError {
    #[error("coloring or corona map does not match the graph dimensions")]
    DimensionMismatch,
}

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff",
];

fn palette(color: u32) -> &'static str {
    PALETTE[(color.max(1) as usize - 1) % PALETTE.len()]
}

/// Graphviz source. Colors become integer labels plus a fill/stroke color
/// from a fixed cycle; with a corona map, vertices are named `v_j` /
/// `u_i^j` (1-based).
pub fn emit_dot(
    graph: &Graph,
    coloring: Option<&TotalColoring>,
    map: Option<&CoronaMap>,
) -> Result<String, DotError> {
    if coloring.is_some_and(|c| !c.fits(graph))
        || map.is_some_and(|m| {
            m.roles.len() != graph.vertex_count() || m.edge_classes.len() != graph.edge_count()
        })
    {
        return Err(DotError::DimensionMismatch);
    }
    let mut out = String::from("graph G {\n");
    if coloring.is_some() {
        out.push_str("  node [style=filled];\n");
    }
    for v in 0..graph.vertex_count() {
        let name = map.map(|m| m.role(v).label());
        match (coloring, name) {
            (Some(c), Some(name)) => {
                let col = c.vertex(v);
                writeln!(
                    out,
                    "  {v} [label=\"{name}\\n{col}\", fillcolor=\"{}\"];",
                    palette(col)
                )
            }
            (Some(c), None) => {
                let col = c.vertex(v);
                writeln!(
                    out,
                    "  {v} [label=\"{col}\", fillcolor=\"{}\"];",
                    palette(col)
                )
            }
            (None, Some(name)) => writeln!(out, "  {v} [label=\"{name}\"];"),
            (None, None) => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for (e, &(a, b)) in graph.edges().iter().enumerate() {
        match coloring {
            Some(c) => {
                let col = c.edge(e);
                writeln!(
                    out,
                    "  {a} -- {b} [label=\"{col}\", color=\"{}\"];",
                    palette(col)
                )
            }
            None => writeln!(out, "  {a} -- {b};"),
        }
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
