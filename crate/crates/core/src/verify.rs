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

//! Independent checker for total colorings.
//!
//! Everything here works from the raw graph and color vectors only; it
//! shares no code with the search or the construction. Reports are
//! exhaustive: every clash is listed, not just the first.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde_json::{json, Value};
use thiserror::Error;

use crate::coloring::{TotalColoring, UNCOLORED};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("coloring covers {got_vertices} vertices and {got_edges} edges, graph has {vertices} and {edges}")]
    DimensionMismatch {
        vertices: usize,
        edges: usize,
        got_vertices: usize,
        got_edges: usize,
    },
    #[error("closed star of vertex {0} is not fully colored")]
    IncompleteColoring(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(usize),
    Edge(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "vertex {v}"),
            Element::Edge(e) => write!(f, "edge #{e}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    VertexVertexClash,
    EdgeEdgeClash,
    VertexEdgeClash,
    ProductCollision,
    SetCollision,
    ColorOutOfRange,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::VertexVertexClash => "VertexVertexClash",
            ViolationKind::EdgeEdgeClash => "EdgeEdgeClash",
            ViolationKind::VertexEdgeClash => "VertexEdgeClash",
            ViolationKind::ProductCollision => "ProductCollision",
            ViolationKind::SetCollision => "SetCollision",
            ViolationKind::ColorOutOfRange => "ColorOutOfRange",
        }
    }
}

/// One violated constraint. `values` holds the witnessing colors, or the
/// two equal products for a [`ViolationKind::ProductCollision`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub elements: Vec<Element>,
    pub values: Vec<BigUint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Proper,
    Product,
    Set,
}

impl VerifyMode {
    pub fn name(self) -> &'static str {
        match self {
            VerifyMode::Proper => "proper",
            VerifyMode::Product => "product",
            VerifyMode::Set => "set",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub mode: VerifyMode,
    pub ok: bool,
    pub violations: Vec<Violation>,
    /// Exact product per vertex; `None` where the closed star has an
    /// unassigned element.
    pub products: Vec<Option<BigUint>>,
}

impl VerifyReport {
    fn new(mode: VerifyMode, violations: Vec<Violation>, products: Vec<Option<BigUint>>) -> Self {
        VerifyReport {
            mode,
            ok: violations.is_empty(),
            violations,
            products,
        }
    }

    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }

    /// JSON "report" document; products and witness values are decimal strings.
    pub fn to_json(&self) -> Value {
        let violations: Vec<Value> = self
            .violations
            .iter()
            .map(|v| {
                let elements: Vec<Value> = v
                    .elements
                    .iter()
                    .map(|el| match el {
                        Element::Vertex(x) => json!({ "vertex": x }),
                        Element::Edge(x) => json!({ "edge": x }),
                    })
                    .collect();
                json!({
                    "kind": v.kind.name(),
                    "elements": elements,
                    "values": v.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        let products: Vec<Value> = self
            .products
            .iter()
            .map(|p| match p {
                Some(p) => Value::String(p.to_string()),
                None => Value::Null,
            })
            .collect();
        json!({
            "mode": self.mode.name(),
            "ok": self.ok,
            "violations": violations,
            "products": products,
        })
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} check: {} ({} violations)",
            self.mode.name(),
            if self.ok { "ok" } else { "FAILED" },
            self.violations.len()
        )?;
        for v in &self.violations {
            let elements: Vec<String> = v.elements.iter().map(ToString::to_string).collect();
            let values: Vec<String> = v.values.iter().map(ToString::to_string).collect();
            writeln!(
                f,
                "  {}: {} [{}]",
                v.kind.name(),
                elements.join(", "),
                values.join(", ")
            )?;
        }
        Ok(())
    }
}

fn check_dimensions(graph: &Graph, coloring: &TotalColoring) -> Result<(), VerifyError> {
    if coloring.fits(graph) {
        Ok(())
    } else {
        Err(VerifyError::DimensionMismatch {
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            got_vertices: coloring.vertex_colors.len(),
            got_edges: coloring.edge_colors.len(),
        })
    }
}

/// `c(v)` times the colors of every edge at `v`, in exact arithmetic.
pub fn product_at(
    graph: &Graph,
    coloring: &TotalColoring,
    v: usize,
) -> Result<BigUint, VerifyError> {
    check_dimensions(graph, coloring)?;
    star_product(graph, coloring, v).ok_or(VerifyError::IncompleteColoring(v))
}

fn star_product(graph: &Graph, coloring: &TotalColoring, v: usize) -> Option<BigUint> {
    let mut product = BigUint::from(coloring.vertex_colors[v]);
    for &(_, e) in graph.incident(v) {
        product *= coloring.edge_colors[e];
    }
    (coloring.vertex_colors[v] != UNCOLORED
        && graph
            .incident(v)
            .iter()
            .all(|&(_, e)| coloring.edge_colors[e] != UNCOLORED))
    .then_some(product)
}

fn all_products(graph: &Graph, coloring: &TotalColoring) -> Vec<Option<BigUint>> {
    (0..graph.vertex_count())
        .map(|v| star_product(graph, coloring, v))
        .collect()
}

fn proper_violations(graph: &Graph, coloring: &TotalColoring) -> Vec<Violation> {
    let mut out = Vec::new();
    let in_range = |c: u32| (1..=coloring.max_color).contains(&c);
    let colors = |cs: &[u32]| cs.iter().map(|&c| BigUint::from(c)).collect::<Vec<_>>();

    for (v, &c) in coloring.vertex_colors.iter().enumerate() {
        if !in_range(c) {
            out.push(Violation {
                kind: ViolationKind::ColorOutOfRange,
                elements: vec![Element::Vertex(v)],
                values: colors(&[c]),
            });
        }
    }
    for (e, &c) in coloring.edge_colors.iter().enumerate() {
        if !in_range(c) {
            out.push(Violation {
                kind: ViolationKind::ColorOutOfRange,
                elements: vec![Element::Edge(e)],
                values: colors(&[c]),
            });
        }
    }
    for (e, &(a, b)) in graph.edges().iter().enumerate() {
        let (ca, cb, ce) = (
            coloring.vertex_colors[a],
            coloring.vertex_colors[b],
            coloring.edge_colors[e],
        );
        if ca == cb && ca != UNCOLORED {
            out.push(Violation {
                kind: ViolationKind::VertexVertexClash,
                elements: vec![Element::Vertex(a), Element::Vertex(b)],
                values: colors(&[ca]),
            });
        }
        for (v, cv) in [(a, ca), (b, cb)] {
            if cv == ce && cv != UNCOLORED {
                out.push(Violation {
                    kind: ViolationKind::VertexEdgeClash,
                    elements: vec![Element::Vertex(v), Element::Edge(e)],
                    values: colors(&[cv]),
                });
            }
        }
    }
    for v in 0..graph.vertex_count() {
        let inc = graph.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                let (ce, cf) = (coloring.edge_colors[e], coloring.edge_colors[f]);
                if ce == cf && ce != UNCOLORED {
                    out.push(Violation {
                        kind: ViolationKind::EdgeEdgeClash,
                        elements: vec![Element::Edge(e.min(f)), Element::Edge(e.max(f))],
                        values: colors(&[ce]),
                    });
                }
            }
        }
    }
    out
}

/// Checks that adjacent vertices, adjacent edges, and incident
/// vertex/edge pairs all differ, and that every color lies in
/// `1..=max_color`.
pub fn verify_proper_total(
    graph: &Graph,
    coloring: &TotalColoring,
) -> Result<VerifyReport, VerifyError> {
    check_dimensions(graph, coloring)?;
    Ok(VerifyReport::new(
        VerifyMode::Proper,
        proper_violations(graph, coloring),
        all_products(graph, coloring),
    ))
}

/// Proper-total check plus `Π(u) ≠ Π(v)` on every edge. Product collisions
/// are only looked for once the coloring is proper.
pub fn verify_npd(graph: &Graph, coloring: &TotalColoring) -> Result<VerifyReport, VerifyError> {
    check_dimensions(graph, coloring)?;
    let mut violations = proper_violations(graph, coloring);
    let products = all_products(graph, coloring);
    if violations.is_empty() {
        for &(a, b) in graph.edges() {
            if let (Some(pa), Some(pb)) = (&products[a], &products[b]) {
                if pa == pb {
                    violations.push(Violation {
                        kind: ViolationKind::ProductCollision,
                        elements: vec![Element::Vertex(a), Element::Vertex(b)],
                        values: vec![pa.clone(), pb.clone()],
                    });
                }
            }
        }
    }
    Ok(VerifyReport::new(VerifyMode::Product, violations, products))
}

/// Set-distinguishing variant: the color sets of adjacent closed stars
/// must differ.
pub fn verify_nvd(graph: &Graph, coloring: &TotalColoring) -> Result<VerifyReport, VerifyError> {
    check_dimensions(graph, coloring)?;
    let mut violations = proper_violations(graph, coloring);
    let products = all_products(graph, coloring);
    if violations.is_empty() {
        let sets: Vec<BTreeSet<u32>> = (0..graph.vertex_count())
            .map(|v| coloring.star(graph, v).into_iter().collect())
            .collect();
        for &(a, b) in graph.edges() {
            if sets[a] == sets[b] {
                violations.push(Violation {
                    kind: ViolationKind::SetCollision,
                    elements: vec![Element::Vertex(a), Element::Vertex(b)],
                    values: sets[a].iter().map(|&c| BigUint::from(c)).collect(),
                });
            }
        }
    }
    Ok(VerifyReport::new(VerifyMode::Set, violations, products))
}

pub fn verify(
    graph: &Graph,
    coloring: &TotalColoring,
    mode: VerifyMode,
) -> Result<VerifyReport, VerifyError> {
    match mode {
        VerifyMode::Proper => verify_proper_total(graph, coloring),
        VerifyMode::Product => verify_npd(graph, coloring),
        VerifyMode::Set => verify_nvd(graph, coloring),
    }
}
