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

//! Coloring documents: a graph, one color per vertex and per canonical
//! edge, the palette bound, and an optional corona role map, as JSON.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::TotalColoring;
use crate::corona::CoronaMap;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("schema violation: {0}")]
    SchemaViolation(String),
    #[error("{element} has color {color}, outside 1..={max_color}")]
    ColorOutOfRange {
        element: String,
        color: u32,
        max_color: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub vertex_colors: Vec<u32>,
    pub edge_colors: Vec<u32>,
    pub max_color: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corona_map: Option<CoronaMap>,
}

impl ColoringDocument {
    pub fn new(graph: &Graph, coloring: &TotalColoring, corona_map: Option<CoronaMap>) -> Self {
        ColoringDocument {
            n: graph.vertex_count(),
            edges: graph.edges().iter().map(|&(a, b)| [a, b]).collect(),
            vertex_colors: coloring.vertex_colors.clone(),
            edge_colors: coloring.edge_colors.clone(),
            max_color: coloring.max_color,
            corona_map,
        }
    }

    pub fn graph(&self) -> Result<Graph, DocumentError> {
        let graph = Graph::new(self.n, self.edges.iter().map(|&[a, b]| (a, b)))
            .map_err(|e| DocumentError::SchemaViolation(format!("edges: {e}")))?;
        let canonical = graph
            .edges()
            .iter()
            .zip(&self.edges)
            .all(|(&(a, b), &[x, y])| (a, b) == (x, y));
        if !canonical {
            return Err(DocumentError::SchemaViolation(
                "edges must be listed as sorted pairs in lexicographic order".into(),
            ));
        }
        Ok(graph)
    }

    pub fn coloring(&self) -> TotalColoring {
        TotalColoring {
            vertex_colors: self.vertex_colors.clone(),
            edge_colors: self.edge_colors.clone(),
            max_color: self.max_color,
        }
    }

    /// Structural checks: canonical edge list, matching lengths, colors in
    /// `1..=max_color`, and a corona map (if any) of matching size.
    pub fn validate(&self) -> Result<(), DocumentError> {
        let graph = self.graph()?;
        if self.vertex_colors.len() != self.n {
            return Err(DocumentError::SchemaViolation(format!(
                "vertex_colors has {} entries for {} vertices",
                self.vertex_colors.len(),
                self.n
            )));
        }
        if self.edge_colors.len() != graph.edge_count() {
            return Err(DocumentError::SchemaViolation(format!(
                "edge_colors has {} entries for {} edges",
                self.edge_colors.len(),
                graph.edge_count()
            )));
        }
        if self.max_color == 0 {
            return Err(DocumentError::SchemaViolation(
                "max_color must be positive".into(),
            ));
        }
        let out_of_range = |element: String, color: u32| {
            (!(1..=self.max_color).contains(&color)).then_some(DocumentError::ColorOutOfRange {
                element,
                color,
                max_color: self.max_color,
            })
        };
        for (v, &c) in self.vertex_colors.iter().enumerate() {
            if let Some(err) = out_of_range(format!("vertex {v}"), c) {
                return Err(err);
            }
        }
        for (e, &c) in self.edge_colors.iter().enumerate() {
            if let Some(err) = out_of_range(format!("edge {:?}", self.edges[e]), c) {
                return Err(err);
            }
        }
        if let Some(map) = &self.corona_map {
            if map.roles.len() != self.n
                || map.edge_classes.len() != graph.edge_count()
                || map.n_g * (1 + map.n_h) != self.n
            {
                return Err(DocumentError::SchemaViolation(
                    "corona_map does not match the graph".into(),
                ));
            }
        }
        Ok(())
    }
}

pub fn emit_coloring_json(doc: &ColoringDocument) -> String {
    serde_json::to_string_pretty(doc).expect("documents always serialize")
}

pub fn parse_coloring_json(text: &str) -> Result<ColoringDocument, DocumentError> {
    let doc: ColoringDocument =
        serde_json::from_str(text).map_err(|e| DocumentError::SchemaViolation(e.to_string()))?;
    doc.validate()?;
    Ok(doc)
}
