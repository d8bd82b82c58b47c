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

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Color `0` marks an element that has not been assigned yet.
pub const UNCOLORED: u32 = 0;

/// Colors for every vertex and every edge of a graph, edges indexed in
/// canonical order. Valid colors are `1..=max_color`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TotalColoring {
    pub vertex_colors: Vec<u32>,
    pub edge_colors: Vec<u32>,
    pub max_color: u32,
}

impl TotalColoring {
    pub fn uncolored(graph: &Graph, max_color: u32) -> Self {
        TotalColoring {
            vertex_colors: vec![UNCOLORED; graph.vertex_count()],
            edge_colors: vec![UNCOLORED; graph.edge_count()],
            max_color,
        }
    }

    pub fn vertex(&self, v: usize) -> u32 {
        self.vertex_colors[v]
    }

    pub fn edge(&self, e: usize) -> u32 {
        self.edge_colors[e]
    }

    pub fn fits(&self, graph: &Graph) -> bool {
        self.vertex_colors.len() == graph.vertex_count()
            && self.edge_colors.len() == graph.edge_count()
    }

    pub fn is_complete(&self) -> bool {
        self.vertex_colors
            .iter()
            .chain(&self.edge_colors)
            .all(|&c| c != UNCOLORED)
    }

    /// Largest color actually used, at least 1.
    pub fn max_used(&self) -> u32 {
        self.vertex_colors
            .iter()
            .chain(&self.edge_colors)
            .copied()
            .max()
            .unwrap_or(1)
            .max(1)
    }

    /// Color of `v` followed by the colors of its incident edges.
    pub fn star(&self, graph: &Graph, v: usize) -> Vec<u32> {
        std::iter::once(self.vertex_colors[v])
            .chain(graph.incident(v).iter().map(|&(_, e)| self.edge_colors[e]))
            .collect()
    }
}
