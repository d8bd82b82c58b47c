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

//! Corona product `G ∘ H`: one copy of `G`, one copy of `H` per vertex of
//! `G`, and every `G` vertex joined to each vertex of its own copy.
//!
//! Vertex numbering is fixed: `G` vertices keep their identifiers
//! `0..n_g`, then copy vertices follow grouped by owner, so the copy of
//! `H`-vertex `i` owned by `j` is `n_g + j * n_h + i`.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// What a vertex of the combined graph is. Indices are 0-based vertex
/// identifiers of `G` and `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Role {
    GVertex { g: usize },
    CopyVertex { g: usize, h: usize },
}

impl Role {
    /// The `G` vertex this element belongs to (itself, or its copy's owner).
    pub fn owner(self) -> usize {
        match self {
            Role::GVertex { g } | Role::CopyVertex { g, .. } => g,
        }
    }

    /// Display label with 1-based indices, `v_j` or `u_i^j`.
    pub fn label(self) -> String {
        match self {
            Role::GVertex { g } => format!("v_{}", g + 1),
            Role::CopyVertex { g, h } => format!("u_{}^{}", h + 1, g + 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EdgeClass {
    /// Edge of `G` itself.
    GEdge,
    /// Edge `h_edge` (canonical index in `H`) inside the copy owned by `g`.
    CopyEdge { g: usize, h_edge: usize },
    /// Corona edge joining `G` vertex `g` to its copy of `H` vertex `h`.
    CoronaEdge { g: usize, h: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoronaMap {
    pub n_g: usize,
    pub n_h: usize,
    pub roles: Vec<Role>,
    pub edge_classes: Vec<EdgeClass>,
}

impl CoronaMap {
    pub fn g_vertex(&self, g: usize) -> usize {
        g
    }

    pub fn copy_vertex(&self, g: usize, h: usize) -> usize {
        self.n_g + g * self.n_h + h
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn corona_edge_count(&self) -> usize {
        self.edge_classes
            .iter()
            .filter(|c| matches!(c, EdgeClass::CoronaEdge { .. }))
            .count()
    }

    /// Owning `G` vertex of a combined-graph edge.
    pub fn edge_owner(&self, graph: &Graph, e: usize) -> Option<usize> {
        match self.edge_classes[e] {
            EdgeClass::GEdge => None,
            EdgeClass::CopyEdge { g, .. } | EdgeClass::CoronaEdge { g, .. } => {
                debug_assert_eq!(self.roles[graph.edge(e).1].owner(), g);
                Some(g)
            }
        }
    }
}

/// Builds `G ∘ H` and its role map. With an empty `H` the result is `G`.
pub fn corona(g: &Graph, h: &Graph) -> (Graph, CoronaMap) {
    let n_g = g.vertex_count();
    let n_h = h.vertex_count();
    let copy = |j: usize, i: usize| n_g + j * n_h + i;

    let mut edges: Vec<(usize, usize)> =
        Vec::with_capacity(g.edge_count() + n_g * (h.edge_count() + n_h));
    edges.extend_from_slice(g.edges());
    for j in 0..n_g {
        edges.extend(h.edges().iter().map(|&(a, b)| (copy(j, a), copy(j, b))));
        edges.extend((0..n_h).map(|i| (j, copy(j, i))));
    }
    let graph = Graph::new(n_g * (1 + n_h), edges).expect("corona of simple graphs is simple");

    let mut roles: Vec<Role> = (0..n_g).map(|g| Role::GVertex { g }).collect();
    for j in 0..n_g {
        roles.extend((0..n_h).map(|i| Role::CopyVertex { g: j, h: i }));
    }
    let edge_classes = graph
        .edges()
        .iter()
        .map(|&(a, b)| match (roles[a], roles[b]) {
            (Role::GVertex { .. }, Role::GVertex { .. }) => EdgeClass::GEdge,
            (Role::GVertex { g }, Role::CopyVertex { h, .. }) => EdgeClass::CoronaEdge { g, h },
            (Role::CopyVertex { g, h: x }, Role::CopyVertex { h: y, .. }) => EdgeClass::CopyEdge {
                g,
                h_edge: h.edge_index(x, y).expect("copy edge comes from H"),
            },
            (Role::CopyVertex { .. }, Role::GVertex { .. }) => {
                unreachable!("G vertices are numbered before copy vertices")
            }
        })
        .collect();

    let map = CoronaMap {
        n_g,
        n_h,
        roles,
        edge_classes,
    };
    (graph, map)
}
