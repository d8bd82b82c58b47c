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

//! Isomorph-free enumeration of small subcubic graphs.
//!
//! Canonical forms come from color refinement plus individualization: the
//! ordered equitable partition is refined, non-singleton cells are split
//! by individualizing each member in turn, and the smallest upper-triangle
//! adjacency code over all discrete leaves is the canonical code.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Largest vertex count supported by [`canonical_code`] (the code is an
/// upper-triangle bit string in a `u128`).
pub const MAX_CANONICAL_N: usize = 16;

/// Canonical code of a graph; two graphs with the same vertex count are
/// isomorphic iff their codes are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub n: usize,
    pub bits: u128,
}

impl CanonicalCode {
    pub fn to_graph(self) -> Graph {
        let mut edges = Vec::new();
        let mut bit = 0;
        for b in 1..self.n {
            for a in 0..b {
                if self.bits >> bit & 1 == 1 {
                    edges.push((a, b));
                }
                bit += 1;
            }
        }
        Graph::new(self.n, edges).expect("code encodes a simple graph")
    }
}

/// Code of `graph` under the labeling `order[i] -> i`.
fn code_under(graph: &Graph, order: &[usize]) -> u128 {
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bits = 0u128;
    for &(a, b) in graph.edges() {
        let (x, y) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
        bits |= 1u128 << (y * (y - 1) / 2 + x);
    }
    bits
}

/// Refines an ordered partition until equitable. Cells split by the
/// number of neighbors each vertex has in every cell; split order depends
/// only on those counts, so the result is labeling-invariant.
fn refine(graph: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = graph.vertex_count();
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; cells.len()];
                    for u in graph.neighbors(v) {
                        counts[cell_of[u]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search_leaves(graph: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<u128>) {
    let cells = refine(graph, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_under(graph, &order);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    };
    for &v in &cells[target] {
        let mut split = cells[..target].to_vec();
        split.push(vec![v]);
        split.push(cells[target].iter().copied().filter(|&u| u != v).collect());
        split.extend_from_slice(&cells[target + 1..]);
        search_leaves(graph, split, best);
    }
}

pub fn canonical_code(graph: &Graph) -> CanonicalCode {
    let n = graph.vertex_count();
    assert!(
        n <= MAX_CANONICAL_N,
        "canonical codes support up to {MAX_CANONICAL_N} vertices"
    );
    let mut best = None;
    if n > 0 {
        search_leaves(graph, vec![(0..n).collect()], &mut best);
    }
    CanonicalCode {
        n,
        bits: best.unwrap_or(0),
    }
}

/// All subcubic graphs on `n` vertices up to isomorphism, in ascending
/// order of canonical code. Built by attaching a new vertex to every
/// admissible neighbor set of every graph on `n - 1` vertices.
pub fn subcubic_graphs(n: usize) -> Vec<Graph> {
    subcubic_codes(n)
        .into_iter()
        .map(CanonicalCode::to_graph)
        .collect()
}

pub fn connected_subcubic_graphs(n: usize) -> Vec<Graph> {
    subcubic_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

fn subcubic_codes(n: usize) -> BTreeSet<CanonicalCode> {
    let mut level: BTreeSet<CanonicalCode> = BTreeSet::new();
    level.insert(canonical_code(&Graph::empty(0)));
    for size in 1..=n {
        let mut next = BTreeSet::new();
        for code in &level {
            let base = code.to_graph();
            let open: Vec<usize> = (0..size - 1).filter(|&v| base.degree(v) < 3).collect();
            for subset in subsets_up_to(&open, 3) {
                let mut edges = base.edges().to_vec();
                edges.extend(subset.iter().map(|&v| (v, size - 1)));
                let g = Graph::new(size, edges).expect("new vertex adds fresh edges");
                next.insert(canonical_code(&g));
            }
        }
        level = next;
    }
    level
}

fn subsets_up_to(items: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &x in items {
        let extended: Vec<Vec<usize>> = out
            .iter()
            .filter(|s| s.len() < max)
            .map(|s| {
                let mut t = s.clone();
                t.push(x);
                t
            })
            .collect();
        out.extend(extended);
    }
    out
}
