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

//! Proper edge colorings: a Misra–Gries style Vizing coloring with
//! `Δ + 1` colors and an exhaustive chromatic-index oracle.

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeColorError {
    #[error("search exceeded the budget of {0} nodes")]
    BudgetExceeded(u64),
    #[error("color map is not a bijection on 1..={0}")]
    NotABijection(u32),
    #[error("palette of {0} colors is too large for exhaustive search")]
    TooManyColors(u32),
}

/// Edge colors indexed by canonical edge order, each in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    pub colors: Vec<u32>,
    pub k: u32,
}

impl EdgeColoring {
    pub fn color(&self, e: usize) -> u32 {
        self.colors[e]
    }

    pub fn is_proper(&self, graph: &Graph) -> bool {
        self.colors.len() == graph.edge_count()
            && self.colors.iter().all(|&c| (1..=self.k).contains(&c))
            && (0..graph.vertex_count()).all(|v| {
                let mut seen = self.colors_at(graph, v);
                let before = seen.len();
                seen.dedup();
                seen.len() == before
            })
    }

    /// Sorted colors on the edges at `v` (the set `S_c'(v)` when proper).
    pub fn colors_at(&self, graph: &Graph, v: usize) -> Vec<u32> {
        let mut out: Vec<u32> = graph
            .incident(v)
            .iter()
            .map(|&(_, e)| self.colors[e])
            .collect();
        out.sort_unstable();
        out
    }

    /// Product of the colors at `v`; 1 for an isolated vertex.
    pub fn product_at(&self, graph: &Graph, v: usize) -> BigUint {
        graph
            .incident(v)
            .iter()
            .fold(BigUint::from(1u32), |acc, &(_, e)| acc * self.colors[e])
    }

    pub fn max_used(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }
}

/// Relabels colors: color `c` becomes `perm[c - 1]`.
pub fn permute_colors(
    coloring: &EdgeColoring,
    perm: &[u32],
) -> Result<EdgeColoring, EdgeColorError> {
    let k = coloring.k;
    let mut seen = vec![false; k as usize + 1];
    if perm.len() != k as usize {
        return Err(EdgeColorError::NotABijection(k));
    }
    for &p in perm {
        if p == 0 || p > k || std::mem::replace(&mut seen[p as usize], true) {
            return Err(EdgeColorError::NotABijection(k));
        }
    }
    Ok(EdgeColoring {
        colors: coloring
            .colors
            .iter()
            .map(|&c| perm[c as usize - 1])
            .collect(),
        k,
    })
}

struct Vizing<'g> {
    graph: &'g Graph,
    k: usize,
    edge_color: Vec<usize>,
    // at[v * (k + 1) + c] = neighbor reached from v by the edge colored c
    at: Vec<usize>,
}

impl<'g> Vizing<'g> {
    fn new(graph: &'g Graph, k: usize) -> Self {
        Vizing {
            graph,
            k,
            edge_color: vec![0; graph.edge_count()],
            at: vec![NONE; graph.vertex_count() * (k + 1)],
        }
    }

    fn slot(&self, v: usize, c: usize) -> usize {
        v * (self.k + 1) + c
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[self.slot(v, c)] == NONE
    }

    fn lowest_free(&self, v: usize) -> usize {
        (1..=self.k)
            .find(|&c| self.is_free(v, c))
            .expect("a vertex of degree at most Δ always misses one of Δ+1 colors")
    }

    fn set(&mut self, e: usize, c: usize) {
        let (a, b) = self.graph.edge(e);
        self.edge_color[e] = c;
        let (sa, sb) = (self.slot(a, c), self.slot(b, c));
        self.at[sa] = b;
        self.at[sb] = a;
    }

    fn clear(&mut self, e: usize) {
        let c = self.edge_color[e];
        if c == 0 {
            return;
        }
        let (a, b) = self.graph.edge(e);
        let (sa, sb) = (self.slot(a, c), self.slot(b, c));
        self.at[sa] = NONE;
        self.at[sb] = NONE;
        self.edge_color[e] = 0;
    }

    fn edge_between(&self, a: usize, b: usize) -> usize {
        self.graph
            .edge_index(a, b)
            .expect("fan vertices are neighbors")
    }

    /// Maximal fan at `u` starting from the uncolored edge to `v`; each
    /// extension takes the smallest neighbor whose edge color is free on
    /// the current last fan vertex.
    fn fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        let mut in_fan = vec![false; self.graph.vertex_count()];
        in_fan[v] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = self.graph.incident(u).iter().find(|&&(w, e)| {
                !in_fan[w] && self.edge_color[e] != 0 && self.is_free(last, self.edge_color[e])
            });
            match next {
                Some(&(w, _)) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => return fan,
            }
        }
    }

    /// Swaps colors `c` and `d` along the alternating path that leaves `u`
    /// on its `d` edge.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut cur, mut follow) = (u, d);
        loop {
            let next = self.at[self.slot(cur, follow)];
            if next == NONE {
                break;
            }
            path.push(self.edge_between(cur, next));
            cur = next;
            follow = if follow == d { c } else { d };
        }
        let recolor: Vec<(usize, usize)> = path
            .iter()
            .map(|&e| (e, if self.edge_color[e] == c { d } else { c }))
            .collect();
        for &(e, _) in &recolor {
            self.clear(e);
        }
        for (e, col) in recolor {
            self.set(e, col);
        }
    }

    fn color_edge(&mut self, e: usize) {
        let (u, v) = self.graph.edge(e);
        let fan = self.fan(u, v);
        let c = self.lowest_free(u);
        let d = self.lowest_free(*fan.last().unwrap());
        if c != d {
            self.invert_path(u, c, d);
        }
        // first fan vertex with d free such that the prefix is still a fan
        let mut w_idx = None;
        for i in 0..fan.len() {
            if i > 0 {
                let col = self.edge_color[self.edge_between(u, fan[i])];
                if col == 0 || !self.is_free(fan[i - 1], col) {
                    break;
                }
            }
            if self.is_free(fan[i], d) {
                w_idx = Some(i);
                break;
            }
        }
        let w_idx =
            w_idx.expect("Misra-Gries invariant: some fan prefix ends at a vertex missing d");
        for i in 0..w_idx {
            let cur = self.edge_between(u, fan[i]);
            let nxt = self.edge_between(u, fan[i + 1]);
            let col = self.edge_color[nxt];
            self.clear(nxt);
            self.set(cur, col);
        }
        let last = self.edge_between(u, fan[w_idx]);
        self.set(last, d);
    }
}

/// Proper edge coloring with palette bound `k = Δ(H) + 1` (`k = 1` when
/// `H` is edgeless). Edges are inserted in canonical order; the result is
/// deterministic.
pub fn vizing_color(graph: &Graph) -> EdgeColoring {
    let k = graph.max_degree() + 1;
    let mut state = Vizing::new(graph, k);
    for e in 0..graph.edge_count() {
        state.color_edge(e);
    }
    EdgeColoring {
        colors: state.edge_color.iter().map(|&c| c as u32).collect(),
        k: k as u32,
    }
}

/// Chromatic index by exhaustive backtracking, with a witness coloring.
///
/// Tries `k = Δ` and then `Δ + 1`. Edges are colored in canonical order and
/// a new color is only opened in increasing order of first use. The budget
/// counts color assignments across the whole call.
pub fn chi_prime_exact(graph: &Graph, budget: u64) -> Result<(u32, EdgeColoring), EdgeColorError> {
    let m = graph.edge_count();
    if m == 0 {
        return Ok((
            1,
            EdgeColoring {
                colors: Vec::new(),
                k: 1,
            },
        ));
    }
    let delta = graph.max_degree() as u32;
    if delta + 1 > 127 {
        return Err(EdgeColorError::TooManyColors(delta + 1));
    }
    let mut nodes = 0u64;
    for k in delta..=delta + 1 {
        let mut colors = vec![0u32; m];
        let mut used = vec![0u128; graph.vertex_count()];
        if backtrack_edges(graph, k, 0, 0, &mut colors, &mut used, &mut nodes, budget)? {
            return Ok((k, EdgeColoring { colors, k }));
        }
    }
    unreachable!("every simple graph is (Δ+1)-edge-colorable")
}

#[allow(clippy::too_many_arguments)]
fn backtrack_edges(
    graph: &Graph,
    k: u32,
    e: usize,
    max_used: u32,
    colors: &mut [u32],
    used: &mut [u128],
    nodes: &mut u64,
    budget: u64,
) -> Result<bool, EdgeColorError> {
    if e == colors.len() {
        return Ok(true);
    }
    let (a, b) = graph.edge(e);
    let blocked = used[a] | used[b];
    for c in 1..=k.min(max_used + 1) {
        let bit = 1u128 << c;
        if blocked & bit != 0 {
            continue;
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(EdgeColorError::BudgetExceeded(budget));
        }
        colors[e] = c;
        used[a] |= bit;
        used[b] |= bit;
        if backtrack_edges(
            graph,
            k,
            e + 1,
            max_used.max(c),
            colors,
            used,
            nodes,
            budget,
        )? {
            return Ok(true);
        }
        used[a] &= !bit;
        used[b] &= !bit;
        colors[e] = 0;
    }
    Ok(false)
}
