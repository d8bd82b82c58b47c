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

//! Exact backtracking search for neighbor product distinguishing total
//! colorings.
//!
//! Vertices and edges are both "elements". The solver keeps, per element
//! and color, a count of already-colored conflicting elements using that
//! color, picks the uncolored element with the fewest remaining colors,
//! and tries colors in ascending order. Product distinction is checked
//! when the last element of a closed star is colored.
//!
//! Relabeling colors does not preserve products, so ordinary color-class
//! symmetry breaking is unsound here. The only symmetry used is between
//! primes `p` with `2p > k`: such a prime divides no other color in the
//! palette, so swapping two of them is a multiplicative bijection and
//! keeps every product comparison intact.

use num_bigint::BigUint;
use thiserror::Error;

use crate::coloring::{TotalColoring, UNCOLORED};
use crate::graph::Graph;

/// Node budget used when the caller does not pick one.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search exceeded the budget of {0} nodes")]
    BudgetExceeded(u64),
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("graph is not subcubic (vertex {0} has degree above 3)")]
    NotSubcubic(usize),
    #[error("no neighbor product distinguishing {k}-total coloring found for {instance}")]
    BaseColoringMissing { k: u32, instance: String },
    #[error("base coloring search exceeded {budget} nodes on {instance}")]
    BaseBudgetExceeded { budget: u64, instance: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(TotalColoring),
    NotFound,
}

impl SearchOutcome {
    pub fn found(self) -> Option<TotalColoring> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            SearchOutcome::NotFound => None,
        }
    }
}

/// Shared node counter so that several searches can draw on one budget.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub limit: u64,
    pub used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    fn tick(&mut self) -> Result<(), SearchError> {
        self.used += 1;
        if self.used > self.limit {
            Err(SearchError::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Colors that may be permuted freely without changing any product
/// comparison: primes `p ≤ k` with `2p > k`.
pub fn interchangeable_colors(k: u32) -> Vec<u32> {
    (1..=k).filter(|&p| is_prime(p) && 2 * p > k).collect()
}

struct Solver<'g> {
    graph: &'g Graph,
    k: usize,
    conflicts: Vec<Vec<usize>>,
    // vertices whose closed star contains the element
    stars_of: Vec<Vec<usize>>,
    color: Vec<u32>,
    blocked: Vec<u16>,
    domain: Vec<u32>,
    remaining: Vec<u32>,
    product: Vec<Option<BigUint>>,
    used_count: Vec<u32>,
    class: Vec<u32>,
    class_rank: Vec<Option<usize>>,
    colored: usize,
}

impl<'g> Solver<'g> {
    fn new(graph: &'g Graph, k: u32) -> Self {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        let k = k as usize;
        let mut conflicts = vec![Vec::new(); n + m];
        let mut stars_of = vec![Vec::new(); n + m];
        for v in 0..n {
            stars_of[v].push(v);
            for &(u, e) in graph.incident(v) {
                conflicts[v].push(u);
                conflicts[v].push(n + e);
                stars_of[n + e].push(v);
            }
        }
        for (e, &(a, b)) in graph.edges().iter().enumerate() {
            let list = &mut conflicts[n + e];
            list.push(a);
            list.push(b);
            for x in [a, b] {
                list.extend(
                    graph
                        .incident(x)
                        .iter()
                        .filter(|&&(_, f)| f != e)
                        .map(|&(_, f)| n + f),
                );
            }
        }
        let class = interchangeable_colors(k as u32);
        let mut class_rank = vec![None; k + 1];
        for (i, &c) in class.iter().enumerate() {
            class_rank[c as usize] = Some(i);
        }
        Solver {
            graph,
            k,
            conflicts,
            stars_of,
            color: vec![UNCOLORED; n + m],
            blocked: vec![0; (n + m) * (k + 1)],
            domain: vec![k as u32; n + m],
            remaining: (0..n).map(|v| graph.degree(v) as u32 + 1).collect(),
            product: vec![None; n],
            used_count: vec![0; k + 1],
            class,
            class_rank,
            colored: 0,
        }
    }

    fn element_count(&self) -> usize {
        self.color.len()
    }

    fn is_blocked(&self, x: usize, c: usize) -> bool {
        self.blocked[x * (self.k + 1) + c] != 0
    }

    /// Uncolored element with the smallest domain; ties go to the element
    /// with more conflicts, then the smaller index.
    fn select(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_key = (u32::MAX, 0usize);
        for x in 0..self.element_count() {
            if self.color[x] != UNCOLORED {
                continue;
            }
            let key = (self.domain[x], self.conflicts[x].len());
            if key.0 < best_key.0
                || (key.0 == best_key.0 && key.1 > best_key.1)
                || best == usize::MAX
            {
                best = x;
                best_key = key;
            }
        }
        best
    }

    fn class_allowed(&self, c: usize) -> bool {
        match self.class_rank[c] {
            None => true,
            Some(rank) => {
                let opened = self
                    .class
                    .iter()
                    .take_while(|&&p| self.used_count[p as usize] > 0)
                    .count();
                rank <= opened
            }
        }
    }

    fn star_product(&self, v: usize) -> BigUint {
        let n = self.graph.vertex_count();
        let mut p = BigUint::from(self.color[v]);
        for &(_, e) in self.graph.incident(v) {
            p *= self.color[n + e];
        }
        p
    }

    /// Colors `x` with `c`. Returns false (with the assignment undone) when
    /// a neighbor's domain empties or a completed star collides.
    fn assign(&mut self, x: usize, c: usize) -> bool {
        self.color[x] = c as u32;
        self.used_count[c] += 1;
        self.colored += 1;
        let stride = self.k + 1;
        let mut ok = true;
        for i in 0..self.conflicts[x].len() {
            let y = self.conflicts[x][i];
            let slot = y * stride + c;
            if self.blocked[slot] == 0 {
                self.domain[y] -= 1;
                if self.domain[y] == 0 && self.color[y] == UNCOLORED {
                    ok = false;
                }
            }
            self.blocked[slot] += 1;
        }
        for i in 0..self.stars_of[x].len() {
            let w = self.stars_of[x][i];
            self.remaining[w] -= 1;
            if self.remaining[w] == 0 {
                let p = self.star_product(w);
                if self
                    .graph
                    .neighbors(w)
                    .any(|u| self.product[u].as_ref() == Some(&p))
                {
                    ok = false;
                }
                self.product[w] = Some(p);
            }
        }
        if !ok {
            self.unassign(x);
        }
        ok
    }

    fn unassign(&mut self, x: usize) {
        let c = self.color[x] as usize;
        let stride = self.k + 1;
        for i in 0..self.stars_of[x].len() {
            let w = self.stars_of[x][i];
            if self.remaining[w] == 0 {
                self.product[w] = None;
            }
            self.remaining[w] += 1;
        }
        for i in 0..self.conflicts[x].len() {
            let y = self.conflicts[x][i];
            let slot = y * stride + c;
            self.blocked[slot] -= 1;
            if self.blocked[slot] == 0 {
                self.domain[y] += 1;
            }
        }
        self.used_count[c] -= 1;
        self.colored -= 1;
        self.color[x] = UNCOLORED;
    }

    /// Next color after `from` that `x` may try, ascending.
    fn next_candidate(&self, x: usize, from: usize) -> Option<usize> {
        (from..=self.k).find(|&c| !self.is_blocked(x, c) && self.class_allowed(c))
    }

    fn run(&mut self, budget: &mut Budget) -> Result<bool, SearchError> {
        struct Frame {
            elem: usize,
            color: usize,
        }
        let total = self.element_count();
        let mut stack: Vec<Frame> = Vec::with_capacity(total);
        let mut descend = true;
        loop {
            if descend {
                if self.colored == total {
                    return Ok(true);
                }
                let x = self.select();
                stack.push(Frame { elem: x, color: 0 });
            }
            let top = stack
                .last_mut()
                .expect("stack is non-empty while searching");
            let x = top.elem;
            let mut from = top.color + 1;
            let mut placed = None;
            while let Some(c) = self.next_candidate(x, from) {
                budget.tick()?;
                if self.assign(x, c) {
                    placed = Some(c);
                    break;
                }
                from = c + 1;
            }
            match placed {
                Some(c) => {
                    stack.last_mut().unwrap().color = c;
                    descend = true;
                }
                None => {
                    stack.pop();
                    match stack.last() {
                        Some(parent) => {
                            let elem = parent.elem;
                            self.unassign(elem);
                            descend = false;
                        }
                        None => return Ok(false),
                    }
                }
            }
        }
    }

    fn into_coloring(self) -> TotalColoring {
        let n = self.graph.vertex_count();
        TotalColoring {
            vertex_colors: self.color[..n].to_vec(),
            edge_colors: self.color[n..].to_vec(),
            max_color: self.k as u32,
        }
    }
}

/// Two adjacent vertices whose closed stars both have size `k` use the
/// whole palette and necessarily share the product `k!`.
fn forced_collision(graph: &Graph, k: u32) -> bool {
    graph
        .edges()
        .iter()
        .any(|&(a, b)| graph.degree(a) + 1 == k as usize && graph.degree(b) + 1 == k as usize)
}

fn search_connected(
    graph: &Graph,
    k: u32,
    budget: &mut Budget,
) -> Result<SearchOutcome, SearchError> {
    if (graph.max_degree() + 1) as u32 > k || forced_collision(graph, k) {
        return Ok(SearchOutcome::NotFound);
    }
    let mut solver = Solver::new(graph, k);
    if solver.run(budget)? {
        Ok(SearchOutcome::Found(solver.into_coloring()))
    } else {
        Ok(SearchOutcome::NotFound)
    }
}

/// Searches each connected component separately (products are local) and
/// stitches the results together.
pub fn npdtc_search_with(
    graph: &Graph,
    k: u32,
    budget: &mut Budget,
) -> Result<SearchOutcome, SearchError> {
    if k == 0 {
        return Err(SearchError::EmptyPalette);
    }
    let components = graph.components();
    if components.len() <= 1 {
        return search_connected(graph, k, budget);
    }
    let mut out = TotalColoring::uncolored(graph, k);
    for comp in components {
        let sub = graph.induced(&comp);
        let SearchOutcome::Found(local) = search_connected(&sub, k, budget)? else {
            return Ok(SearchOutcome::NotFound);
        };
        for (i, &v) in comp.iter().enumerate() {
            out.vertex_colors[v] = local.vertex_colors[i];
        }
        for (e, &(a, b)) in sub.edges().iter().enumerate() {
            let global = graph
                .edge_index(comp[a], comp[b])
                .expect("induced edge exists in the parent graph");
            out.edge_colors[global] = local.edge_colors[e];
        }
    }
    Ok(SearchOutcome::Found(out))
}

/// A neighbor product distinguishing total coloring with colors in
/// `1..=k`, `NotFound` if none exists. Budget exhaustion is an error, never
/// reported as `NotFound`.
pub fn npdtc_search(graph: &Graph, k: u32, budget: u64) -> Result<SearchOutcome, SearchError> {
    npdtc_search_with(graph, k, &mut Budget::new(budget))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiProd {
    pub value: u32,
    pub witness: TotalColoring,
    pub nodes: u64,
}

/// Smallest `k` admitting a neighbor product distinguishing total
/// `k`-coloring, scanning upward from `Δ + 1`. The budget covers all
/// attempts together.
pub fn chi_prod_exact(graph: &Graph, budget: u64) -> Result<ChiProd, SearchError> {
    let mut budget = Budget::new(budget);
    let mut k = graph.max_degree() as u32 + 1;
    loop {
        if let SearchOutcome::Found(witness) = npdtc_search_with(graph, k, &mut budget)? {
            return Ok(ChiProd {
                value: k,
                witness,
                nodes: budget.used,
            });
        }
        k += 1;
    }
}

fn describe(graph: &Graph) -> String {
    format!(
        "graph(n={}, edges={:?})",
        graph.vertex_count(),
        graph.edges()
    )
}

/// Neighbor product distinguishing `(Δ(G) + 3)`-total coloring of a
/// subcubic graph, found by exact search.
pub fn base_coloring(graph: &Graph) -> Result<TotalColoring, SearchError> {
    base_coloring_with_budget(graph, DEFAULT_BUDGET)
}

pub fn base_coloring_with_budget(graph: &Graph, budget: u64) -> Result<TotalColoring, SearchError> {
    if let Some(v) = (0..graph.vertex_count()).find(|&v| graph.degree(v) > 3) {
        return Err(SearchError::NotSubcubic(v));
    }
    let k = graph.max_degree() as u32 + 3;
    match npdtc_search(graph, k, budget) {
        Ok(SearchOutcome::Found(c)) => Ok(c),
        Ok(SearchOutcome::NotFound) => Err(SearchError::BaseColoringMissing {
            k,
            instance: describe(graph),
        }),
        Err(SearchError::BudgetExceeded(budget)) => Err(SearchError::BaseBudgetExceeded {
            budget,
            instance: describe(graph),
        }),
        Err(e) => Err(e),
    }
}
