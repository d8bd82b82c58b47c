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

//! Total coloring of `G ∘ H` with at most `Δ(G ∘ H) + 3` colors in which
//! adjacent vertices have distinct color products.
//!
//! Ingredients: a base coloring `c''` of `G` (exact search with
//! `Δ(G) + 3` colors), a `(Δ(H) + 1)`-edge coloring `c'` of `H`, and the
//! order `σ` of `H`'s vertices by nondecreasing product of incident `c'`
//! colors. Copies of `H` keep `c'`; copy vertices and corona edges get
//! colors that grow with their rank in `σ`, so products inside each copy
//! strictly increase along `σ`.
//!
//! * `Δ(G) = 1`, per single-edge component `v1 v2`: if color 4 is missing
//!   at `u_σ(1)`, rank `r` gets vertex color `r + 3` and corona edge color
//!   `r + 4` and `c''` is kept (Case 1.2). Otherwise rank 1 takes
//!   `β = min({1,2,3} − S_c'(u_σ(1)))` on the copy vertex and on `v1 v2`,
//!   its corona edges take 5, and `v1`, `v2` get the other two colors of
//!   `{1,2,3}` (Case 1.1).
//! * `Δ(G) ∈ {2, 3}`: rank 1 takes `α_j`, the smallest color in `1..=5`
//!   avoiding `S_c'(u_σ(1))` and `c''(v_j)`, with corona edge `Δ(G) + 4`;
//!   rank `r ≥ 2` gets `Δ(G) + r + 2` and `Δ(G) + r + 3` (Case 2). The
//!   offset uses the global `Δ(G)` for every component.
//! * Anything else (edgeless `G`, isolated vertices next to `Δ(G) = 1`,
//!   empty `H`) is solved by exact search on that component's corona.
//!
//! The assembled coloring is always verified. A component whose
//! case-based coloring fails verification is re-colored by exact search.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::coloring::TotalColoring;
use crate::corona::{corona, CoronaMap};
use crate::edge_color::{permute_colors, vizing_color, EdgeColoring};
use crate::graph::Graph;
use crate::search::{
    base_coloring_with_budget, npdtc_search, SearchError, SearchOutcome, DEFAULT_BUDGET,
};
use crate::verify::{verify_npd, Element, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Case1_1,
    Case1_2,
    Case2,
    Fallback,
}

impl CaseTag {
    pub fn name(self) -> &'static str {
        match self {
            CaseTag::Case1_1 => "Case1_1",
            CaseTag::Case1_2 => "Case1_2",
            CaseTag::Case2 => "Case2",
            CaseTag::Fallback => "Fallback",
        }
    }
}

/// Which branch of the construction `G` falls into. The Case 1 subcase
/// depends on `H` and is decided in [`case1_color`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseFamily {
    Case1,
    Case2,
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("{graph} is not subcubic: vertex {vertex} has degree {degree}")]
    NotSubcubic {
        graph: &'static str,
        vertex: usize,
        degree: usize,
    },
    #[error("G must have at least one vertex")]
    EmptyG,
    #[error("no avoidance color available for copy vertex {0}")]
    NoAvoidColor(usize),
    #[error("base coloring failed: {0}")]
    Base(#[from] SearchError),
    #[error("fallback search on component {component:?} exceeded {budget} nodes")]
    FallbackBudgetExceeded { component: Vec<usize>, budget: u64 },
    #[error("no coloring of component {component:?} within {bound} colors")]
    FallbackExhausted { component: Vec<usize>, bound: u32 },
    #[error("constructed coloring failed verification:\n{0}")]
    VerificationFailed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorOptions {
    /// Relabel `c'` so that color 4 misses `u_σ(1)` when possible, steering
    /// `Δ(G) = 1` into Case 1.2.
    pub normalize: bool,
    pub base_budget: u64,
    pub fallback_budget: u64,
}

impl Default for ColorOptions {
    fn default() -> Self {
        ColorOptions {
            normalize: true,
            base_budget: DEFAULT_BUDGET,
            fallback_budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTrace {
    /// Vertices of `G` in this component.
    pub vertices: Vec<usize>,
    pub case: CaseTag,
    /// `β` for Case 1.1, `α_j` per component vertex for Case 2.
    pub avoid_colors: Vec<u32>,
    /// Set when a case-based coloring failed verification and the
    /// component was re-colored by search.
    pub retried: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub case: CaseTag,
    pub sigma: Vec<usize>,
    /// Relabeling applied to `c'` by normalization, `perm[c - 1]` is the
    /// new name of color `c`.
    pub permutation: Option<Vec<u32>>,
    pub palette_bound: u32,
    pub components: Vec<ComponentTrace>,
}

#[derive(Debug, Clone)]
pub struct CoronaColoring {
    pub graph: Graph,
    pub map: CoronaMap,
    pub coloring: TotalColoring,
    pub trace: ConstructionTrace,
    pub base: TotalColoring,
    pub edge_coloring: EdgeColoring,
    pub report: VerifyReport,
}

/// Vertices of `H` by nondecreasing `Π_c'`, ties by index.
pub fn sort_by_product(edge_coloring: &EdgeColoring, h: &Graph) -> Vec<usize> {
    let mut keyed: Vec<_> = (0..h.vertex_count())
        .map(|u| (edge_coloring.product_at(h, u), u))
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, u)| u).collect()
}

fn check_subcubic(graph: &Graph, name: &'static str) -> Result<(), ColorError> {
    match (0..graph.vertex_count()).find(|&v| graph.degree(v) > 3) {
        Some(vertex) => Err(ColorError::NotSubcubic {
            graph: name,
            vertex,
            degree: graph.degree(vertex),
        }),
        None => Ok(()),
    }
}

pub fn dispatch_case(g: &Graph) -> Result<CaseFamily, ColorError> {
    check_subcubic(g, "G")?;
    Ok(match g.max_degree() {
        0 => CaseFamily::Fallback,
        1 => CaseFamily::Case1,
        _ => CaseFamily::Case2,
    })
}

/// Everything the per-component colorings read.
#[derive(Debug, Clone, Copy)]
pub struct CoronaInstance<'a> {
    pub g: &'a Graph,
    pub h: &'a Graph,
    pub corona: &'a Graph,
    pub map: &'a CoronaMap,
    pub base: &'a TotalColoring,
    pub edge_coloring: &'a EdgeColoring,
    pub sigma: &'a [usize],
}

impl CoronaInstance<'_> {
    fn corona_edge(&self, j: usize, i: usize) -> usize {
        self.corona
            .edge_index(j, self.map.copy_vertex(j, i))
            .expect("corona edge exists")
    }

    fn g_edge(&self, a: usize, b: usize) -> usize {
        self.corona
            .edge_index(a, b)
            .expect("G edge exists in the corona")
    }

    fn keep_base(&self, component: &[usize], out: &mut TotalColoring) {
        for &v in component {
            out.vertex_colors[v] = self.base.vertex(v);
            for &(u, e) in self.g.incident(v) {
                if v < u {
                    out.edge_colors[self.g_edge(v, u)] = self.base.edge(e);
                }
            }
        }
    }

    fn copy_edge_colors(&self, j: usize, out: &mut TotalColoring) {
        for (e, &(a, b)) in self.h.edges().iter().enumerate() {
            let idx = self
                .corona
                .edge_index(self.map.copy_vertex(j, a), self.map.copy_vertex(j, b))
                .expect("copy edge exists");
            out.edge_colors[idx] = self.edge_coloring.color(e);
        }
    }

    /// Colors copy vertices and corona edges for ranks `from..=n_h`:
    /// vertex `offset + r`, corona edge `offset + r + 1`.
    fn ranked(&self, j: usize, from: usize, offset: u32, out: &mut TotalColoring) {
        for r in from..=self.sigma.len() {
            let i = self.sigma[r - 1];
            out.vertex_colors[self.map.copy_vertex(j, i)] = offset + r as u32;
            out.edge_colors[self.corona_edge(j, i)] = offset + r as u32 + 1;
        }
    }
}

/// Case 1 on a single-edge component `v1 v2` (`v1 < v2`) of `G`.
pub fn case1_color(
    inst: &CoronaInstance<'_>,
    v1: usize,
    v2: usize,
    out: &mut TotalColoring,
) -> Result<ComponentTrace, ColorError> {
    let first = inst.sigma[0];
    let seen = inst.edge_coloring.colors_at(inst.h, first);
    for j in [v1, v2] {
        inst.copy_edge_colors(j, out);
    }
    if !seen.contains(&4) {
        inst.keep_base(&[v1, v2], out);
        for j in [v1, v2] {
            inst.ranked(j, 1, 3, out);
        }
        return Ok(ComponentTrace {
            vertices: vec![v1, v2],
            case: CaseTag::Case1_2,
            avoid_colors: Vec::new(),
            retried: false,
        });
    }

    let beta = (1..=3)
        .find(|c| !seen.contains(c))
        .ok_or(ColorError::NoAvoidColor(first))?;
    let mut rest = (1..=3).filter(|&c| c != beta);
    out.vertex_colors[v1] = rest.next().unwrap();
    out.vertex_colors[v2] = rest.next().unwrap();
    out.edge_colors[inst.g_edge(v1, v2)] = beta;
    for j in [v1, v2] {
        out.vertex_colors[inst.map.copy_vertex(j, first)] = beta;
        out.edge_colors[inst.corona_edge(j, first)] = 5;
        inst.ranked(j, 2, 3, out);
    }
    Ok(ComponentTrace {
        vertices: vec![v1, v2],
        case: CaseTag::Case1_1,
        avoid_colors: vec![beta],
        retried: false,
    })
}

/// Case 2 on one component of `G`, offset by the global `Δ(G)`.
pub fn case2_color(
    inst: &CoronaInstance<'_>,
    component: &[usize],
    delta_g: u32,
    out: &mut TotalColoring,
) -> Result<ComponentTrace, ColorError> {
    let first = inst.sigma[0];
    let seen = inst.edge_coloring.colors_at(inst.h, first);
    inst.keep_base(component, out);
    let mut alphas = Vec::with_capacity(component.len());
    for &j in component {
        let own = inst.base.vertex(j);
        let alpha = (1..=5)
            .find(|c| *c != own && !seen.contains(c))
            .ok_or(ColorError::NoAvoidColor(inst.map.copy_vertex(j, first)))?;
        inst.copy_edge_colors(j, out);
        out.vertex_colors[inst.map.copy_vertex(j, first)] = alpha;
        out.edge_colors[inst.corona_edge(j, first)] = delta_g + 4;
        inst.ranked(j, 2, delta_g + 2, out);
        alphas.push(alpha);
    }
    Ok(ComponentTrace {
        vertices: component.to_vec(),
        case: CaseTag::Case2,
        avoid_colors: alphas,
        retried: false,
    })
}

/// Exact search on the corona of one component, written back into `out`.
pub fn fallback_color(
    inst: &CoronaInstance<'_>,
    component: &[usize],
    bound: u32,
    budget: u64,
    out: &mut TotalColoring,
) -> Result<ComponentTrace, ColorError> {
    let sub = inst.g.induced(component);
    let (local, local_map) = corona(&sub, inst.h);
    let found = match npdtc_search(&local, bound, budget) {
        Ok(SearchOutcome::Found(c)) => c,
        Ok(SearchOutcome::NotFound) => {
            return Err(ColorError::FallbackExhausted {
                component: component.to_vec(),
                bound,
            })
        }
        Err(SearchError::BudgetExceeded(budget)) => {
            return Err(ColorError::FallbackBudgetExceeded {
                component: component.to_vec(),
                budget,
            })
        }
        Err(e) => return Err(e.into()),
    };
    let global = |x: usize| match local_map.role(x) {
        crate::corona::Role::GVertex { g } => component[g],
        crate::corona::Role::CopyVertex { g, h } => inst.map.copy_vertex(component[g], h),
    };
    for x in 0..local.vertex_count() {
        out.vertex_colors[global(x)] = found.vertex(x);
    }
    for (e, &(a, b)) in local.edges().iter().enumerate() {
        let idx = inst
            .corona
            .edge_index(global(a), global(b))
            .expect("component corona embeds in the full corona");
        out.edge_colors[idx] = found.edge(e);
    }
    Ok(ComponentTrace {
        vertices: component.to_vec(),
        case: CaseTag::Fallback,
        avoid_colors: Vec::new(),
        retried: false,
    })
}

fn normalize(edge_coloring: &EdgeColoring, h: &Graph) -> Option<(EdgeColoring, Vec<u32>)> {
    let misses_four = |c: &EdgeColoring| match sort_by_product(c, h).first() {
        Some(&u) => !c.colors_at(h, u).contains(&4),
        None => true,
    };
    if misses_four(edge_coloring) || edge_coloring.k < 4 || edge_coloring.k > 8 {
        return None;
    }
    let mut perm: Vec<u32> = (1..=edge_coloring.k).collect();
    loop {
        if !next_permutation(&mut perm) {
            return None;
        }
        let candidate = permute_colors(edge_coloring, &perm).expect("perm is a bijection");
        if misses_four(&candidate) {
            return Some((candidate, perm));
        }
    }
}

fn next_permutation(items: &mut [u32]) -> bool {
    let Some(i) = (1..items.len()).rev().find(|&i| items[i - 1] < items[i]) else {
        return false;
    };
    let j = (i..items.len())
        .rev()
        .find(|&j| items[j] > items[i - 1])
        .unwrap();
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

fn failing_components(report: &VerifyReport, corona: &Graph, map: &CoronaMap) -> BTreeSet<usize> {
    let owner = |el: &Element| match *el {
        Element::Vertex(v) => map.role(v).owner(),
        Element::Edge(e) => map.role(corona.edge(e).0).owner(),
    };
    report
        .violations
        .iter()
        .flat_map(|v| v.elements.iter().map(owner))
        .collect()
}

/// Colors `G ∘ H`; the result always passes the product-distinguishing
/// verifier and uses at most `Δ(G) + n_h + 3` colors.
pub fn color_corona(
    g: &Graph,
    h: &Graph,
    options: &ColorOptions,
) -> Result<CoronaColoring, ColorError> {
    if g.vertex_count() == 0 {
        return Err(ColorError::EmptyG);
    }
    check_subcubic(g, "G")?;
    check_subcubic(h, "H")?;
    let family = dispatch_case(g)?;
    let (graph, map) = corona(g, h);
    let n_h = h.vertex_count();
    let delta_g = g.max_degree() as u32;
    let bound = delta_g + n_h as u32 + 3;

    let base = base_coloring_with_budget(g, options.base_budget)?;
    let mut edge_coloring = vizing_color(h);
    let mut permutation = None;
    if options.normalize && family == CaseFamily::Case1 {
        if let Some((relabeled, perm)) = normalize(&edge_coloring, h) {
            edge_coloring = relabeled;
            permutation = Some(perm);
        }
    }
    let sigma = sort_by_product(&edge_coloring, h);
    let inst = CoronaInstance {
        g,
        h,
        corona: &graph,
        map: &map,
        base: &base,
        edge_coloring: &edge_coloring,
        sigma: &sigma,
    };

    let components = g.components();
    let mut out = TotalColoring::uncolored(&graph, bound);
    let mut traces = Vec::with_capacity(components.len());
    for comp in &components {
        let trace = match family {
            _ if n_h == 0 => fallback_color(&inst, comp, bound, options.fallback_budget, &mut out)?,
            CaseFamily::Case1 if comp.len() == 2 => case1_color(&inst, comp[0], comp[1], &mut out)?,
            CaseFamily::Case2 => case2_color(&inst, comp, delta_g, &mut out)?,
            _ => fallback_color(&inst, comp, bound, options.fallback_budget, &mut out)?,
        };
        traces.push(trace);
    }

    let mut report = verify_npd(&graph, &out).expect("coloring is sized for the corona");
    if !report.ok {
        let bad = failing_components(&report, &graph, &map);
        for trace in traces.iter_mut().filter(|t| bad.contains(&t.vertices[0])) {
            if trace.case == CaseTag::Fallback {
                return Err(ColorError::VerificationFailed(report.to_string()));
            }
            let mut redo = fallback_color(
                &inst,
                &trace.vertices,
                bound,
                options.fallback_budget,
                &mut out,
            )?;
            redo.retried = true;
            *trace = redo;
        }
        report = verify_npd(&graph, &out).expect("coloring is sized for the corona");
        if !report.ok {
            return Err(ColorError::VerificationFailed(report.to_string()));
        }
    }
    out.max_color = out.max_used();
    debug_assert!(out.max_color <= bound);

    let case = if traces.iter().any(|t| t.case == CaseTag::Fallback) {
        CaseTag::Fallback
    } else {
        traces[0].case
    };
    Ok(CoronaColoring {
        graph,
        map,
        coloring: out,
        trace: ConstructionTrace {
            case,
            sigma,
            permutation,
            palette_bound: bound,
            components: traces,
        },
        base,
        edge_coloring,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn products(result: &CoronaColoring) -> Vec<u64> {
        result
            .report
            .products
            .iter()
            .map(|p| u64::try_from(p.clone().unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn sigma_examples() {
        let k2 = complete(2);
        assert_eq!(sort_by_product(&vizing_color(&k2), &k2), vec![0, 1]);

        let p3 = path(3);
        let c = EdgeColoring {
            colors: vec![1, 2],
            k: 3,
        };
        // products: 0 -> 1, 1 -> 2, 2 -> 2
        assert_eq!(sort_by_product(&c, &p3), vec![0, 1, 2]);

        let k3 = complete(3);
        // edges (0,1), (0,2), (1,2) colored 1, 2, 3: products 2, 3, 6
        let c = EdgeColoring {
            colors: vec![1, 2, 3],
            k: 3,
        };
        assert_eq!(sort_by_product(&c, &k3), vec![0, 1, 2]);
        let c = EdgeColoring {
            colors: vec![3, 2, 1],
            k: 3,
        };
        // products 6, 3, 2
        assert_eq!(sort_by_product(&c, &k3), vec![2, 1, 0]);

        let mixed = Graph::new(3, [(1, 2)]).unwrap();
        let c = EdgeColoring {
            colors: vec![2],
            k: 2,
        };
        assert_eq!(sort_by_product(&c, &mixed), vec![0, 1, 2]);
    }

    #[test]
    fn dispatch() {
        assert_eq!(dispatch_case(&complete(2)).unwrap(), CaseFamily::Case1);
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(dispatch_case(&c5).unwrap(), CaseFamily::Case2);
        assert_eq!(
            dispatch_case(&Graph::empty(1)).unwrap(),
            CaseFamily::Fallback
        );
        assert!(matches!(
            dispatch_case(&complete(5)),
            Err(ColorError::NotSubcubic { graph: "G", .. })
        ));
    }

    #[test]
    fn k2_corona_k2_case_1_2() {
        let r = color_corona(&complete(2), &complete(2), &ColorOptions::default()).unwrap();
        assert_eq!(r.trace.case, CaseTag::Case1_2);
        assert_eq!(r.coloring.max_color, 6);
        assert_eq!(products(&r), vec![90, 180, 20, 30, 20, 30]);
        assert_eq!(r.coloring.vertex_colors, vec![1, 2, 4, 5, 4, 5]);
    }

    #[test]
    fn k2_corona_single_vertex() {
        let r = color_corona(&complete(2), &Graph::empty(1), &ColorOptions::default()).unwrap();
        assert_eq!(r.trace.case, CaseTag::Case1_2);
        assert_eq!(r.coloring.max_color, 5);
        assert_eq!(r.coloring.vertex(2), 4);
    }

    #[test]
    fn k3_corona_k4_case_2() {
        let r = color_corona(&complete(3), &complete(4), &ColorOptions::default()).unwrap();
        assert_eq!(r.trace.case, CaseTag::Case2);
        assert!(r.coloring.max_color <= 9);
        assert!(r.report.ok);
        for j in 0..3 {
            let sigma = &r.trace.sigma;
            // ranks 2..4 take vertex colors 6, 7, 8 and corona edges 7, 8, 9
            for (rank, &i) in sigma.iter().enumerate().skip(1) {
                let x = r.map.copy_vertex(j, i);
                assert_eq!(r.coloring.vertex(x), 2 + rank as u32 + 1 + 2);
                let e = r.graph.edge_index(j, x).unwrap();
                assert_eq!(r.coloring.edge(e), 2 + rank as u32 + 1 + 3);
            }
            let first = r.map.copy_vertex(j, sigma[0]);
            assert_eq!(r.coloring.edge(r.graph.edge_index(j, first).unwrap()), 6);
        }
    }

    #[test]
    fn k3_with_single_vertex_h() {
        let r = color_corona(&complete(3), &Graph::empty(1), &ColorOptions::default()).unwrap();
        assert_eq!(r.trace.case, CaseTag::Case2);
        assert!(r.coloring.max_color <= 6);
    }

    #[test]
    fn cubic_g_with_edgeless_h() {
        let k4 = complete(4);
        let r = color_corona(&k4, &Graph::empty(2), &ColorOptions::default()).unwrap();
        assert_eq!(r.trace.case, CaseTag::Case2);
        for (j, &alpha) in r.trace.components[0].avoid_colors.iter().enumerate() {
            let own = r.base.vertex(j);
            assert_eq!(alpha, if own == 1 { 2 } else { 1 });
        }
        let second = r.map.copy_vertex(0, r.trace.sigma[1]);
        assert_eq!(r.coloring.vertex(second), 7);
        assert_eq!(r.coloring.edge(r.graph.edge_index(0, second).unwrap()), 8);
        assert_eq!(r.coloring.max_color, 8);
    }

    #[test]
    fn fallback_shapes() {
        let r = color_corona(&Graph::empty(1), &complete(2), &ColorOptions::default()).unwrap();
        assert_eq!(r.trace.case, CaseTag::Fallback);
        assert!(r.coloring.max_color <= 5);

        let r = color_corona(&complete(3), &Graph::empty(0), &ColorOptions::default()).unwrap();
        assert_eq!(r.trace.case, CaseTag::Fallback);
        assert!(r.coloring.max_color <= 5);

        // isolated vertex next to an edge: Case 1 on the edge, search on the vertex
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let r = color_corona(&g, &complete(2), &ColorOptions::default()).unwrap();
        let cases: Vec<CaseTag> = r.trace.components.iter().map(|c| c.case).collect();
        assert_eq!(cases, vec![CaseTag::Case1_2, CaseTag::Fallback]);
        assert_eq!(r.trace.case, CaseTag::Fallback);
    }

    #[test]
    fn rejects_non_subcubic() {
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(matches!(
            color_corona(&star, &complete(2), &ColorOptions::default()),
            Err(ColorError::NotSubcubic { graph: "G", .. })
        ));
        assert!(matches!(
            color_corona(&complete(2), &star, &ColorOptions::default()),
            Err(ColorError::NotSubcubic { graph: "H", .. })
        ));
        assert_eq!(
            color_corona(&Graph::empty(0), &complete(2), &ColorOptions::default()).unwrap_err(),
            ColorError::EmptyG
        );
    }

    #[test]
    fn case_1_1_by_hand() {
        // H = K4 with a coloring whose 4-class is a perfect matching, so every
        // vertex sees color 4 and u_σ(1) does too.
        let h = complete(4);
        // edges (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
        let c = EdgeColoring {
            colors: vec![4, 1, 2, 2, 1, 4],
            k: 4,
        };
        assert!(c.is_proper(&h));
        let g = complete(2);
        let (graph, map) = corona(&g, &h);
        let base = crate::search::base_coloring(&g).unwrap();
        let sigma = sort_by_product(&c, &h);
        let inst = CoronaInstance {
            g: &g,
            h: &h,
            corona: &graph,
            map: &map,
            base: &base,
            edge_coloring: &c,
            sigma: &sigma,
        };
        let mut out = TotalColoring::uncolored(&graph, 8);
        let trace = case1_color(&inst, 0, 1, &mut out).unwrap();
        assert_eq!(trace.case, CaseTag::Case1_1);
        assert_eq!(trace.avoid_colors, vec![3]);
        assert_eq!((out.vertex(0), out.vertex(1)), (1, 2));
        assert_eq!(out.edge(0), 3);
        let report = verify_npd(&graph, &out).unwrap();
        assert!(report.ok, "{report}");
        assert!(out.max_used() <= 1 + 4 + 3);
        // products at v1 and v2 share every factor except the vertex color
        let p0 = report.products[0].clone().unwrap();
        let p1 = report.products[1].clone().unwrap();
        assert_eq!(p1, p0 * BigUint::from(2u32));
    }

    #[test]
    fn next_permutation_is_lexicographic() {
        let mut p = vec![1, 2, 3];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![1, 3, 2]);
        assert_eq!(seen[5], vec![3, 2, 1]);
    }
}
