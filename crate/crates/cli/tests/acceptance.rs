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

//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use npdtc_cli::commands::{self, ColorSummary};
use npdtc_cli::sweep::run_sweep;
use npdtc_cli::{ColorArgs, GraphFormat, SweepArgs};
use npdtc_core::enumerate::{connected_subcubic_graphs, subcubic_graphs};
use npdtc_core::io::{
    emit_coloring_json, encode_graph6, parse_coloring_json, parse_graph6, ColoringDocument,
};
use npdtc_core::search::{chi_prod_exact, npdtc_search, DEFAULT_BUDGET};
use npdtc_core::{
    chi_prime_exact, color_corona, gen_random_subcubic, verify_npd, vizing_color, CaseTag,
    ColorOptions, CoronaColoring, Graph, Role, TotalColoring,
};
use tempfile::TempDir;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
}

fn product(g: &Graph, c: &TotalColoring, v: usize) -> u128 {
    g.incident(v)
        .iter()
        .fold(c.vertex(v) as u128, |acc, &(_, e)| acc * c.edge(e) as u128)
}

/// Independent check: proper total coloring, colors in `1..=bound`,
/// distinct products across every edge.
fn independent_npd(g: &Graph, c: &TotalColoring, bound: u32) -> Result<(), String> {
    for v in 0..g.vertex_count() {
        let mut star: Vec<u32> = g.incident(v).iter().map(|&(_, e)| c.edge(e)).collect();
        star.push(c.vertex(v));
        ensure(star.iter().all(|&x| (1..=bound).contains(&x)), || {
            format!("color outside 1..={bound} at vertex {v}")
        })?;
        star.sort();
        star.dedup();
        ensure(star.len() == g.degree(v) + 1, || {
            format!("closed star of {v} repeats a color")
        })?;
    }
    for &(a, b) in g.edges() {
        ensure(c.vertex(a) != c.vertex(b), || {
            format!("vertices {a},{b} share a color")
        })?;
        ensure(product(g, c, a) != product(g, c, b), || {
            format!("products collide on {a}-{b}")
        })?;
    }
    Ok(())
}

fn write_g6(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, format!("{}\n", encode_graph6(g))).unwrap();
    p
}

fn color_args(g: PathBuf, h: PathBuf) -> ColorArgs {
    ColorArgs {
        g,
        h,
        format: GraphFormat::Graph6,
        out: None,
        dot: None,
        no_normalize: false,
        budget: DEFAULT_BUDGET,
    }
}

fn case2_chain(r: &CoronaColoring) -> bool {
    (0..r.map.n_g).all(|j| {
        let ps: Vec<u128> = r
            .trace
            .sigma
            .iter()
            .map(|&i| product(&r.graph, &r.coloring, r.map.copy_vertex(j, i)))
            .collect();
        ps.windows(2).all(|w| w[0] < w[1])
    })
}

fn criterion1() -> Outcome {
    let dir = TempDir::new().unwrap();
    let gs: Vec<Graph> = (2..=6).flat_map(connected_subcubic_graphs).collect();
    let hs: Vec<Graph> = (1..=5).flat_map(subcubic_graphs).collect();
    let g_files: Vec<PathBuf> = gs
        .iter()
        .enumerate()
        .map(|(i, g)| write_g6(dir.path(), &format!("g{i}.g6"), g))
        .collect();
    let h_files: Vec<PathBuf> = hs
        .iter()
        .enumerate()
        .map(|(i, h)| write_g6(dir.path(), &format!("h{i}.g6"), h))
        .collect();
    let mut pairs = 0;
    let mut sink = Vec::new();
    for (g, gf) in gs.iter().zip(&g_files) {
        for (h, hf) in hs.iter().zip(&h_files) {
            let summary: ColorSummary =
                commands::color(&color_args(gf.clone(), hf.clone()), &mut sink).map_err(|e| {
                    format!(
                        "color failed on {} / {}: {e}",
                        encode_graph6(g),
                        encode_graph6(h)
                    )
                })?;
            let graph = summary.document.graph().map_err(|e| e.to_string())?;
            let coloring = summary.document.coloring();
            let bound = (graph.max_degree() + 3) as u32;
            ensure(
                bound == (g.max_degree() + h.vertex_count() + 3) as u32,
                || "Δ(G∘H) mismatch".into(),
            )?;
            ensure(summary.max_color <= bound, || {
                format!(
                    "{} colors > {bound} on {} / {}",
                    summary.max_color,
                    encode_graph6(g),
                    encode_graph6(h)
                )
            })?;
            ensure(verify_npd(&graph, &coloring).unwrap().ok, || {
                "verifier rejected".into()
            })?;
            independent_npd(&graph, &coloring, bound)
                .map_err(|e| format!("{e} on {} / {}", encode_graph6(g), encode_graph6(h)))?;
            pairs += 1;
        }
    }
    Ok(format!(
        "{pairs} pairs ({} G x {} H), all verified within Δ+3",
        gs.len(),
        hs.len()
    ))
}

fn criterion2() -> Outcome {
    let args = SweepArgs {
        ng_max: 3,
        nh_max: 3,
        count: None,
        seed: 0,
        oracle_max: 3,
        budget: DEFAULT_BUDGET,
        connected: false,
        log: None,
    };
    let summary = run_sweep(&args, &mut Vec::new()).map_err(|e| e.to_string())?;
    ensure(summary.failures.is_empty(), || {
        format!("{} failing pairs", summary.failures.len())
    })?;
    let mut worst = 0i64;
    for r in &summary.records {
        let g = parse_graph6(&r.g6_g).unwrap();
        let h = parse_graph6(&r.g6_h).unwrap();
        let bound = (g.max_degree() + h.vertex_count() + 3) as u32;
        let chi = r
            .oracle
            .ok_or_else(|| format!("oracle missing for {} / {}", r.g6_g, r.g6_h))?;
        ensure(chi <= bound, || {
            format!("chi {chi} > {bound} on {} / {}", r.g6_g, r.g6_h)
        })?;
        worst = worst.max(chi as i64 - bound as i64);
    }
    Ok(format!(
        "{} pairs, oracle max(chi - (Δ+3)) = {worst}",
        summary.records.len()
    ))
}

fn criterion3() -> Outcome {
    let chi = chi_prod_exact(&complete(2), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(chi.value == 3, || format!("chi(K2) = {}", chi.value))?;
    Ok("chi(K2) = 3".into())
}

fn criterion4() -> Outcome {
    let k2 = complete(2);
    let r = color_corona(&k2, &k2, &ColorOptions::default()).map_err(|e| e.to_string())?;
    ensure(
        r.base.vertex_colors == [1, 2] && r.base.edge_colors == [3],
        || "unexpected base coloring".into(),
    )?;
    let g: BTreeSet<u128> = [0, 1]
        .iter()
        .map(|&v| product(&r.graph, &r.coloring, v))
        .collect();
    ensure(g == BTreeSet::from([90, 180]), || {
        format!("G products {g:?}")
    })?;
    for j in 0..2 {
        let copy: BTreeSet<u128> = (0..2)
            .map(|i| product(&r.graph, &r.coloring, r.map.copy_vertex(j, i)))
            .collect();
        ensure(copy == BTreeSet::from([20, 30]), || {
            format!("copy {j} products {copy:?}")
        })?;
    }
    ensure(r.report.ok, || "verifier rejected".into())?;
    Ok("{90, 180} and {20, 30} per copy, verified".into())
}

/// Does a proper edge coloring with `k` colors exist? Plain enumeration.
fn brute_edge_colorable(g: &Graph, k: u32) -> bool {
    let m = g.edge_count();
    let mut c = vec![1u32; m];
    loop {
        let ok = (0..g.vertex_count()).all(|v| {
            let mut seen: Vec<u32> = g.incident(v).iter().map(|&(_, e)| c[e]).collect();
            seen.sort();
            seen.windows(2).all(|w| w[0] != w[1])
        });
        if ok {
            return true;
        }
        let mut i = 0;
        while i < m && c[i] == k {
            c[i] = 1;
            i += 1;
        }
        if i == m {
            return false;
        }
        c[i] += 1;
    }
}

fn disjoint_union(parts: &[&Graph]) -> Graph {
    let mut edges = Vec::new();
    let mut offset = 0;
    for p in parts {
        edges.extend(p.edges().iter().map(|&(a, b)| (a + offset, b + offset)));
        offset += p.vertex_count();
    }
    Graph::new(offset, edges).unwrap()
}

/// Every subcubic graph with at most `max_m` edges, up to isolated vertices,
/// as multisets of connected pieces.
fn graphs_with_few_edges(max_m: usize) -> Vec<Graph> {
    let pieces: Vec<Graph> = (2..=max_m + 1)
        .flat_map(connected_subcubic_graphs)
        .filter(|g| g.edge_count() <= max_m)
        .collect();
    fn extend(
        pieces: &[Graph],
        from: usize,
        left: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Graph>,
    ) {
        if !chosen.is_empty() {
            let parts: Vec<&Graph> = chosen.iter().map(|&i| &pieces[i]).collect();
            out.push(disjoint_union(&parts));
        }
        for i in from..pieces.len() {
            if pieces[i].edge_count() <= left {
                chosen.push(i);
                extend(pieces, i, left - pieces[i].edge_count(), chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&pieces, 0, max_m, &mut Vec::new(), &mut out);
    out
}

fn criterion5() -> Outcome {
    for i in 0..1000u64 {
        let n = 1 + (i as usize % 50);
        let g = gen_random_subcubic(n, i);
        let c = vizing_color(&g);
        ensure(c.is_proper(&g), || format!("improper on n={n} seed={i}"))?;
        ensure(c.max_used() as usize <= g.max_degree() + 1, || {
            format!("too many colors on n={n} seed={i}")
        })?;
    }
    let graphs = graphs_with_few_edges(8);
    let mut class2 = 0;
    for g in &graphs {
        let delta = g.max_degree() as u32;
        let (chi, witness) = chi_prime_exact(g, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(chi == delta || chi == delta + 1, || {
            format!("chi' = {chi} with Δ = {delta}")
        })?;
        ensure(witness.is_proper(g) && witness.max_used() <= chi, || {
            "bad witness".into()
        })?;
        let expect = if brute_edge_colorable(g, delta) {
            delta
        } else {
            delta + 1
        };
        ensure(chi == expect, || {
            format!("chi' = {chi}, enumeration says {expect} on {:?}", g.edges())
        })?;
        class2 += (chi == delta + 1) as usize;
    }
    Ok(format!(
        "1000 random graphs proper within Δ+1; {} graphs with <= 8 edges exact ({class2} class 2)",
        graphs.len()
    ))
}

fn criterion6() -> Outcome {
    let mut count = 0;
    for n in 1..=8 {
        for g in connected_subcubic_graphs(n) {
            let k = g.max_degree() as u32 + 3;
            let c = npdtc_search(&g, k, DEFAULT_BUDGET)
                .map_err(|e| e.to_string())?
                .found()
                .ok_or_else(|| format!("no {k}-coloring for {}", encode_graph6(&g)))?;
            independent_npd(&g, &c, k)?;
            count += 1;
        }
    }
    Ok(format!("{count} connected graphs, all colored with Δ+3"))
}

fn criterion7() -> Outcome {
    let k2 = complete(2);
    let h = gen_random_subcubic(8, 184);
    let raw = ColorOptions {
        normalize: false,
        ..ColorOptions::default()
    };
    let r = color_corona(&k2, &h, &raw).map_err(|e| e.to_string())?;
    ensure(r.trace.case == CaseTag::Case1_1, || {
        format!("got {}", r.trace.case.name())
    })?;
    independent_npd(&r.graph, &r.coloring, r.trace.palette_bound)?;

    let k3 = complete(3);
    let shapes = [
        ("single-vertex G", Graph::empty(1), k3.clone()),
        ("n_h = 0", k3.clone(), Graph::empty(0)),
        ("single-vertex G, n_h = 0", Graph::empty(1), Graph::empty(0)),
    ];
    for (name, g, h) in &shapes {
        let r = color_corona(g, h, &ColorOptions::default()).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.trace.case == CaseTag::Fallback, || {
            format!("{name}: got {}", r.trace.case.name())
        })?;
        let bound = (r.graph.max_degree() + 3) as u32;
        independent_npd(&r.graph, &r.coloring, bound).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok("Case1_1 reached without normalization; fallback verified on 3 shapes".into())
}

fn run_bin(args: &[&str]) -> (i32, Vec<u8>) {
    let o = Command::new(env!("CARGO_BIN_EXE_npdtc"))
        .args(args)
        .output()
        .unwrap();
    (o.status.code().unwrap_or(-1), o.stdout)
}

fn criterion8() -> Outcome {
    // Case 2 chain over the acceptance corpus plus random larger pairs.
    let mut case2 = 0;
    let gs: Vec<Graph> = (2..=6).flat_map(connected_subcubic_graphs).collect();
    let hs: Vec<Graph> = (1..=5).flat_map(subcubic_graphs).collect();
    let random = (0..200u64).map(|s| {
        (
            gen_random_subcubic(5 + s as usize % 30, s),
            gen_random_subcubic(1 + s as usize % 12, s + 1000),
        )
    });
    let corpus = gs
        .iter()
        .flat_map(|g| hs.iter().map(move |h| (g.clone(), h.clone())))
        .chain(random);
    for (g, h) in corpus {
        let r = color_corona(&g, &h, &ColorOptions::default()).map_err(|e| e.to_string())?;
        if r.trace.case == CaseTag::Case2 {
            ensure(case2_chain(&r), || {
                format!(
                    "chain broken on {} / {}",
                    encode_graph6(&g),
                    encode_graph6(&h)
                )
            })?;
            case2 += 1;
        }
        let doc = ColoringDocument::new(&r.graph, &r.coloring, Some(r.map.clone()));
        let text = emit_coloring_json(&doc);
        let back = parse_coloring_json(&text).map_err(|e| e.to_string())?;
        ensure(back == doc && emit_coloring_json(&back) == text, || {
            "JSON round trip changed the document".into()
        })?;
        ensure(
            back.graph().unwrap() == r.graph && back.coloring() == r.coloring,
            || "JSON round trip lost data".into(),
        )?;
        for x in [&g, &h, &r.graph] {
            let s = encode_graph6(x);
            ensure(encode_graph6(&parse_graph6(&s).unwrap()) == s, || {
                format!("graph6 round trip broke {s}")
            })?;
        }
    }
    let ring = Graph::new(70, (0..70).map(|i| (i, (i + 1) % 70))).unwrap();
    let s = encode_graph6(&ring);
    ensure(encode_graph6(&parse_graph6(&s).unwrap()) == s, || {
        "long-form graph6 round trip".into()
    })?;

    // Determinism: every command twice, byte-identical outputs.
    let dir = TempDir::new().unwrap();
    let d = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let g = write_g6(dir.path(), "g.g6", &gen_random_subcubic(12, 9));
    let h = write_g6(dir.path(), "h.g6", &gen_random_subcubic(6, 10));
    let (g, h) = (
        g.to_str().unwrap().to_string(),
        h.to_str().unwrap().to_string(),
    );
    let k4 = write_g6(dir.path(), "k4.g6", &complete(4))
        .to_str()
        .unwrap()
        .to_string();
    let mut runs: Vec<Vec<u8>> = Vec::new();
    for round in 0..2 {
        let mut bytes = Vec::new();
        let (json, dot, wit, gen, log) = (
            d(&format!("c{round}.json")),
            d(&format!("c{round}.dot")),
            d(&format!("w{round}.json")),
            d(&format!("gen{round}.g6")),
            d(&format!("log{round}.jsonl")),
        );
        let prod = d("p.g6");
        for args in [
            vec!["color", "--g", &g, "--h", &h, "--out", &json, "--dot", &dot],
            vec!["chi", "--graph", &k4, "--out", &wit],
            vec!["gen", "--n", "30", "--seed", "77", "--out", &gen],
            vec![
                "sweep",
                "--count",
                "40",
                "--seed",
                "5",
                "--ng-max",
                "8",
                "--nh-max",
                "5",
                "--oracle-max",
                "2",
                "--log",
                &log,
            ],
            vec!["export", "--coloring", &json],
        ] {
            let (code, out) = run_bin(&args);
            ensure(code == 0, || format!("{args:?} exited {code}"))?;
            bytes.extend(out);
        }
        let doc = parse_coloring_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
        std::fs::write(&prod, format!("{}\n", encode_graph6(&doc.graph().unwrap()))).unwrap();
        let (code, out) = run_bin(&["verify", "--graph", &prod, "--coloring", &json]);
        ensure(code == 0, || "verify rejected the color output".into())?;
        bytes.extend(out);
        for f in [&json, &dot, &wit, &gen] {
            bytes.extend(std::fs::read(f).unwrap());
        }
        for line in std::fs::read_to_string(&log).unwrap().lines() {
            let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
            v.as_object_mut().unwrap().remove("wall_ms");
            bytes.extend(v.to_string().into_bytes());
        }
        runs.push(bytes);
    }
    ensure(runs[0] == runs[1], || {
        "outputs differ between identical runs".into()
    })?;
    Ok(format!(
        "chain on {case2} Case2 outputs; round trips exact; 6 commands deterministic"
    ))
}

fn criterion9() -> Outcome {
    let g = gen_random_subcubic(200, 2024);
    let h = gen_random_subcubic(100, 2025);
    let start = Instant::now();
    let r = color_corona(&g, &h, &ColorOptions::default()).map_err(|e| e.to_string())?;
    let report = verify_npd(&r.graph, &r.coloring).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(report.ok, || "verifier rejected".into())?;
    let bound = (g.max_degree() + 100 + 3) as u32;
    ensure(r.coloring.max_color <= bound, || {
        format!("{} > {bound}", r.coloring.max_color)
    })?;
    let copies = r
        .map
        .roles
        .iter()
        .filter(|x| matches!(x, Role::CopyVertex { .. }))
        .count();
    ensure(copies == 20_000, || format!("{copies} copy vertices"))?;
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} vertices, {} edges, case {}, {} colors, {:.2?}",
        r.graph.vertex_count(),
        r.graph.edge_count(),
        r.trace.case.name(),
        r.coloring.max_color,
        elapsed
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 bound on exhaustive desk-scale pairs", criterion1),
        ("2 exact oracle within Δ+3 on small pairs", criterion2),
        ("3 chi of K2", criterion3),
        ("4 hand-run K2 ∘ K2", criterion4),
        ("5 edge coloring within Δ+1", criterion5),
        ("6 base coloring with Δ+3 colors", criterion6),
        ("7 case path coverage", criterion7),
        ("8 chain, round trips, determinism", criterion8),
        ("9 scale smoke test", criterion9),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{secs:.2}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} [{secs:.2}s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
