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

//! Batch runs of the corona construction, optionally cross-checked by the exact oracle.

use std::fs::OpenOptions;
use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use npdtc_core::construct::{color_corona, ColorOptions};
use npdtc_core::enumerate::{connected_subcubic_graphs, subcubic_graphs};
use npdtc_core::io::encode_graph6;
use npdtc_core::search::{chi_prod_exact, SearchError};
use npdtc_core::{corona, gen_random_subcubic, Graph};

use crate::{CliError, SweepArgs};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub g6_g: String,
    pub g6_h: String,
    pub n_g: usize,
    pub n_h: usize,
    pub delta_g: usize,
    pub delta_h: usize,
    pub case: Option<String>,
    pub max_color: Option<u32>,
    pub bound: u32,
    pub verified: bool,
    pub oracle: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub wall_ms: f64,
}

impl SweepRecord {
    pub fn is_failure(&self) -> bool {
        self.error.is_some()
            || !self.verified
            || self.max_color.is_none_or(|c| c > self.bound)
            || self.oracle.is_some_and(|c| c > self.bound)
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepSummary {
    pub pairs: usize,
    pub case_counts: Vec<(String, usize)>,
    pub oracle_runs: usize,
    pub oracle_skipped: usize,
    pub failures: Vec<SweepRecord>,
    pub records: Vec<SweepRecord>,
}

/// Lists the (G, H) pairs a sweep visits, in a fixed order.
pub fn sweep_pairs(args: &SweepArgs) -> Vec<(Graph, Graph)> {
    match args.count {
        None => {
            let gs: Vec<Graph> = (1..=args.ng_max)
                .flat_map(|n| {
                    if args.connected {
                        connected_subcubic_graphs(n)
                    } else {
                        subcubic_graphs(n)
                    }
                })
                .collect();
            let hs: Vec<Graph> = (1..=args.nh_max).flat_map(subcubic_graphs).collect();
            gs.iter()
                .flat_map(|g| hs.iter().map(move |h| (g.clone(), h.clone())))
                .collect()
        }
        Some(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            (0..count)
                .map(|_| {
                    let n_g = rng.random_range(1..=args.ng_max.max(1));
                    let n_h = rng.random_range(1..=args.nh_max.max(1));
                    let g = gen_random_subcubic(n_g, rng.random());
                    let h = gen_random_subcubic(n_h, rng.random());
                    (g, h)
                })
                .collect()
        }
    }
}

pub fn run_pair(g: &Graph, h: &Graph, oracle_max: usize, budget: u64) -> SweepRecord {
    let start = Instant::now();
    let (delta_g, delta_h) = (g.max_degree(), h.max_degree());
    let bound = (delta_g + h.vertex_count() + 3) as u32;
    let mut record = SweepRecord {
        g6_g: encode_graph6(g),
        g6_h: encode_graph6(h),
        n_g: g.vertex_count(),
        n_h: h.vertex_count(),
        delta_g,
        delta_h,
        case: None,
        max_color: None,
        bound,
        verified: false,
        oracle: None,
        error: None,
        wall_ms: 0.0,
    };
    match color_corona(g, h, &ColorOptions::default()) {
        Ok(result) => {
            record.case = Some(result.trace.case.name().to_string());
            record.max_color = Some(result.coloring.max_color);
            record.bound = result.trace.palette_bound;
            record.verified = result.report.ok;
        }
        Err(e) => record.error = Some(e.to_string()),
    }
    if oracle_max > 0 && record.n_g <= oracle_max && record.n_h <= oracle_max {
        let (product, _) = corona(g, h);
        match chi_prod_exact(&product, budget) {
            Ok(chi) => record.oracle = Some(chi.value),
            Err(SearchError::BudgetExceeded(_)) => {}
            Err(e) => record.error = Some(e.to_string()),
        }
    }
    record.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    record
}

pub fn run_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<SweepSummary, CliError> {
    let pairs = sweep_pairs(args);
    let records: Vec<SweepRecord> = pairs
        .par_iter()
        .map(|(g, h)| run_pair(g, h, args.oracle_max, args.budget))
        .collect();

    if let Some(path) = &args.log {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| CliError::io(path, e))?;
        for r in &records {
            let line = serde_json::to_string(r).expect("record serializes");
            writeln!(file, "{line}").map_err(|e| CliError::io(path, e))?;
        }
    }

    let mut summary = SweepSummary {
        pairs: records.len(),
        ..SweepSummary::default()
    };
    for r in &records {
        let name = r.case.clone().unwrap_or_else(|| "error".into());
        match summary.case_counts.iter_mut().find(|(c, _)| *c == name) {
            Some((_, k)) => *k += 1,
            None => summary.case_counts.push((name, 1)),
        }
        let eligible = args.oracle_max > 0 && r.n_g <= args.oracle_max && r.n_h <= args.oracle_max;
        if r.oracle.is_some() {
            summary.oracle_runs += 1;
        } else if eligible {
            summary.oracle_skipped += 1;
        }
        if r.is_failure() {
            eprintln!(
                "counterexample: G={} H={} {}",
                r.g6_g,
                r.g6_h,
                serde_json::to_string(r).expect("record serializes")
            );
            summary.failures.push(r.clone());
        }
    }
    summary.case_counts.sort();
    summary.records = records;

    let io_err = |e| CliError::io(std::path::Path::new("<stdout>"), e);
    writeln!(out, "pairs: {}", summary.pairs).map_err(io_err)?;
    for (case, k) in &summary.case_counts {
        writeln!(out, "case {case}: {k}").map_err(io_err)?;
    }
    if args.oracle_max > 0 {
        writeln!(
            out,
            "oracle: {} run, {} over budget",
            summary.oracle_runs, summary.oracle_skipped
        )
        .map_err(io_err)?;
    }
    writeln!(out, "failures: {}", summary.failures.len()).map_err(io_err)?;
    Ok(summary)
}
