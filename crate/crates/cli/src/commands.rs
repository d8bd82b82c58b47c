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

use std::io::Write;

use npdtc_core::construct::{color_corona, CaseTag, ColorError, ColorOptions};
use npdtc_core::gen_random_subcubic;
use npdtc_core::io::{emit_coloring_json, emit_dot, parse_coloring_json, ColoringDocument};
use npdtc_core::search::{chi_prod_exact, SearchError};
use npdtc_core::verify::{self as checks, VerifyMode};

use crate::input::{format_graph, read_graph, read_text, write_text};
use crate::{ChiArgs, CliError, ColorArgs, ExportArgs, GenArgs, ModeArg, VerifyArgs};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSummary {
    pub case: CaseTag,
    pub max_color: u32,
    pub bound: u32,
    pub document: ColoringDocument,
}

fn emit(out: &mut dyn Write, text: std::fmt::Arguments<'_>) -> Result<(), CliError> {
    out.write_fmt(text)
        .map_err(|e| CliError::io(std::path::Path::new("<stdout>"), e))
}

pub(crate) fn color_error(err: ColorError) -> CliError {
    match err {
        ColorError::NotSubcubic { .. } => CliError::NotSubcubic(err.to_string()),
        ColorError::FallbackBudgetExceeded { .. }
        | ColorError::Base(SearchError::BaseBudgetExceeded { .. })
        | ColorError::Base(SearchError::BudgetExceeded(_)) => {
            CliError::FallbackBudget(err.to_string())
        }
        _ => CliError::Failed(err.to_string()),
    }
}

pub fn color(args: &ColorArgs, out: &mut dyn Write) -> Result<ColorSummary, CliError> {
    let g = read_graph(&args.g, args.format)?;
    let h = read_graph(&args.h, args.format)?;
    let options = ColorOptions {
        normalize: !args.no_normalize,
        base_budget: args.budget,
        fallback_budget: args.budget,
    };
    let result = color_corona(&g, &h, &options).map_err(color_error)?;
    let document = ColoringDocument::new(&result.graph, &result.coloring, Some(result.map.clone()));
    if let Some(path) = &args.out {
        write_text(path, &emit_coloring_json(&document))?;
    }
    if let Some(path) = &args.dot {
        let dot = emit_dot(&result.graph, Some(&result.coloring), Some(&result.map))
            .map_err(|e| CliError::Failed(e.to_string()))?;
        write_text(path, &dot)?;
    }
    emit(
        out,
        format_args!(
            "case: {}\nmax_color: {}\nbound: {}\nverified: {}\n",
            result.trace.case.name(),
            result.coloring.max_color,
            result.trace.palette_bound,
            if result.report.ok { "ok" } else { "FAILED" },
        ),
    )?;
    Ok(ColorSummary {
        case: result.trace.case,
        max_color: result.coloring.max_color,
        bound: result.trace.palette_bound,
        document,
    })
}

/// Returns whether the coloring passed.
pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    let graph = read_graph(&args.graph, args.format)?;
    let document = parse_coloring_json(&read_text(&args.coloring)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", args.coloring.display())))?;
    let doc_graph = document
        .graph()
        .map_err(|e| CliError::Parse(e.to_string()))?;
    if doc_graph != graph {
        return Err(CliError::Parse(
            "coloring document describes a different graph".into(),
        ));
    }
    let mode = match args.mode {
        ModeArg::Product => VerifyMode::Product,
        ModeArg::Set => VerifyMode::Set,
        ModeArg::Proper => VerifyMode::Proper,
    };
    let report = checks::verify(&graph, &document.coloring(), mode)
        .map_err(|e| CliError::Parse(e.to_string()))?;
    emit(out, format_args!("{report}"))?;
    if let Some(path) = &args.report {
        let text = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
        write_text(path, &text)?;
    }
    Ok(report.ok)
}

pub fn chi(args: &ChiArgs, out: &mut dyn Write) -> Result<u32, CliError> {
    let graph = read_graph(&args.graph, args.format)?;
    let result = chi_prod_exact(&graph, args.budget).map_err(|e| match e {
        SearchError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
        other => CliError::Failed(other.to_string()),
    })?;
    let document = ColoringDocument::new(&graph, &result.witness, None);
    emit(
        out,
        format_args!("chi: {}\nnodes: {}\n", result.value, result.nodes),
    )?;
    match &args.out {
        Some(path) => write_text(path, &emit_coloring_json(&document))?,
        None => emit(out, format_args!("{}\n", emit_coloring_json(&document)))?,
    }
    Ok(result.value)
}

pub fn gen(args: &GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.n == 0 {
        return Err(CliError::Parse("--n must be at least 1".into()));
    }
    let graph = gen_random_subcubic(args.n, args.seed);
    let text = format_graph(&graph, args.format);
    match &args.out {
        Some(path) => write_text(path, &text),
        None => emit(out, format_args!("{text}")),
    }
}

pub fn export(args: &ExportArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let document = parse_coloring_json(&read_text(&args.coloring)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", args.coloring.display())))?;
    let graph = document
        .graph()
        .map_err(|e| CliError::Parse(e.to_string()))?;
    let dot = emit_dot(
        &graph,
        Some(&document.coloring()),
        document.corona_map.as_ref(),
    )
    .map_err(|e| CliError::Parse(e.to_string()))?;
    match &args.dot {
        Some(path) => write_text(path, &dot),
        None => emit(out, format_args!("{dot}")),
    }
}
