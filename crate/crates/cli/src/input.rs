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

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use npdtc_core::io::{emit_edge_list, encode_graph6, parse_edge_list, parse_graph6};
use npdtc_core::Graph;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

pub fn parse_graph_text(text: &str, format: GraphFormat) -> Result<Graph, String> {
    match format {
        GraphFormat::Graph6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| "empty graph6 input".to_string())?;
            parse_graph6(line).map_err(|e| e.to_string())
        }
        GraphFormat::Edgelist => parse_edge_list(text).map_err(|e| e.to_string()),
    }
}

pub fn format_graph(graph: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => format!("{}\n", encode_graph6(graph)),
        GraphFormat::Edgelist => emit_edge_list(graph),
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn read_graph(path: &Path, format: GraphFormat) -> Result<Graph, CliError> {
    let text = read_text(path)?;
    parse_graph_text(&text, format).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}
