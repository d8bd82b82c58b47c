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

//! Graph interchange formats and coloring artifacts.

mod document;
mod dot;
mod edge_list;
mod graph6;

pub use document::{emit_coloring_json, parse_coloring_json, ColoringDocument, DocumentError};
pub use dot::{emit_dot, DotError};
pub use edge_list::{emit_edge_list, parse_edge_list, EdgeListError};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
