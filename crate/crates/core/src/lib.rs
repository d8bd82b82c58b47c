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

//! Neighbor product distinguishing total colorings of corona products of
//! subcubic graphs.

pub mod coloring;
pub mod construct;
pub mod corona;
pub mod edge_color;
pub mod enumerate;
pub mod graph;
pub mod io;
pub mod search;
pub mod verify;

pub use coloring::TotalColoring;
pub use construct::{color_corona, CaseTag, ColorError, ColorOptions, CoronaColoring};
pub use corona::{corona, CoronaMap, EdgeClass, Role};
pub use edge_color::{chi_prime_exact, permute_colors, vizing_color, EdgeColoring};
pub use graph::{gen_random_subcubic, Graph, GraphError};
pub use search::{base_coloring, chi_prod_exact, npdtc_search, SearchError, SearchOutcome};
pub use verify::{verify_npd, verify_nvd, verify_proper_total, VerifyMode, VerifyReport};
