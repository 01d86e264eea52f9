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

//! Kempe-change reconfiguration of proper vertex colorings.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the graph, partitioned-graph and coloring types together
//!   with the structural predicates (bipartiteness, degeneracy, chromatic
//!   number, criticality).
//! * [`kempe`] computes bicolored subgraphs and Kempe components, applies
//!   Kempe changes and implements the normalization procedures used on
//!   `B + E_l` graphs.
//! * [`reconfig`] explores the reconfiguration graph exhaustively: coloring
//!   enumeration, exact class counts, pairwise equivalence with witnesses and
//!   the rigidity certificate for non-equivalence.
//! * [`constructions`] builds the counterexample families and the `G**` gadget.
//! * [`verify`] runs desk-scale theorem checks and the conjecture search.
//! * [`io`] is the JSON document format and DOT export used by the CLI.

pub mod constructions;
pub mod dsu;
pub mod error;
pub mod graph;
pub mod io;
pub mod kempe;
pub mod reconfig;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Coloring, Graph, PartitionedGraph, Vertex};
