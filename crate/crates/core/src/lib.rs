//! Exact, parameterized and approximation algorithms for upper domination
//! and its relatives.

pub mod approx;
pub mod bench;
pub mod bounds;
pub mod branching;
pub mod coloring;
pub mod corpus;
pub mod domination;
pub mod error;
pub mod exec;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod kernels;
pub mod limits;
pub mod oracle;
pub mod reductions;
pub mod pathdp;
pub mod report;
pub mod vertex_set;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use limits::Limits;
pub use report::SolveReport;
pub use vertex_set::VertexSet;
