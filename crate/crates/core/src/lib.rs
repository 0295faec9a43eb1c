//! Hamilton oriented paths and cycles with few backward arcs in digraphs
//! whose underlying graph has no three pairwise non-adjacent vertices.

pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod orcycle;
pub mod orpath;
pub mod semicomplete;
pub mod trace;
pub mod walk;

pub use error::SolveError;
pub use graph::{Digraph, GraphError, Vertex};
pub use trace::SolverTrace;
pub use walk::{audit_sequence, OrCycle, OrPath, SequenceAudit};
