//! Vertex cover kernelization toolkit built around blocking sets.
//!
//! A *blocking set* of a graph is a vertex set contained in no minimum
//! vertex cover. The crate provides the machinery to test, enumerate and
//! construct blocking sets, plus the pieces that turn those tests into a
//! kernelization pipeline for vertex cover parameterized by a modulator:
//!
//! * [`graph`] — immutable simple graphs, vertex sets, hypergraphs, and
//!   the text formats all tools speak.
//! * [`solver`] — exact vertex cover, bipartite matching with Hall
//!   violators, and the half-integral LP relaxation.
//! * [`oracle`] — the registry of base graph classes (forests, bipartite,
//!   bounded clusters, LP-tight graphs, ...) with membership tests and
//!   class-specific solvers.
//! * [`blocking`] — blocking-set verdicts, minimality, and exhaustive
//!   enumeration of the largest minimal blocking set.
//! * [`elimination`] — elimination distance to a class, elimination
//!   forests, and exact solving on graphs of bounded elimination distance.
//! * [`gadgets`] — constructions that amplify blocking sets (towers
//!   realizing the extremal sizes) and the hypergraph-cover transformation.
//! * [`kernelize`] — the matching-based component reduction rule, the
//!   recursive depth-reduction driver, and LP-based modulator extraction.
//! * [`verify`] — seeded self-check suites shared by the CLI and the
//!   acceptance tests.

pub mod blocking;
pub mod elimination;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod kernelize;
pub mod oracle;
pub mod solver;
pub mod verify;

use thiserror::Error;

/// Contract and resource errors shared across modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for graph with {n} vertices")]
    OutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("hyperedge {index}: expected {arity} distinct vertices, got {got}")]
    BadArity {
        index: usize,
        arity: usize,
        got: usize,
    },
    #[error("(left, right) is not a bipartition of the graph: {0}")]
    BipartitionViolated(String),
    #[error("set is not a blocking set")]
    NotBlocking,
    #[error("set is not a minimal blocking set")]
    NotMinimalBlocking,
    #[error("blocking set has size {got}, expected {want}")]
    BlockingSizeMismatch { got: usize, want: usize },
    #[error("invalid elimination forest: {0}")]
    InvalidForest(String),
    #[error("oracle {0} not supported for this operation")]
    UnsupportedOracle(String),
    #[error("instance too large for {what} (n = {n}, limit = {limit})")]
    ResourceLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("witness verification failed: {0}")]
    WitnessInvalid(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("parse error: {0}")]
    Parse(#[from] io::ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
