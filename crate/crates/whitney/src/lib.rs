//! Valuations on finite simple graphs via their Whitney complexes.
//!
//! A finite simple graph carries a simplicial complex for free: the Whitney
//! complex of all of its complete subgraphs. This crate enumerates that
//! complex and evaluates linear valuations (Euler characteristic, volume,
//! Dehn-Sommerville combinations) and multi-linear ones (Wu characteristics,
//! intersection numbers) on it, exactly, in integer and rational arithmetic.
//!
//! The main pieces:
//!
//! * [`graph`] — graphs, neighborhoods, constructions, generators, graph6
//!   and JSON input/output.
//! * [`complex`] — clique enumeration, f-vectors, f-matrices and higher
//!   intersection tensors.
//! * [`valuation`] — linear valuations, Wu characteristics of every order,
//!   intersection numbers, the Stanley-Reisner identity for the quadratic
//!   Wu characteristic, and the Erdős–Rényi expectation of Euler
//!   characteristic.
//! * [`barycentric`] — Barycentric refinement, the refinement operator and
//!   its eigenbasis, Dehn-Sommerville vectors and the quadratic/cubic
//!   characteristic tables.
//! * [`curvature`] — Gauss-Bonnet curvatures, Poincaré-Hopf indices, and
//!   index expectation (exact and Monte Carlo).
//! * [`topology`] — recognizers for contractibility, Evako spheres and
//!   d-graphs, boundary extraction, inductive dimension.
//! * [`product`] — the Stanley-Reisner Cartesian product of graphs.
//!
//! All invariants are computed in exact arithmetic; no floating point enters
//! any identity (Monte Carlo reports are the one deliberately approximate
//! surface). Enumeration is guarded by [`Limits`] so pathological inputs
//! fail with a named cap instead of exhausting memory.
//!
//! ```
//! use whitney::{whitney, Limits};
//! use whitney::graph::cross_polytope;
//! use whitney::valuation::wu;
//!
//! let octahedron = cross_polytope(2)?;
//! let limits = Limits::default();
//! let cx = whitney(&octahedron, None, &limits)?;
//! assert_eq!(cx.f_vector(), vec![6, 12, 8]);
//! // a 2-sphere: quadratic Wu characteristic equals Euler characteristic
//! assert_eq!(cx.euler_characteristic(), 2);
//! assert_eq!(wu(&cx, 2, &limits)?, 2);
//! # Ok::<(), whitney::Error>(())
//! ```

pub mod barycentric;
pub mod complex;
pub mod curvature;
pub mod graph;
pub mod product;
pub mod topology;
pub mod valuation;

mod graph6;
mod rng;

pub use complex::{whitney, FTensor, Simplex, WhitneyComplex};
pub use graph::{Graph, VertexFunction};
pub use rng::SplitMix64;
pub use valuation::Valuation;

use thiserror::Error;

/// Resource caps for enumeration-heavy operations.
///
/// Clique and tuple enumeration is NP-hard in the worst case; the caps turn
/// a runaway computation into a typed error naming the limit that tripped.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Maximum number of simplices a Whitney complex may hold.
    pub max_simplices: usize,
    /// Maximum number of ordered tuples a pair/tuple scan may count.
    pub max_tuples: u64,
    /// Node budget for the topology recognizers before they give up
    /// with an indeterminate answer.
    pub topo_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_simplices: 5_000_000,
            max_tuples: 100_000_000,
            topo_budget: 2_000_000,
        }
    }
}

impl Limits {
    pub fn with_max_simplices(mut self, n: usize) -> Self {
        self.max_simplices = n;
        self
    }

    pub fn with_max_tuples(mut self, n: u64) -> Self {
        self.max_tuples = n;
        self
    }

    pub fn with_topo_budget(mut self, n: u64) -> Self {
        self.topo_budget = n;
        self
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("json graph parse error: {0}")]
    JsonGraph(String),

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: u32, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("{what} cap exceeded (limit {limit})")]
    CapExceeded { what: &'static str, limit: u64 },

    #[error("graph contains a triangle through vertex {v}")]
    TriangleFound { v: u32 },

    #[error("vertex function is not injective: vertices {a} and {b} share a value")]
    NonInjective { a: u32, b: u32 },

    #[error("valuation of length {len} is shorter than the clique number {clique}")]
    ValuationTooShort { len: usize, clique: usize },

    #[error("graph is not a d-graph with boundary")]
    NotBoundary,

    #[error("classification budget exhausted; result is indeterminate")]
    Indeterminate,
}

pub type Result<T> = std::result::Result<T, Error>;
