//! List colorings of hypergraphs with checkable certificates.
//!
//! The crate turns choosability bounds for 2-colorable (and arbitrary)
//! hypergraphs into algorithms:
//!
//! - [`density`]: the maximum edge density `L(H)` (exact enumeration and
//!   parametric max-flow) and the closed-form bounds on `ch(H)`.
//! - [`orientation`]: orientations with bounded in-degree via bipartite
//!   matching, the reduction to a bipartite pair-graph, and list coloring of
//!   2-colorable hypergraphs from lists of size `d(v) + 1`.
//! - [`degree_constrained`]: the augmenting-path construction behind the
//!   `ceil(2 Delta / s) + 1` bound for arbitrary hypergraphs.
//! - [`choosability`]: exact list coloring, f-choosability with adversarial
//!   witnesses, choice and chromatic numbers.
//! - [`nullstellensatz`]: polynomial coefficient counts certifying
//!   choosability.
//! - [`dense`]: palette splitting and random-list experiments for complete
//!   2-colorable hypergraphs.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod choosability;
pub mod cli;
pub mod degree_constrained;
pub mod dense;
pub mod density;
pub mod error;
pub mod flow;
pub mod generators;
pub mod hypergraph;
pub mod matching;
pub mod nullstellensatz;
pub mod orientation;

pub use error::{Error, Result};
pub use hypergraph::{
    is_proper, Bipartition, Coloring, Hypergraph, ListAssignment, Metrics, Orientation, Side,
};
