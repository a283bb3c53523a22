//! Exact connectivity invariants, dense graph spectra, extremal family
//! constructors, and exhaustive desk-scale verification harnesses for
//! small graphs and digraphs.
//!
//! The crate revolves around a handful of questions about a graph `G`:
//! how many vertices (or edges) must be deleted before `G` falls into at
//! least `l` pieces, how tough `G` is, how many edge-disjoint spanning
//! trees it packs, and how large its spectral radius can be once those
//! invariants are pinned. Everything is computed exactly or to tight,
//! documented tolerances, at orders where exhaustive search is feasible.
//!
//! ```
//! use lconn::graph::Graph;
//! use lconn::invariants;
//! use lconn::spectral;
//!
//! let c6 = Graph::cycle(6).unwrap();
//! assert_eq!(invariants::l_connectivity(&c6, 3).unwrap(), 3);
//! assert!((spectral::spectral_radius(&c6).unwrap() - 2.0).abs() < 1e-9);
//! ```

pub mod codec;
pub mod digraph;
mod error;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod iso;
pub mod quotient;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use digraph::Digraph;
pub use spectral::RHO_TOL;
