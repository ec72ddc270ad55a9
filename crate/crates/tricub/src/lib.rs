//! Exact solvers and certificates for cubic multigraphs.
//!
//! `tricub` computes the triangle-expansion parameters of a connected cubic
//! multigraph: the smallest vertex set whose expansion to triangles yields a
//! graph with a perfect matching (`t`), and the smallest one whose expansion
//! is coverable by four perfect matchings (`T`). Around those sit the
//! supporting objects: parity subgraphs, even subgraphs, shortest cycle
//! covers, cycle double covers by five even subgraphs, and H-colorings
//! (Petersen colorings in particular), together with the constructive
//! transforms that move certificates between them.
//!
//! Everything is exact and deterministic: searches are exhaustive within
//! documented caps, fractional bounds are compared with integer
//! cross-multiplication, and every returned object is a certificate that
//! re-verifies from its definition.
//!
//! Module map:
//!
//! - [`graph`]: the loop-free multigraph type, edge-list and sparse6 I/O,
//!   the named-graph catalog, tree-of-gadgets generators, random cubic
//!   graphs, and brute-force isomorphism for desk-scale tests.
//! - [`structure`]: bridges, block decomposition with end-block roots,
//!   triangle expansion/contraction, and subdivide-and-attach.
//! - [`matching`]: perfect matchings, 2-factors, minimum parity subgraphs
//!   (independent oracle and matching backends), and matching transfer to
//!   expansions.
//! - [`covers`]: even-subgraph enumeration, shortest cycle covers, four
//!   perfect-matching covers, 5-CDCs, and the cover-to-expansion transforms.
//! - [`hcoloring`]: H-coloring verification and search, and the Petersen
//!   coloring to 5-CDC construction.
//! - [`params`]: the `t`/`T` parameter solvers, identity and bound checks,
//!   and the gadget family tables.

pub mod bits;
pub mod covers;
pub mod graph;
pub mod hcoloring;
pub mod matching;
pub mod params;
pub mod structure;

pub use graph::{EdgeId, Multigraph, VertexId};
