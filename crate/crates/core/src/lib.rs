//! Distance-based bond-additive invariants of simple connected graphs.
//!
//! The crate computes the Mostar index `Mo(G)`, the edge Mostar index
//! `Mo_e(G)` and the Wiener index `W(G)` exactly from one all-pairs BFS table,
//! builds polymer graphs by point-attaching monomer units (link, chain,
//! bouquet, circuit and arbitrary tree-shaped attachment), generates the
//! classic cactus chain families, and evaluates closed-form values and
//! upper/lower bounds for them.
//!
//! Index sums, closed forms and bounds are generic over a [`Scalar`]
//! (`i64`, `i128`, [`num_bigint::BigInt`], ...). The aliases below fix the
//! scalar used by the command-line tool.
//!
//! ```
//! use mostar_core::{families, indices, Value};
//!
//! let t2 = families::gen_triangular_chain(2).unwrap();
//! let mo: Value = indices::mostar_index(&t2.graph).unwrap();
//! let mo_e: Value = indices::edge_mostar_index(&t2.graph).unwrap();
//! assert_eq!((mo, mo_e), (8, 12));
//! ```

pub mod families;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod io;
pub mod polymer;
pub mod scalar;

pub use graph::{Graph, GraphError};
pub use scalar::Scalar;

/// Fixed-width scalar used by the CLI and most callers.
pub type Value = i128;

/// Arbitrary-precision scalar, for closed forms that outgrow `i128`.
pub type ExactValue = num_bigint::BigInt;

pub type IndexReport = indices::IndexReport<Value>;
pub type BoundsReport = formulas::BoundsReport<Value>;
pub type FormulaCheck = formulas::FormulaCheck<Value>;
