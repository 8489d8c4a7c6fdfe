//! Flag simplicial spheres: constructions with small maximum stable sets,
//! topological certification, exact stable-set computation and
//! rigidity-based edge bounds.
//!
//! The crate is organised bottom-up:
//!
//! * [`complex`]: facet-based simplicial complexes, links, joins and stellar moves.
//! * [`graph`]: simple graphs and stable-set solvers.
//! * [`constructions`]: every sphere family, addressable by a spec string.
//! * [`verify`]: pseudomanifold, mod-2 homology and bistellar sphere recognition.
//! * [`rigidity`]: generic rank of rigidity matrices over a large prime field.
//! * [`bounds`]: bound formulas, tables and counting checks.
//! * [`checks`]: the end-to-end criteria suite behind `check`.
//! * [`cli`]: the command-line front end.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod checks;
pub mod cli;
pub mod complex;
pub mod constructions;
mod error;
pub mod graph;
pub mod rigidity;
pub mod verify;

pub use complex::{Complex, FVector, Vertex};
pub use error::{Error, Result};
pub use graph::{Graph, StableMethod, StableSetWitness};
