//! The split model of an odd exact Courant algebroid over `R^d`: bracket,
//! axioms, generalized connections and torsion.

pub mod algebroid;
pub mod axioms;
pub mod connection;
mod constants;
pub mod lie;
pub mod oracle;
pub mod section;
pub mod torsion;

pub use algebroid::{AlgebroidError, BracketConstants, OddExactAlgebroid};
pub use axioms::{check_axioms, check_courant_axioms, random_samples, Axiom, AxiomReport, AxiomSample};
pub use connection::{check_connection_axioms, ConnectionError, GeneralizedConnection};
pub use lie::dorfman_lie;
pub use section::GeneralizedSection;
pub use torsion::{base_torsion, torsion, torsion_anti_part, torsion_free_base, torsion_on};

/// Source of the checked-in constants module, for regeneration checks.
pub const CONSTANTS_SOURCE: &str = include_str!("constants.rs");
