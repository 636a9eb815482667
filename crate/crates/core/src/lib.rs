//! Ehrhart theory of s-lecture hall polytopes: δ-vectors, Fano / reflexive /
//! Gorenstein classification, integer decomposition, unimodular
//! triangulations and free-sum constructions, each checked against a
//! brute-force lattice point oracle.

pub mod budget;
pub mod classify;
pub mod delta;
pub mod error;
pub mod freesum;
pub mod hall;
pub mod idp;
pub mod lattice;
pub mod oracle;
pub mod search;
pub mod triangulate;

pub use budget::Budget;
pub use delta::DeltaVector;
pub use error::{Error, Result};
pub use hall::{HalfSpace, PolytopeVRep, SSequence};
