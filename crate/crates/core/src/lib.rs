//! Topological actions of the dihedral group `D_{2n}` with signature
//! `(0; 2, 2, 2, 2, n)` on curves of genus `2n - 1`, and the isogeny
//! decomposition of their Jacobians.
//!
//! Everything on a decision path is exact integer or rational arithmetic.

pub mod actions;
pub mod arith;
pub mod cli;
pub mod decomposition;
pub mod equivalence;
pub mod error;
pub mod group;
pub mod models;
pub mod rep;
pub mod shimura;

pub use error::{ActionError, DecompositionError, GroupError, ModelError, RepError, ShimuraError};
pub use group::{Automorphism, ConjugacyClass, Dihedral, Element, Subgroup};
