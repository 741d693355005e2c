//! Exact combinatorics of genuine small representations of nonlinear double
//! covers of split simply-laced real groups (types A, D, E) at infinitesimal
//! character ρ/2.
//!
//! The crate is organised bottom-up:
//!
//! - [`root_system`]: root systems in exact coordinates, integral subsystems,
//!   reflection chains;
//! - [`weyl`]: Weyl group elements as permutations of the root set, words;
//! - [`cartan`]: Cartan involutions, root types, torus shapes, Hasse
//!   diagrams, centers of the double covers;
//! - [`parameters`]: pair-set parameters, Cayley transforms, lengths,
//!   blocks, the distinguished sets Π_{R_D};
//! - [`coherent`]: imaginary counts along β-chains, the sign condition (★),
//!   witness replays, the small-representation count;
//! - [`klv_poset`]: closed-form KLV rows on the R_D containment posets;
//! - [`lifting`]: Cartan constants, lifting coefficients K_S and Lift(ℂ).
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod cartan;
pub mod coherent;
pub mod error;
pub mod klv_poset;
pub mod lifting;
pub mod linalg;
pub mod parameters;
pub mod rational;
pub mod root_system;
pub mod weyl;

pub use error::{Error, Result};
pub use rational::Rational;
pub use root_system::{Family, GroupFamily, RootSystem};

/// Version string of the JSON schemas emitted by this crate and its CLI.
pub const SCHEMA: &str = "cayley-lift/1";
