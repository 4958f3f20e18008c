//! Finite quandles and their symmetry groups.
//!
//! The crate builds quandle families, computes inner-automorphism and
//! transvection groups, decomposes orbits by saturation, realizes orbits as
//! coset quandles `(G/H, ▷_φ)`, evaluates finite regularity conditions and
//! counts knot colorings.

pub mod cli;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod group;
pub mod knots;
pub mod par;
pub mod perm;
pub mod quandle;
pub mod regularity;
pub mod symmetry;

pub use error::{AxiomViolation, Error, Result};
pub use perm::Perm;
pub use quandle::{ElementSymmetry, FiniteQuandle, QuandleFile};
