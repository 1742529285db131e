//! Exact generalized radii, Minkowski asymmetry and concentricity checks
//! for rational polytopes.

pub mod bodies;
pub mod certificates;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod lp;
pub mod radii;
pub mod theorems;

pub use error::{Error, Result};
