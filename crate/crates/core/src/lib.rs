//! Bricks and semibricks over preprojective algebras of types A and D.

pub mod bricks;
pub mod canjoin;
pub mod census;
pub mod coxeter;
pub mod error;
pub mod grid;
pub mod hom;
pub mod lattice;
pub mod linalg;
pub mod quiver;
pub mod render;
pub mod semibricks;

pub use coxeter::{CoxeterElement, DynkinType, Family, Reflection, Vertex};
pub use error::{Error, Result};
