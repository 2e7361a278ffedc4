//! Exact computations for symmetric quivers: Euler forms, reflection functors,
//! decompositions of regular dimension vectors, and generators of the rings of
//! symplectic and orthogonal semi-invariants together with their evaluation.

pub mod cli;
pub mod error;
pub mod families;
pub mod io;
pub mod linalg;
pub mod presentation;
pub mod quiver;
pub mod reflection;
pub mod rep;
pub mod schur;
pub mod semiinv;
pub mod symmetric;
pub mod tame;

pub use error::{Error, Result};
