//! Exact computer algebra for bound quiver algebras, their infinitesimal
//! deformations, and Ext-algebra products over the deformation.

pub mod algebra;
pub mod cli;
pub mod deform;
pub mod engine;
pub mod error;
pub mod ext;
pub mod fixtures;
pub mod grammar;
pub mod hochschild;
pub mod linalg;
pub mod quiver;
pub mod scalar;
pub mod session;
pub mod star;
pub mod structured;

pub use error::{Error, Result};
