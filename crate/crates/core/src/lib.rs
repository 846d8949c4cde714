//! Tableau combinatorics for diagonalizable lowest-weight modules of the
//! type B rational Cherednik algebra, and the lower bounds they give on the
//! diagonal coinvariant ring of the hyperoctahedral group.

pub mod arith;
pub mod characters;
pub mod error;
pub mod oracle;
pub mod params;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
