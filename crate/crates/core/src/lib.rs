//! Construction and exact verification of bent-negabent Boolean functions.
//!
//! Truth tables are indexed so that bit `j` of a point index is variable `j`:
//! the first variable varies fastest.

pub mod anf;
pub mod bits;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod function;
pub mod layout;
pub mod oracle;
pub mod reference;
pub mod spectra;
pub mod subspaces;

pub use anf::AnfPolynomial;
pub use bits::{BitVector, Capacity};
pub use constructions::{construct, Construction, ConstructedFunction, ConstructionFamily};
pub use error::{Error, Result};
pub use function::BooleanFunction;
pub use subspaces::VectorSet;
