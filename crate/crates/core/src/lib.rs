//! Homological algebra of finite monoid algebras: Green's relations and
//! structure of finite monoids, exact linear algebra over `Q` and `F_p`,
//! posets of cyclic sub-`M`-sets and their order complexes, nerves of
//! monoid actions, representations, and `Ext` computed both from topology
//! and from the bar resolution.

pub mod cli;
pub mod complexes;
pub mod error;
pub mod ext;
pub mod linalg;
pub mod modules;
pub mod monoid;

pub use error::{Error, Result};
