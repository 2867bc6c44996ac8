//! Posets, order complexes, nerves of monoid actions and their homology.

pub mod action;
pub mod chain;
pub mod mset;
pub mod nerve;
pub mod poset;
pub mod simplicial;

pub use action::{g_action_on_homology, GroupAction};
pub use chain::{chain_complex, homology, homology_basis, ChainComplex, HomologyBasis, HomologyResult, IntMatrix, SimplicialChains};
pub use mset::{LeftMSet, RightMSet};
pub use nerve::{nerve_chain_complex, two_sided_bar_complex, NerveComplex, DEFAULT_CAP};
pub use poset::{omega_poset, path_components, OmegaPoset, Poset};
pub use simplicial::{order_complex, SimplicialComplex};
