//! `Ext` and `Tor` over finite monoid algebras, computed from topology and
//! from explicit resolutions.

mod cochain;
mod gldim;
mod report;
mod resolution;
mod topological;
mod tor;

pub use cochain::{ext_oracle, monoid_cohomology, DEFAULT_COCHAIN_CAP};
pub use gldim::{global_dimension_bound, simple_modules_coind, GldimBound, JClassWitness, SimpleModule};
pub use report::{ExtReport, Method};
pub use resolution::{ext_via_resolution, standard_resolution, LayerWitness, ResolutionReport, StandardResolution};
pub use topological::{
    check_inflated, ext1_fast, ext1_two_trivials, ext_from_induced, ext_topological, reduced_homology_of_ideal, ComplexKind,
    ReducedHomology,
};
pub use tor::{crossed_product_prediction, homological_epi_check, tor_bar, EpiStatus, EpiVerdict, TorReport};
