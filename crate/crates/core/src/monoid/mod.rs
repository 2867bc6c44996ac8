//! Finite monoids given by Cayley tables and their structure theory.

pub mod builders;
pub mod completion;
pub mod crossed;
pub mod green;
pub mod json;
pub mod subgroup;
pub mod table;

pub use builders::{affine_monoid, full_transformation_monoid, matrix_monoid, symmetric_group, transformation_monoid};
pub use completion::{group_completion, GroupCompletion};
pub use crossed::{system_from_section, CrossedProduct, CrossedSystem};
pub use green::{green_structure, principal_series, sandwich_matrix, structural_flags, GreenStructure, PrincipalSeries, SandwichMatrix, StructuralFlags};
pub use json::{crossed_system_from_json, monoid_from_json, monoid_with_points_from_json};
pub use subgroup::{ideal_data, local_monoid, maximal_subgroup, GroupTable, IdealData};
pub use table::FiniteMonoid;
