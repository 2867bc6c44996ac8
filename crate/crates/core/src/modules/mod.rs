//! Finite-dimensional modules over monoid and group algebras.

pub mod constructions;
pub mod fixtures;
pub mod hom;
pub mod projective;
pub mod rep;

pub use constructions::{
    coinduce, contragredient, corner, dual_op, hom_module, hom_tensor_iso, induce, inflate, inflate_units, monrep_contragredient,
    opposite_group, restrict, tensor, top_of_corner, transpose_rep, unit_group,
};
pub use hom::{equivariant_hom, intertwiners, invariants_dim, monoid_hom, EquivariantHomSpace};
pub use projective::{induced_recognizer, is_projective, InducedWitness};
pub use rep::{GroupRep, MonRep};
