//! Exact integer linear algebra and finitely generated abelian groups.

mod aut;
mod group;
mod hom;
pub mod lattice;
mod matrix;
mod snf;

pub use aut::{aut_group, AutTable};
pub use group::{group_from_relations, Element, FgAbGroup};
pub use hom::{cokernel, compose, image_contained, is_automorphism, kernel, Homomorphism, Quotient, Subgroup};
pub use matrix::IntMatrix;
pub use snf::{snf, SnfResult};

pub(crate) use group::{quotient, subquotient};


