//! Γ-automorphisms of the Whitehead exact sequence of 2-connected
//! 6-dimensional CW complexes.
//!
//! The crate is layered bottom-up:
//!
//! * [`abelian`]: exact integer matrices, Smith normal form, finitely
//!   generated abelian groups in invariant-factor form, homomorphisms and
//!   automorphism enumeration.
//! * [`homalg`]: `− ⊗ Z₂`, `Tor(−, Z₂)`, `Λ²` (which is `H₂(−; Z)`),
//!   `Ext¹` with pullback/pushforward, and the extension group of a class.
//! * [`wes`]: the data of a Whitehead exact sequence (`H₃ … H₆`, `b₆`,
//!   `[π₅]`), validation, derived invariants and the Γ-automorphism test.
//! * [`gamma_enum`]: enumeration of the group `ΓS(X)`, identification of its
//!   isomorphism type, and a brute-force diagram-chasing oracle.

pub mod abelian;
pub mod gamma_enum;
pub mod homalg;
pub mod wes;

mod error;

pub use error::{Error, Result};
