//! Functors on finitely generated abelian groups: `− ⊗ Z₂`, `Tor(−, Z₂)`,
//! the exterior square `Λ²` and `Ext¹`.
//!
//! `Λ²A` is used as `H₂(A; Z)` throughout; for abelian `A` the two agree
//! (Miller), and no separate group-homology computation is done.

mod ext;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::abelian::{FgAbGroup, Homomorphism, IntMatrix};

pub use ext::{
    all_classes, class_of_extension, ext_group, ext_pullback, ext_pullback_via_lift,
    ext_pushforward, extension_group_from_class, ExtClass, Extension,
};

fn two() -> BigInt {
    BigInt::from(2)
}

/// Generators of `A` that survive in `A/2A`: even torsion generators then
/// free ones, in canonical order.
fn mod2_survivors(a: &FgAbGroup) -> Vec<usize> {
    (0..a.num_gens())
        .filter(|&i| a.gen_order(i).map_or(true, |d| d.is_even()))
        .collect()
}

/// `A ⊗ Z₂ = A/2A` with the reduction map `A → A/2A`.
pub fn tensor_z2(a: &FgAbGroup) -> (FgAbGroup, Homomorphism) {
    let keep = mod2_survivors(a);
    let group = FgAbGroup::new(vec![two(); keep.len()], 0).expect("Z2^k is canonical");
    let mut m = IntMatrix::zeros(keep.len(), a.num_gens());
    for (row, &i) in keep.iter().enumerate() {
        m[(row, i)] = BigInt::one();
    }
    let proj = Homomorphism::new(a.clone(), group.clone(), m).expect("reduction mod 2 is well defined");
    (group, proj)
}

/// `f ⊗ id_{Z₂}`.
pub fn tensor_z2_map(f: &Homomorphism) -> Homomorphism {
    let rows = mod2_survivors(f.target());
    let cols = mod2_survivors(f.source());
    let m = f.matrix().select_rows(&rows).select_cols(&cols);
    let (src, _) = tensor_z2(f.source());
    let (dst, _) = tensor_z2(f.target());
    Homomorphism::new(src, dst, m).expect("f ⊗ Z2 is well defined")
}

/// The 2-torsion subgroup `A[2] = Tor(A, Z₂)`.
pub fn tor_z2(a: &FgAbGroup) -> FgAbGroup {
    let k = a.torsion().iter().filter(|d| d.is_even()).count();
    FgAbGroup::new(vec![two(); k], 0).expect("Z2^k is canonical")
}

/// Index pairs `(i, j)`, `i < j`, in lexicographic order: the canonical
/// generators `gᵢ ∧ gⱼ` of `Λ²A`.
pub fn wedge_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// `Λ²A ≅ H₂(A; Z)` in closed form.
///
/// `gᵢ ∧ gⱼ` has order `gcd(dᵢ, dⱼ) = dᵢ` when `gᵢ` is torsion (torsion
/// generators come first and form a divisibility chain) and is free when
/// both are free. In lexicographic pair order these orders already form a
/// divisibility chain, so the pair basis is canonical as it stands.
pub fn lambda2(a: &FgAbGroup) -> FgAbGroup {
    let n = a.num_gens();
    let mut torsion = Vec::new();
    for (i, d) in a.torsion().iter().enumerate() {
        torsion.extend(std::iter::repeat(d.clone()).take(n - 1 - i));
    }
    let r = a.rank();
    debug_assert_eq!(torsion.len() + r * r.saturating_sub(1) / 2, wedge_pairs(n).len());
    FgAbGroup::new(torsion, r * r.saturating_sub(1) / 2).expect("wedge orders form a chain")
}

/// `Λ²f : gᵢ ∧ gⱼ ↦ f(gᵢ) ∧ f(gⱼ)`, expanded with `g ∧ g = 0` and
/// `gₗ ∧ gₖ = −gₖ ∧ gₗ`.
pub fn lambda2_map(f: &Homomorphism) -> Homomorphism {
    let src_pairs = wedge_pairs(f.source().num_gens());
    let dst_pairs = wedge_pairs(f.target().num_gens());
    let m = f.matrix();
    let mut out = IntMatrix::zeros(dst_pairs.len(), src_pairs.len());
    for (col, &(i, j)) in src_pairs.iter().enumerate() {
        for (row, &(k, l)) in dst_pairs.iter().enumerate() {
            out[(row, col)] = &m[(k, i)] * &m[(l, j)] - &m[(l, i)] * &m[(k, j)];
        }
    }
    Homomorphism::new(lambda2(f.source()), lambda2(f.target()), out)
        .expect("Λ²f is well defined")
}
