//! The Whitehead exact sequence of a 2-connected 6-dimensional complex,
//!
//! ```text
//! H₆ --b₆--> Γ₅ --> π₅ --> H₅ --> 0,     Γ₅ = H₄ ⊗ Z₂ ⊕ Λ²H₃,
//! ```
//!
//! reduced to the data needed to decide Γ-automorphisms: the groups
//! `H₃ … H₆`, the map `b₆`, and the class of `coker b₆ ↣ π₅ ↠ H₅` in
//! `Ext¹(H₅, coker b₆)`.

use std::fmt;

use num_bigint::BigInt;

use crate::abelian::{
    compose, is_automorphism, lattice, quotient, FgAbGroup, Homomorphism, IntMatrix, Quotient,
};
use crate::homalg::{
    ext_group, ext_pullback, ext_pushforward, extension_group_from_class, lambda2, lambda2_map,
    tensor_z2, tensor_z2_map, ExtClass,
};
use crate::{Error, Result};

/// `Γ₅ = H₄ ⊗ Z₂ ⊕ Λ²H₃`.
///
/// Maps into Γ₅ are supplied in *block* coordinates: the generators of
/// `H₄ ⊗ Z₂` followed by the wedge generators of `Λ²H₃`. When the block
/// orders already form a divisibility chain the block basis is the
/// canonical one; otherwise (e.g. `Z₂ ⊕ Z₃`) the blocks are merged into
/// invariant-factor form and the two coordinate systems differ.
#[derive(Debug, Clone)]
pub struct Gamma5 {
    pub tensor: FgAbGroup,
    pub wedge: FgAbGroup,
    pub group: FgAbGroup,
    /// canonical gens × block gens
    block_to_canonical: IntMatrix,
    /// block gens × canonical gens
    canonical_to_block: IntMatrix,
}

impl Gamma5 {
    pub fn block_len(&self) -> usize {
        self.tensor.num_gens() + self.wedge.num_gens()
    }

    /// Canonical coordinates of a matrix whose rows are block generators.
    pub fn from_block_rows(&self, m: &IntMatrix) -> IntMatrix {
        let mut out = &self.block_to_canonical * m;
        self.group.reduce_rows(&mut out);
        out
    }

    /// The endomorphism of Γ₅ acting blockwise as `t ⊕ w`.
    pub fn block_diagonal(&self, t: &Homomorphism, w: &Homomorphism) -> Homomorphism {
        let block = t.matrix().block_diag(w.matrix());
        let m = &(&self.block_to_canonical * &block) * &self.canonical_to_block;
        Homomorphism::new(self.group.clone(), self.group.clone(), m)
            .expect("a blockwise map of Γ5 is well defined")
    }
}

/// `Γ₅` from `H₃` and `H₄`. Requires `H₃ ⊗ Z₂ = 0`.
pub fn gamma5(h3: &FgAbGroup, h4: &FgAbGroup) -> Result<Gamma5> {
    if !tensor_z2(h3).0.is_trivial() {
        return Err(Error::HypothesisViolation(format!("H3 ⊗ Z2 ≠ 0 for H3 = {h3}")));
    }
    let tensor = tensor_z2(h4).0;
    let wedge = lambda2(h3);
    let orders: Vec<BigInt> = tensor
        .cyclic_orders()
        .into_iter()
        .chain(wedge.cyclic_orders())
        .collect();
    let n = orders.len();
    let q = quotient(n, &IntMatrix::diagonal(n, n, &orders));
    Ok(Gamma5 {
        tensor,
        wedge,
        group: q.group,
        block_to_canonical: q.proj,
        canonical_to_block: q.section,
    })
}

/// Raw input describing one sequence. Nothing is checked until
/// [`validate`] or [`WesData::resolve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WesData {
    pub h3: FgAbGroup,
    pub h4: FgAbGroup,
    pub h5: FgAbGroup,
    pub h6: FgAbGroup,
    /// `b₆` with rows indexed by the block generators of Γ₅ and columns by
    /// the generators of `H₆`.
    pub b6: IntMatrix,
    /// One coordinate vector over the canonical generators of `coker b₆`
    /// per torsion invariant factor of `H₅`.
    pub pi5_class: Vec<Vec<BigInt>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// A defining hypothesis of the category is violated.
    Hypothesis,
    /// The data is malformed (shapes, coordinates).
    Shape,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub kind: CheckKind,
    pub passed: bool,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn has_hypothesis_failure(&self) -> bool {
        self.failures().any(|c| c.kind == CheckKind::Hypothesis)
    }

    fn push(&mut self, name: &'static str, kind: CheckKind, passed: bool, reason: impl Into<String>) {
        self.checks.push(Check {
            name,
            kind,
            passed,
            reason: reason.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "[{status}] {}: {}", c.name, c.reason)?;
        }
        Ok(())
    }
}

/// Checks every invariant of [`WesData`]; never panics on bad input.
pub fn validate(w: &WesData) -> ValidationReport {
    let mut report = ValidationReport::default();

    let h3_ok = tensor_z2(&w.h3).0.is_trivial();
    report.push(
        "h3-odd",
        CheckKind::Hypothesis,
        h3_ok,
        if h3_ok {
            format!("H3 ⊗ Z2 = 0 (H3 = {})", w.h3)
        } else {
            format!("H3 ⊗ Z2 ≠ 0 (H3 = {})", w.h3)
        },
    );

    let h6_ok = w.h6.is_free();
    report.push(
        "h6-free",
        CheckKind::Hypothesis,
        h6_ok,
        if h6_ok {
            format!("H6 = {} is torsion-free", w.h6)
        } else {
            format!("H6 must be torsion-free (H6 = {})", w.h6)
        },
    );

    if !h3_ok {
        return report;
    }
    let g5 = gamma5(&w.h3, &w.h4).expect("H3 hypothesis checked above");
    let shape_ok = w.b6.rows() == g5.block_len() && w.b6.cols() == w.h6.num_gens();
    report.push(
        "b6-shape",
        CheckKind::Shape,
        shape_ok,
        format!(
            "b6 is {}x{}, expected {}x{} (Γ5 block generators x H6 generators)",
            w.b6.rows(),
            w.b6.cols(),
            g5.block_len(),
            w.h6.num_gens()
        ),
    );
    if !shape_ok || !h6_ok {
        return report;
    }
    let b6 = Homomorphism::new(w.h6.clone(), g5.group.clone(), g5.from_block_rows(&w.b6));
    report.push(
        "b6-well-defined",
        CheckKind::Shape,
        b6.is_ok(),
        match &b6 {
            Ok(_) => format!("b6: H6 -> Γ5 = {}", g5.group),
            Err(e) => e.to_string(),
        },
    );
    let Ok(b6) = b6 else {
        return report;
    };
    let coker = crate::abelian::cokernel(&b6).group;
    let class = ExtClass::new(&w.h5, &coker, w.pi5_class.clone());
    report.push(
        "pi5-class",
        CheckKind::Shape,
        class.is_ok(),
        match &class {
            Ok(_) => format!(
                "class in Ext({}, {}) = {}",
                w.h5,
                coker,
                ext_group(&w.h5, &coker)
            ),
            Err(e) => format!("pi5_class must have one vector per torsion factor of H5 over coker b6 = {coker}: {e}"),
        },
    );
    report
}

/// Validated sequence data with its derived invariants.
#[derive(Debug, Clone)]
pub struct Wes {
    data: WesData,
    gamma5: Gamma5,
    b6: Homomorphism,
    coker: Quotient,
    pi5: ExtClass,
}

impl WesData {
    pub fn resolve(&self) -> Result<Wes> {
        let report = validate(self);
        if let Some(c) = report.failures().next() {
            return Err(match c.kind {
                CheckKind::Hypothesis => Error::HypothesisViolation(c.reason.clone()),
                CheckKind::Shape => Error::ShapeMismatch(c.reason.clone()),
            });
        }
        let gamma5 = gamma5(&self.h3, &self.h4)?;
        let b6 = Homomorphism::new(
            self.h6.clone(),
            gamma5.group.clone(),
            gamma5.from_block_rows(&self.b6),
        )?;
        let coker = crate::abelian::cokernel(&b6);
        let pi5 = ExtClass::new(&self.h5, &coker.group, self.pi5_class.clone())?;
        Ok(Wes {
            data: self.clone(),
            gamma5,
            b6,
            coker,
            pi5,
        })
    }
}

/// An automorphism of each of `H₃ … H₆`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaTuple {
    pub f3: Homomorphism,
    pub f4: Homomorphism,
    pub f5: Homomorphism,
    pub f6: Homomorphism,
}

impl GammaTuple {
    pub fn identity(w: &Wes) -> Self {
        Self {
            f3: Homomorphism::identity(&w.data.h3),
            f4: Homomorphism::identity(&w.data.h4),
            f5: Homomorphism::identity(&w.data.h5),
            f6: Homomorphism::identity(&w.data.h6),
        }
    }

    /// Componentwise `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            f3: compose(&self.f3, &other.f3)?,
            f4: compose(&self.f4, &other.f4)?,
            f5: compose(&self.f5, &other.f5)?,
            f6: compose(&self.f6, &other.f6)?,
        })
    }

    pub fn inverse(&self) -> Option<Self> {
        Some(Self {
            f3: self.f3.inverse()?,
            f4: self.f4.inverse()?,
            f5: self.f5.inverse()?,
            f6: self.f6.inverse()?,
        })
    }
}

/// Outcome of the Γ-automorphism test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub accepted: bool,
    pub reason: String,
}

impl Wes {
    pub fn data(&self) -> &WesData {
        &self.data
    }

    pub fn gamma5(&self) -> &Gamma5 {
        &self.gamma5
    }

    /// `b₆ : H₆ → Γ₅` in canonical coordinates.
    pub fn b6(&self) -> &Homomorphism {
        &self.b6
    }

    pub fn coker_b6(&self) -> &Quotient {
        &self.coker
    }

    pub fn pi5_class(&self) -> &ExtClass {
        &self.pi5
    }

    /// `γ = f₄ ⊗ id_{Z₂} ⊕ Λ²f₃`.
    pub fn gamma_of(&self, f3: &Homomorphism, f4: &Homomorphism) -> Result<Homomorphism> {
        for (name, f, h) in [("f3", f3, &self.data.h3), ("f4", f4, &self.data.h4)] {
            if f.source() != h || !is_automorphism(f) {
                return Err(Error::NotAutomorphism(format!("{name} is not an automorphism of {h}")));
            }
        }
        Ok(self
            .gamma5
            .block_diagonal(&tensor_z2_map(f4), &lambda2_map(f3)))
    }

    /// The automorphism of `coker b₆` induced by `γ`.
    pub fn gamma_tilde(&self, gamma: &Homomorphism) -> Result<Homomorphism> {
        let pr = &self.coker.projection;
        if !compose(pr, &compose(gamma, &self.b6)?)?.is_zero() {
            return Err(Error::NotInducible);
        }
        let m = &(pr.matrix() * gamma.matrix()) * &self.coker.section;
        Homomorphism::new(self.coker.group.clone(), self.coker.group.clone(), m)
    }

    fn check_tuple(&self, t: &GammaTuple) -> Result<()> {
        let d = &self.data;
        for (name, f, h) in [
            ("f3", &t.f3, &d.h3),
            ("f4", &t.f4, &d.h4),
            ("f5", &t.f5, &d.h5),
            ("f6", &t.f6, &d.h6),
        ] {
            if f.source() != h || !is_automorphism(f) {
                return Err(Error::NotAutomorphism(format!("{name} is not an automorphism of {h}")));
            }
        }
        Ok(())
    }

    /// Whether `t` extends to a commutative ladder on the sequence.
    ///
    /// Accepts iff the `b₆` square commutes, `γ ∘ b₆ = b₆ ∘ f₆`, and the
    /// extension class is compatible, `f₅^*[π₅] = γ̃_*[π₅]`.
    pub fn is_gamma_automorphism(&self, t: &GammaTuple) -> Result<Membership> {
        self.check_tuple(t)?;
        let gamma = self.gamma_of(&t.f3, &t.f4)?;
        if compose(&gamma, &self.b6)? != compose(&self.b6, &t.f6)? {
            return Ok(Membership {
                accepted: false,
                reason: "b6 square does not commute: γ∘b6 ≠ b6∘f6".into(),
            });
        }
        let gamma_tilde = self
            .gamma_tilde(&gamma)
            .expect("a commuting b6 square preserves im b6");
        let pulled = ext_pullback(&t.f5, &self.pi5)?;
        let pushed = ext_pushforward(&gamma_tilde, &self.pi5)?;
        if pulled == pushed {
            Ok(Membership {
                accepted: true,
                reason: "b6 square commutes and f5^*[π5] = γ̃_*[π5]".into(),
            })
        } else {
            Ok(Membership {
                accepted: false,
                reason: format!(
                    "f5^*[π5] = {:?} differs from γ̃_*[π5] = {:?}",
                    pulled.normalized(),
                    pushed.normalized()
                ),
            })
        }
    }

    pub fn report(&self) -> WesReport {
        let d = &self.data;
        let ext = ext_group(&d.h5, &self.coker.group);
        let pi5 = extension_group_from_class(&self.pi5);
        let pi5_order = match (self.coker.group.order(), d.h5.order()) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
        WesReport {
            h3: d.h3.clone(),
            h4: d.h4.clone(),
            h5: d.h5.clone(),
            h6: d.h6.clone(),
            gamma5: self.gamma5.group.clone(),
            coker_b6: self.coker.group.clone(),
            ext: ext.clone(),
            pi5_class: self.pi5.normalized(),
            pi5_class_ext_coords: self.pi5.ext_coords(),
            pi5_split: self.pi5.is_zero(),
            pi5: pi5.group,
            pi5_order,
        }
    }
}

/// Derived invariants of a sequence. `π₃ ≅ H₃` and `π₄ ≅ H₄` always hold
/// in this range; `π₅` is the extension of `H₅` by `coker b₆`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WesReport {
    pub h3: FgAbGroup,
    pub h4: FgAbGroup,
    pub h5: FgAbGroup,
    pub h6: FgAbGroup,
    pub gamma5: FgAbGroup,
    pub coker_b6: FgAbGroup,
    pub ext: FgAbGroup,
    pub pi5_class: Vec<Vec<BigInt>>,
    pub pi5_class_ext_coords: Vec<BigInt>,
    pub pi5_split: bool,
    pub pi5: FgAbGroup,
    pub pi5_order: Option<BigInt>,
}

impl fmt::Display for WesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "H3 = {}, H4 = {}, H5 = {}, H6 = {}", self.h3, self.h4, self.h5, self.h6)?;
        writeln!(f, "pi3 ≅ H3 = {}", self.h3)?;
        writeln!(f, "pi4 ≅ H4 = {}", self.h4)?;
        writeln!(f, "Γ5 = H4 ⊗ Z2 ⊕ H2(H3; Z) = {}", self.gamma5)?;
        writeln!(f, "coker b6 = {}", self.coker_b6)?;
        writeln!(f, "Ext(H5, coker b6) = {}", self.ext)?;
        writeln!(
            f,
            "[pi5] = {:?} (Ext coordinates {:?}){}",
            self.pi5_class,
            self.pi5_class_ext_coords,
            if self.pi5_split { ", split" } else { "" }
        )?;
        write!(f, "pi5 = {}", self.pi5)?;
        if let Some(n) = &self.pi5_order {
            write!(f, ", |pi5| = |coker b6|·|H5| = {n}")?;
        }
        writeln!(f)
    }
}

/// Integral homology `H₃ … H₆` of a cellular chain complex concentrated in
/// degrees 3 to 6: `d₄: C₄ → C₃`, `d₅: C₅ → C₄`, `d₆: C₆ → C₅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homology {
    pub h3: FgAbGroup,
    pub h4: FgAbGroup,
    pub h5: FgAbGroup,
    pub h6: FgAbGroup,
}

pub fn homology_of_complex(d4: &IntMatrix, d5: &IntMatrix, d6: &IntMatrix) -> Result<Homology> {
    if d4.cols() != d5.rows() || d5.cols() != d6.rows() {
        return Err(Error::NotAComplex(format!(
            "shapes do not compose: d4 {}x{}, d5 {}x{}, d6 {}x{}",
            d4.rows(),
            d4.cols(),
            d5.rows(),
            d5.cols(),
            d6.rows(),
            d6.cols()
        )));
    }
    if !(d4 * d5).is_zero() {
        return Err(Error::NotAComplex("d4·d5 ≠ 0".into()));
    }
    if !(d5 * d6).is_zero() {
        return Err(Error::NotAComplex("d5·d6 ≠ 0".into()));
    }
    let homology_at = |d_out: &IntMatrix, d_in: &IntMatrix| {
        let z = lattice::kernel_basis(d_out);
        crate::abelian::subquotient(&z, d_in).0
    };
    let h3 = quotient(d4.rows(), d4).group;
    let h4 = homology_at(d4, d5);
    let h5 = homology_at(d5, d6);
    let h6 = homology_at(d6, &IntMatrix::zeros(d6.cols(), 0));
    Ok(Homology { h3, h4, h5, h6 })
}

/// `Σ (−1)^i rank`, used as a bookkeeping check on [`homology_of_complex`].
pub fn euler_characteristic(ranks: [usize; 4]) -> i64 {
    ranks
        .iter()
        .enumerate()
        .map(|(i, &r)| if i % 2 == 0 { -(r as i64) } else { r as i64 })
        .sum()
}
