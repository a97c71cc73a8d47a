use std::fmt;

use num_bigint::BigInt;

use super::group::{quotient, subquotient};
use super::{lattice, FgAbGroup, IntMatrix};
use crate::{Error, Result};

/// A homomorphism between groups in canonical form. Column `j` of the matrix
/// holds the image of source generator `j` in target coordinates; torsion
/// rows are kept reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

/// A quotient group with its projection and a lift of each canonical
/// generator back to the source.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FgAbGroup,
    pub projection: Homomorphism,
    /// `ambient gens × group gens`.
    pub section: IntMatrix,
}

/// A subgroup with its inclusion.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub group: FgAbGroup,
    pub inclusion: Homomorphism,
}

impl Homomorphism {
    pub fn new(source: FgAbGroup, target: FgAbGroup, mut matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.num_gens() || matrix.cols() != source.num_gens() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for a map {source} -> {target}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        for (j, dj) in source.torsion().iter().enumerate() {
            let image: Vec<BigInt> = matrix.column(j).iter().map(|x| x * dj).collect();
            if !target.is_zero_element(&image) {
                return Err(Error::NotWellDefined(format!(
                    "generator {j} has order {dj} but its image {:?} does not",
                    matrix.column(j)
                )));
            }
        }
        target.reduce_rows(&mut matrix);
        Ok(Self {
            source,
            target,
            matrix,
        })
    }

    /// Caller guarantees shape and well-definedness; rows are still reduced.
    pub(crate) fn new_unchecked(source: FgAbGroup, target: FgAbGroup, mut matrix: IntMatrix) -> Self {
        debug_assert!(Self::new(source.clone(), target.clone(), matrix.clone()).is_ok());
        target.reduce_rows(&mut matrix);
        Self {
            source,
            target,
            matrix,
        }
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(
        source: &FgAbGroup,
        target: &FgAbGroup,
        rows: &[Vec<T>],
    ) -> Result<Self> {
        let m = IntMatrix::from_rows_with_cols(source.num_gens(), rows)?;
        Self::new(source.clone(), target.clone(), m)
    }

    pub fn identity(group: &FgAbGroup) -> Self {
        Self::new_unchecked(group.clone(), group.clone(), IntMatrix::identity(group.num_gens()))
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.num_gens(), source.num_gens()),
        }
    }

    /// Multiplication by an integer on `group`.
    pub fn scalar(group: &FgAbGroup, k: i64) -> Self {
        let mut m = IntMatrix::identity(group.num_gens());
        for i in 0..group.num_gens() {
            m[(i, i)] = BigInt::from(k);
        }
        Self::new_unchecked(group.clone(), group.clone(), m)
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.target.reduced(&self.matrix.mul_vec(x))
    }

    /// `g ∘ f`, i.e. first `self`, then `g`.
    pub fn then(&self, g: &Homomorphism) -> Result<Homomorphism> {
        compose(g, self)
    }

    /// Integer lattice presenting the target relations next to the matrix:
    /// `[matrix | relations(target)]`.
    fn lifted(&self) -> IntMatrix {
        self.matrix
            .hcat(&self.target.relation_matrix())
            .expect("row counts agree")
    }

    /// Some `x` with `self(x) = y`.
    pub fn preimage(&self, y: &[BigInt]) -> Option<Vec<BigInt>> {
        let sol = lattice::solve(&self.lifted(), y)?;
        Some(self.source.reduced(&sol[..self.source.num_gens()]))
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.target.num_gens()).all(|i| self.preimage(&self.target.basis_element(i)).is_some())
    }

    pub fn is_injective(&self) -> bool {
        kernel(self).group.is_trivial()
    }

    /// The inverse map, when `self` is bijective. Built by solving
    /// `self ∘ g = id` one generator at a time.
    pub fn inverse(&self) -> Option<Homomorphism> {
        let cols = (0..self.target.num_gens())
            .map(|i| self.preimage(&self.target.basis_element(i)))
            .collect::<Option<Vec<_>>>()?;
        // Surjective endomorphisms of finitely generated abelian groups are
        // bijective; other maps still need an injectivity check.
        if !self.is_endomorphism() && !self.is_injective() {
            return None;
        }
        let m = IntMatrix::from_columns(self.source.num_gens(), &cols);
        Some(Self::new_unchecked(self.target.clone(), self.source.clone(), m))
    }

    /// Row-major matrix entries; the enumeration order key.
    pub fn key(&self) -> &[BigInt] {
        self.matrix.entries()
    }
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hom({} -> {}: {})", self.source, self.target, self.matrix)
    }
}

/// `g ∘ f`.
pub fn compose(g: &Homomorphism, f: &Homomorphism) -> Result<Homomorphism> {
    if f.target != g.source {
        return Err(Error::ShapeMismatch(format!(
            "cannot compose {} -> {} after {} -> {}",
            g.source, g.target, f.source, f.target
        )));
    }
    Ok(Homomorphism::new_unchecked(
        f.source.clone(),
        g.target.clone(),
        &g.matrix * &f.matrix,
    ))
}

pub fn cokernel(f: &Homomorphism) -> Quotient {
    let n = f.target.num_gens();
    let rel = f
        .target
        .relation_matrix()
        .hcat(&f.matrix)
        .expect("row counts agree");
    let q = quotient(n, &rel);
    Quotient {
        projection: Homomorphism::new_unchecked(f.target.clone(), q.group.clone(), q.proj),
        group: q.group,
        section: q.section,
    }
}

pub fn kernel(f: &Homomorphism) -> Subgroup {
    let n = f.source.num_gens();
    let k = lattice::kernel_basis(&f.lifted());
    let span = k.select_rows(&(0..n).collect::<Vec<_>>());
    let (group, incl) = subquotient(&span, &f.source.relation_matrix());
    Subgroup {
        inclusion: Homomorphism::new_unchecked(group.clone(), f.source.clone(), incl),
        group,
    }
}

/// True iff `f` is bijective; no enumeration involved.
pub fn is_automorphism(f: &Homomorphism) -> bool {
    f.is_endomorphism() && f.is_surjective()
}

/// `true` when every element of the image of `f` lies in the image of `g`
/// (both maps into the same group).
pub fn image_contained(f: &Homomorphism, g: &Homomorphism) -> bool {
    assert_eq!(f.target, g.target, "maps must share a target");
    (0..f.source.num_gens()).all(|j| g.preimage(&f.matrix.column(j)).is_some())
}
