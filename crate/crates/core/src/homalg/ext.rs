//! `Ext¹(A, C)` over the canonical diagonal resolution of `A`.
//!
//! For `A = ⊕ Z_{dᵢ} ⊕ Z^r` the resolution is `0 → Z^t → Z^{t+r} → A → 0`
//! with `eᵢ ↦ dᵢ eᵢ`, so a cocycle is a choice of one element `θᵢ ∈ C` per
//! torsion generator and `Ext¹(A, C) = ⊕ᵢ C / dᵢC`. The corresponding
//! extension is presented by `C`, lifts `ãᵢ`, and `dᵢ·ãᵢ = θᵢ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::abelian::{quotient, FgAbGroup, Homomorphism, IntMatrix};
use crate::{Error, Result};

/// A class in `Ext¹(A, C)`, one coordinate element of `C` per torsion
/// invariant factor of `A`.
///
/// Equality compares coordinates modulo `dᵢ·C`.
#[derive(Debug, Clone)]
pub struct ExtClass {
    quotient_end: FgAbGroup,
    kernel_end: FgAbGroup,
    coords: Vec<Vec<BigInt>>,
}

/// Modulus of coordinate `k` of the `i`-th component in `C / dᵢC`.
fn component_moduli(d: &BigInt, c: &FgAbGroup) -> Vec<BigInt> {
    (0..c.num_gens())
        .map(|k| match c.gen_order(k) {
            Some(ck) => d.gcd(ck),
            None => d.clone(),
        })
        .collect()
}

impl ExtClass {
    pub fn new(a: &FgAbGroup, c: &FgAbGroup, coords: Vec<Vec<BigInt>>) -> Result<Self> {
        if coords.len() != a.torsion_len() {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinate vectors for Ext({a}, -), which needs {}",
                coords.len(),
                a.torsion_len()
            )));
        }
        if let Some(v) = coords.iter().find(|v| v.len() != c.num_gens()) {
            return Err(Error::ShapeMismatch(format!(
                "coordinate vector of length {} for {c} with {} generators",
                v.len(),
                c.num_gens()
            )));
        }
        let coords = coords.iter().map(|v| c.reduced(v)).collect();
        Ok(Self {
            quotient_end: a.clone(),
            kernel_end: c.clone(),
            coords,
        })
    }

    pub fn zero(a: &FgAbGroup, c: &FgAbGroup) -> Self {
        Self {
            quotient_end: a.clone(),
            kernel_end: c.clone(),
            coords: vec![c.zero_element(); a.torsion_len()],
        }
    }

    /// `A` in `C ↣ G ↠ A`.
    pub fn quotient_end(&self) -> &FgAbGroup {
        &self.quotient_end
    }

    /// `C` in `C ↣ G ↠ A`.
    pub fn kernel_end(&self) -> &FgAbGroup {
        &self.kernel_end
    }

    pub fn coords(&self) -> &[Vec<BigInt>] {
        &self.coords
    }

    /// Coordinates reduced modulo `dᵢ·C`; equal classes have equal
    /// normalized coordinates.
    pub fn normalized(&self) -> Vec<Vec<BigInt>> {
        self.coords
            .iter()
            .zip(self.quotient_end.torsion())
            .map(|(v, d)| {
                v.iter()
                    .zip(component_moduli(d, &self.kernel_end))
                    .map(|(x, m)| x.mod_floor(&m))
                    .collect()
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.normalized().iter().flatten().all(Zero::is_zero)
    }

    /// Canonical coordinates of this class in [`ext_group`]`(A, C)`.
    pub fn ext_coords(&self) -> Vec<BigInt> {
        let (orders, flat) = self.flat_components();
        let rel = IntMatrix::diagonal(orders.len(), orders.len(), &orders);
        let q = quotient(orders.len(), &rel);
        q.group.reduced(&q.proj.mul_vec(&flat))
    }

    fn flat_components(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let mut orders = Vec::new();
        let mut flat = Vec::new();
        for (v, d) in self.normalized().into_iter().zip(self.quotient_end.torsion()) {
            orders.extend(component_moduli(d, &self.kernel_end));
            flat.extend(v);
        }
        (orders, flat)
    }
}

impl PartialEq for ExtClass {
    fn eq(&self, other: &Self) -> bool {
        self.quotient_end == other.quotient_end
            && self.kernel_end == other.kernel_end
            && self.normalized() == other.normalized()
    }
}

impl Eq for ExtClass {}

/// `Ext¹(A, C) = ⊕ᵢ C / dᵢC` in canonical form; free summands of `A`
/// contribute nothing.
pub fn ext_group(a: &FgAbGroup, c: &FgAbGroup) -> FgAbGroup {
    let orders: Vec<BigInt> = a
        .torsion()
        .iter()
        .flat_map(|d| component_moduli(d, c))
        .collect();
    FgAbGroup::from_cyclic_orders(&orders)
}

/// Every class of `Ext¹(A, C)`, one representative each, in lexicographic
/// order of normalized coordinates.
pub fn all_classes(a: &FgAbGroup, c: &FgAbGroup) -> Vec<ExtClass> {
    let mut out = vec![Vec::<Vec<BigInt>>::new()];
    for d in a.torsion() {
        let moduli = component_moduli(d, c);
        let mut vectors = vec![Vec::<BigInt>::new()];
        for m in &moduli {
            let m = m.to_u64().expect("Ext group too large to enumerate");
            vectors = vectors
                .into_iter()
                .flat_map(|p| {
                    (0..m).map(move |x| {
                        let mut v = p.clone();
                        v.push(BigInt::from(x));
                        v
                    })
                })
                .collect();
        }
        out = out
            .into_iter()
            .flat_map(|p| {
                vectors.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|coords| ExtClass::new(a, c, coords).expect("shapes match"))
        .collect()
}

/// `f^*e` for `f: A' → A`, using `f`'s own matrix as the chain lift.
pub fn ext_pullback(f: &Homomorphism, e: &ExtClass) -> Result<ExtClass> {
    ext_pullback_via_lift(f, f.matrix(), e)
}

/// `f^*e` computed through an explicit chain lift `lift: Z^{n'} → Z^n` of
/// `f` on the free modules of the two resolutions.
///
/// The lift on the relation modules is then forced: column `j` of the
/// relation-level map is `d'ⱼ · lift[·, j] / dᵢ` on torsion rows, and the
/// pulled-back cocycle is the old one composed with it. Any two lifts of
/// the same `f` give the same class.
pub fn ext_pullback_via_lift(f: &Homomorphism, lift: &IntMatrix, e: &ExtClass) -> Result<ExtClass> {
    let (a_new, a) = (f.source(), f.target());
    if a != e.quotient_end() {
        return Err(Error::ShapeMismatch(format!(
            "pullback along a map into {a} of a class over {}",
            e.quotient_end()
        )));
    }
    if lift.rows() != a.num_gens() || lift.cols() != a_new.num_gens() {
        return Err(Error::ShapeMismatch("chain lift has the wrong shape".into()));
    }
    let mut reduced = lift.clone();
    a.reduce_rows(&mut reduced);
    if &reduced != f.matrix() {
        return Err(Error::ShapeMismatch("matrix is not a lift of the map".into()));
    }
    let c = e.kernel_end();
    let mut coords = Vec::with_capacity(a_new.torsion_len());
    for (j, dj) in a_new.torsion().iter().enumerate() {
        let mut acc = c.zero_element();
        for (i, di) in a.torsion().iter().enumerate() {
            let (rel, rem) = (dj * &lift[(i, j)]).div_rem(di);
            assert!(rem.is_zero(), "a well-defined map always lifts to relations");
            for (x, y) in acc.iter_mut().zip(&e.coords[i]) {
                *x += &rel * y;
            }
        }
        for i in a.torsion_len()..a.num_gens() {
            assert!(lift[(i, j)].is_zero(), "torsion cannot map to free generators");
        }
        coords.push(acc);
    }
    ExtClass::new(a_new, c, coords)
}

/// `g_*e` for `g: C → C'`.
pub fn ext_pushforward(g: &Homomorphism, e: &ExtClass) -> Result<ExtClass> {
    if g.source() != e.kernel_end() {
        return Err(Error::ShapeMismatch(format!(
            "pushforward along a map from {} of a class with kernel end {}",
            g.source(),
            e.kernel_end()
        )));
    }
    let coords = e.coords.iter().map(|v| g.apply(v)).collect();
    ExtClass::new(e.quotient_end(), g.target(), coords)
}

/// The middle group of the extension `C ↣ G ↠ A` represented by a class.
#[derive(Debug, Clone)]
pub struct Extension {
    pub group: FgAbGroup,
    pub inj: Homomorphism,
    pub surj: Homomorphism,
    /// Presentation generators: those of `C`, then lifts `ãᵢ` of the
    /// generators of `A`.
    pub ambient_gens: usize,
    /// Relation columns of the presentation.
    pub relations: IntMatrix,
    /// Canonical coordinates of each presentation generator.
    pub proj: IntMatrix,
    /// A presentation-level lift of each canonical generator.
    pub section: IntMatrix,
}

/// Builds `G = ⟨C, ã₁ … | relations of C, dᵢ·ãᵢ = θᵢ⟩` and its structure
/// maps.
pub fn extension_group_from_class(e: &ExtClass) -> Extension {
    let (a, c) = (e.quotient_end(), e.kernel_end());
    let (nc, na) = (c.num_gens(), a.num_gens());
    let n = nc + na;
    let mut rel = IntMatrix::zeros(n, c.torsion_len() + a.torsion_len());
    for (k, ck) in c.torsion().iter().enumerate() {
        rel[(k, k)] = ck.clone();
    }
    for (i, di) in a.torsion().iter().enumerate() {
        let col = c.torsion_len() + i;
        rel[(nc + i, col)] = di.clone();
        for k in 0..nc {
            rel[(k, col)] = -&e.coords[i][k];
        }
    }
    let q = quotient(n, &rel);
    let inj_m = q.proj.select_cols(&(0..nc).collect::<Vec<_>>());
    let inj = Homomorphism::new(c.clone(), q.group.clone(), inj_m).expect("C maps into G");
    let mut to_a = IntMatrix::zeros(na, n);
    for i in 0..na {
        to_a[(i, nc + i)] = BigInt::from(1);
    }
    let surj = Homomorphism::new(q.group.clone(), a.clone(), &to_a * &q.section)
        .expect("G maps onto A");
    Extension {
        group: q.group,
        inj,
        surj,
        ambient_gens: n,
        relations: rel,
        proj: q.proj,
        section: q.section,
    }
}

/// The class of an extension `C ↣ G ↠ A`: lift each torsion generator
/// `aᵢ` to `xᵢ ∈ G`, then `dᵢ·xᵢ = inj(θᵢ)`.
pub fn class_of_extension(inj: &Homomorphism, surj: &Homomorphism) -> Result<ExtClass> {
    let (c, g, a) = (inj.source(), inj.target(), surj.target());
    if surj.source() != g {
        return Err(Error::ShapeMismatch("inj and surj do not share a middle group".into()));
    }
    let mut coords = Vec::with_capacity(a.torsion_len());
    for (i, di) in a.torsion().iter().enumerate() {
        let x = surj
            .preimage(&a.basis_element(i))
            .ok_or_else(|| Error::NotWellDefined("surj is not surjective".into()))?;
        let y: Vec<BigInt> = x.iter().map(|v| v * di).collect();
        let theta = inj
            .preimage(&g.reduced(&y))
            .ok_or_else(|| Error::NotWellDefined("ker surj is not inside im inj".into()))?;
        coords.push(theta);
    }
    ExtClass::new(a, c, coords)
}
