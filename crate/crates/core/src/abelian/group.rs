use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{lattice, snf, Homomorphism, IntMatrix};
use crate::{Error, Result};

/// A finitely generated abelian group `Z_{d₁} ⊕ … ⊕ Z_{d_t} ⊕ Z^r` in
/// invariant-factor form.
///
/// Generators are ordered torsion first (in the order of `torsion`), then
/// free. Every matrix handed to or returned from this crate is read against
/// that order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    torsion: Vec<BigInt>,
    rank: usize,
}

impl FgAbGroup {
    /// Rejects factors `0` or `1` and broken divisibility chains rather than
    /// re-basing: coordinates supplied against the caller's basis would
    /// otherwise silently change meaning.
    pub fn new(torsion: Vec<BigInt>, rank: usize) -> Result<Self> {
        if let Some(d) = torsion.iter().find(|d| *d < &BigInt::from(2)) {
            return Err(Error::InvalidGroup(format!(
                "invariant factor {d} is not at least 2"
            )));
        }
        if let Some(w) = torsion.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidGroup(format!(
                "{} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(Self { torsion, rank })
    }

    pub fn from_u64(torsion: &[u64], rank: usize) -> Result<Self> {
        Self::new(torsion.iter().map(|&d| BigInt::from(d)).collect(), rank)
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            torsion: Vec::new(),
            rank,
        }
    }

    /// `Z/n`; `n = 0` gives `Z` and `n = 1` the trivial group.
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::trivial(),
            _ => Self {
                torsion: vec![BigInt::from(n)],
                rank: 0,
            },
        }
    }

    /// Canonical form of an arbitrary direct sum of cyclic groups `⊕ Z/nᵢ`
    /// (`nᵢ = 0` meaning `Z`).
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let rel = IntMatrix::diagonal(orders.len(), orders.len(), orders);
        quotient(orders.len(), &rel).group
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion_len(&self) -> usize {
        self.torsion.len()
    }

    pub fn num_gens(&self) -> usize {
        self.torsion.len() + self.rank
    }

    pub fn is_trivial(&self) -> bool {
        self.num_gens() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Order of the `i`-th canonical generator, `None` when it is free.
    pub fn gen_order(&self, i: usize) -> Option<&BigInt> {
        self.torsion.get(i)
    }

    /// The diagonal relation matrix (`num_gens × torsion_len`) presenting
    /// this group on its canonical generators.
    pub fn relation_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(self.num_gens(), self.torsion.len(), &self.torsion)
    }

    /// Reduces torsion coordinates into `0 ≤ cᵢ < dᵢ`.
    pub fn reduce(&self, coords: &mut [BigInt]) {
        assert_eq!(coords.len(), self.num_gens(), "coordinate length");
        for (c, d) in coords.iter_mut().zip(&self.torsion) {
            *c = c.mod_floor(d);
        }
    }

    pub fn reduced(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let mut v = coords.to_vec();
        self.reduce(&mut v);
        v
    }

    /// Reduces the rows of a matrix whose rows are indexed by this group's
    /// generators.
    pub fn reduce_rows(&self, m: &mut IntMatrix) {
        assert_eq!(m.rows(), self.num_gens(), "row count");
        for (i, d) in self.torsion.iter().enumerate() {
            for j in 0..m.cols() {
                m[(i, j)] = m[(i, j)].mod_floor(d);
            }
        }
    }

    pub fn is_zero_element(&self, coords: &[BigInt]) -> bool {
        assert_eq!(coords.len(), self.num_gens(), "coordinate length");
        coords.iter().enumerate().all(|(i, c)| match self.torsion.get(i) {
            Some(d) => c.is_multiple_of(d),
            None => c.is_zero(),
        })
    }

    pub fn zero_element(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.num_gens()]
    }

    pub fn basis_element(&self, i: usize) -> Vec<BigInt> {
        let mut v = self.zero_element();
        v[i] = BigInt::one();
        v
    }

    /// All elements of a finite group in lexicographic coordinate order.
    /// Returns `None` for infinite groups.
    pub fn elements(&self) -> Option<Vec<Vec<BigInt>>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for d in &self.torsion {
            let d = d.to_u64().expect("group too large to enumerate");
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(BigInt::from(c));
                        v
                    })
                })
                .collect();
        }
        Some(out)
    }

    /// Additive order of an element, `None` if it has infinite order.
    pub fn element_order(&self, coords: &[BigInt]) -> Option<BigInt> {
        if coords[self.torsion.len()..].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(
            coords
                .iter()
                .zip(&self.torsion)
                .map(|(c, d)| d / c.gcd(d))
                .fold(BigInt::one(), |acc, o| acc.lcm(&o)),
        )
    }

    /// Orders of the canonical generators, `0` standing for a free one.
    pub fn cyclic_orders(&self) -> Vec<BigInt> {
        self.torsion
            .iter()
            .cloned()
            .chain(std::iter::repeat(BigInt::zero()).take(self.rank))
            .collect()
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup({self})")
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z{d}")).collect();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// An element of a group, torsion coordinates kept reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    group: FgAbGroup,
    coords: Vec<BigInt>,
}

impl Element {
    pub fn new(group: &FgAbGroup, coords: &[BigInt]) -> Result<Self> {
        if coords.len() != group.num_gens() {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for a group with {} generators",
                coords.len(),
                group.num_gens()
            )));
        }
        Ok(Self {
            group: group.clone(),
            coords: group.reduced(coords),
        })
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// Canonical form of a presented group together with the coordinate maps
/// between the presentation's generators and the canonical ones.
#[derive(Debug, Clone)]
pub(crate) struct QuotientData {
    pub group: FgAbGroup,
    /// `num_gens × ambient`: canonical coordinates of each ambient generator.
    pub proj: IntMatrix,
    /// `ambient × num_gens`: an ambient lift of each canonical generator.
    pub section: IntMatrix,
}

fn is_canonical_diagonal(ambient: usize, rel: &IntMatrix) -> Option<Vec<BigInt>> {
    let cols: Vec<usize> = (0..rel.cols())
        .filter(|&j| (0..rel.rows()).any(|i| !rel[(i, j)].is_zero()))
        .collect();
    let mut diag = Vec::with_capacity(cols.len());
    for (k, &j) in cols.iter().enumerate() {
        if k >= ambient {
            return None;
        }
        for i in 0..ambient {
            let x = &rel[(i, j)];
            if (i == k) != !x.is_zero() {
                return None;
            }
        }
        let d = rel[(k, j)].clone();
        if d < BigInt::from(2) {
            return None;
        }
        if let Some(prev) = diag.last() {
            if !d.is_multiple_of(prev) {
                return None;
            }
        }
        diag.push(d);
    }
    Some(diag)
}

/// `Z^ambient / colspan(rel)` in canonical form.
pub(crate) fn quotient(ambient: usize, rel: &IntMatrix) -> QuotientData {
    assert_eq!(rel.rows(), ambient, "relation matrix row count");
    if let Some(diag) = is_canonical_diagonal(ambient, rel) {
        let rank = ambient - diag.len();
        return QuotientData {
            group: FgAbGroup {
                torsion: diag,
                rank,
            },
            proj: IntMatrix::identity(ambient),
            section: IntMatrix::identity(ambient),
        };
    }
    let s = snf::snf(rel);
    let diag = s.diagonal();
    let mut torsion_idx = Vec::new();
    let mut free_idx = Vec::new();
    for i in 0..ambient {
        match diag.get(i) {
            Some(d) if d.is_one() => {}
            Some(d) if !d.is_zero() => torsion_idx.push(i),
            _ => free_idx.push(i),
        }
    }
    let torsion: Vec<BigInt> = torsion_idx.iter().map(|&i| diag[i].clone()).collect();
    let idx: Vec<usize> = torsion_idx.iter().chain(&free_idx).copied().collect();
    let group = FgAbGroup {
        torsion,
        rank: free_idx.len(),
    };
    let mut proj = s.u.select_rows(&idx);
    group.reduce_rows(&mut proj);
    let section = s.u_inv.select_cols(&idx);
    QuotientData {
        group,
        proj,
        section,
    }
}

/// The group `Z^rows / colspan(r)` in canonical form, with the projection
/// from the ambient free group.
pub fn group_from_relations(r: &IntMatrix) -> (FgAbGroup, Homomorphism) {
    let q = quotient(r.rows(), r);
    let proj = Homomorphism::new_unchecked(FgAbGroup::free(r.rows()), q.group.clone(), q.proj);
    (q.group, proj)
}

/// `L / N` where `L` is the column lattice of `span` and `N ⊆ L` the column
/// lattice of `rel`. Returns the group and an `n × gens` matrix sending each
/// canonical generator to a representative in `Z^n`.
pub(crate) fn subquotient(span: &IntMatrix, rel: &IntMatrix) -> (FgAbGroup, IntMatrix) {
    let basis = lattice::column_basis(span);
    let rho = basis.cols();
    let coords: Vec<Vec<BigInt>> = (0..rel.cols())
        .map(|j| {
            lattice::solve(&basis, &rel.column(j))
                .expect("relation lattice must lie in the spanned lattice")
        })
        .collect();
    let c = IntMatrix::from_columns(rho, &coords);
    let q = quotient(rho, &c);
    (q.group, &basis * &q.section)
}
