//! Enumeration of `aut(A)` for groups of free rank at most one.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::hom::{compose, is_automorphism};
use super::{FgAbGroup, Homomorphism, IntMatrix};
use crate::{Error, Result};

/// Candidate images of each generator: an image column must be killed by the
/// generator's order, and a free generator has to land on `±(free gen)`
/// plus torsion for the map to be invertible.
fn column_choices(a: &FgAbGroup, j: usize) -> Vec<Vec<BigInt>> {
    let t = a.torsion_len();
    let mut axes: Vec<Vec<BigInt>> = Vec::with_capacity(a.num_gens());
    for di in a.torsion() {
        let step = match a.gen_order(j) {
            Some(dj) => di / di.gcd(dj),
            None => BigInt::one(),
        };
        let n = (di / &step).to_u64().expect("group too large to enumerate");
        axes.push((0..n).map(|k| &step * BigInt::from(k)).collect());
    }
    for i in t..a.num_gens() {
        axes.push(if j < t {
            vec![BigInt::zero()]
        } else if i == j {
            vec![BigInt::from(-1), BigInt::one()]
        } else {
            vec![BigInt::zero()]
        });
    }
    cartesian(&axes)
}

fn cartesian(axes: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut out = vec![Vec::new()];
    for axis in axes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn check_budget(what: &str, needed: &BigInt, budget: u64) -> Result<()> {
    if needed > &BigInt::from(budget) {
        return Err(Error::BudgetExceeded {
            what: what.to_string(),
            needed: needed.to_string(),
            budget,
        });
    }
    Ok(())
}

/// Every automorphism of `a`, sorted lexicographically by row-major matrix
/// entries. Fails for free rank ≥ 2 and when the candidate count exceeds
/// `budget`.
pub fn aut_group(a: &FgAbGroup, budget: u64) -> Result<Vec<Homomorphism>> {
    if a.rank() >= 2 {
        return Err(Error::UnsupportedRank { rank: a.rank() });
    }
    let n = a.num_gens();
    let choices: Vec<Vec<Vec<BigInt>>> = (0..n).map(|j| column_choices(a, j)).collect();
    let count: BigInt = choices.iter().map(|c| BigInt::from(c.len())).product();
    check_budget(&format!("aut({a})"), &count, budget)?;

    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let cols: Vec<Vec<BigInt>> = idx
            .iter()
            .enumerate()
            .map(|(j, &k)| choices[j][k].clone())
            .collect();
        let f = Homomorphism::new_unchecked(a.clone(), a.clone(), IntMatrix::from_columns(n, &cols));
        if is_automorphism(&f) {
            out.push(f);
        }
        // odometer over the column choices
        let mut pos = n;
        loop {
            if pos == 0 {
                out.sort_by(|x, y| x.key().cmp(y.key()));
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// `aut(A)` with its Cayley table, for index-based group computations.
#[derive(Debug, Clone)]
pub struct AutTable {
    pub group: FgAbGroup,
    pub elements: Vec<Homomorphism>,
    /// `mul[a][b]` is the index of `elements[a] ∘ elements[b]`.
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub identity: usize,
}

impl AutTable {
    pub fn new(group: &FgAbGroup, budget: u64) -> Result<Self> {
        let elements = aut_group(group, budget)?;
        let index: HashMap<&[BigInt], usize> = elements
            .iter()
            .enumerate()
            .map(|(i, f)| (f.key(), i))
            .collect();
        let lookup = |f: &Homomorphism| -> usize {
            *index
                .get(f.key())
                .expect("aut(A) must be closed under composition")
        };
        let mul: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| lookup(&compose(a, b).expect("same group")))
                    .collect()
            })
            .collect();
        let identity = lookup(&Homomorphism::identity(group));
        let inv = (0..elements.len())
            .map(|a| {
                mul[a]
                    .iter()
                    .position(|&c| c == identity)
                    .expect("every automorphism has an inverse")
            })
            .collect();
        Ok(Self {
            group: group.clone(),
            elements,
            mul,
            inv,
            identity,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, f: &Homomorphism) -> Option<usize> {
        self.elements.iter().position(|e| e == f)
    }
}
