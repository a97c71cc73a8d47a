//! The group `ΓS(X)` (also written `ΓG(X)`) of Γ-automorphisms: its
//! enumeration, the identification of its isomorphism type, and a
//! brute-force check of every membership decision against the defining
//! diagram.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::abelian::{compose, is_automorphism, AutTable, FgAbGroup, Homomorphism, IntMatrix};
use crate::homalg::{ext_pullback, ext_pushforward, extension_group_from_class, ExtClass, Extension};
use crate::wes::{GammaTuple, Wes};
use crate::{Error, Result};

/// Isomorphism type of a finite group as far as it is identified here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    /// Invariant factors `d₁ | d₂ | …` (empty for the trivial group).
    Abelian { invariant_factors: Vec<u64> },
    /// Order and the multiset of element orders as `(order, count)`.
    Nonabelian {
        order: usize,
        element_orders: Vec<(u64, usize)>,
    },
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::Abelian { invariant_factors } if invariant_factors.is_empty() => write!(f, "0"),
            Structure::Abelian { invariant_factors } => {
                let parts: Vec<String> = invariant_factors.iter().map(|d| format!("Z{d}")).collect();
                write!(f, "{}", parts.join(" x "))
            }
            Structure::Nonabelian {
                order,
                element_orders,
            } => {
                let stats: Vec<String> = element_orders
                    .iter()
                    .map(|(o, c)| format!("{o}:{c}"))
                    .collect();
                write!(f, "nonabelian of order {order} (element orders {})", stats.join(", "))
            }
        }
    }
}

fn factor_orders(t: &AutTable) -> Vec<u64> {
    (0..t.len())
        .map(|a| {
            let mut x = a;
            let mut k = 1;
            while x != t.identity {
                x = t.mul[a][x];
                k += 1;
            }
            k
        })
        .collect()
}

/// A subgroup of a direct product of automorphism groups, elements stored
/// as index tuples into the factors.
#[derive(Debug, Clone)]
struct TupleGroup {
    factors: Vec<AutTable>,
    factor_orders: Vec<Vec<u64>>,
    elements: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl TupleGroup {
    fn new(factors: Vec<AutTable>, elements: Vec<Vec<usize>>) -> Self {
        let factor_orders = factors.iter().map(factor_orders).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Self {
            factors,
            factor_orders,
            elements,
            index,
        }
    }

    fn len(&self) -> usize {
        self.elements.len()
    }

    fn mul(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        self.factors
            .iter()
            .zip(a.iter().zip(b))
            .map(|(t, (&x, &y))| t.mul[x][y])
            .collect()
    }

    fn inv(&self, a: &[usize]) -> Vec<usize> {
        self.factors.iter().zip(a).map(|(t, &x)| t.inv[x]).collect()
    }

    fn identity(&self) -> Vec<usize> {
        self.factors.iter().map(|t| t.identity).collect()
    }

    fn element_order(&self, a: &[usize]) -> u64 {
        a.iter()
            .zip(&self.factor_orders)
            .fold(1u64, |acc, (&x, o)| acc.lcm(&o[x]))
    }

    fn closure(&self, gens: &[usize]) -> HashSet<Vec<usize>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let id = self.identity();
        let mut frontier = vec![id.clone()];
        seen.insert(id);
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(&x, &self.elements[g]);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    /// Greedy generating sublist: scan in order, keep anything not yet
    /// generated.
    fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for (i, e) in self.elements.iter().enumerate() {
            if !span.contains(e) {
                gens.push(i);
                span = self.closure(&gens);
            }
        }
        gens
    }

    fn is_abelian(&self, gens: &[usize]) -> bool {
        gens.iter().all(|&a| {
            gens.iter().all(|&b| {
                let (x, y) = (&self.elements[a], &self.elements[b]);
                self.mul(x, y) == self.mul(y, x)
            })
        })
    }

    fn order_statistics(&self) -> BTreeMap<u64, usize> {
        let mut stats = BTreeMap::new();
        for e in &self.elements {
            *stats.entry(self.element_order(e)).or_insert(0) += 1;
        }
        stats
    }

    fn structure(&self, abelian: bool) -> Structure {
        let stats = self.order_statistics();
        if abelian {
            Structure::Abelian {
                invariant_factors: abelian_invariants(&stats),
            }
        } else {
            Structure::Nonabelian {
                order: self.len(),
                element_orders: stats.into_iter().collect(),
            }
        }
    }

    /// Full check of identity, closure and inverses.
    fn check_axioms(&self) -> std::result::Result<(), String> {
        if !self.index.contains_key(&self.identity()) {
            return Err("identity missing".into());
        }
        for a in &self.elements {
            if !self.index.contains_key(&self.inv(a)) {
                return Err(format!("inverse of {a:?} missing"));
            }
            for b in &self.elements {
                if !self.index.contains_key(&self.mul(a, b)) {
                    return Err(format!("{a:?}·{b:?} not in the set"));
                }
            }
        }
        Ok(())
    }
}

/// Invariant factors of a finite abelian group from its element-order
/// statistics.
///
/// For each prime `p`, `#{x : p^j·x = 0} / #{x : p^{j-1}·x = 0} = p^{m_j}`
/// where `m_j` counts the cyclic `p`-primary factors of order at least
/// `p^j`; the multiset of element orders therefore fixes the group.
pub fn abelian_invariants(stats: &BTreeMap<u64, usize>) -> Vec<u64> {
    let n: usize = stats.values().sum();
    let mut primes = Vec::new();
    let mut m = n as u64;
    let mut p = 2;
    while m > 1 {
        if m % p == 0 {
            primes.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    // exponents[p] = exponents of the p-primary cyclic factors, descending
    let mut per_prime: Vec<Vec<u32>> = Vec::new();
    for &p in &primes {
        let killed_by = |pj: u64| -> usize {
            stats
                .iter()
                .filter(|(&o, _)| pj % o == 0)
                .map(|(_, &c)| c)
                .sum()
        };
        let mut at_least = Vec::new();
        let mut j = 1u32;
        let mut prev = 1usize;
        loop {
            let cur = killed_by(p.pow(j));
            if cur == prev {
                break;
            }
            let mut ratio = cur / prev;
            let mut k = 0;
            while ratio > 1 {
                ratio /= p as usize;
                k += 1;
            }
            at_least.push(k);
            prev = cur;
            j += 1;
        }
        // at_least[j-1] = number of factors with exponent ≥ j
        let count = at_least.first().copied().unwrap_or(0);
        let exps: Vec<u32> = (0..count)
            .map(|i| at_least.iter().filter(|&&c| c > i).count() as u32)
            .collect();
        per_prime.push(exps);
    }
    let len = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; len];
    for (p, exps) in primes.iter().zip(&per_prime) {
        for (i, e) in exps.iter().enumerate() {
            factors[len - 1 - i] *= p.pow(*e);
        }
    }
    factors
}

/// Enumerated `ΓS(X)`.
#[derive(Debug, Clone)]
pub struct GroupTable {
    /// Accepted tuples in lexicographic order of `(f₆, f₅, f₄, f₃)` over the
    /// sorted automorphism lists.
    pub elements: Vec<GammaTuple>,
    pub order: usize,
    pub is_abelian: bool,
    pub structure: Structure,
    /// Indices into `elements`.
    pub generators: Vec<usize>,
    /// `|aut H₆| · |aut H₅| · |aut H₄| · |aut H₃|`.
    pub product_size: usize,
    /// The image of `ΓS(X)` in `aut(H₆) × aut(H₅)`.
    pub top: ProjectedTable,
    /// The distinct `γ ∈ aut(Γ₅)` that occur among accepted tuples.
    pub gammas: Vec<Homomorphism>,
    /// Observations about the result worth surfacing, e.g. a unit group
    /// that is not cyclic.
    pub notes: Vec<String>,
    group: TupleGroup,
}

/// `ΓS(X)` projected to its `(f₆, f₅)` components.
#[derive(Debug, Clone)]
pub struct ProjectedTable {
    pub pairs: Vec<(Homomorphism, Homomorphism)>,
    pub order: usize,
    pub is_abelian: bool,
    pub structure: Structure,
    /// Whether every pair in `aut(H₆) × aut(H₅)` occurs.
    pub is_full_product: bool,
}

impl GroupTable {
    /// Identity, closure and inverses over the whole element list.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        self.group.check_axioms()
    }

    /// Checks associativity on the given index triples.
    pub fn check_associative(&self, triples: &[(usize, usize, usize)]) -> bool {
        let g = &self.group;
        triples.iter().all(|&(a, b, c)| {
            let (x, y, z) = (&g.elements[a], &g.elements[b], &g.elements[c]);
            g.mul(&g.mul(x, y), z) == g.mul(x, &g.mul(y, z))
        })
    }

    /// Index tuples `(f₆, f₅, f₄, f₃)` into the sorted automorphism lists.
    pub fn index_tuples(&self) -> &[Vec<usize>] {
        &self.group.elements
    }
}

/// Automorphism lists of `H₆, H₅, H₄, H₃` in product order.
fn factor_tables(w: &Wes, budget: u64) -> Result<Vec<AutTable>> {
    let d = w.data();
    [&d.h6, &d.h5, &d.h4, &d.h3]
        .into_iter()
        .map(|h| AutTable::new(h, budget))
        .collect()
}

fn tuple_at(tables: &[AutTable], idx: &[usize]) -> GammaTuple {
    GammaTuple {
        f6: tables[0].elements[idx[0]].clone(),
        f5: tables[1].elements[idx[1]].clone(),
        f4: tables[2].elements[idx[2]].clone(),
        f3: tables[3].elements[idx[3]].clone(),
    }
}

fn product_indices(lens: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &n in lens {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..n).map(move |i| {
                    let mut v = p.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

/// How membership tests over the tuple product are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Schedule {
    #[default]
    Parallel,
    Sequential,
}

/// Enumerates `ΓS(X)` with the default (parallel) schedule.
pub fn gamma_s_group(w: &Wes, budget: u64) -> Result<GroupTable> {
    gamma_s_group_with(w, budget, Schedule::Parallel)
}

/// Enumerates `ΓS(X)`. The membership test is evaluated factor by factor:
/// `b₆ ∘ f₆` depends on `f₆` alone, `γ` and `γ̃_*[π₅]` on `(f₄, f₃)`, and
/// `f₅^*[π₅]` on `f₅`. The result does not depend on `schedule`.
pub fn gamma_s_group_with(w: &Wes, budget: u64, schedule: Schedule) -> Result<GroupTable> {
    let tables = factor_tables(w, budget)?;
    let b6 = w.b6();
    let pi5 = w.pi5_class();

    let b6_f6: Vec<Homomorphism> = tables[0]
        .elements
        .iter()
        .map(|f6| compose(b6, f6))
        .collect::<Result<_>>()?;
    let pulled: Vec<ExtClass> = tables[1]
        .elements
        .iter()
        .map(|f5| ext_pullback(f5, pi5))
        .collect::<Result<_>>()?;
    // (f4, f3) -> (γ, γ∘b6, γ̃_*[π5] when γ preserves im b6)
    let mut middle = Vec::with_capacity(tables[2].len() * tables[3].len());
    for f4 in &tables[2].elements {
        for f3 in &tables[3].elements {
            let gamma = w.gamma_of(f3, f4)?;
            let gamma_b6 = compose(&gamma, b6)?;
            let pushed = match w.gamma_tilde(&gamma) {
                Ok(gt) => Some(ext_pushforward(&gt, pi5)?),
                Err(Error::NotInducible) => None,
                Err(e) => return Err(e),
            };
            middle.push((gamma, gamma_b6, pushed));
        }
    }
    let n3 = tables[3].len();
    let lens: Vec<usize> = tables.iter().map(AutTable::len).collect();
    let product = product_indices(&lens);
    let accept = |idx: &Vec<usize>| {
        let (_, gamma_b6, pushed) = &middle[idx[2] * n3 + idx[3]];
        gamma_b6 == &b6_f6[idx[0]] && pushed.as_ref() == Some(&pulled[idx[1]])
    };
    let accepted: Vec<Vec<usize>> = match schedule {
        Schedule::Parallel => product.par_iter().filter(|i| accept(i)).cloned().collect(),
        Schedule::Sequential => product.iter().filter(|i| accept(i)).cloned().collect(),
    };

    let elements: Vec<GammaTuple> = accepted.iter().map(|i| tuple_at(&tables, i)).collect();
    let mut seen_gamma = HashSet::new();
    let gammas: Vec<Homomorphism> = accepted
        .iter()
        .filter(|i| seen_gamma.insert(i[2] * n3 + i[3]))
        .map(|i| middle[i[2] * n3 + i[3]].0.clone())
        .collect();
    let mut distinct = Vec::new();
    for g in gammas {
        if !distinct.contains(&g) {
            distinct.push(g);
        }
    }

    let top = project_top(&tables, &accepted);
    let group = TupleGroup::new(tables, accepted);
    let generators = group.generators();
    let is_abelian = group.is_abelian(&generators);
    let structure = group.structure(is_abelian);
    let notes = unit_group_notes(w, &group.factors[1]);

    Ok(GroupTable {
        order: elements.len(),
        elements,
        is_abelian,
        structure,
        generators,
        product_size: lens.iter().product(),
        top,
        gammas: distinct,
        notes,
        group,
    })
}

fn project_top(tables: &[AutTable], accepted: &[Vec<usize>]) -> ProjectedTable {
    let mut seen = HashSet::new();
    let pairs_idx: Vec<Vec<usize>> = accepted
        .iter()
        .map(|i| vec![i[0], i[1]])
        .filter(|p| seen.insert(p.clone()))
        .collect();
    let mut sorted = pairs_idx.clone();
    sorted.sort();
    let pairs = sorted
        .iter()
        .map(|p| {
            (
                tables[0].elements[p[0]].clone(),
                tables[1].elements[p[1]].clone(),
            )
        })
        .collect();
    let g = TupleGroup::new(vec![tables[0].clone(), tables[1].clone()], sorted);
    let gens = g.generators();
    let is_abelian = g.is_abelian(&gens);
    ProjectedTable {
        pairs,
        order: g.len(),
        is_abelian,
        structure: g.structure(is_abelian),
        is_full_product: g.len() == tables[0].len() * tables[1].len(),
    }
}

/// For cyclic `H₅ = Z_m`, `aut(H₅)` is the unit group mod `m`, which is
/// cyclic only for some `m`; say so when it is not.
fn unit_group_notes(w: &Wes, aut_h5: &AutTable) -> Vec<String> {
    let h5 = &w.data().h5;
    if !(h5.rank() == 0 && h5.torsion_len() == 1) {
        return Vec::new();
    }
    let m = &h5.torsion()[0];
    let g = TupleGroup::new(vec![aut_h5.clone()], (0..aut_h5.len()).map(|i| vec![i]).collect());
    let s = g.structure(true);
    match &s {
        Structure::Abelian { invariant_factors } if invariant_factors.len() > 1 => {
            let exponent = invariant_factors.last().copied().unwrap_or(1);
            vec![format!(
                "aut(Z{m}) = (Z/{m})^* ≅ {s} has exponent {exponent}; it is not cyclic, so it is not Z{}",
                aut_h5.len()
            )]
        }
        _ => Vec::new(),
    }
}

/// Brute-force decision of Γ-membership straight from the defining
/// diagram on a concrete model of `π₅`.
#[derive(Debug, Clone)]
pub struct Oracle<'w> {
    wes: &'w Wes,
    ext: Extension,
    /// `inj ∘ pr : Γ₅ → π₅`, the middle map of the sequence.
    gamma5_to_pi5: Homomorphism,
    budget: u64,
}

impl<'w> Oracle<'w> {
    pub fn new(w: &'w Wes, budget: u64) -> Result<Self> {
        let ext = extension_group_from_class(w.pi5_class());
        let gamma5_to_pi5 = compose(&ext.inj, &w.coker_b6().projection)?;
        Ok(Self {
            wes: w,
            ext,
            gamma5_to_pi5,
            budget,
        })
    }

    pub fn pi5(&self) -> &FgAbGroup {
        &self.ext.group
    }

    /// Searches for `φ ∈ aut(π₅)` with `φ ∘ inj ∘ pr = inj ∘ pr ∘ γ` and
    /// `surj ∘ φ = f₅ ∘ surj`, after checking `γ ∘ b₆ = b₆ ∘ f₆`.
    ///
    /// `φ` is written on the presentation generators of `π₅` (those of
    /// `coker b₆`, then lifts of those of `H₅`). On `coker b₆` it is forced
    /// by the first square; each lift must map into the coset
    /// `lift(f₅(aᵢ)) + inj(coker b₆)`, so the candidates are exactly those
    /// cosets, filtered by the relations of the presentation.
    pub fn find_phi(&self, t: &GammaTuple) -> Result<Option<Homomorphism>> {
        let w = self.wes;
        let gamma = w.gamma_of(&t.f3, &t.f4)?;
        if compose(&gamma, w.b6())? != compose(w.b6(), &t.f6)? {
            return Ok(None);
        }
        let ext = &self.ext;
        let g = &ext.group;
        let coker = &w.coker_b6();
        let c = &coker.group;
        let a = &w.data().h5;
        let (nc, na) = (c.num_gens(), a.num_gens());

        // φ on C generators: inj(pr(γ(lift_k)))
        let mid_gamma = compose(&self.gamma5_to_pi5, &gamma)?;
        let phi_c: Vec<Vec<BigInt>> = (0..nc)
            .map(|k| mid_gamma.apply(&coker.section.column(k)))
            .collect();

        let c_elems = c
            .elements()
            .expect("coker b6 is a quotient of the finite group Γ5");
        let candidates = BigInt::from(c_elems.len()).pow(na as u32);
        if candidates > BigInt::from(self.budget) {
            return Err(Error::BudgetExceeded {
                what: format!("φ candidates on π5 = {g}"),
                needed: candidates.to_string(),
                budget: self.budget,
            });
        }

        let lift_a = |y: &[BigInt]| -> Vec<BigInt> {
            let mut amb = vec![BigInt::from(0); nc + na];
            amb[nc..].clone_from_slice(y);
            g.reduced(&ext.proj.mul_vec(&amb))
        };
        let add = |x: &[BigInt], y: &[BigInt]| -> Vec<BigInt> {
            g.reduced(&x.iter().zip(y).map(|(p, q)| p + q).collect::<Vec<_>>())
        };
        let scale = |k: &BigInt, x: &[BigInt]| -> Vec<BigInt> {
            g.reduced(&x.iter().map(|v| v * k).collect::<Vec<_>>())
        };

        // relations among C generators are respected by construction; check
        for (k, ck) in c.torsion().iter().enumerate() {
            if !g.is_zero_element(&scale(ck, &phi_c[k])) {
                return Ok(None);
            }
        }

        let theta = w.pi5_class().coords();
        let mut choices: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(na);
        for i in 0..na {
            let base = lift_a(&t.f5.matrix().column(i));
            let target = a.gen_order(i).map(|di| {
                // d_i·φ(ã_i) must equal φ(θ_i) = Σ_k θ_ik φ(c_k)
                let mut acc = g.zero_element();
                for (k, x) in theta[i].iter().enumerate() {
                    acc = add(&acc, &scale(x, &phi_c[k]));
                }
                (di.clone(), acc)
            });
            let valid: Vec<Vec<BigInt>> = c_elems
                .iter()
                .map(|cc| add(&base, &ext.inj.apply(cc)))
                .filter(|cand| match &target {
                    Some((di, rhs)) => &scale(di, cand) == rhs,
                    None => true,
                })
                .collect();
            if valid.is_empty() {
                return Ok(None);
            }
            choices.push(valid);
        }

        let lhs_pi5 = compose(&self.gamma5_to_pi5, &gamma)?;
        let f5_surj = compose(&t.f5, &ext.surj)?;
        let mut idx = vec![0usize; na];
        loop {
            let mut cols: Vec<Vec<BigInt>> = phi_c.clone();
            cols.extend(idx.iter().enumerate().map(|(i, &k)| choices[i][k].clone()));
            let on_ambient = IntMatrix::from_columns(g.num_gens(), &cols);
            if let Ok(phi) = Homomorphism::new(g.clone(), g.clone(), &on_ambient * &ext.section) {
                let respects = (0..ext.relations.cols()).all(|j| {
                    g.is_zero_element(&on_ambient.mul_vec(&ext.relations.column(j)))
                });
                if respects
                    && compose(&phi, &self.gamma5_to_pi5)? == lhs_pi5
                    && compose(&ext.surj, &phi)? == f5_surj
                    && is_automorphism(&phi)
                {
                    return Ok(Some(phi));
                }
            }
            let mut pos = na;
            loop {
                if pos == 0 {
                    return Ok(None);
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

    pub fn membership(&self, t: &GammaTuple) -> Result<bool> {
        Ok(self.find_phi(t)?.is_some())
    }
}

/// One-shot oracle decision for a single tuple.
pub fn oracle_membership(w: &Wes, t: &GammaTuple, budget: u64) -> Result<bool> {
    Oracle::new(w, budget)?.membership(t)
}

/// A tuple on which the two decision paths disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    /// Index tuple `(f₆, f₅, f₄, f₃)` into the sorted automorphism lists.
    pub index: Vec<usize>,
    pub criterion: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub tuples: usize,
    pub accepted_by_criterion: usize,
    pub accepted_by_oracle: usize,
    pub agreements: usize,
    pub disagreements: Vec<Disagreement>,
    /// Index tuples accepted by the criterion, in product order.
    pub accepted: Vec<Vec<usize>>,
}

impl OracleReport {
    pub fn agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Runs [`Wes::is_gamma_automorphism`] and the oracle on every tuple of
/// the automorphism product and records where they differ.
pub fn oracle_compare(w: &Wes, budget: u64) -> Result<OracleReport> {
    let tables = factor_tables(w, budget)?;
    let oracle = Oracle::new(w, budget)?;
    let lens: Vec<usize> = tables.iter().map(AutTable::len).collect();
    let product = product_indices(&lens);
    let results: Vec<(Vec<usize>, bool, bool)> = product
        .par_iter()
        .map(|idx| {
            let t = tuple_at(&tables, idx);
            let crit = w.is_gamma_automorphism(&t)?.accepted;
            let orc = oracle.membership(&t)?;
            Ok((idx.clone(), crit, orc))
        })
        .collect::<Result<_>>()?;
    let mut report = OracleReport {
        tuples: results.len(),
        accepted_by_criterion: 0,
        accepted_by_oracle: 0,
        agreements: 0,
        disagreements: Vec::new(),
        accepted: Vec::new(),
    };
    for (idx, crit, orc) in results {
        report.accepted_by_criterion += usize::from(crit);
        report.accepted_by_oracle += usize::from(orc);
        if crit == orc {
            report.agreements += 1;
        } else {
            report.disagreements.push(Disagreement {
                index: idx.clone(),
                criterion: crit,
                oracle: orc,
            });
        }
        if crit {
            report.accepted.push(idx);
        }
    }
    Ok(report)
}

/// Euler's totient by counting units, `gcd(k, m) = 1` for `1 ≤ k ≤ m`.
pub fn count_units(m: u64) -> u64 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_u64(x: &BigInt) -> u64 {
        use num_traits::ToPrimitive;
        x.to_u64().expect("value fits in u64")
    }
    use crate::wes::WesData;

    fn g(t: &[u64], r: usize) -> FgAbGroup {
        FgAbGroup::from_u64(t, r).unwrap()
    }

    fn stats(orders: &[u64]) -> BTreeMap<u64, usize> {
        let mut s = BTreeMap::new();
        for &o in orders {
            *s.entry(o).or_insert(0) += 1;
        }
        s
    }

    #[test]
    fn invariants_from_orders() {
        assert_eq!(abelian_invariants(&stats(&[1])), Vec::<u64>::new());
        assert_eq!(abelian_invariants(&stats(&[1, 2, 4, 4])), vec![4]);
        assert_eq!(abelian_invariants(&stats(&[1, 2, 2, 2])), vec![2, 2]);
        // Z2 x Z4: orders 1, 2, 2, 2, 4, 4, 4, 4
        assert_eq!(abelian_invariants(&stats(&[1, 2, 2, 2, 4, 4, 4, 4])), vec![2, 4]);
        // Z6: 1, 2, 3, 3, 6, 6
        assert_eq!(abelian_invariants(&stats(&[1, 2, 3, 3, 6, 6])), vec![6]);
    }

    #[test]
    fn totients() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4];
        for (m, &e) in (1..=10).zip(&expected) {
            assert_eq!(count_units(m), e);
        }
    }

    fn z8_over_z2z2(class: i64) -> Wes {
        WesData {
            h3: g(&[3], 0),
            h4: g(&[2, 2], 0),
            h5: g(&[8], 0),
            h6: FgAbGroup::free(1),
            b6: IntMatrix::from_rows(&[vec![1], vec![0]]),
            pi5_class: vec![vec![BigInt::from(class)]],
        }
        .resolve()
        .unwrap()
    }

    #[test]
    fn trivial_except_h6() {
        let w = WesData {
            h3: FgAbGroup::trivial(),
            h4: FgAbGroup::trivial(),
            h5: FgAbGroup::trivial(),
            h6: FgAbGroup::free(1),
            b6: IntMatrix::zeros(0, 1),
            pi5_class: vec![],
        }
        .resolve()
        .unwrap();
        let t = gamma_s_group(&w, 1000).unwrap();
        assert_eq!(t.order, 2);
        assert_eq!(t.structure, Structure::Abelian { invariant_factors: vec![2] });
    }

    #[test]
    fn z8_over_z2z2_tables() {
        for class in [0, 1] {
            let w = z8_over_z2z2(class);
            let t = gamma_s_group(&w, 1000).unwrap();
            assert_eq!(t.top.order, 8);
            assert!(t.top.is_full_product);
            assert_eq!(
                t.top.structure,
                Structure::Abelian { invariant_factors: vec![2, 2, 2] }
            );
            assert!(!t.notes.is_empty());
            t.check_axioms().unwrap();
        }
    }

    #[test]
    fn oracle_examples() {
        let w = z8_over_z2z2(1);
        assert_eq!(Oracle::new(&w, 1000).unwrap().pi5(), &g(&[16], 0));
        let d = w.data().clone();
        assert!(oracle_membership(&w, &GammaTuple::identity(&w), 1000).unwrap());
        let t = GammaTuple {
            f3: Homomorphism::identity(&d.h3),
            f4: Homomorphism::identity(&d.h4),
            f5: Homomorphism::scalar(&d.h5, 3),
            f6: Homomorphism::identity(&d.h6),
        };
        let phi = Oracle::new(&w, 1000).unwrap().find_phi(&t).unwrap().unwrap();
        let k = to_u64(&phi.matrix()[(0, 0)]);
        assert!(k % 2 == 1);
        // the b6 square fails for a swap of H4's generators
        let swap = Homomorphism::from_rows(&d.h4, &d.h4, &[vec![0, 1], vec![1, 0]]).unwrap();
        let bad = GammaTuple { f4: swap, ..t };
        assert!(!oracle_membership(&w, &bad, 1000).unwrap());
    }

    #[test]
    fn compare_z8_over_z2z2() {
        for class in [0, 1] {
            let r = oracle_compare(&z8_over_z2z2(class), 1000).unwrap();
            assert!(r.agree());
            assert_eq!(r.tuples, 2 * 4 * 6 * 2);
        }
    }

    #[test]
    fn schedules_agree() {
        let w = z8_over_z2z2(1);
        let a = gamma_s_group_with(&w, 1000, Schedule::Parallel).unwrap();
        let b = gamma_s_group_with(&w, 1000, Schedule::Sequential).unwrap();
        assert_eq!(a.elements, b.elements);
        assert_eq!(a.structure, b.structure);
    }
}
