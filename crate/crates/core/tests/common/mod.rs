#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use wes_core::abelian::{aut_group, cokernel, FgAbGroup, Homomorphism, IntMatrix};
use wes_core::wes::{gamma5, WesData};

pub fn g(t: &[u64], r: usize) -> FgAbGroup {
    FgAbGroup::from_u64(t, r).unwrap()
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Every canonical torsion chain `d₁ | … | d_k`, `dᵢ ≥ 2`, with product at
/// most `max_order` and at most `max_len` factors.
pub fn chains(max_order: u64, max_len: usize) -> Vec<Vec<u64>> {
    fn go(prefix: &mut Vec<u64>, prod: u64, max_order: u64, max_len: usize, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        if prefix.len() == max_len {
            return;
        }
        let start = prefix.last().copied().unwrap_or(2);
        let mut d = start;
        while prod * d <= max_order {
            if prefix.is_empty() || d % start == 0 {
                prefix.push(d);
                go(prefix, prod * d, max_order, max_len, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 1, max_order, max_len, &mut out);
    out
}

/// All finite abelian groups of order at most `max_order`.
pub fn finite_groups(max_order: u64, max_len: usize) -> Vec<FgAbGroup> {
    chains(max_order, max_len).iter().map(|c| g(c, 0)).collect()
}

pub fn odd_groups(max_order: u64, max_len: usize) -> Vec<FgAbGroup> {
    chains(max_order, max_len)
        .iter()
        .filter(|c| c.iter().all(|d| d % 2 == 1))
        .map(|c| g(c, 0))
        .collect()
}

pub fn random_element(rng: &mut ChaCha8Rng, a: &FgAbGroup) -> Vec<BigInt> {
    (0..a.num_gens())
        .map(|i| match a.gen_order(i) {
            Some(d) => BigInt::from(rng.gen_range(0..to_i64(d))),
            None => BigInt::from(rng.gen_range(-3..=3)),
        })
        .collect()
}

/// Caches `|aut A|` for instance rejection.
#[derive(Default)]
pub struct AutSizes(HashMap<FgAbGroup, usize>);

impl AutSizes {
    pub fn get(&mut self, a: &FgAbGroup) -> usize {
        if let Some(&n) = self.0.get(a) {
            return n;
        }
        let n = aut_group(a, 1_000_000).unwrap().len();
        self.0.insert(a.clone(), n);
        n
    }
}

/// Random valid data with `|Hᵢ| ≤ 16`, `H₆ ∈ {0, Z}`, a random `b₆` and a
/// random class. Instances whose automorphism product exceeds `max_product`
/// are redrawn.
pub fn random_instance(rng: &mut ChaCha8Rng, sizes: &mut AutSizes, max_product: usize) -> WesData {
    let odd = odd_groups(16, 3);
    let all = finite_groups(16, 3);
    loop {
        let h3 = odd.choose(rng).unwrap().clone();
        let h4 = all.choose(rng).unwrap().clone();
        let h5 = all.choose(rng).unwrap().clone();
        let h6 = if rng.gen_bool(0.5) { FgAbGroup::free(1) } else { FgAbGroup::trivial() };
        let product = sizes.get(&h3) * sizes.get(&h4) * sizes.get(&h5) * sizes.get(&h6);
        if product > max_product {
            continue;
        }
        let g5 = gamma5(&h3, &h4).unwrap();
        let mut b6 = IntMatrix::zeros(g5.block_len(), h6.num_gens());
        if h6.num_gens() == 1 {
            let orders: Vec<BigInt> = g5
                .tensor
                .cyclic_orders()
                .into_iter()
                .chain(g5.wedge.cyclic_orders())
                .collect();
            for (i, d) in orders.iter().enumerate() {
                let d = to_i64(d);
                b6[(i, 0)] = BigInt::from(rng.gen_range(0..d.max(1)));
            }
        }
        let b6_map = Homomorphism::new(h6.clone(), g5.group.clone(), g5.from_block_rows(&b6)).unwrap();
        let coker = cokernel(&b6_map).group;
        let pi5_class = (0..h5.torsion_len()).map(|_| random_element(rng, &coker)).collect();
        return WesData {
            h3,
            h4,
            h5,
            h6,
            b6,
            pi5_class,
        };
    }
}

/// Element-order statistics of `Z_{d₁} × … × Z_{d_k}`, by enumeration.
pub fn cyclic_product_stats(factors: &[u64]) -> BTreeMap<u64, usize> {
    let mut stats = BTreeMap::new();
    let mut idx = vec![0u64; factors.len()];
    loop {
        let ord = idx
            .iter()
            .zip(factors)
            .map(|(&x, &d)| d / gcd(x, d))
            .fold(1, lcm);
        *stats.entry(ord).or_insert(0) += 1;
        let mut pos = factors.len();
        loop {
            if pos == 0 {
                return stats;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < factors[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Multiplicative order of `u` modulo `m`.
pub fn mult_order(u: u64, m: u64) -> u64 {
    let mut x = u % m;
    let mut k = 1;
    while x != 1 % m {
        x = x * u % m;
        k += 1;
    }
    k
}

/// A random homomorphism `a → b`: the image of a generator of order `d`
/// is drawn from the elements killed by `d`.
pub fn random_hom(rng: &mut ChaCha8Rng, a: &FgAbGroup, b: &FgAbGroup) -> Homomorphism {
    let mut m = IntMatrix::zeros(b.num_gens(), a.num_gens());
    for j in 0..a.num_gens() {
        for i in 0..b.num_gens() {
            m[(i, j)] = match (a.gen_order(j), b.gen_order(i)) {
                (_, None) if a.gen_order(j).is_some() => BigInt::from(0),
                (_, None) => BigInt::from(rng.gen_range(-3..=3)),
                (None, Some(di)) => BigInt::from(rng.gen_range(0..to_i64(di))),
                (Some(dj), Some(di)) => {
                    let (dj, di) = (to_i64(dj) as u64, to_i64(di) as u64);
                    let step = di / gcd(di, dj);
                    BigInt::from((rng.gen_range(0..di / step) * step) as i64)
                }
            };
        }
    }
    Homomorphism::new(a.clone(), b.clone(), m).unwrap()
}

pub fn random_aut(rng: &mut ChaCha8Rng, a: &FgAbGroup) -> Homomorphism {
    aut_group(a, 1_000_000).unwrap().choose(rng).unwrap().clone()
}

pub fn to_i64(x: &BigInt) -> i64 {
    x.to_string().parse().unwrap()
}
