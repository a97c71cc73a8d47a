mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use wes_core::abelian::{cokernel, compose, group_from_relations, kernel, FgAbGroup, Homomorphism, IntMatrix};
use wes_core::homalg::{
    all_classes, class_of_extension, ext_group, ext_pullback, ext_pullback_via_lift, ext_pushforward,
    extension_group_from_class, lambda2, lambda2_map, tensor_z2, tensor_z2_map, tor_z2, ExtClass,
};

fn group(max_order: u64, max_len: usize, max_rank: usize) -> impl Strategy<Value = FgAbGroup> {
    let cs = chains(max_order, max_len);
    (0..cs.len(), 0..=max_rank).prop_map(move |(i, r)| g(&cs[i], r))
}

fn odd_group() -> impl Strategy<Value = FgAbGroup> {
    let gs = odd_groups(81, 3);
    (0..gs.len()).prop_map(move |i| gs[i].clone())
}

fn random_class(rng: &mut ChaCha8Rng, a: &FgAbGroup, c: &FgAbGroup) -> ExtClass {
    let coords = (0..a.torsion_len()).map(|_| random_element(rng, c)).collect();
    ExtClass::new(a, c, coords).unwrap()
}

/// `Λ²A` from `A ⊗ A` modulo `x ⊗ x`, built directly from a presentation.
fn lambda2_by_presentation(a: &FgAbGroup) -> FgAbGroup {
    let orders = a.cyclic_orders();
    let n = orders.len();
    let idx = |i: usize, j: usize| i * n + j;
    let mut cols = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for d in [&orders[i], &orders[j]] {
                let mut v = vec![BigInt::from(0); n * n];
                v[idx(i, j)] = d.clone();
                cols.push(v);
            }
            // x ⊗ x = 0: eᵢ ⊗ eᵢ = 0 and eᵢ ⊗ eⱼ + eⱼ ⊗ eᵢ = 0
            let mut v = vec![BigInt::from(0); n * n];
            v[idx(i, j)] += 1;
            if i != j {
                v[idx(j, i)] += 1;
            }
            cols.push(v);
        }
    }
    group_from_relations(&IntMatrix::from_columns(n * n, &cols)).0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn odd_groups_vanish_mod_two(a in odd_group()) {
        prop_assert!(tensor_z2(&a).0.is_trivial());
        prop_assert!(tor_z2(&a).is_trivial());
    }

    #[test]
    fn tensor_and_tor_match_multiplication_by_two(a in group(64, 3, 2)) {
        let two = Homomorphism::scalar(&a, 2);
        prop_assert_eq!(tensor_z2(&a).0, cokernel(&two).group);
        prop_assert_eq!(tor_z2(&a), kernel(&two).group);
        prop_assert!(tensor_z2(&a).1.is_surjective());
    }

    #[test]
    fn lambda2_matches_presentation(a in group(64, 3, 2)) {
        prop_assert_eq!(lambda2(&a), lambda2_by_presentation(&a));
    }

    #[test]
    fn tensor_is_a_functor(a in group(16, 2, 1), b in group(16, 2, 1), c in group(16, 2, 1), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_hom(&mut rng, &a, &b);
        let h = random_hom(&mut rng, &b, &c);
        prop_assert_eq!(
            tensor_z2_map(&compose(&h, &f).unwrap()),
            compose(&tensor_z2_map(&h), &tensor_z2_map(&f)).unwrap()
        );
        prop_assert_eq!(tensor_z2_map(&Homomorphism::identity(&a)), Homomorphism::identity(&tensor_z2(&a).0));
        // naturality of A → A ⊗ Z2
        prop_assert_eq!(
            compose(&tensor_z2(&b).1, &f).unwrap(),
            compose(&tensor_z2_map(&f), &tensor_z2(&a).1).unwrap()
        );
    }

    #[test]
    fn lambda2_is_a_functor(a in group(27, 3, 2), b in group(27, 3, 2), c in group(27, 3, 2), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_hom(&mut rng, &a, &b);
        let h = random_hom(&mut rng, &b, &c);
        prop_assert_eq!(
            lambda2_map(&compose(&h, &f).unwrap()),
            compose(&lambda2_map(&h), &lambda2_map(&f)).unwrap()
        );
        prop_assert_eq!(lambda2_map(&Homomorphism::identity(&a)), Homomorphism::identity(&lambda2(&a)));
    }

    #[test]
    fn ext_order_is_product_of_gcds(a in group(32, 3, 1), c in group(32, 3, 1)) {
        let e = ext_group(&a, &c);
        let expected: BigInt = a
            .torsion()
            .iter()
            .map(|d| {
                c.cyclic_orders()
                    .iter()
                    .map(|k| if k == &BigInt::from(0) { d.clone() } else { num_integer::Integer::gcd(d, k) })
                    .product::<BigInt>()
            })
            .product();
        prop_assert_eq!(e.order().unwrap(), expected);
        prop_assert_eq!(all_classes(&a, &c).len().to_string(), e.order().unwrap().to_string());
    }

    #[test]
    fn pullback_is_contravariant(
        a in group(16, 2, 1), b in group(16, 2, 1), x in group(16, 2, 1), c in group(16, 2, 1),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_class(&mut rng, &a, &c);
        let f = random_hom(&mut rng, &b, &a);
        let h = random_hom(&mut rng, &x, &b);
        let lhs = ext_pullback(&compose(&f, &h).unwrap(), &e).unwrap();
        let rhs = ext_pullback(&h, &ext_pullback(&f, &e).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(ext_pullback(&Homomorphism::identity(&a), &e).unwrap(), e);
    }

    #[test]
    fn pushforward_is_covariant_and_commutes_with_pullback(
        a in group(16, 2, 1), b in group(16, 2, 1), c in group(16, 2, 1), c2 in group(16, 2, 1), c3 in group(16, 2, 1),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_class(&mut rng, &a, &c);
        let k = random_hom(&mut rng, &c, &c2);
        let l = random_hom(&mut rng, &c2, &c3);
        prop_assert_eq!(
            ext_pushforward(&compose(&l, &k).unwrap(), &e).unwrap(),
            ext_pushforward(&l, &ext_pushforward(&k, &e).unwrap()).unwrap()
        );
        let f = random_hom(&mut rng, &b, &a);
        prop_assert_eq!(
            ext_pullback(&f, &ext_pushforward(&k, &e).unwrap()).unwrap(),
            ext_pushforward(&k, &ext_pullback(&f, &e).unwrap()).unwrap()
        );
    }

    #[test]
    fn scalars_act_by_multiplication(a in group(16, 2, 1), c in group(16, 2, 1), k in -5i64..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_class(&mut rng, &a, &c);
        let scaled = ExtClass::new(
            &a,
            &c,
            e.coords().iter().map(|v| v.iter().map(|x| x * k).collect()).collect(),
        )
        .unwrap();
        prop_assert_eq!(ext_pullback(&Homomorphism::scalar(&a, k), &e).unwrap(), scaled.clone());
        prop_assert_eq!(ext_pushforward(&Homomorphism::scalar(&c, k), &e).unwrap(), scaled);
    }

    #[test]
    fn pullback_does_not_depend_on_the_lift(
        a in group(16, 2, 1), b in group(16, 2, 1), c in group(16, 2, 1),
        shifts in proptest::collection::vec(-3i64..=3, 9), seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_class(&mut rng, &a, &c);
        let f = random_hom(&mut rng, &b, &a);
        let mut lift = f.matrix().clone();
        let mut s = shifts.iter().cycle();
        for i in 0..a.torsion_len() {
            for j in 0..b.num_gens() {
                lift[(i, j)] += &a.torsion()[i] * s.next().unwrap();
            }
        }
        prop_assert_eq!(ext_pullback_via_lift(&f, &lift, &e).unwrap(), ext_pullback(&f, &e).unwrap());
    }

    #[test]
    fn extensions_round_trip(a in group(16, 2, 1), c in group(16, 2, 1), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_class(&mut rng, &a, &c);
        let x = extension_group_from_class(&e);
        prop_assert!(compose(&x.surj, &x.inj).unwrap().is_zero());
        prop_assert!(x.inj.is_injective());
        prop_assert!(x.surj.is_surjective());
        prop_assert_eq!(x.group.rank(), a.rank() + c.rank());
        prop_assert_eq!(class_of_extension(&x.inj, &x.surj).unwrap(), e.clone());
        let split = FgAbGroup::from_cyclic_orders(
            &c.cyclic_orders().into_iter().chain(a.cyclic_orders()).collect::<Vec<_>>(),
        );
        if e.is_zero() {
            prop_assert_eq!(x.group, split);
        }
    }
}

#[test]
fn nonsplit_extensions_of_cyclic_groups() {
    // Ext(Z_m, Z_n) = Z_gcd; class k gives Z_{mn/g'} ⊕ Z_{g'} with g' = gcd(k, g)
    for m in 2..=12u64 {
        for n in 2..=12u64 {
            let (a, c) = (g(&[m], 0), g(&[n], 0));
            let gg = gcd(m, n);
            for k in 0..gg {
                let e = ExtClass::new(&a, &c, vec![vec![BigInt::from(k)]]).unwrap();
                let x = extension_group_from_class(&e);
                let small = gcd(k, gg);
                let expected = FgAbGroup::from_cyclic_orders(&[BigInt::from(m * n / small), BigInt::from(small)]);
                assert_eq!(x.group, expected, "m={m} n={n} k={k}");
            }
        }
    }
}
