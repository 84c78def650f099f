use proptest::prelude::*;

use arq_core::cartan::finite_types;
use arq_core::invariants::{all_pair_degrees, orient_pair, QuiverContext};
use arq_core::laurent::tilde_table_series;
use arq_core::order::enumerate_exponent_vectors;
use arq_core::quiver::{all_quivers, sigma_fixed_quivers};
use arq_core::{weyl, AutomorphismKind, CartanDatum, DynkinQuiver, ExponentVector, RootSystem, SubFolding};

fn datum(s: &str) -> CartanDatum {
    CartanDatum::parse(s).unwrap()
}

fn small_quiver() -> impl Strategy<Value = DynkinQuiver> {
    let qs: Vec<DynkinQuiver> =
        ["A3", "A4", "B3", "C3", "D4", "G2", "B2"].iter().flat_map(|t| all_quivers(&datum(t))).collect();
    proptest::sample::select(qs)
}

fn any_type() -> impl Strategy<Value = CartanDatum> {
    proptest::sample::select(finite_types(8))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn symmetrized_cartan_and_star(x in any_type()) {
        let n = x.rank;
        for i in 0..n {
            prop_assert_eq!(x.cartan[i][i], 2);
            let s = x.star[i];
            prop_assert_eq!(x.star[s], i);
            prop_assert_eq!(x.d[s], x.d[i]);
            for j in 0..n {
                prop_assert_eq!(x.d[i] * x.cartan[i][j], x.d[j] * x.cartan[j][i]);
                prop_assert!(i == j || x.cartan[i][j] <= 0);
            }
        }
        prop_assert_eq!(RootSystem::new(&x).len() * 2, n * x.h);
    }

    #[test]
    fn tilde_d_is_symmetric(x in any_type()) {
        let t = tilde_table_series(&x).unwrap();
        for i in 0..x.rank {
            for j in 0..x.rank {
                prop_assert_eq!(t.d(i, j), t.d(j, i));
            }
        }
    }

    #[test]
    fn adapted_words_are_convex(q in small_quiver()) {
        let x = &q.datum;
        let betas = weyl::beta_sequence(x, &q.adapted_reduced_word()).unwrap();
        let pos = |r: &Vec<i64>| betas.iter().position(|b| b == r);
        for (ia, a) in betas.iter().enumerate() {
            for (ib, b) in betas.iter().enumerate().skip(ia + 1) {
                let s: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                if let Some(is) = pos(&s) {
                    prop_assert!(ia < is && is < ib);
                }
            }
        }
    }

    #[test]
    fn bilex_is_a_strict_partial_order(q in small_quiver(), pick in any::<proptest::sample::Index>()) {
        let ctx = QuiverContext::new(&q).unwrap();
        let sys = &ctx.order.sys;
        let w = &sys.roots[pick.index(sys.len())];
        let theta = sys.roots.iter().max_by_key(|r| r.iter().sum::<i64>()).unwrap();
        let w2: Vec<i64> = w.iter().zip(theta).map(|(a, b)| a + b).collect();
        let vs = enumerate_exponent_vectors(&q.datum, &w2).unwrap();
        let lt = |a: &ExponentVector, b: &ExponentVector| ctx.order.bilex_less(a, b).unwrap();
        for a in &vs {
            prop_assert!(!lt(a, a));
            for b in &vs {
                if lt(a, b) {
                    prop_assert!(!lt(b, a));
                    for c in &vs {
                        if lt(b, c) {
                            prop_assert!(lt(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn head_is_the_bottom_of_the_interval(q in small_quiver(), pick in any::<proptest::sample::Index>()) {
        let ctx = QuiverContext::new(&q).unwrap();
        let pairs = all_pair_degrees(&ctx).unwrap();
        let (p, _) = &pairs[pick.index(pairs.len())];
        let m = ctx.pair_vector(&p.alpha, &p.beta).unwrap();
        let head = ctx.order.head(&m).unwrap();
        prop_assert!(ctx.order.is_simple(&head).unwrap());
        for v in ctx.order.below_set(&m).unwrap().iter().chain([&m]) {
            prop_assert!(v == &head || ctx.order.bilex_less(&head, v).unwrap());
        }
        let sum: Vec<i64> = p.alpha.iter().zip(&p.beta).map(|(a, b)| a + b).collect();
        if ctx.order.sys.index_of(&sum).is_some() {
            prop_assert_eq!(head, ExponentVector::single(&ctx.order.sys, &sum).unwrap());
        }
    }

    #[test]
    fn pairs_are_oriented(q in small_quiver(), a in any::<proptest::sample::Index>(), b in any::<proptest::sample::Index>()) {
        let ctx = QuiverContext::new(&q).unwrap();
        let sys = &ctx.order.sys;
        let (x, y) = (&sys.roots[a.index(sys.len())], &sys.roots[b.index(sys.len())]);
        prop_assume!(x != y);
        let (al, be) = orient_pair(&ctx, x, y).unwrap();
        prop_assert!(ctx.is_pair(&al, &be).unwrap());
    }
}

/// A pair that is not simple upstairs stays non-simple after folding.
#[test]
fn nonzero_degree_survives_folding() {
    let cases = [
        ("A5", AutomorphismKind::Vee),
        ("D5", AutomorphismKind::Vee),
        ("D4", AutomorphismKind::VeeTilde),
        ("E6", AutomorphismKind::Vee),
    ];
    let mut checked = 0;
    for (t, k) in cases {
        let x = datum(t);
        let f = SubFolding::new(&x, k).unwrap();
        for q in sigma_fixed_quivers(&x, &f.sigma) {
            let up = QuiverContext::new(&q).unwrap();
            let down = QuiverContext::new(&f.fold_quiver(&q).unwrap()).unwrap();
            for (p, d) in all_pair_degrees(&up).unwrap() {
                if d == 0 {
                    continue;
                }
                let (a, b) = (f.psi(&p.alpha), f.psi(&p.beta));
                let m = ExponentVector::from_roots(&down.order.sys, &[&a, &b]).unwrap();
                assert_ne!(down.order.deg(&m).unwrap(), 0, "{q}: {:?},{:?}", p.alpha, p.beta);
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}
