mod common;

use proptest::prelude::*;
use tiled_core::*;

fn weights(max_n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..=4, 2..=max_n)
        .prop_filter("some weight positive", |w| w.iter().sum::<i64>() > 0)
}

fn admissible(max_n: usize) -> impl Strategy<Value = Vec<i64>> {
    weights(max_n).prop_filter("all p <= 0", |w| {
        let t: i64 = w.iter().sum();
        w.iter().all(|&x| t - x >= 1)
    })
}

fn matrix(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(lo..=hi, n * n).prop_map(move |v| {
            IntMatrix::from_fn(n, |i, j| if i == j { 0 } else { v[i * n + j] })
        })
    })
}

fn order_with_shift() -> impl Strategy<Value = (Vec<i64>, ShiftVector)> {
    weights(6).prop_flat_map(|w| {
        let n = w.len();
        (Just(w), prop::collection::vec(-6i64..=6, n).prop_map(ShiftVector))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn morita_shift_round_trips((w, s) in order_with_shift()) {
        let (m, g) = cyclic_order(&w).unwrap();
        let shifted = morita_shift(&m, &s).unwrap();
        prop_assert_eq!(morita_shift(&shifted, &s.negated().unwrap()).unwrap(), m.clone());
        let g2 = detect_gorenstein(&shifted).unwrap();
        prop_assert_eq!(&g2.nu, &g.nu);
        prop_assert_eq!(g2.p_av, g.p_av);
        prop_assert_eq!(g2.p, shifted_parameters(&g, &s.negated().unwrap()).unwrap());
    }

    #[test]
    fn conjugation_preserves_cycle_sums(
        m in matrix(6, -5, 5),
        seed in prop::collection::vec((0usize..6, -8i64..=8), 1..=12),
    ) {
        let n = m.n();
        let s = ShiftVector((0..n).map(|i| seed[i % seed.len()].1).collect());
        let c = m.conjugate(&s).unwrap();
        let cycle = CycleSeq::new(seed.iter().map(|&(i, _)| i % n).collect()).unwrap();
        prop_assert_eq!(cycle_sum(&m, &cycle).unwrap(), cycle_sum(&c, &cycle).unwrap());
    }

    #[test]
    fn cycle_test_matches_brute_force(m in matrix(6, -3, 3)) {
        let brute = is_sigma_nonneg_bruteforce(&m).unwrap();
        prop_assert_eq!(is_sigma_nonneg(&m), brute);
        match nonneg_conjugate(&m) {
            Ok(s) => {
                prop_assert!(brute);
                prop_assert!(m.conjugate(&s).unwrap().min_entry() >= 0);
            }
            Err(Error::NegativeCycle(c)) => {
                prop_assert!(!brute);
                prop_assert!(cycle_sum(&m, &c).unwrap() < 0);
                prop_assert!(c.is_multiplicity_free());
            }
            Err(e) => prop_assert!(false, "unexpected {e:?}"),
        }
    }

    #[test]
    fn contraction_route_agrees(m in matrix(5, -2, 3)) {
        let direct = nonneg_conjugate(&m);
        let contracted = contraction_conjugate(&m);
        prop_assert_eq!(direct.is_ok(), contracted.is_ok());
        if let Ok(s) = contracted {
            prop_assert!(m.conjugate(&s).unwrap().min_entry() >= 0);
        }
    }

    #[test]
    fn min_cycle_normalizes(m in matrix(5, -2, 4)) {
        prop_assume!(m.n() >= 2 && is_sigma_nonneg(&m));
        let (cycle, value) = min_cycle(&m).unwrap();
        prop_assert_eq!(cycle_sum(&m, &cycle).unwrap(), value);
        let s = normalized_cycle_conjugate(&m, &cycle).unwrap();
        let c = m.conjugate(&s).unwrap();
        let idx = cycle.indices();
        for &x in idx {
            for &y in idx {
                prop_assert!(c.get(x, y) >= 0);
            }
        }
        prop_assert_eq!(c.get(idx[idx.len() - 1], idx[0]), value);
        for k in 0..idx.len() - 1 {
            prop_assert_eq!(c.get(idx[k], idx[k + 1]), 0);
        }
    }

    #[test]
    fn floor_profile_is_almost_constant(r in -40i64..=40, g in 1i64..=9, reps in 1usize..=4) {
        let n = g as usize * reps;
        let f = floor_profile(r, g, n).unwrap();
        let lo = r.div_euclid(g);
        prop_assert!(f.iter().all(|&x| x == lo || x == lo + 1));
        prop_assert_eq!(f.iter().sum::<i64>(), r * reps as i64);
    }

    #[test]
    fn telescoping_floor_sum(n in 1i64..=15, r in -30i64..=30, p in -50i64..=50) {
        let coprime = (1..=n).filter(|d| n % d == 0 && r % d == 0).max() == Some(1);
        prop_assume!(coprime);
        let total: i64 = (0..n).map(|i| (i * r).div_euclid(n) - (i * r - p).div_euclid(n)).sum();
        prop_assert_eq!(total, p);
    }

    #[test]
    fn normalization_postconditions((w, s) in order_with_shift()) {
        let (base, _) = cyclic_order(&w).unwrap();
        let m = morita_shift(&base, &s).unwrap();
        let g = detect_gorenstein(&m).unwrap();
        let md = MData::from_order(&m, &g).unwrap();
        let t = normalize_mdata(&md).unwrap();
        let out = conjugate_mdata(&md, &t).unwrap();
        prop_assert!(out.is_non_negative() && out.is_almost_constant() && out.is_floor_type());
        let m2 = morita_shift(&m, &t.negated().unwrap()).unwrap();
        prop_assert_eq!(m2.as_matrix(), &out.m().transpose());
        prop_assert_eq!(detect_gorenstein(&m2).unwrap().p, shifted_parameters(&g, &t).unwrap());
    }

    #[test]
    fn floor_type_conjugate_reaches_floor_type((w, s) in order_with_shift()) {
        let (base, _) = cyclic_order(&w).unwrap();
        let m = morita_shift(&base, &s).unwrap();
        let md = MData::from_order(&m, &detect_gorenstein(&m).unwrap()).unwrap();
        let t = floor_type_conjugate(&md).unwrap();
        let out = conjugate_mdata(&md, &t).unwrap();
        prop_assert!(out.is_floor_type());
        prop_assert!(fold_mdata(&out).is_ok());
    }

    #[test]
    fn hom_dim_is_a_partial_order(w in admissible(5)) {
        let (m, g) = cyclic_order(&w).unwrap();
        let poset = build_va(&m, &g).unwrap();
        let v = poset.elements();
        for x in v {
            prop_assert_eq!(hom_dim(&m, x, x, 0).unwrap(), 1);
            for y in v {
                let xy = hom_dim(&m, x, y, 0).unwrap() == 1;
                prop_assert_eq!(xy, y.le(x));
                if x != y {
                    prop_assert!(!(xy && hom_dim(&m, y, x, 0).unwrap() == 1));
                }
                // Hom is monotone in the degree.
                prop_assert!(hom_dim(&m, x, y, 1).unwrap() >= hom_dim(&m, x, y, 0).unwrap());
            }
        }
    }

    #[test]
    fn hasse_matches_oracle(w in admissible(6)) {
        let (m, g) = cyclic_order(&w).unwrap();
        let poset = build_va(&m, &g).unwrap();
        let q = hasse_quiver(&poset);
        let o = cyclic_hasse_oracle(&w).unwrap();
        prop_assert!(q.is_isomorphic_labeled(&o.quiver));
        prop_assert!(q.is_acyclic());
        prop_assert_eq!(poset.len() as i64, grothendieck_rank(&g).unwrap());
        prop_assert_eq!(poset.minimum(), poset.index_of(&ExponentVector::zeros(w.len())));
    }

    #[test]
    fn endo_blocks_match_hom(w in admissible(4)) {
        let (m, g) = cyclic_order(&w).unwrap();
        let n = w.len();
        let labels: Vec<SummandLabel> =
            (0..n).flat_map(|s| (1..=1 - g.p[s]).map(move |i| (s, i))).collect();
        for &a in &labels {
            for &b in &labels {
                prop_assert!(endo_block_dim(&m, &g, a, b).is_ok());
            }
        }
    }

    #[test]
    fn truncations_are_lattices(w in weights(5), row in 0usize..5, j in -3i64..=8) {
        let (m, _) = cyclic_order(&w).unwrap();
        let v = m.row_vector(row % w.len());
        prop_assert!(lattice_validate(&m, &v).unwrap());
        prop_assert!(lattice_validate(&m, &truncate_shift(&v, j)).unwrap());
    }
}

#[test]
fn fold_pattern_holds_for_random_symbols() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for _ in 0..20 {
        let mut x = [0i64; 14];
        for v in &mut x {
            *v = rng.gen_range(-3..=5);
        }
        let folded = fold_mdata(&common::ten_by_ten_mdata(&x)).unwrap();
        assert_eq!(folded.m_prime, common::ten_by_ten_folded(&x));
        assert_eq!(folded.m_bar, common::ten_by_ten_bar(&x));
    }
}
