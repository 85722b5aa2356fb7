mod common;

use common::{lambda_by_ranks, monomial_forms, rank};
use planebranch::differentials::{dim_lower_bound, Echelon};
use planebranch::{lambda_set, Field, Order, Parameterization, Poly, Rat};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64) -> Rat {
    Rat::from_int(n)
}

fn random_branch(rng: &mut ChaCha8Rng) -> Parameterization {
    const PAIRS: [(u64, u64); 8] = [(2, 3), (2, 5), (3, 4), (3, 5), (3, 7), (4, 5), (4, 7), (5, 6)];
    let (v0, v1) = PAIRS[rng.gen_range(0..PAIRS.len())];
    let c = (v0 - 1) * (v1 - 1);
    let mut terms = vec![(v1 as usize, q(1))];
    for k in v1 + 1..c + v1 {
        if rng.gen_bool(0.3) {
            terms.push((k as usize, Rat::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into())));
        }
    }
    Parameterization::from_terms(v0, &terms, None).unwrap()
}

#[test]
fn echelon_matches_rank_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let p = random_branch(&mut rng);
        let l = lambda_set(&p).unwrap();
        assert_eq!(l.small(), &lambda_by_ranks(&p), "x2 = {}", p.x2());
    }
}

#[test]
fn small_combinations_stay_in_lambda() {
    // every combination of at most three monomial forms with small integer
    // coefficients has its value in Λ
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..12 {
        let p = random_branch(&mut rng);
        let l = lambda_set(&p).unwrap();
        let c = l.conductor();
        let forms = monomial_forms(&p);
        let n = forms.len();
        let coeffs = [-2i64, -1, 1, 2];
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    for &a in &coeffs {
                        for &b in &coeffs {
                            let s = &(&forms[i] + &forms[j].scale(&q(a))) + &forms[k].scale(&q(b));
                            if let Order::Finite(o) = s.order() {
                                let val = o as u64 + 1;
                                assert!(val >= c || l.contains(val), "value {val} not in Λ");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn echelon_rank_agrees_with_gauss() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let width = rng.gen_range(1..10);
        let rows: Vec<Vec<Rat>> = (0..rng.gen_range(1..8))
            .map(|_| (0..width).map(|_| Rat::new(rng.gen_range(-2i64..=2).into(), rng.gen_range(1i64..=3).into())).collect())
            .collect();
        let mut e = Echelon::new(width);
        for r in &rows {
            e.insert(Echelon::integer_row(r));
        }
        assert_eq!(e.rank(), rank(&rows, width));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn valuation_is_additive(seed in any::<u64>(), a1 in 0u32..3, b1 in 0u32..3, a2 in 0u32..3, b2 in 0u32..3, c1 in -3i64..=3, c2 in -3i64..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_branch(&mut rng);
        let h = &Poly::monomial(q(1), a1, b1) + &Poly::monomial(q(c1), a1 + 1, b1);
        let k = &Poly::monomial(q(1), a2, b2) + &Poly::monomial(q(c2), a2, b2 + 1);
        let (Order::Finite(x), Order::Finite(y)) = (p.value(&h).unwrap(), p.value(&k).unwrap()) else {
            return Ok(());
        };
        let expected = if x + y <= p.precision() { Order::Finite(x + y) } else { Order::OverPrecision };
        prop_assert_eq!(p.value(&(&h * &k)).unwrap(), expected);
        // values of functions are semigroup elements
        prop_assert!(p.semigroup().contains(x as i64));
    }

    #[test]
    fn lambda_contains_shifted_semigroup(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_branch(&mut rng);
        let l = lambda_set(&p).unwrap();
        prop_assert!(l.violations().is_empty(), "{:?}", l.violations());
        prop_assert_eq!(l.tjurina() + l.lambda_minus_gamma().len() as u64, l.milnor());
        prop_assert_eq!(dim_lower_bound(p.semigroup()), q(0));
    }
}
