use cubica_core::descent::{construct, random_problem};
use cubica_core::function_field::divisor_of;
use cubica_core::parshin::{genus1_parshin, AffinePoint, HyperellipticModel};
use cubica_core::pure_cubic::count_pure;
use cubica_core::{Field, Polynomial, RationalFunction};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

const PRIMES: [u64; 5] = [5, 7, 11, 13, 17];

fn poly(k: &Field, c: &[i64]) -> Polynomial {
    Polynomial::from_ints(k, c)
}

fn nonzero_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..20, 1..6).prop_filter("nonzero leading term", |v| v.last() != Some(&0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_with_remainder(pi in 0usize..5, a in nonzero_poly(), b in nonzero_poly()) {
        let k = Field::prime(PRIMES[pi]).unwrap();
        let (a, b) = (poly(&k, &a), poly(&k, &b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a) && g.divides(&b));
    }

    #[test]
    fn rational_functions_agree_with_cross_multiplication(
        pi in 0usize..5, a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly(), d in nonzero_poly()
    ) {
        let k = Field::prime(PRIMES[pi]).unwrap();
        let (a, b, c, d) = (poly(&k, &a), poly(&k, &b), poly(&k, &c), poly(&k, &d));
        prop_assume!(!b.is_zero() && !d.is_zero());
        let f = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let g = RationalFunction::new(c.clone(), d.clone()).unwrap();
        let again = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        let sum = &f + &g;
        let cross = RationalFunction::new(&(&a * &d) + &(&c * &b), &b * &d).unwrap();
        prop_assert_eq!(sum, cross);
        let prod = &f * &g;
        prop_assert_eq!(prod, RationalFunction::new(&a * &c, &b * &d).unwrap());
    }

    #[test]
    fn principal_divisors(pi in 0usize..5, a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let k = Field::prime(PRIMES[pi]).unwrap();
        let (a, b, c) = (poly(&k, &a), poly(&k, &b), poly(&k, &c));
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let f = RationalFunction::new(a, b.clone()).unwrap();
        let g = RationalFunction::new(c, b).unwrap();
        let (df, dg) = (divisor_of(&f).unwrap(), divisor_of(&g).unwrap());
        prop_assert_eq!(df.degree(), 0);
        prop_assert_eq!(divisor_of(&(&f * &g)).unwrap(), df.plus(&dg));
        prop_assert_eq!(divisor_of(&f.inv().unwrap()).unwrap(), df.scaled(-1));
    }

    #[test]
    fn square_roots(q in prop::sample::select(vec![5u64, 7, 9, 11, 13, 25, 27, 49, 121, 4, 8, 16]), seed in any::<u64>()) {
        let Ok(k) = Field::finite(q) else { return Ok(()) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = k.random_element(&mut rng);
        let a2 = a.square();
        prop_assert!(a2.is_square());
        let r = a2.sqrt().unwrap();
        prop_assert!(r == a || r == -&a);
    }

    #[test]
    fn pure_count_matches_sign_vectors(degs in prop::collection::vec(1usize..7, 1..10), with_inf in any::<bool>()) {
        // admissible sign vectors up to global negation
        let n = degs.len();
        let mut c = 0u64;
        for mask in 0u32..(1 << n) {
            let d: usize = degs.iter().enumerate().map(|(i, &g)| if mask >> i & 1 == 1 { 2 * g } else { g }).sum();
            if (d % 3 == 0) != with_inf {
                c += 1;
            }
        }
        let s = degs.iter().filter(|d| *d % 3 == 0).count() as i64;
        let t = n as i64 + i64::from(with_inf);
        prop_assert_eq!(BigUint::from(c / 2), count_pure(s, t).unwrap());
    }

    #[test]
    fn descents_are_norm_forms(pi in 0usize..4, seed in any::<u64>()) {
        let k = Field::prime(PRIMES[pi]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pb = random_problem(&k, &mut rng, 3).unwrap();
        let r = construct(&pb).unwrap();
        prop_assert_eq!(r.f.norm().as_constant(), Some(r.lambda.clone()));
        // alpha = c (f + c / f), and the sum is rational
        let c = r.c();
        let cf = r.f.rational(RationalFunction::constant(&c));
        let g = r.f.add(&cf.mul(&r.f.inv().unwrap()));
        prop_assert!(g.is_rational());
        prop_assert_eq!(g.a.scale(&c), r.alpha().clone());
    }

    #[test]
    fn mumford_group_law(pi in 0usize..2, seed in any::<u64>(), m in 0i64..9, n in 0i64..9) {
        let k = Field::prime([11u64, 13][pi]).unwrap();
        let e = |v: i64| k.from_i64(v);
        let w = HyperellipticModel::etale(&[e(-5), e(0), e(4), e(4)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pt = loop {
            let x = k.random_element(&mut rng);
            if let Some(y) = w.rhs().eval(&x).sqrt() {
                break AffinePoint::new(x, y);
            }
        };
        let d = w.point_class(&pt).unwrap();
        let lhs = w.scalar(&d, m + n).unwrap();
        let rhs = w.add(&w.scalar(&d, m).unwrap(), &w.scalar(&d, n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(w.add(&d, &w.neg(&d).unwrap()).unwrap(), w.zero());
    }

    #[test]
    fn genus_one_maps(pi in 0usize..5, l in 0i64..17, seed in any::<u64>()) {
        let k = Field::prime(PRIMES[pi]).unwrap();
        let lambda = k.from_i64(l);
        prop_assume!(lambda.square() != k.from_i64(4));
        let g = genus1_parshin(&lambda).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ext = Field::finite(PRIMES[pi] * PRIMES[pi]).unwrap();
        let n = g.sample_check(&ext, 5, &mut rng);
        prop_assert!(matches!(n, Ok(5)), "{:?} p={} l={}", n, PRIMES[pi], l);
    }
}
