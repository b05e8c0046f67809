use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use regpart_core::glaisher::{glaisher_forward, glaisher_inverse, glaisher_iterative};
use regpart_core::partition::{
    enumerate_class_regular, enumerate_partitions, enumerate_regular, is_class_regular, is_regular, ModulusTuple,
};
use regpart_core::series::TruncatedSeries;

const TUPLES: &[&[u64]] = &[
    &[2],
    &[3],
    &[5],
    &[2, 3],
    &[3, 2],
    &[2, 5],
    &[4, 3],
    &[3, 4],
    &[9, 2],
    &[7, 4, 3],
    &[2, 3, 5],
    &[5, 3, 2],
];

fn tuple() -> impl Strategy<Value = ModulusTuple> {
    prop::sample::select(TUPLES).prop_map(|m| ModulusTuple::new(m.to_vec()).unwrap())
}

/// Partition numbers by the recurrence on the largest allowed part.
fn partition_count(n: usize) -> usize {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

fn series(coeffs: Vec<i64>) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(coeffs.into_iter().map(|c| BigRational::from_integer(BigInt::from(c))).collect())
}

fn series_strategy(degree: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-6i64..=6, degree + 1).prop_map(series)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_is_sorted_and_complete(n in 0usize..=16) {
        let parts = enumerate_partitions(n);
        prop_assert_eq!(parts.len(), partition_count(n));
        prop_assert!(parts.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(parts.iter().all(|p| p.weight() == n));
    }

    #[test]
    fn conjugation_is_an_involution(n in 0usize..=14, pick in any::<prop::sample::Index>()) {
        let parts = enumerate_partitions(n);
        let lambda = pick.get(&parts);
        let conj = lambda.conjugate();
        prop_assert_eq!(conj.weight(), n);
        prop_assert_eq!(conj.length(), lambda.part(0));
        prop_assert_eq!(&conj.conjugate(), lambda);
    }

    #[test]
    fn restricted_enumerations_are_filters(moduli in tuple(), n in 0usize..=18) {
        let all = enumerate_partitions(n);
        let cp: Vec<_> = all.iter().filter(|p| is_class_regular(p, &moduli)).cloned().collect();
        let rp: Vec<_> = all.iter().filter(|p| is_regular(p, &moduli)).cloned().collect();
        prop_assert_eq!(enumerate_class_regular(&moduli, n), cp.clone());
        prop_assert_eq!(enumerate_regular(&moduli, n), rp.clone());
        prop_assert_eq!(cp.len(), rp.len());
    }

    #[test]
    fn glaisher_round_trips(moduli in tuple(), n in 0usize..=20, pick in any::<prop::sample::Index>()) {
        let rp = enumerate_regular(&moduli, n);
        let lambda = pick.get(&rp);
        let fwd = glaisher_forward(lambda, &moduli).unwrap();
        prop_assert!(is_class_regular(&fwd.output, &moduli));
        let back = glaisher_inverse(&fwd.output, &moduli).unwrap();
        prop_assert_eq!(&back.output, lambda);
        prop_assert_eq!(back.steps, fwd.steps);
        let r1 = moduli.first() as usize;
        prop_assert_eq!((fwd.output.length() - lambda.length()) % (r1 - 1), 0);
        prop_assert_eq!(fwd.steps as usize, (fwd.output.length() - lambda.length()) / (r1 - 1));

        let cp = enumerate_class_regular(&moduli, n);
        let rho = pick.get(&cp);
        let inv = glaisher_inverse(rho, &moduli).unwrap();
        prop_assert_eq!(&glaisher_forward(&inv.output, &moduli).unwrap().output, rho);
    }

    #[test]
    fn replacement_order_does_not_matter(moduli in tuple(), n in 0usize..=20, pick in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let rp = enumerate_regular(&moduli, n);
        let lambda = pick.get(&rp);
        let batch = glaisher_forward(lambda, &moduli).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (out, steps) = glaisher_iterative(lambda, moduli.first(), |len| rng.gen_range(0..len));
        prop_assert_eq!(out, batch.output);
        prop_assert_eq!(steps, batch.steps);
    }

    #[test]
    fn series_ring_laws(a in series_strategy(10), b in series_strategy(10), c in series_strategy(10)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn geometric_inverse(k in 1usize..=12, degree in 0usize..=40) {
        let f = TruncatedSeries::one_minus_q_pow(k, degree);
        let inv = f.inverse().unwrap();
        prop_assert_eq!(&f * &inv, TruncatedSeries::one(degree));
        prop_assert_eq!(inv, &TruncatedSeries::one(degree) + &TruncatedSeries::geometric_tail(k, degree));
    }

    #[test]
    fn unit_constant_series_invert(mut coeffs in prop::collection::vec(-4i64..=4, 13)) {
        coeffs[0] = 1;
        let f = series(coeffs);
        let inv = f.inverse().unwrap();
        prop_assert_eq!(&f * &inv, TruncatedSeries::one(12));
    }
}
