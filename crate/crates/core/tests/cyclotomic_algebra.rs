use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use regpart_core::cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};
use regpart_core::poly::Poly;
use regpart_core::scalar::Scalar;

const SAMPLES: usize = 10_000;

fn random_element(rng: &mut ChaCha8Rng, r: u32) -> CyclotomicNumber {
    // a few entries with small numerators and denominators, spread over 0..r
    let coeffs: Vec<BigRational> = (0..r)
        .map(|_| {
            if rng.gen_bool(0.3) {
                BigRational::zero()
            } else {
                BigRational::new(BigInt::from(rng.gen_range(-5i64..=5)), BigInt::from(rng.gen_range(1i64..=4)))
            }
        })
        .collect();
    CyclotomicNumber::from_poly(r, &Poly::new(coeffs))
}

#[test]
fn field_axioms_on_random_elements() {
    for r in 2..=6u32 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + u64::from(r));
        let one = CyclotomicNumber::one(r);
        for _ in 0..SAMPLES {
            let x = random_element(&mut rng, r);
            let y = random_element(&mut rng, r);
            let z = random_element(&mut rng, r);
            assert_eq!(&(&x * &y) * &z, &x * &(&y * &z), "associativity at r={r}");
            assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z), "distributivity at r={r}");
            assert_eq!(&x * &y, &y * &x, "commutativity at r={r}");
            assert_eq!((&x * &y).conj(), &x.conj() * &y.conj(), "conjugation at r={r}");
            assert_eq!(x.conj().conj(), x);
            if x.is_zero_elem() {
                assert!(x.inv().is_err());
            } else {
                assert_eq!(&x * &x.inv().unwrap(), one, "inverse of {x} at r={r}");
            }
        }
    }
}

fn divisors(r: u32) -> impl Iterator<Item = u32> {
    (1..=r).filter(move |d| r.is_multiple_of(*d))
}

#[test]
fn cyclotomic_polynomials_factor_x_pow_r_minus_one() {
    for r in 1..=36u32 {
        let product = divisors(r).fold(Poly::one(), |acc, d| &acc * &cyclotomic_polynomial(d));
        let mut expected = vec![0i64; r as usize + 1];
        expected[0] = -1;
        expected[r as usize] = 1;
        assert_eq!(product, Poly::from_ints(&expected), "r={r}");
    }
}

#[test]
fn zeta_has_exact_order() {
    for r in 1..=12u32 {
        let zeta = CyclotomicNumber::zeta(r);
        let one = CyclotomicNumber::one(r);
        assert_eq!(zeta.pow(i64::from(r)).unwrap(), one);
        for k in 1..r {
            assert_ne!(zeta.pow(i64::from(k)).unwrap(), one, "ζ_{r}^{k}");
        }
        let sum = (0..r).fold(CyclotomicNumber::zero(r), |acc, k| &acc + &CyclotomicNumber::zeta_pow(r, i64::from(k)));
        let expected = if r == 1 { one } else { CyclotomicNumber::zero(r) };
        assert_eq!(sum, expected);
    }
}
