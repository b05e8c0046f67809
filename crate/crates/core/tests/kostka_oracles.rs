use num_rational::BigRational;
use num_traits::{Signed, Zero};

use regpart_core::partition::{enumerate_partitions, Partition};
use regpart_core::poly::Poly;
use regpart_core::scalar::rat;
use regpart_core::symfunc::kostka::{kostka_foulkes, kostka_table};

mod common;
use common::brute_force_ssyt;

fn value_at_one(p: &Poly) -> BigRational {
    p.coeffs().iter().fold(BigRational::zero(), |acc, c| acc + c)
}

fn n_stat(lambda: &Partition) -> usize {
    lambda.parts().iter().enumerate().map(|(i, &part)| i * part).sum()
}

fn hooks(lambda: &Partition) -> Vec<usize> {
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            out.push(row - j + conj.part(j) - i - 1);
        }
    }
    out
}

#[test]
fn kostka_at_one_counts_tableaux() {
    for n in 0..=6 {
        for lambda in enumerate_partitions(n) {
            for mu in enumerate_partitions(n) {
                let k = kostka_foulkes(&lambda, &mu).unwrap();
                assert_eq!(value_at_one(&k), rat(brute_force_ssyt(&lambda, &mu) as i64), "K_{lambda},{mu}(1)");
            }
        }
    }
}

#[test]
fn fake_degrees_for_single_column_content() {
    for n in 1..=7 {
        let column = Partition::column(n);
        for lambda in enumerate_partitions(n) {
            let numerator =
                (1..=n).fold(Poly::t().pow(n_stat(&lambda.conjugate()) as u32), |acc, i| &acc * &Poly::one_minus_t_pow(i));
            let denominator = hooks(&lambda).into_iter().fold(Poly::one(), |acc, h| &acc * &Poly::one_minus_t_pow(h));
            let (quotient, remainder) = numerator.div_rem(&denominator);
            assert!(remainder.is_zero());
            assert_eq!(kostka_foulkes(&lambda, &column).unwrap(), quotient, "λ={lambda}");
        }
    }
}

#[test]
fn coefficients_are_nonnegative_integers_on_dominance_support() {
    for n in 0..=7 {
        let table = kostka_table(n);
        assert!(table.k.is_upper_unitriangular());
        for (i, lambda) in table.partitions.iter().enumerate() {
            for (j, mu) in table.partitions.iter().enumerate() {
                let k = table.k.get(i, j);
                assert!(k.is_integral());
                assert!(k.coeffs().iter().all(|c| !c.is_negative()));
                if !k.is_zero() {
                    assert!(lambda.dominates(mu), "K_{lambda},{mu} ≠ 0 off dominance");
                    assert_eq!(k.degree(), Some(n_stat(mu) - n_stat(lambda)));
                }
            }
        }
    }
}
