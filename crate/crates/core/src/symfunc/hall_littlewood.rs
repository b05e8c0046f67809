//! Hall–Littlewood functions from the Kostka–Foulkes matrix, and transition
//! matrices between `r`-reduced families at `t = ζ_r`.
//!
//! `s = K(t)·P` gives `P_λ = Σ_ν K^{-1}_{λν} s_ν`, `Q_λ = b_λ(t) P_λ`, and the dual
//! basis `Q′_μ = Σ_λ K_{λμ}(t) s_λ`.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::partition::{enumerate_class_regular, enumerate_regular, ModulusTuple, Partition};
use crate::poly::Poly;
use crate::symfunc::kostka::{b_lambda, kostka_table};
use crate::symfunc::matrix::{Matrix, TransitionMatrix};
use crate::symfunc::{schur_in_p, SymFunc};

fn combine_schur(n: usize, coeffs: impl Iterator<Item = (Partition, Poly)>) -> SymFunc<Poly> {
    let mut out = SymFunc::zero(n, Poly::zero());
    for (lambda, k) in coeffs {
        if !k.is_zero() {
            out = out + schur_in_p(&lambda, Poly::zero()).scale(&k);
        }
    }
    out
}

/// `Q′_μ(x;t) = Σ_λ K_{λμ}(t) s_λ`.
pub fn hl_qprime(mu: &Partition) -> SymFunc<Poly> {
    let table = kostka_table(mu.weight());
    let j = table.index_of(mu).expect("partition of n");
    combine_schur(
        mu.weight(),
        table.partitions.iter().enumerate().map(|(i, lambda)| (lambda.clone(), table.k.get(i, j).clone())),
    )
}

/// `P_λ(x;t) = Σ_ν K^{-1}_{λν}(t) s_ν`.
pub fn hl_p(lambda: &Partition) -> SymFunc<Poly> {
    let table = kostka_table(lambda.weight());
    let i = table.index_of(lambda).expect("partition of n");
    combine_schur(
        lambda.weight(),
        table.partitions.iter().enumerate().map(|(j, nu)| (nu.clone(), table.k_inv.get(i, j).clone())),
    )
}

/// `Q_λ(x;t) = b_λ(t) P_λ(x;t)`.
pub fn hl_q(lambda: &Partition) -> SymFunc<Poly> {
    hl_p(lambda).scale(&b_lambda(lambda))
}

/// The families whose `r`-reductions at `t = ζ_r` span `Λ^{(r)}` in degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// `s^{(r)}_λ`, `λ` `r`-regular.
    Schur,
    /// `Q′^{(r)}_λ(x;ζ)`, `λ` `r`-regular.
    QPrime,
    /// `p_ρ`, `ρ` `r`-class regular.
    PowerSum,
}

impl Family {
    pub fn index(self, r: u64, n: usize) -> Result<Vec<Partition>> {
        let moduli = ModulusTuple::single(r)?;
        Ok(match self {
            Family::Schur | Family::QPrime => enumerate_regular(&moduli, n),
            Family::PowerSum => enumerate_class_regular(&moduli, n),
        })
    }

    /// The `r`-reduced member indexed by `lambda`, at `t = ζ_r`.
    pub fn member(self, lambda: &Partition, r: u32) -> SymFunc<CyclotomicNumber> {
        let zero = CyclotomicNumber::zero(r);
        let f = match self {
            Family::Schur => schur_in_p(lambda, zero),
            Family::QPrime => hl_qprime(lambda).specialize_t(r),
            Family::PowerSum => SymFunc::power_sum(lambda, zero),
        };
        f.r_reduce(r as usize)
    }
}

fn order(r: u64) -> Result<u32> {
    u32::try_from(r).map_err(|_| Error::ModulusTooSmall(r)).and_then(|o| {
        if o < 2 {
            Err(Error::ModulusTooSmall(r))
        } else {
            Ok(o)
        }
    })
}

/// `M(u, p^{(r)})`: row `λ` holds the power-sum coefficients of the `λ`-th
/// member of `family`, over `ρ ∈ CP_{r,n}`.
pub fn family_in_p(family: Family, r: u64, n: usize) -> Result<TransitionMatrix<CyclotomicNumber>> {
    let o = order(r)?;
    let rows = family.index(r, n)?;
    let cols = Family::PowerSum.index(r, n)?;
    let members: Vec<SymFunc<CyclotomicNumber>> = rows.iter().map(|l| family.member(l, o)).collect();
    let matrix = Matrix::from_fn(rows.len(), cols.len(), CyclotomicNumber::zero(o), |i, j| members[i].coeff(&cols[j]));
    Ok(TransitionMatrix { row_index: rows, col_index: cols, matrix })
}

/// `M(u, v)`: row `λ` expresses the `λ`-th member of `u` in the family `v`.
pub fn transition_matrix(u: Family, v: Family, r: u64, n: usize) -> Result<TransitionMatrix<CyclotomicNumber>> {
    let mu = family_in_p(u, r, n)?;
    let mv = family_in_p(v, r, n)?;
    let matrix = mu.matrix.mul(&mv.matrix.inverse()?)?;
    Ok(TransitionMatrix { row_index: mu.row_index, col_index: mv.row_index, matrix })
}

/// `L(ζ) = (K(ζ)^{-1})^T` on all partitions of `n`: `s_λ = Σ_μ L_{λμ}(ζ) Q′_μ(x;ζ)`.
pub fn l_matrix(r: u64, n: usize) -> Result<TransitionMatrix<CyclotomicNumber>> {
    let o = order(r)?;
    let table = kostka_table(n);
    let zeta = CyclotomicNumber::zeta(o);
    let matrix = table.k_inv.transpose().map(CyclotomicNumber::zero(o), |c| c.eval(&zeta));
    Ok(TransitionMatrix { row_index: table.partitions.clone(), col_index: table.partitions.clone(), matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::symfunc::{hall_inner, InnerParam};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cy(r: u32, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_rational(r, rat(k))
    }

    #[test]
    fn qprime_small() {
        assert_eq!(hl_qprime(&p(&[3])), schur_in_p(&p(&[3]), Poly::zero()));
        let expected = schur_in_p(&p(&[1, 1]), Poly::zero()) + schur_in_p(&p(&[2]), Poly::zero()).scale(&Poly::t());
        assert_eq!(hl_qprime(&p(&[1, 1])), expected);
        let at2 = hl_qprime(&p(&[1, 1])).specialize_t(2);
        assert_eq!(at2, SymFunc::power_sum(&p(&[2]), cy(2, 0)).scale(&cy(2, -1)));
    }

    #[test]
    fn p_bottom_is_elementary() {
        for n in 1..=5 {
            assert_eq!(hl_p(&Partition::column(n)), schur_in_p(&Partition::column(n), Poly::zero()));
        }
    }

    #[test]
    fn q_vanishes_at_minus_one_with_repeated_parts() {
        assert!(hl_q(&p(&[2, 1, 1])).specialize_t(2).is_zero());
        assert!(!hl_q(&p(&[3, 1])).specialize_t(2).is_zero());
    }

    #[test]
    fn qprime_dual_to_p() {
        for n in 1..=4 {
            let parts = crate::partition::enumerate_partitions(n);
            for a in &parts {
                for b in &parts {
                    let v = hall_inner(&hl_p(a), &hl_qprime(b), &InnerParam::Zero).unwrap();
                    assert_eq!(v, if a == b { Poly::one() } else { Poly::zero() });
                }
            }
        }
    }

    #[test]
    fn reduced_matrix_at_minus_one() {
        let m = transition_matrix(Family::Schur, Family::QPrime, 2, 4).unwrap();
        assert_eq!(m.row_index, vec![p(&[4]), p(&[3, 1])]);
        let expected = Matrix::from_rows(vec![vec![cy(2, 1), cy(2, 0)], vec![cy(2, 1), cy(2, 1)]], cy(2, 0)).unwrap();
        assert_eq!(m.matrix, expected);
    }

    #[test]
    fn same_family_is_identity() {
        for family in [Family::Schur, Family::QPrime, Family::PowerSum] {
            assert!(transition_matrix(family, family, 3, 5).unwrap().matrix.is_identity());
        }
    }
}
