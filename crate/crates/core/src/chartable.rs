//! Ordinary and `r`-regular character tables of the symmetric group.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CyclotomicNumber;
use crate::error::Result;
use crate::partition::{enumerate_class_regular, enumerate_partitions, enumerate_regular, ModulusTuple, Partition};
use crate::scalar::serde_rational;
use crate::stats::stat_c;
use crate::symfunc::hall_littlewood::{family_in_p, transition_matrix, Family};
use crate::symfunc::{mn_character, z_factor, Matrix};

/// `χ^λ_ρ` with rows `λ` and columns `ρ`, both in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<i64>>,
}

impl CharacterTable {
    fn build(n: usize, rows: Vec<Partition>, cols: Vec<Partition>) -> Self {
        let entries = rows
            .iter()
            .map(|l| cols.iter().map(|rho| mn_character(l, rho).expect("same weight")).collect())
            .collect();
        CharacterTable { n, rows, cols, entries }
    }

    pub fn get(&self, lambda: &Partition, rho: &Partition) -> Option<i64> {
        let i = self.rows.iter().position(|p| p == lambda)?;
        let j = self.cols.iter().position(|p| p == rho)?;
        Some(self.entries[i][j])
    }

    pub fn to_matrix(&self) -> Matrix<BigRational> {
        Matrix::from_fn(self.rows.len(), self.cols.len(), BigRational::zero(), |i, j| {
            BigRational::from_integer(BigInt::from(self.entries[i][j]))
        })
    }

    /// Exact determinant; the table must be square.
    pub fn det(&self) -> Result<BigInt> {
        Ok(self.to_matrix().det()?.to_integer())
    }
}

/// The full table of `S_n`, cached per `n`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().expect("table cache poisoned").get(&n) {
        return t.clone();
    }
    let parts = enumerate_partitions(n);
    let table = Arc::new(CharacterTable::build(n, parts.clone(), parts));
    tables.write().expect("table cache poisoned").entry(n).or_insert(table).clone()
}

/// Rows `r`-regular, columns `r`-class regular.
pub fn regular_character_table(r: u64, n: usize) -> Result<CharacterTable> {
    let moduli = ModulusTuple::single(r)?;
    Ok(CharacterTable::build(n, enumerate_regular(&moduli, n), enumerate_class_regular(&moduli, n)))
}

/// `∏_{ρ ∈ set} ∏_i ρ_i`.
pub fn part_product_over(set: &[Partition]) -> BigUint {
    set.iter().map(Partition::part_product).product()
}

/// Determinant of the `r`-regular table against `∏_{ρ ∈ CP}∏ρ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OlssonReport {
    pub r: u64,
    pub n: usize,
    pub det: BigInt,
    pub predicted_magnitude: BigUint,
    /// `1` or `-1` when the magnitudes agree, `0` otherwise.
    pub sign: i8,
    pub holds: bool,
}

pub fn verify_olsson(r: u64, n: usize) -> Result<OlssonReport> {
    let table = regular_character_table(r, n)?;
    let det = table.det()?;
    let predicted_magnitude = part_product_over(&table.cols);
    let holds = det.magnitude() == &predicted_magnitude;
    let sign = if !holds {
        0
    } else if det.is_negative() {
        -1
    } else {
        1
    };
    Ok(OlssonReport { r, n, det, predicted_magnitude, sign, holds })
}

/// `(det T_n)^2` against `∏_{ρ ⊢ n}∏ρ_i^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullTableReport {
    pub n: usize,
    pub det: BigInt,
    pub det_squared: BigUint,
    pub predicted: BigUint,
    pub holds: bool,
}

pub fn verify_full_table(n: usize) -> Result<FullTableReport> {
    let table = character_table(n);
    let det = table.det()?;
    let det_squared = det.magnitude() * det.magnitude();
    let product = part_product_over(&table.cols);
    let predicted = &product * &product;
    Ok(FullTableReport { n, holds: det_squared == predicted, det, det_squared, predicted })
}

/// `Σ_λ χ^λ_ρ χ^λ_σ = z_ρ δ_{ρσ}`; returns the first failing pair.
pub fn column_orthogonality(n: usize) -> Option<(Partition, Partition)> {
    let table = character_table(n);
    let size = table.cols.len();
    for a in 0..size {
        for b in 0..size {
            let sum: i64 = (0..table.rows.len()).map(|i| table.entries[i][a] * table.entries[i][b]).sum();
            let expected = if a == b { BigInt::from(z_factor(&table.cols[a])) } else { BigInt::zero() };
            if BigInt::from(sum) != expected {
                return Some((table.cols[a].clone(), table.cols[b].clone()));
            }
        }
    }
    None
}

/// The chain `det M(s,p)^2 = det M(s,Q′)^2 · det M(Q′,p)^2` for the
/// `r`-reduced families at `t = ζ_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetChainReport {
    pub r: u64,
    pub n: usize,
    pub c: u64,
    /// `det M(s^{(r)}, Q′^{(r)})^2`, expected to be 1.
    #[serde(with = "serde_rational")]
    pub det_s_qprime_squared: BigRational,
    /// `det M(Q′^{(r)}, p^{(r)})^2`.
    #[serde(with = "serde_rational")]
    pub det_qprime_p_squared: BigRational,
    /// `1/(r^{2c} ∏_{ρ ∈ CP}∏ρ_i^2)`.
    #[serde(with = "serde_rational")]
    pub predicted_qprime_p_squared: BigRational,
    /// `det M(s^{(r)}, p^{(r)})^2`.
    #[serde(with = "serde_rational")]
    pub det_s_p_squared: BigRational,
    /// `M(s^{(r)}, p^{(r)})` entries agree with `χ^λ_ρ / z_ρ`.
    pub entries_match_table: bool,
    pub holds: bool,
}

fn squared_rational(x: &CyclotomicNumber) -> Option<BigRational> {
    (x * x).as_rational()
}

pub fn verify_detchain(r: u64, n: usize) -> Result<DetChainReport> {
    let moduli = ModulusTuple::single(r)?;
    let c = stat_c(&moduli, 1, n)?;
    let not_rational = || crate::error::Error::NotIntegral("determinant outside ℚ".into());

    let s_q = transition_matrix(Family::Schur, Family::QPrime, r, n)?;
    let det_s_qprime_squared = squared_rational(&s_q.det()?).ok_or_else(not_rational)?;
    let q_p = family_in_p(Family::QPrime, r, n)?;
    let det_qprime_p_squared = squared_rational(&q_p.det()?).ok_or_else(not_rational)?;
    let s_p = family_in_p(Family::Schur, r, n)?;
    let det_s_p_squared = squared_rational(&s_p.det()?).ok_or_else(not_rational)?;

    let a = BigRational::from_integer(BigInt::from(part_product_over(&q_p.col_index)));
    let rc = BigRational::from_integer(BigInt::from(r).pow(u32::try_from(c).expect("small c")));
    let predicted_qprime_p_squared = (&rc * &rc * &a * &a).recip();

    let table = regular_character_table(r, n)?;
    let entries_match_table = s_p.row_index == table.rows
        && s_p.col_index == table.cols
        && (0..table.rows.len()).all(|i| {
            (0..table.cols.len()).all(|j| {
                let z = BigRational::from_integer(BigInt::from(z_factor(&table.cols[j])));
                let expected = BigRational::from_integer(BigInt::from(table.entries[i][j])) / z;
                s_p.matrix.get(i, j).as_rational() == Some(expected)
            })
        });

    let holds = det_s_qprime_squared.is_one()
        && det_qprime_p_squared == predicted_qprime_p_squared
        && det_s_p_squared == &det_s_qprime_squared * &det_qprime_p_squared
        && entries_match_table;
    Ok(DetChainReport {
        r,
        n,
        c,
        det_s_qprime_squared,
        det_qprime_p_squared,
        predicted_qprime_p_squared,
        det_s_p_squared,
        entries_match_table,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn s3_table() {
        let t = character_table(3);
        assert_eq!(t.entries[0], vec![1, 1, 1]);
        assert_eq!(t.det().unwrap().magnitude(), &BigUint::from(6u32));
        assert!(t.entries.iter().all(|row| *row.last().unwrap() > 0));
    }

    #[test]
    fn regular_tables() {
        let t = regular_character_table(2, 3).unwrap();
        assert_eq!(t.rows, vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(t.cols, vec![p(&[3]), p(&[1, 1, 1])]);
        assert_eq!(t.entries, vec![vec![1, 1], vec![-1, 2]]);
        assert_eq!(t.det().unwrap(), BigInt::from(3));
        assert_eq!(regular_character_table(2, 4).unwrap().det().unwrap().magnitude(), &BigUint::from(3u32));
        assert_eq!(regular_character_table(7, 5).unwrap(), *character_table(5));
    }

    #[test]
    fn olsson_small() {
        let rep = verify_olsson(2, 3).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.predicted_magnitude, BigUint::from(3u32));
        let rep = verify_olsson(3, 1).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.predicted_magnitude, BigUint::one());
    }

    #[test]
    fn orthogonality() {
        for n in 1..=6 {
            assert_eq!(column_orthogonality(n), None);
            assert!(verify_full_table(n).unwrap().holds);
        }
    }

    #[test]
    fn detchain_small() {
        for (r, n) in [(2, 1), (2, 4), (3, 4)] {
            let rep = verify_detchain(r, n).unwrap();
            assert!(rep.holds, "{rep:?}");
        }
    }
}
