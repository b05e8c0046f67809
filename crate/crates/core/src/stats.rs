//! Scalar statistics over the class-regular and regular families, computed by
//! direct enumeration.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{enumerate_class_regular, enumerate_regular, ModulusTuple, Partition};

/// Which statistic a [`StatisticTable`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Statistic {
    V,
    W,
    X,
    Y,
}

/// Values `j ↦ S_{r̲,j,n}` of one statistic for fixed moduli and `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatisticTable {
    pub statistic: Statistic,
    pub moduli: ModulusTuple,
    pub n: usize,
    pub values: BTreeMap<u64, u64>,
}

/// Number of distinct part values occurring at least `j` times.
pub fn count_multiplicity_at_least(rho: &Partition, j: usize) -> u64 {
    rho.multiplicities().values().filter(|&&m| m >= j).count() as u64
}

/// Number of parts congruent to `j` modulo `r`.
pub fn count_residue(rho: &Partition, r: u64, j: u64) -> u64 {
    rho.parts().iter().filter(|&&p| p as u64 % r == j % r).count() as u64
}

fn check_positive(j: u64) -> Result<()> {
    if j == 0 {
        return Err(Error::IndexOutOfRange { index: 0, lo: 1, hi: u64::MAX });
    }
    Ok(())
}

/// `V_{r̲,j,n} = Σ_{ρ ∈ CP_{r̲,n}} m_j(ρ)`.
pub fn stat_v(moduli: &ModulusTuple, j: u64, n: usize) -> Result<u64> {
    check_positive(j)?;
    Ok(enumerate_class_regular(moduli, n)
        .iter()
        .map(|rho| rho.multiplicity(j as usize) as u64)
        .sum())
}

/// `W_{r̲,j,n} = Σ_{ρ ∈ CP_{r̲,n}} |{i : m_i(ρ) >= j}|`.
pub fn stat_w(moduli: &ModulusTuple, j: u64, n: usize) -> Result<u64> {
    check_positive(j)?;
    Ok(enumerate_class_regular(moduli, n)
        .iter()
        .map(|rho| count_multiplicity_at_least(rho, j as usize))
        .sum())
}

fn check_residue(r: u64, j: u64) -> Result<()> {
    if r < 2 {
        return Err(Error::ModulusTooSmall(r));
    }
    if j == 0 || j >= r {
        return Err(Error::IndexOutOfRange { index: j, lo: 1, hi: r - 1 });
    }
    Ok(())
}

/// `X_{r,j,n}`: parts congruent to `j` mod `r`, summed over `CP_{r,n}`.
pub fn stat_x(r: u64, j: u64, n: usize) -> Result<u64> {
    check_residue(r, j)?;
    let moduli = ModulusTuple::single(r)?;
    Ok(enumerate_class_regular(&moduli, n)
        .iter()
        .map(|rho| count_residue(rho, r, j))
        .sum())
}

/// `Y_{r,j,n}`: part values of multiplicity at least `j`, summed over `RP_{r,n}`.
pub fn stat_y(r: u64, j: u64, n: usize) -> Result<u64> {
    check_residue(r, j)?;
    let moduli = ModulusTuple::single(r)?;
    Ok(enumerate_regular(&moduli, n)
        .iter()
        .map(|lambda| count_multiplicity_at_least(lambda, j as usize))
        .sum())
}

/// `a_{r̲,n}`: product of all parts of all class-regular partitions of `n`.
pub fn stat_a(moduli: &ModulusTuple, n: usize) -> BigUint {
    enumerate_class_regular(moduli, n)
        .iter()
        .map(Partition::part_product)
        .product()
}

fn factorial(k: usize) -> BigUint {
    (1..=k).map(BigUint::from).product()
}

/// `b_{r̲,n}`: product of `m_i(ρ)!` over all class-regular `ρ ⊢ n`.
pub fn stat_b(moduli: &ModulusTuple, n: usize) -> BigUint {
    let mut out = BigUint::one();
    for rho in enumerate_class_regular(moduli, n) {
        for m in rho.multiplicities().values() {
            out *= factorial(*m);
        }
    }
    out
}

/// `c_{r_i,n} = Σ_{j ≢ 0} Σ_{k̲ >= 0} k_i W_{r̲, r̲^k̲ j, n}` for the 1-based position `i`.
pub fn stat_c(moduli: &ModulusTuple, i: usize, n: usize) -> Result<u64> {
    let m = moduli.len();
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange { index: i as u64, lo: 1, hi: m as u64 });
    }
    let w = w_values(moduli, n);
    let bound = n as u64;
    let mut total = 0;
    for j in (1..=bound).filter(|&j| moduli.avoids(j)) {
        for k in moduli.exponent_vectors(j, bound) {
            let index = moduli.power(&k) * j;
            total += u64::from(k[i - 1]) * w[index as usize];
        }
    }
    Ok(total)
}

/// `W_{r̲,j,n}` for `j = 0..=n` from a single enumeration; entry 0 is unused.
fn w_values(moduli: &ModulusTuple, n: usize) -> Vec<u64> {
    let mut w = vec![0u64; n + 1];
    for rho in enumerate_class_regular(moduli, n) {
        for &mult in rho.multiplicities().values() {
            for slot in w.iter_mut().take(mult + 1).skip(1) {
                *slot += 1;
            }
        }
    }
    w
}

/// `V_{r̲,j,n}` for `j = 1..=n`.
pub fn v_table(moduli: &ModulusTuple, n: usize) -> StatisticTable {
    let mut values: BTreeMap<u64, u64> = (1..=n as u64).map(|j| (j, 0)).collect();
    for rho in enumerate_class_regular(moduli, n) {
        for (part, mult) in rho.multiplicities() {
            *values.get_mut(&(part as u64)).expect("part <= n") += mult as u64;
        }
    }
    StatisticTable { statistic: Statistic::V, moduli: moduli.clone(), n, values }
}

/// `W_{r̲,j,n}` for `j = 1..=n`.
pub fn w_table(moduli: &ModulusTuple, n: usize) -> StatisticTable {
    let w = w_values(moduli, n);
    let values = (1..=n).map(|j| (j as u64, w[j])).collect();
    StatisticTable { statistic: Statistic::W, moduli: moduli.clone(), n, values }
}

/// `X_{r,j,n}` for `j = 1..r-1`.
pub fn x_table(r: u64, n: usize) -> Result<StatisticTable> {
    let values = (1..r).map(|j| Ok((j, stat_x(r, j, n)?))).collect::<Result<_>>()?;
    Ok(StatisticTable { statistic: Statistic::X, moduli: ModulusTuple::single(r)?, n, values })
}

/// `Y_{r,j,n}` for `j = 1..r-1`.
pub fn y_table(r: u64, n: usize) -> Result<StatisticTable> {
    let values = (1..r).map(|j| Ok((j, stat_y(r, j, n)?))).collect::<Result<_>>()?;
    Ok(StatisticTable { statistic: Statistic::Y, moduli: ModulusTuple::single(r)?, n, values })
}
