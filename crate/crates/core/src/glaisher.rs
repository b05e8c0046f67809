//! The Glaisher correspondence between regular and class-regular partitions.
//!
//! Forward: every part `j·r_1^v` with `r_1 ∤ j` becomes `r_1^v` copies of `j`,
//! which is where repeated replacement of `k·r_1` by `r_1` copies of `k` ends up.
//! Inverse: a part value `j` of multiplicity `m = Σ c_k r_1^k` (base `r_1`)
//! becomes `c_k` parts equal to `j·r_1^k`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{is_class_regular, is_regular, ModulusTuple, Partition};

/// Result of applying the correspondence in one direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlaisherTrace {
    pub input: Partition,
    pub output: Partition,
    /// Elementary replacements `k·r_1 → k^{r_1}` separating the regular side
    /// from the class-regular side.
    pub steps: u64,
    /// Nonzero `G_j` of the class-regular side.
    pub g_counts: BTreeMap<u64, u64>,
}

/// `G_j(ρ)` for every `j ≢ 0 (mod r_1)` with a nonzero value, and their total `G(ρ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GStats {
    pub by_j: BTreeMap<u64, u64>,
    pub total: u64,
}

/// `G_j(ρ) = Σ_{k >= 1} k·y_{r^k j}(ρ)` with `y_s(ρ) = |{i : m_i(ρ) >= s}|`.
pub fn g_stats(rho: &Partition, r1: u64) -> GStats {
    assert!(r1 >= 2, "r_1 must be at least 2");
    let mults: Vec<u64> = rho.multiplicities().values().map(|&m| m as u64).collect();
    let max_mult = mults.iter().copied().max().unwrap_or(0);
    let y = |s: u64| mults.iter().filter(|&&m| m >= s).count() as u64;
    let mut by_j = BTreeMap::new();
    // G_j vanishes once r_1·j exceeds every multiplicity
    for j in (1..=max_mult / r1).filter(|j| j % r1 != 0) {
        let mut g = 0;
        let mut k = 1;
        let mut s = r1 * j;
        while s <= max_mult {
            g += k * y(s);
            k += 1;
            s *= r1;
        }
        if g > 0 {
            by_j.insert(j, g);
        }
    }
    let total = by_j.values().sum();
    GStats { by_j, total }
}

/// Splits `part` into `(j, r^v)` with `r ∤ j`.
fn strip_powers(part: usize, r: usize) -> (usize, usize) {
    let (mut j, mut pow) = (part, 1);
    while j % r == 0 {
        j /= r;
        pow *= r;
    }
    (j, pow)
}

/// Glaisher map `g_{r_1}`: regular partition to class-regular partition.
pub fn glaisher_forward(lambda: &Partition, moduli: &ModulusTuple) -> Result<GlaisherTrace> {
    if !is_regular(lambda, moduli) {
        return Err(Error::NotRegular(lambda.parts().to_vec()));
    }
    let r = moduli.first() as usize;
    let mut parts = Vec::with_capacity(lambda.weight());
    let mut steps = 0u64;
    for &part in lambda.parts() {
        let (j, copies) = strip_powers(part, r);
        parts.extend(std::iter::repeat_n(j, copies));
        // 1 + r + ... + r^{v-1} replacements
        steps += ((copies - 1) / (r - 1)) as u64;
    }
    let output = Partition::from_unsorted(parts)?;
    let g_counts = g_stats(&output, r as u64).by_j;
    Ok(GlaisherTrace { input: lambda.clone(), output, steps, g_counts })
}

/// Inverse map: class-regular partition to regular partition.
pub fn glaisher_inverse(rho: &Partition, moduli: &ModulusTuple) -> Result<GlaisherTrace> {
    if !is_class_regular(rho, moduli) {
        return Err(Error::NotClassRegular(rho.parts().to_vec()));
    }
    let r = moduli.first() as usize;
    let mut parts = Vec::new();
    for (j, mut m) in rho.multiplicities() {
        let mut value = j;
        while m > 0 {
            parts.extend(std::iter::repeat_n(value, m % r));
            m /= r;
            value *= r;
        }
    }
    let output = Partition::from_unsorted(parts)?;
    let stats = g_stats(rho, r as u64);
    Ok(GlaisherTrace { input: rho.clone(), output, steps: stats.total, g_counts: stats.by_j })
}

/// The literal step-by-step rule: repeatedly pick an eligible part `k·r_1`
/// (the `pick`-th one modulo their count) and replace it by `r_1` copies of `k`.
/// Returns the final partition and the number of steps.
pub fn glaisher_iterative(
    lambda: &Partition,
    r1: u64,
    mut pick: impl FnMut(usize) -> usize,
) -> (Partition, u64) {
    let r = r1 as usize;
    let mut parts = lambda.parts().to_vec();
    let mut steps = 0;
    loop {
        let eligible: Vec<usize> = (0..parts.len()).filter(|&i| parts[i].is_multiple_of(r)).collect();
        if eligible.is_empty() {
            break;
        }
        let idx = eligible[pick(eligible.len()) % eligible.len()];
        let k = parts.swap_remove(idx) / r;
        parts.extend(std::iter::repeat_n(k, r));
        steps += 1;
    }
    (Partition::from_unsorted(parts).expect("parts stay positive"), steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn m3() -> ModulusTuple {
        ModulusTuple::single(3).unwrap()
    }

    #[test]
    fn forward_examples() {
        let t = glaisher_forward(&p(&[6, 1]), &m3()).unwrap();
        assert_eq!(t.output, p(&[2, 2, 2, 1]));
        assert_eq!(t.steps, 1);
        let t = glaisher_forward(&p(&[9]), &m3()).unwrap();
        assert_eq!(t.output, Partition::column(9));
        assert_eq!(t.steps, 4);
        assert_eq!(t.steps as usize, (t.output.length() - t.input.length()) / 2);
        let t = glaisher_forward(&p(&[5, 2, 1]), &m3()).unwrap();
        assert_eq!(t.output, p(&[5, 2, 1]));
        assert_eq!(t.steps, 0);
        assert!(glaisher_forward(&p(&[1, 1, 1]), &m3()).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(glaisher_inverse(&Partition::column(9), &m3()).unwrap().output, p(&[9]));
        assert_eq!(glaisher_inverse(&p(&[2, 2, 2, 1]), &m3()).unwrap().output, p(&[6, 1]));
        assert_eq!(glaisher_inverse(&p(&[5, 4, 2, 2, 1]), &m3()).unwrap().output, p(&[5, 4, 2, 2, 1]));
        assert!(glaisher_inverse(&p(&[3, 1]), &m3()).is_err());
    }

    #[test]
    fn g_stats_examples() {
        let g = g_stats(&Partition::column(9), 3);
        assert_eq!(g.by_j, BTreeMap::from([(1, 3), (2, 1)]));
        assert_eq!(g.total, 4);
        let g = g_stats(&Partition::column(7), 3);
        assert_eq!(g.by_j, BTreeMap::from([(1, 1), (2, 1)]));
        assert_eq!(g.total, 2);
        assert_eq!(g_stats(&p(&[4, 2, 2, 1]), 3).total, 0);
    }

    #[test]
    fn multi_modulus_forward_uses_first_modulus() {
        let m = ModulusTuple::new(vec![2, 3]).unwrap();
        // 4 = 1·2^2 becomes four 1s; 5 stays
        let t = glaisher_forward(&p(&[5, 4, 1]), &m).unwrap();
        assert_eq!(t.output, p(&[5, 1, 1, 1, 1, 1]));
        assert_eq!(t.steps, 3);
        assert!(glaisher_forward(&p(&[6, 1]), &m).is_err());
    }

    #[test]
    fn iterative_rule_matches_batch() {
        let (out, steps) = glaisher_iterative(&p(&[9, 3]), 3, |_| 0);
        let batch = glaisher_forward(&p(&[9, 3]), &m3()).unwrap();
        assert_eq!(out, batch.output);
        assert_eq!(steps, batch.steps);
    }
}
