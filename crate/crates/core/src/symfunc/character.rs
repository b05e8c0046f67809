//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partition::Partition;

type CharKey = (Partition, Partition);

fn cache() -> &'static RwLock<HashMap<CharKey, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<CharKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `χ^λ_ρ`, the value of the irreducible character `λ` on the class of cycle type `ρ`.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.weight() != rho.weight() {
        return Err(Error::WeightMismatch(lambda.weight(), rho.weight()));
    }
    Ok(character(lambda, rho.parts()))
}

fn character(lambda: &Partition, rho: &[usize]) -> i64 {
    let Some((&hook, rest)) = rho.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), Partition::from_sorted_unchecked(rho.to_vec()));
    if let Some(&v) = cache().read().expect("character cache poisoned").get(&key) {
        return v;
    }
    let mut total = 0;
    for (smaller, height) in remove_rim_hooks(lambda, hook) {
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * character(&smaller, rest);
    }
    // concurrent writers store the same value
    cache().write().expect("character cache poisoned").insert(key, total);
    total
}

/// Every way to remove a rim hook of length `len` from `lambda`, as the
/// remaining partition and the hook's leg length (number of rows minus one).
///
/// Works on beta-numbers `λ_i + (ℓ - i)`: a rim hook of length `len` is a bead
/// moved from `b` to an empty position `b - len`, and the leg length is the
/// number of beads strictly between.
pub fn remove_rim_hooks(lambda: &Partition, len: usize) -> Vec<(Partition, usize)> {
    let ell = lambda.length();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + ell - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < len || beta.contains(&(b - len)) {
            continue;
        }
        let target = b - len;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (ell - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        out.push((Partition::from_sorted_unchecked(parts), between));
    }
    out
}

/// `z_ρ = ∏ i^{m_i} m_i!`.
pub fn z_factor(rho: &Partition) -> num_bigint::BigUint {
    let mut z = num_bigint::BigUint::from(1u32);
    for (i, m) in rho.multiplicities() {
        for k in 1..=m {
            z *= num_bigint::BigUint::from(i * k);
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        for n in 1..=7 {
            for rho in enumerate_partitions(n) {
                assert_eq!(mn_character(&Partition::row(n), &rho).unwrap(), 1);
                let sign = if (n - rho.length()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&Partition::column(n), &rho).unwrap(), sign);
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[3, 1])).unwrap(), -1);
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn degrees_match_hook_lengths() {
        for n in 1..=8 {
            let mut fact = 1u64;
            for k in 1..=n as u64 {
                fact *= k;
            }
            for lambda in enumerate_partitions(n) {
                let conj = lambda.conjugate();
                let mut hooks = 1u64;
                for (i, &row) in lambda.parts().iter().enumerate() {
                    for j in 0..row {
                        hooks *= (row - j - 1 + conj.part(j) - i - 1 + 1) as u64;
                    }
                }
                let dim = mn_character(&lambda, &Partition::column(n)).unwrap();
                assert_eq!(dim as u64, fact / hooks, "{lambda}");
            }
        }
    }

    #[test]
    fn rim_hook_removal() {
        assert_eq!(remove_rim_hooks(&p(&[3, 1]), 2), vec![(p(&[1, 1]), 0)]);
        assert_eq!(remove_rim_hooks(&p(&[2, 2, 1]), 2), vec![(p(&[1, 1, 1]), 1)]);
        let mut hooks = remove_rim_hooks(&p(&[3, 3]), 3);
        hooks.sort();
        assert_eq!(hooks, vec![(p(&[3]), 0), (p(&[2, 1]), 1)]);
        assert_eq!(remove_rim_hooks(&p(&[2, 2]), 3), vec![(p(&[1]), 1)]);
        assert!(remove_rim_hooks(&p(&[2, 2]), 4).is_empty());
        assert!(remove_rim_hooks(&p(&[3, 3]), 5).is_empty());
    }

    #[test]
    fn z_values() {
        assert_eq!(z_factor(&p(&[2, 1, 1])), 4u32.into());
        assert_eq!(z_factor(&p(&[5])), 5u32.into());
        assert_eq!(z_factor(&Partition::empty()), 1u32.into());
    }
}
