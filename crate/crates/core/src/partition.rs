//! Integer partitions, modulus tuples and the regular / class-regular families.
//!
//! Partitions are totally ordered by weight first and then reverse-lexicographically
//! on their part lists, so that `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`. Every
//! enumeration in this crate emits partitions in increasing order, and every matrix
//! indexed by partitions uses the same order. Within a fixed weight the order is a
//! linear extension of the reversed dominance order: if `λ` dominates `μ` then
//! `λ <= μ`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from a weakly decreasing list of positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ordered = parts.windows(2).all(|w| w[0] >= w[1]);
        if !ordered || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts given in any order.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(n)`, or the empty partition when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity `m_i` of the part value `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Map from part value to multiplicity, only for values that occur.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Every part multiplied by `k`.
    pub fn scale(&self, k: usize) -> Partition {
        assert!(k > 0, "scale factor must be positive");
        Partition { parts: self.parts.iter().map(|p| p * k).collect() }
    }

    /// Removes `count` copies of the part `value`, if that many are present.
    pub fn remove_parts(&self, value: usize, count: usize) -> Option<Partition> {
        if self.multiplicity(value) < count {
            return None;
        }
        let mut left = count;
        let parts = self
            .parts
            .iter()
            .copied()
            .filter(|&p| {
                if p == value && left > 0 {
                    left -= 1;
                    false
                } else {
                    true
                }
            })
            .collect();
        Some(Partition { parts })
    }

    /// Dominance order: partial sums of `self` weakly dominate those of `other`.
    /// Only meaningful for equal weights; returns false otherwise.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let len = self.length().max(other.length());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Product of all parts.
    pub fn part_product(&self) -> num_bigint::BigUint {
        self.parts.iter().map(|&p| num_bigint::BigUint::from(p)).product()
    }

    /// Compact exponent notation, e.g. `32^21` for `(3,2,2,1)`.
    pub fn to_compact(&self) -> String {
        if self.parts.is_empty() {
            return "∅".to_string();
        }
        let mut out = String::new();
        let mut groups: Vec<(usize, usize)> = self.multiplicities().into_iter().collect();
        groups.reverse();
        for (value, mult) in groups {
            if value >= 10 && !out.is_empty() {
                out.push('.');
            }
            out.push_str(&value.to_string());
            if mult > 1 {
                out.push('^');
                out.push_str(&mult.to_string());
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Pairwise coprime moduli `(r_1, ..., r_m)`, each at least 2.
///
/// The order matters: `r_1` is the modulus that bounds multiplicities in the
/// regular family and drives the Glaisher map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct ModulusTuple {
    moduli: Vec<u64>,
}

impl ModulusTuple {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::EmptyModuli);
        }
        if let Some(&r) = moduli.iter().find(|&&r| r < 2) {
            return Err(Error::ModulusTooSmall(r));
        }
        for (i, &a) in moduli.iter().enumerate() {
            for &b in &moduli[i + 1..] {
                if a.gcd(&b) != 1 {
                    return Err(Error::NotCoprime(a, b));
                }
            }
        }
        Ok(ModulusTuple { moduli })
    }

    pub fn single(r: u64) -> Result<Self> {
        Self::new(vec![r])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn len(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The leading modulus `r_1`.
    pub fn first(&self) -> u64 {
        self.moduli[0]
    }

    /// True when `k` is divisible by none of the moduli (`k ≢ 0 mod r̲`).
    pub fn avoids(&self, k: u64) -> bool {
        self.moduli.iter().all(|&r| !k.is_multiple_of(r))
    }

    /// The moduli with position `i` (0-based) removed; may be empty.
    pub fn without(&self, i: usize) -> Vec<u64> {
        let mut rest = self.moduli.clone();
        rest.remove(i);
        rest
    }

    /// `r_1^{k_1} ... r_m^{k_m}` (saturating on overflow).
    pub fn power(&self, exponents: &[u32]) -> u64 {
        self.moduli
            .iter()
            .zip(exponents)
            .fold(1u64, |acc, (&r, &k)| acc.saturating_mul(r.saturating_pow(k)))
    }

    /// Every exponent vector `k` with `r̲^k · base <= bound`, in lexicographic order.
    pub fn exponent_vectors(&self, base: u64, bound: u64) -> Vec<Vec<u32>> {
        fn go(moduli: &[u64], acc: u64, bound: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            let Some((&r, rest)) = moduli.split_first() else {
                out.push(cur.clone());
                return;
            };
            let mut value = acc;
            let mut k = 0;
            while value <= bound {
                cur.push(k);
                go(rest, value, bound, cur, out);
                cur.pop();
                match value.checked_mul(r) {
                    Some(v) => value = v,
                    None => break,
                }
                k += 1;
            }
        }
        let mut out = Vec::new();
        if base <= bound {
            go(&self.moduli, base, bound, &mut Vec::new(), &mut out);
        }
        out
    }

    /// All orderings of the moduli.
    pub fn permutations(&self) -> Vec<ModulusTuple> {
        fn go(rest: &mut Vec<u64>, cur: &mut Vec<u64>, out: &mut Vec<ModulusTuple>) {
            if rest.is_empty() {
                out.push(ModulusTuple { moduli: cur.clone() });
                return;
            }
            for i in 0..rest.len() {
                let x = rest.remove(i);
                cur.push(x);
                go(rest, cur, out);
                cur.pop();
                rest.insert(i, x);
            }
        }
        let mut out = Vec::new();
        go(&mut self.moduli.clone(), &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u64>> for ModulusTuple {
    type Error = Error;

    fn try_from(moduli: Vec<u64>) -> Result<Self> {
        ModulusTuple::new(moduli)
    }
}

impl From<ModulusTuple> for Vec<u64> {
    fn from(t: ModulusTuple) -> Self {
        t.moduli
    }
}

impl fmt::Display for ModulusTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.moduli.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n` in increasing canonical order (reverse-lexicographic).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    enumerate_filtered(n, |_| true, |_| true)
}

/// Partitions of `n` whose parts satisfy `allow_part` and whose multiplicities
/// satisfy `allow_mult`, generated in canonical order without a post-filter.
fn enumerate_filtered(
    n: usize,
    allow_part: impl Fn(usize) -> bool,
    allow_mult: impl Fn(usize) -> bool,
) -> Vec<Partition> {
    fn go(
        remaining: usize,
        max: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
        allow_part: &dyn Fn(usize) -> bool,
        allow_mult: &dyn Fn(usize) -> bool,
    ) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(cur.clone()));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            if !allow_part(part) {
                continue;
            }
            // more copies of `part` first keeps the output reverse-lexicographic
            for mult in (1..=remaining / part).rev() {
                if allow_mult(mult) {
                    cur.extend(std::iter::repeat_n(part, mult));
                    go(remaining - mult * part, part - 1, cur, out, allow_part, allow_mult);
                    cur.truncate(cur.len() - mult);
                }
            }
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out, &allow_part, &allow_mult);
    out
}

/// No part of `lambda` is divisible by any modulus.
pub fn is_class_regular(lambda: &Partition, moduli: &ModulusTuple) -> bool {
    lambda.parts().iter().all(|&p| moduli.avoids(p as u64))
}

/// Every multiplicity is below `r_1` and no part is divisible by `r_2, ..., r_m`.
pub fn is_regular(lambda: &Partition, moduli: &ModulusTuple) -> bool {
    let r1 = moduli.first() as usize;
    let rest = &moduli.moduli()[1..];
    lambda.multiplicities().into_iter().all(|(value, mult)| {
        mult < r1 && rest.iter().all(|&r| !(value as u64).is_multiple_of(r))
    })
}

/// `CP_{r̲,n}`: the class-regular partitions of `n`, in canonical order.
pub fn enumerate_class_regular(moduli: &ModulusTuple, n: usize) -> Vec<Partition> {
    enumerate_filtered(n, |p| moduli.avoids(p as u64), |_| true)
}

/// `RP_{r̲,n}`: the regular partitions of `n`, in canonical order.
pub fn enumerate_regular(moduli: &ModulusTuple, n: usize) -> Vec<Partition> {
    let r1 = moduli.first() as usize;
    let rest = moduli.moduli()[1..].to_vec();
    enumerate_filtered(
        n,
        move |p| rest.iter().all(|&r| !(p as u64).is_multiple_of(r)),
        move |m| m < r1,
    )
}
