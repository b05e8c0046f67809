//! Kostka–Foulkes polynomials through the charge statistic.
//!
//! `K_{λμ}(t) = Σ_T t^{charge(T)}` over semistandard tableaux `T` of shape `λ`
//! and content `μ`. The reading word of a tableau is its rows read right to left,
//! top row first. A word with partition content splits into standard subwords:
//! pick the leftmost 1, then the first 2 to its right, and so on, wrapping to the
//! start of the word when needed. In a standard subword, 1 has index 0 and `k+1`
//! has the index of `k`, plus one when it lies to the left of `k`. The charge is
//! the sum of all indices over all subwords.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::poly::Poly;
use crate::symfunc::matrix::{Matrix, TransitionMatrix};

/// A semistandard tableau stored as rows of entries (1-based letters).
pub type Tableau = Vec<Vec<usize>>;

/// All semistandard tableaux of shape `shape` and content `content`, built by
/// adding one horizontal strip of each letter in turn.
pub fn semistandard_tableaux(shape: &Partition, content: &Partition) -> Vec<Tableau> {
    fn strips(
        shape: &[usize],
        current: &[usize],
        row: usize,
        left: usize,
        next: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == shape.len() {
            if left == 0 {
                out.push(next.clone());
            }
            return;
        }
        // a horizontal strip never reaches past the old previous row
        let cap = if row == 0 { shape[0] } else { shape[row].min(current[row - 1]) };
        let base = current[row];
        for add in 0..=left.min(cap.saturating_sub(base)) {
            next.push(base + add);
            strips(shape, current, row + 1, left - add, next, out);
            next.pop();
        }
    }

    if shape.weight() != content.weight() {
        return Vec::new();
    }
    let rows = shape.length();
    let mut states: Vec<(Vec<usize>, Tableau)> = vec![(vec![0; rows], vec![Vec::new(); rows])];
    for (letter, &count) in content.parts().iter().enumerate() {
        let mut next_states = Vec::new();
        for (current, tableau) in &states {
            let mut shapes = Vec::new();
            strips(shape.parts(), current, 0, count, &mut Vec::new(), &mut shapes);
            for new_shape in shapes {
                let mut t = tableau.clone();
                for (r, (&old, &new)) in current.iter().zip(&new_shape).enumerate() {
                    t[r].extend(std::iter::repeat_n(letter + 1, new - old));
                }
                next_states.push((new_shape, t));
            }
        }
        states = next_states;
    }
    states.into_iter().map(|(_, t)| t).collect()
}

/// Rows read right to left, top row first.
pub fn reading_word(tableau: &Tableau) -> Vec<usize> {
    tableau.iter().flat_map(|row| row.iter().rev().copied()).collect()
}

/// Charge of a word whose content is a partition.
pub fn charge(word: &[usize]) -> usize {
    let mut remaining: Vec<usize> = word.to_vec();
    let mut total = 0;
    while !remaining.is_empty() {
        let len = remaining.len();
        let top = *remaining.iter().max().expect("nonempty");
        let mut taken = vec![false; len];
        let mut pos = remaining.iter().position(|&x| x == 1).expect("content is a partition");
        taken[pos] = true;
        let mut index = 0;
        for letter in 2..=top {
            // first occurrence of `letter` strictly right of `pos`, cyclically
            let found = (1..=len)
                .map(|d| (pos + d) % len)
                .find(|&i| !taken[i] && remaining[i] == letter)
                .expect("content is a partition");
            if found < pos {
                index += 1;
            }
            total += index;
            taken[found] = true;
            pos = found;
        }
        remaining = remaining.iter().zip(&taken).filter(|(_, &t)| !t).map(|(&x, _)| x).collect();
    }
    total
}

/// `K_{λμ}(t)`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<Poly> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lambda.weight(), mu.weight()));
    }
    let mut counts: Vec<usize> = Vec::new();
    for t in semistandard_tableaux(lambda, mu) {
        let c = charge(&reading_word(&t));
        if counts.len() <= c {
            counts.resize(c + 1, 0);
        }
        counts[c] += 1;
    }
    Ok(Poly::new(counts.into_iter().map(|c| BigRational::from_integer(c.into())).collect()))
}

/// The matrices `K(t)` and `K(t)^{-1}` on all partitions of `n` in canonical order.
#[derive(Debug)]
pub struct KostkaTable {
    pub partitions: Vec<Partition>,
    pub k: Matrix<Poly>,
    pub k_inv: Matrix<Poly>,
}

impl KostkaTable {
    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.binary_search(lambda).ok()
    }

    /// `K(t)` as a transition matrix (Schur to Hall–Littlewood `P`).
    pub fn as_transition(&self) -> TransitionMatrix<Poly> {
        TransitionMatrix {
            row_index: self.partitions.clone(),
            col_index: self.partitions.clone(),
            matrix: self.k.clone(),
        }
    }
}

/// Cached Kostka–Foulkes data for weight `n`.
pub fn kostka_table(n: usize) -> Arc<KostkaTable> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<KostkaTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().expect("kostka cache poisoned").get(&n) {
        return t.clone();
    }
    let partitions = enumerate_partitions(n);
    let size = partitions.len();
    let k = Matrix::from_fn(size, size, Poly::zero(), |i, j| {
        // K_{λμ} vanishes unless λ dominates μ, which forces i <= j
        if i <= j && partitions[i].dominates(&partitions[j]) {
            kostka_foulkes(&partitions[i], &partitions[j]).expect("same weight")
        } else {
            Poly::zero()
        }
    });
    let k_inv = k.upper_unitriangular_inverse().expect("K(t) is upper unitriangular");
    let table = Arc::new(KostkaTable { partitions, k, k_inv });
    tables.write().expect("kostka cache poisoned").entry(n).or_insert(table).clone()
}

/// `b_λ(t) = ∏_i (t; t)_{m_i(λ)}`.
pub fn b_lambda(lambda: &Partition) -> Poly {
    let mut out = Poly::one();
    for m in lambda.multiplicities().values() {
        for k in 1..=*m {
            out = &out * &Poly::one_minus_t_pow(k);
        }
    }
    out
}
