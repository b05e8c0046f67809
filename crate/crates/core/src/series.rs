//! Truncated power series in `q` over `ℚ`, and the generating functions of the
//! partition statistics.
//!
//! Every series carries an explicit truncation degree `N`; infinite products and
//! sums only materialize factors whose lowest exponent is at most `N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::ModulusTuple;
use crate::poly::fmt_poly;

/// Coefficients `c_0, ..., c_N` of a power series known through degree `N`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    #[serde(with = "crate::scalar::serde_rational_vec")]
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(degree: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigRational::zero(); degree + 1] }
    }

    pub fn one(degree: usize) -> Self {
        Self::monomial(BigRational::one(), 0, degree)
    }

    /// `c·q^k`, which is zero if `k` exceeds the truncation degree.
    pub fn monomial(c: BigRational, k: usize, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        if k <= degree {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from explicit coefficients; the degree is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least c_0");
        TruncatedSeries { coeffs }
    }

    /// `1 - q^k` for `k >= 1`.
    pub fn one_minus_q_pow(k: usize, degree: usize) -> Self {
        assert!(k >= 1);
        let mut s = Self::one(degree);
        if k <= degree {
            s.coeffs[k] = -BigRational::one();
        }
        s
    }

    /// `q^k / (1 - q^k) = q^k + q^{2k} + ...` for `k >= 1`.
    pub fn geometric_tail(k: usize, degree: usize) -> Self {
        assert!(k >= 1);
        let mut s = Self::zero(degree);
        for e in (k..=degree).step_by(k) {
            s.coeffs[e] = BigRational::one();
        }
        s
    }

    /// `1 + x + ... + x^{len-1}` at `x = q^k`.
    pub fn geometric_partial(k: usize, len: usize, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        for i in 0..len {
            let e = i * k;
            if e > degree {
                break;
            }
            s.coeffs[e] += BigRational::one();
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv0 = c0.recip();
        let n = self.degree();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[k - i];
                }
            }
            out[k] = -acc * &inv0;
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplies in place by `1/(1 - q^k)`.
    pub fn divide_one_minus_q_pow(&mut self, k: usize) {
        assert!(k >= 1);
        for e in k..self.coeffs.len() {
            let prev = self.coeffs[e - k].clone();
            self.coeffs[e] += prev;
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Coefficients as nonnegative integers; fails on anything else.
    pub fn counts(&self) -> Result<Vec<u64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() && !c.is_negative() {
                    c.to_integer().to_u64().ok_or_else(|| Error::NotIntegral(c.to_string()))
                } else {
                    Err(Error::NotIntegral(c.to_string()))
                }
            })
            .collect()
    }

    /// Coefficients as integers; fails on a non-integral coefficient.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()).ok_or_else(|| Error::NotIntegral(c.to_string())))
            .collect()
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "truncation degrees differ");
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect() }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.degree(), rhs.degree(), "truncation degrees differ");
        let n = self.degree();
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, "q")?;
        write!(f, " + O(q^{})", self.degree() + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

/// Products of nonempty subsets of `moduli`, paired with the subset size.
fn subset_products(moduli: &[u64]) -> Vec<(usize, u64)> {
    let m = moduli.len();
    (1u32..(1 << m))
        .map(|mask| {
            let mut size = 0;
            let mut prod = 1u64;
            for (k, &r) in moduli.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    size += 1;
                    prod = prod.saturating_mul(r);
                }
            }
            (size, prod)
        })
        .collect()
}

fn as_index(k: u64, degree: usize) -> Option<usize> {
    usize::try_from(k).ok().filter(|&k| k <= degree)
}

/// `Φ_r̲(q) = ∏_{n ≢ 0 (mod r̲)} 1/(1 - q^n)`, through degree `degree`.
pub fn phi(moduli: &ModulusTuple, degree: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(degree);
    for n in (1..=degree).filter(|&n| moduli.avoids(n as u64)) {
        s.divide_one_minus_q_pow(n);
    }
    s
}

/// `Φ_r̲(q)` through the alternating product of `π_k(q^n)`, built with explicit
/// series multiplication and inversion rather than the factor filter of [`phi`].
pub fn phi_inclusion_exclusion(moduli: &ModulusTuple, degree: usize) -> TruncatedSeries {
    let mut numerator = TruncatedSeries::one(degree);
    let mut denominator = TruncatedSeries::one(degree);
    let subsets = subset_products(moduli.moduli());
    for n in 1..=degree {
        denominator = &denominator * &TruncatedSeries::one_minus_q_pow(n, degree);
        for &(size, prod) in &subsets {
            let Some(e) = prod.checked_mul(n as u64).and_then(|e| as_index(e, degree)) else {
                continue;
            };
            let factor = TruncatedSeries::one_minus_q_pow(e, degree);
            if size % 2 == 1 {
                numerator = &numerator * &factor;
            } else {
                denominator = &denominator * &factor;
            }
        }
    }
    &numerator * &denominator.inverse().expect("constant term is 1")
}

/// Generating function of `V_{r̲,j,n}`: `Φ_r̲(q) q^j / (1 - q^j)`.
pub fn series_v(moduli: &ModulusTuple, j: u64, degree: usize) -> Result<TruncatedSeries> {
    if j == 0 {
        return Err(Error::IndexOutOfRange { index: 0, lo: 1, hi: u64::MAX });
    }
    if !moduli.avoids(j) {
        return Err(Error::DivisibleByModulus(j));
    }
    let tail = match as_index(j, degree) {
        Some(k) => TruncatedSeries::geometric_tail(k, degree),
        None => TruncatedSeries::zero(degree),
    };
    Ok(&phi(moduli, degree) * &tail)
}

/// Generating function of `W_{r̲,j,n}`, as the inclusion-exclusion sum
/// `Φ_r̲(q) Σ_S (-1)^{|S|} q^{r_S j} / (1 - q^{r_S j})` over subsets `S` of the moduli.
pub fn series_w(moduli: &ModulusTuple, j: u64, degree: usize) -> Result<TruncatedSeries> {
    if j == 0 {
        return Err(Error::IndexOutOfRange { index: 0, lo: 1, hi: u64::MAX });
    }
    let mut inner = match as_index(j, degree) {
        Some(k) => TruncatedSeries::geometric_tail(k, degree),
        None => TruncatedSeries::zero(degree),
    };
    for (size, prod) in subset_products(moduli.moduli()) {
        if let Some(k) = prod.checked_mul(j).and_then(|k| as_index(k, degree)) {
            let tail = TruncatedSeries::geometric_tail(k, degree);
            inner = if size % 2 == 1 { &inner - &tail } else { &inner + &tail };
        }
    }
    Ok(&phi(moduli, degree) * &inner)
}

/// Generating function of `c_{r_i,n}` for the 1-based position `i`:
/// `Φ_r̲(q) Σ_{n >= 1, n ≢ 0 (mod r̲^{(i)})} q^{r_i n} / (1 - q^{r_i n})`.
pub fn series_c(moduli: &ModulusTuple, i: usize, degree: usize) -> Result<TruncatedSeries> {
    let m = moduli.len();
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange { index: i as u64, lo: 1, hi: m as u64 });
    }
    let ri = moduli.moduli()[i - 1];
    let others = moduli.without(i - 1);
    let mut inner = TruncatedSeries::zero(degree);
    let mut n = 1u64;
    while let Some(k) = ri.checked_mul(n).and_then(|k| as_index(k, degree)) {
        if others.iter().all(|&r| !n.is_multiple_of(r)) {
            inner = &inner + &TruncatedSeries::geometric_tail(k, degree);
        }
        n += 1;
    }
    Ok(&phi(moduli, degree) * &inner)
}

/// Generating function of `|RP_{r̲,n}|` written as a product of geometric
/// partial sums `Σ_{k < r_1} x^k`, raised to `(-1)^{|S|}` at `x = q^{n r_S}` for
/// every subset `S` of `{r_2, ..., r_m}`.
pub fn series_rp(moduli: &ModulusTuple, degree: usize) -> TruncatedSeries {
    let r1 = moduli.first() as usize;
    let mut subsets = vec![(0usize, 1u64)];
    subsets.extend(subset_products(&moduli.moduli()[1..]));
    let mut numerator = TruncatedSeries::one(degree);
    let mut denominator = TruncatedSeries::one(degree);
    for n in 1..=degree {
        for &(size, prod) in &subsets {
            let Some(k) = prod.checked_mul(n as u64).and_then(|k| as_index(k, degree)) else {
                continue;
            };
            let factor = TruncatedSeries::geometric_partial(k, r1, degree);
            if size % 2 == 0 {
                numerator = &numerator * &factor;
            } else {
                denominator = &denominator * &factor;
            }
        }
    }
    &numerator * &denominator.inverse().expect("constant term is 1")
}

/// Generating function of `X_{r,j,n}`: `Φ_r(q) Σ_{k >= 0} q^{rk+j} / (1 - q^{rk+j})`.
pub fn series_x(r: u64, j: u64, degree: usize) -> Result<TruncatedSeries> {
    let moduli = ModulusTuple::single(r)?;
    if j == 0 || j >= r {
        return Err(Error::IndexOutOfRange { index: j, lo: 1, hi: r - 1 });
    }
    let mut inner = TruncatedSeries::zero(degree);
    let mut e = j;
    while let Some(k) = as_index(e, degree) {
        inner = &inner + &TruncatedSeries::geometric_tail(k, degree);
        e += r;
    }
    Ok(&phi(&moduli, degree) * &inner)
}

/// Generating function of `Y_{r,j,n}`: `Φ_r(q) Σ_{k >= 1} (q^{jk} - q^{rk}) / (1 - q^{rk})`.
pub fn series_y(r: u64, j: u64, degree: usize) -> Result<TruncatedSeries> {
    let moduli = ModulusTuple::single(r)?;
    if j == 0 || j >= r {
        return Err(Error::IndexOutOfRange { index: j, lo: 1, hi: r - 1 });
    }
    let mut inner = TruncatedSeries::zero(degree);
    for k in 1..=degree as u64 {
        let Some(jk) = as_index(j * k, degree) else { break };
        let mut numer = TruncatedSeries::monomial(BigRational::one(), jk, degree);
        if let Some(rk) = as_index(r * k, degree) {
            numer = &numer - &TruncatedSeries::monomial(BigRational::one(), rk, degree);
            numer.divide_one_minus_q_pow(rk);
        }
        inner = &inner + &numer;
    }
    Ok(&phi(&moduli, degree) * &inner)
}

/// `Σ_{k̲ >= 0} series_w(r̲, r̲^k̲ j)`: the left side of the generating-function
/// form of the `V = ΣW` identity, summed until the index exceeds the degree.
pub fn series_w_orbit_sum(moduli: &ModulusTuple, j: u64, degree: usize) -> Result<TruncatedSeries> {
    let mut total = TruncatedSeries::zero(degree);
    for k in moduli.exponent_vectors(j, degree as u64) {
        total = &total + &series_w(moduli, moduli.power(&k) * j, degree)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn mt(m: &[u64]) -> ModulusTuple {
        ModulusTuple::new(m.to_vec()).unwrap()
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(&mt(&[2, 3]), 10).counts().unwrap()[10], 4);
        assert_eq!(phi(&mt(&[3]), 7).counts().unwrap()[7], 9);
        assert_eq!(phi(&mt(&[5, 7]), 0).counts().unwrap(), vec![1]);
    }

    #[test]
    fn phi_two_routes_agree() {
        for m in [mt(&[2]), mt(&[3, 2]), mt(&[2, 3, 5]), mt(&[4, 9]), mt(&[3, 4, 5])] {
            assert_eq!(phi(&m, 30), phi_inclusion_exclusion(&m, 30), "{m}");
        }
    }

    #[test]
    fn v_w_examples() {
        let m = mt(&[2, 3]);
        assert_eq!(series_v(&m, 1, 10).unwrap().counts().unwrap()[10], 18);
        assert_eq!(series_v(&m, 7, 10).unwrap().counts().unwrap()[10], 1);
        assert_eq!(series_w(&m, 2, 10).unwrap().counts().unwrap()[10], 4);
        assert_eq!(series_w(&m, 10, 10).unwrap().counts().unwrap()[10], 1);
        assert_eq!(series_w(&m, 11, 10).unwrap().counts().unwrap(), vec![0; 11]);
        assert_eq!(series_v(&m, 6, 10), Err(Error::DivisibleByModulus(6)));
        // j = N: the only contribution is the one-part partition (N)
        assert_eq!(series_v(&m, 11, 11).unwrap().counts().unwrap()[11], 1);
    }

    #[test]
    fn c_series_three() {
        let c = series_c(&mt(&[3]), 1, 10).unwrap().counts().unwrap();
        assert_eq!(c, vec![0, 0, 0, 1, 1, 2, 4, 6, 9, 13, 19]);
        assert!(series_c(&mt(&[3]), 2, 10).is_err());
    }

    #[test]
    fn rp_series() {
        assert_eq!(series_rp(&mt(&[3]), 7).counts().unwrap()[7], 9);
        assert_eq!(series_rp(&mt(&[2]), 4).counts().unwrap()[4], 2);
        assert_eq!(series_rp(&mt(&[2]), 4).counts().unwrap()[0], 1);
        for m in [mt(&[2, 3]), mt(&[3, 2]), mt(&[2, 3, 5]), mt(&[5, 3, 2]), mt(&[4, 9])] {
            assert_eq!(series_rp(&m, 25), phi(&m, 25), "{m}");
        }
    }

    #[test]
    fn x_minus_y_is_c() {
        for r in 2..=5u64 {
            let c = series_c(&mt(&[r]), 1, 20).unwrap();
            for j in 1..r {
                let d = &series_x(r, j, 20).unwrap() - &series_y(r, j, 20).unwrap();
                assert_eq!(d, c, "r={r} j={j}");
            }
        }
    }

    #[test]
    fn algebra() {
        let n = 12;
        let a = &TruncatedSeries::one_minus_q_pow(3, n) * &TruncatedSeries::geometric_partial(1, 4, n);
        let b = phi(&mt(&[5]), n);
        let c = TruncatedSeries::geometric_tail(2, n);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &b, &b * &a);
        let f = TruncatedSeries::one_minus_q_pow(4, n);
        assert_eq!(&f * &f.inverse().unwrap(), TruncatedSeries::one(n));
        assert!(TruncatedSeries::zero(n).inverse().is_err());
    }

    #[test]
    fn integrality_is_checked() {
        let half = TruncatedSeries::monomial(crate::scalar::ratio(1, 2), 1, 3);
        assert!(half.counts().is_err());
        assert!(TruncatedSeries::monomial(rat(-1), 0, 3).counts().is_err());
        assert!(TruncatedSeries::monomial(rat(-1), 0, 3).integer_coeffs().is_ok());
    }
}
