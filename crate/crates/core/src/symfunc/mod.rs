//! Homogeneous symmetric functions in the power-sum basis.

pub mod character;
pub mod hall_littlewood;
pub mod kostka;
pub mod matrix;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::poly::Poly;
use crate::scalar::Scalar;

pub use character::{mn_character, remove_rim_hooks, z_factor};
pub use hall_littlewood::{
    family_in_p, hl_p, hl_q, hl_qprime, l_matrix, transition_matrix, Family,
};
pub use kostka::{b_lambda, kostka_foulkes, kostka_table, KostkaTable};
pub use matrix::{Matrix, TransitionMatrix};

/// `Σ_ρ c_ρ p_ρ` with every `ρ ⊢ degree` and no zero coefficients.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "C: Serialize + Clone", deserialize = "C: Deserialize<'de> + Scalar"))]
pub struct SymFunc<C> {
    degree: usize,
    #[serde(with = "term_list")]
    terms: BTreeMap<Partition, C>,
    /// Zero of the coefficient domain.
    zero: C,
}

mod term_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Term<C> {
        partition: Partition,
        coefficient: C,
    }

    pub fn serialize<C: Serialize + Clone, S: Serializer>(
        terms: &BTreeMap<Partition, C>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let list: Vec<Term<C>> = terms
            .iter()
            .map(|(p, c)| Term { partition: p.clone(), coefficient: c.clone() })
            .collect();
        list.serialize(s)
    }

    pub fn deserialize<'de, C: Deserialize<'de>, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<Partition, C>, D::Error> {
        let list: Vec<Term<C>> = Vec::deserialize(d)?;
        Ok(list.into_iter().map(|t| (t.partition, t.coefficient)).collect())
    }
}

impl<C: Scalar> SymFunc<C> {
    pub fn zero(degree: usize, zero: C) -> Self {
        SymFunc { degree, terms: BTreeMap::new(), zero: zero.zero_like() }
    }

    /// `p_ρ`.
    pub fn power_sum(rho: &Partition, zero: C) -> Self {
        let mut f = Self::zero(rho.weight(), zero);
        let one = f.zero.one_like();
        f.terms.insert(rho.clone(), one);
        f
    }

    pub fn from_terms(degree: usize, zero: C, terms: impl IntoIterator<Item = (Partition, C)>) -> Result<Self> {
        let mut f = Self::zero(degree, zero);
        for (rho, c) in terms {
            f.add_term(rho, c)?;
        }
        Ok(f)
    }

    pub fn add_term(&mut self, rho: Partition, c: C) -> Result<()> {
        if rho.weight() != self.degree {
            return Err(Error::WeightMismatch(self.degree, rho.weight()));
        }
        let sum = match self.terms.remove(&rho) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero_elem() {
            self.terms.insert(rho, sum);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn zero_elem(&self) -> C {
        self.zero.clone()
    }

    /// Coefficient of `p_ρ`.
    pub fn coeff(&self, rho: &Partition) -> C {
        self.terms.get(rho).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.degree, self.zero.clone());
        for (rho, v) in &self.terms {
            let w = v.clone() * c.clone();
            if !w.is_zero_elem() {
                out.terms.insert(rho.clone(), w);
            }
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::WeightMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (rho, c) in &other.terms {
            out.add_term(rho.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// Product, using `p_ρ p_σ = p_{ρ ∪ σ}`.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree, self.zero.clone());
        for (rho, a) in &self.terms {
            for (sigma, b) in &other.terms {
                out.add_term(rho.union(sigma), a.clone() * b.clone()).expect("degrees add up");
            }
        }
        out
    }

    pub fn map_coeffs<D: Scalar>(&self, zero: D, f: impl Fn(&C) -> D) -> SymFunc<D> {
        let mut out = SymFunc::zero(self.degree, zero);
        for (rho, c) in &self.terms {
            let d = f(c);
            if !d.is_zero_elem() {
                out.terms.insert(rho.clone(), d);
            }
        }
        out
    }

    /// Sets `p_r = p_{2r} = … = 0`: drops every `p_ρ` with a part divisible by `r`.
    pub fn r_reduce(&self, r: usize) -> Self {
        let mut out = self.clone();
        out.terms.retain(|rho, _| rho.parts().iter().all(|&part| part % r != 0));
        out
    }

    /// Substitutes `p_k ↦ p_{kr}`, so `f(x) ↦ f(x^r)`.
    pub fn plethysm_pr(&self, r: usize) -> Self {
        let mut out = Self::zero(self.degree * r, self.zero.clone());
        for (rho, c) in &self.terms {
            out.terms.insert(rho.scale(r), c.clone());
        }
        out
    }

    /// True when every index partition avoids parts divisible by `r`.
    pub fn is_supported_on_class_regular(&self, r: usize) -> bool {
        self.terms.keys().all(|rho| rho.parts().iter().all(|&part| part % r != 0))
    }
}

impl SymFunc<Poly> {
    /// Evaluates every coefficient at `t = ζ_r`.
    pub fn specialize_t(&self, r: u32) -> SymFunc<CyclotomicNumber> {
        let zeta = CyclotomicNumber::zeta(r);
        self.map_coeffs(CyclotomicNumber::zero(r), |c| c.eval(&zeta))
    }
}

macro_rules! symfunc_op {
    ($tr:ident, $method:ident, $combine:expr) => {
        impl<C: Scalar> $tr for SymFunc<C> {
            type Output = SymFunc<C>;
            fn $method(self, rhs: SymFunc<C>) -> SymFunc<C> {
                $combine(&self, &rhs)
            }
        }
    };
}

symfunc_op!(Add, add, |a: &SymFunc<C>, b: &SymFunc<C>| a.checked_add(b).expect("equal degrees"));
symfunc_op!(Sub, sub, |a: &SymFunc<C>, b: &SymFunc<C>| a.checked_add(&-b.clone()).expect("equal degrees"));
symfunc_op!(Mul, mul, |a: &SymFunc<C>, b: &SymFunc<C>| a.product(b));

impl<C: Scalar> Neg for SymFunc<C> {
    type Output = SymFunc<C>;
    fn neg(self) -> SymFunc<C> {
        let minus_one = self.zero.from_int_like(-1);
        self.scale(&minus_one)
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (rho, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) p{rho}")?;
        }
        Ok(())
    }
}

fn z_rational(rho: &Partition) -> BigRational {
    BigRational::from_integer(BigInt::from(z_factor(rho)))
}

/// `z_ρ(t) = z_ρ ∏_i (1 - t^{ρ_i})^{-1}`; fails with a pole when some `1 - t^{ρ_i}` vanishes.
pub fn z_factor_t<C: Scalar>(rho: &Partition, t: &C) -> Result<C> {
    let one = t.one_like();
    let mut den = one.clone();
    for &part in rho.parts() {
        let mut power = one.clone();
        for _ in 0..part {
            power = power * t.clone();
        }
        den = den * (one.clone() - power);
    }
    t.from_rational_like(&z_rational(rho))
        .exact_div(&den)
        .ok_or_else(|| Error::Pole(rho.parts().to_vec()))
}

/// Which Hall-type inner product to use: `⟨p_λ, p_μ⟩ = z_λ δ` at `t = 0`, or
/// `z_λ(t) δ` at a given value of `t`.
#[derive(Clone, Debug)]
pub enum InnerParam<C> {
    Zero,
    At(C),
}

/// `⟨f, g⟩ = Σ_ρ f_ρ g_ρ z_ρ(t)`.
pub fn hall_inner<C: Scalar>(f: &SymFunc<C>, g: &SymFunc<C>, param: &InnerParam<C>) -> Result<C> {
    if f.degree != g.degree {
        return Err(Error::WeightMismatch(f.degree, g.degree));
    }
    let mut acc = f.zero.clone();
    for (rho, a) in &f.terms {
        let Some(b) = g.terms.get(rho) else { continue };
        let z = match param {
            InnerParam::Zero => f.zero.from_rational_like(&z_rational(rho)),
            InnerParam::At(t) => z_factor_t(rho, t)?,
        };
        acc = acc + a.clone() * b.clone() * z;
    }
    Ok(acc)
}

/// `h_n = Σ_ρ z_ρ^{-1} p_ρ`.
pub fn complete_h<C: Scalar>(n: usize, zero: C) -> SymFunc<C> {
    let mut f = SymFunc::zero(n, zero);
    for rho in enumerate_partitions(n) {
        let c = f.zero.from_rational_like(&z_rational(&rho).recip());
        f.terms.insert(rho, c);
    }
    f
}

/// `s_λ = Σ_ρ χ^λ_ρ z_ρ^{-1} p_ρ`.
pub fn schur_in_p<C: Scalar>(lambda: &Partition, zero: C) -> SymFunc<C> {
    let n = lambda.weight();
    let mut f = SymFunc::zero(n, zero);
    for rho in enumerate_partitions(n) {
        let chi = mn_character(lambda, &rho).expect("same weight");
        if chi != 0 {
            let q = BigRational::from_integer(BigInt::from(chi)) / z_rational(&rho);
            let c = f.zero.from_rational_like(&q);
            f.terms.insert(rho, c);
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::RationalFunction;
    use crate::scalar::{rat, ratio};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn schur_small() {
        let s1 = schur_in_p(&p(&[1]), rat(0));
        assert_eq!(s1, SymFunc::power_sum(&p(&[1]), rat(0)));
        let s2 = schur_in_p(&p(&[2]), rat(0));
        assert_eq!(s2.coeff(&p(&[2])), ratio(1, 2));
        assert_eq!(s2.coeff(&p(&[1, 1])), ratio(1, 2));
        let s11 = schur_in_p(&p(&[1, 1]), rat(0));
        assert_eq!(s11.coeff(&p(&[2])), ratio(-1, 2));
        assert_eq!(s11.coeff(&p(&[1, 1])), ratio(1, 2));
        assert_eq!(complete_h(2, rat(0)), s2);
    }

    #[test]
    fn schur_orthonormal() {
        for n in 1..=6 {
            let parts = enumerate_partitions(n);
            for a in &parts {
                for b in &parts {
                    let v = hall_inner(&schur_in_p(a, rat(0)), &schur_in_p(b, rat(0)), &InnerParam::Zero).unwrap();
                    assert_eq!(v, rat(i64::from(a == b)));
                }
            }
        }
    }

    #[test]
    fn z_values() {
        let t = RationalFunction::t();
        let z = z_factor_t(&p(&[1]), &t).unwrap();
        assert_eq!(z, RationalFunction::new(Poly::one(), Poly::one_minus_t_pow(1)));
        let minus_one = CyclotomicNumber::from_rational(2, rat(-1));
        assert!(matches!(z_factor_t(&p(&[2, 1]), &minus_one), Err(Error::Pole(_))));
        assert_eq!(z_factor_t(&p(&[1, 1]), &minus_one).unwrap(), CyclotomicNumber::from_rational(2, ratio(1, 2)));
        assert_eq!(z_factor_t(&p(&[2, 1, 1]), &rat(0)).unwrap(), rat(4));
    }

    #[test]
    fn reduction_and_plethysm() {
        let f = SymFunc::power_sum(&p(&[3, 1]), rat(0));
        assert!(f.r_reduce(3).is_zero());
        let g = SymFunc::power_sum(&p(&[2, 1, 1]), rat(0));
        assert_eq!(g.r_reduce(3), g);
        assert_eq!(SymFunc::power_sum(&p(&[1]), rat(0)).plethysm_pr(5), SymFunc::power_sum(&p(&[5]), rat(0)));
        let h2 = complete_h(2, rat(0)).plethysm_pr(2);
        assert_eq!(h2.coeff(&p(&[4])), ratio(1, 2));
        assert_eq!(h2.coeff(&p(&[2, 2])), ratio(1, 2));
        assert_eq!(h2.terms().len(), 2);
    }

    #[test]
    fn products_and_specialization() {
        let a = SymFunc::power_sum(&p(&[2]), rat(0));
        let b = SymFunc::power_sum(&p(&[1]), rat(0));
        assert_eq!(a.clone() * b.clone(), SymFunc::power_sum(&p(&[2, 1]), rat(0)));
        assert!((a.clone() - a).is_zero());
        let f = schur_in_p(&p(&[2, 1]), Poly::zero()).specialize_t(3);
        assert_eq!(f.coeff(&p(&[3])), CyclotomicNumber::from_rational(3, ratio(-1, 3)));
    }
}
