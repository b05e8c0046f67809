//! Exact arithmetic in the cyclotomic field `ℚ(ζ_r)`.
//!
//! An element is a rational polynomial in `ζ` of degree below `φ(r)`, reduced
//! modulo the `r`-th cyclotomic polynomial, so equality is coefficientwise.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{fmt_poly, Poly};
use crate::scalar::Scalar;

/// `Φ_r(x)`, obtained by dividing `x^r - 1` by `Φ_d(x)` for every proper divisor `d`.
pub fn cyclotomic_polynomial(r: u32) -> Poly {
    assert!(r >= 1, "cyclotomic order must be positive");
    let mut p = Poly::monomial(BigRational::one(), r as usize) - Poly::one();
    for d in (1..r).filter(|d| r.is_multiple_of(*d)) {
        let (q, rem) = p.div_rem(&cyclotomic_polynomial(d));
        debug_assert!(rem.is_zero());
        p = q;
    }
    p
}

#[derive(Debug)]
struct FieldData {
    order: u32,
    modulus: Poly,
    degree: usize,
}

fn field(order: u32) -> Arc<FieldData> {
    static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let fields = FIELDS.get_or_init(Default::default);
    if let Some(f) = fields.read().expect("field cache poisoned").get(&order) {
        return f.clone();
    }
    let modulus = cyclotomic_polynomial(order);
    let degree = modulus.degree().expect("cyclotomic polynomial is nonzero");
    let data = Arc::new(FieldData { order, modulus, degree });
    fields
        .write()
        .expect("field cache poisoned")
        .entry(order)
        .or_insert(data)
        .clone()
}

/// An element of `ℚ(ζ_r)` for a primitive `r`-th root of unity `ζ`.
///
/// The arithmetic operators panic when the two operands live in fields of
/// different orders; the `checked_*` methods report [`Error::MixedOrders`] instead.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<FieldData>,
    value: Poly,
}

impl CyclotomicNumber {
    /// Reduces `p(ζ)` into canonical form. `order` must be at least 1.
    pub fn from_poly(order: u32, p: &Poly) -> Self {
        let field = field(order);
        let (_, value) = p.div_rem(&field.modulus);
        CyclotomicNumber { field, value }
    }

    pub fn from_rational(order: u32, q: BigRational) -> Self {
        Self::from_poly(order, &Poly::constant(q))
    }

    pub fn zero(order: u32) -> Self {
        Self::from_poly(order, &Poly::zero())
    }

    pub fn one(order: u32) -> Self {
        Self::from_poly(order, &Poly::one())
    }

    /// The generator `ζ`.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        Self::from_poly(order, &Poly::monomial(BigRational::one(), e))
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Degree `φ(r)` of the field over `ℚ`.
    pub fn field_degree(&self) -> usize {
        self.field.degree
    }

    /// Coefficients on `1, ζ, ζ^2, ...`, padded to the field degree.
    pub fn coefficients(&self) -> Vec<BigRational> {
        (0..self.field.degree).map(|k| self.value.coeff(k)).collect()
    }

    pub fn as_poly(&self) -> &Poly {
        &self.value
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::MixedOrders(self.order(), other.order()));
        }
        Ok(())
    }

    fn wrap(&self, p: Poly) -> Self {
        let (_, value) = p.div_rem(&self.field.modulus);
        CyclotomicNumber { field: self.field.clone(), value }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(CyclotomicNumber { field: self.field.clone(), value: &self.value + &other.value })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(CyclotomicNumber { field: self.field.clone(), value: &self.value - &other.value })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(&self.value * &other.value))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<Self> {
        if self.value.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = Poly::ext_gcd(&self.value, &self.field.modulus);
        // the modulus is irreducible, so any nonzero reduced element is coprime to it
        debug_assert_eq!(g, Poly::one());
        Ok(self.wrap(s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut b = base;
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Complex conjugation `ζ ↦ ζ^{r-1}`.
    pub fn conj(&self) -> Self {
        let r = self.order() as usize;
        let mut coeffs = vec![BigRational::zero(); r];
        for (k, c) in self.value.coeffs().iter().enumerate() {
            coeffs[(r - k) % r] += c;
        }
        self.wrap(Poly::new(coeffs))
    }

    /// Fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// The rational value, when the element lies in `ℚ`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.is_real() {
            return None;
        }
        match self.value.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.value.coeff(0)),
            Some(_) => None,
        }
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.value == other.value
    }
}

impl Eq for CyclotomicNumber {}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                self.$checked(rhs).expect("cyclotomic operands of different orders")
            }
        }
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { field: self.field.clone(), value: -&self.value }
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl Scalar for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        CyclotomicNumber { field: self.field.clone(), value: Poly::zero() }
    }

    fn one_like(&self) -> Self {
        CyclotomicNumber { field: self.field.clone(), value: Poly::one() }
    }

    fn is_zero_elem(&self) -> bool {
        self.value.is_zero()
    }

    fn from_rational_like(&self, q: &BigRational) -> Self {
        CyclotomicNumber { field: self.field.clone(), value: Poly::constant(q.clone()) }
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs).ok()
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, self.value.coeffs(), "ζ")
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({self})", self.order())
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    order: u32,
    #[serde(with = "crate::scalar::serde_rational_vec")]
    coefficients: Vec<BigRational>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr { order: self.order(), coefficients: self.coefficients() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CyclotomicRepr::deserialize(d)?;
        if repr.order == 0 {
            return Err(serde::de::Error::custom("cyclotomic order must be positive"));
        }
        Ok(CyclotomicNumber::from_poly(repr.order, &Poly::new(repr.coefficients)))
    }
}

/// The `t`-shifted factorial `(a; t)_n = (1 - a)(1 - at)...(1 - at^{n-1})`.
pub fn t_shifted_factorial<C: Scalar>(a: &C, t: &C, n: usize) -> C {
    let one = a.one_like();
    let mut acc = one.clone();
    let mut term = a.clone();
    for _ in 0..n {
        acc = acc * (one.clone() - term.clone());
        term = term * t.clone();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), Poly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), Poly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), Poly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), Poly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), Poly::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn product_over_divisors() {
        for r in 1..=30u32 {
            let prod = (1..=r)
                .filter(|d| r % d == 0)
                .fold(Poly::one(), |acc, d| &acc * &cyclotomic_polynomial(d));
            assert_eq!(prod, Poly::monomial(rat(1), r as usize) - Poly::one(), "r={r}");
        }
    }

    #[test]
    fn root_of_unity_relations() {
        for r in 2..=12u32 {
            let z = CyclotomicNumber::zeta(r);
            let one = CyclotomicNumber::one(r);
            assert_eq!(z.pow(r as i64).unwrap(), one);
            for k in 1..r as i64 {
                assert_ne!(z.pow(k).unwrap(), one);
            }
            let prod = (1..r as i64).fold(one.clone(), |acc, i| {
                &acc * &(&one - &CyclotomicNumber::zeta_pow(r, i))
            });
            assert_eq!(prod.as_rational(), Some(rat(r as i64)), "r={r}");
        }
    }

    #[test]
    fn order_two_and_three() {
        let z2 = CyclotomicNumber::zeta(2);
        assert_eq!(z2.as_rational(), Some(rat(-1)));
        let one = CyclotomicNumber::one(2);
        assert_eq!((&one - &z2).as_rational(), Some(rat(2)));
        let one3 = CyclotomicNumber::one(3);
        let z3 = CyclotomicNumber::zeta(3);
        let prod = &(&one3 - &z3) * &(&one3 - &z3.pow(2).unwrap());
        assert_eq!(prod.as_rational(), Some(rat(3)));
    }

    #[test]
    fn inverse_and_errors() {
        let z = CyclotomicNumber::zeta(5);
        let x = &z + &CyclotomicNumber::from_rational(5, rat(2));
        assert_eq!(&x * &x.inv().unwrap(), CyclotomicNumber::one(5));
        assert_eq!(CyclotomicNumber::zero(5).inv(), Err(Error::DivisionByZero));
        assert_eq!(
            CyclotomicNumber::one(3).checked_add(&CyclotomicNumber::one(4)),
            Err(Error::MixedOrders(3, 4))
        );
        assert_eq!(z.pow(-1).unwrap(), z.pow(4).unwrap());
    }

    #[test]
    fn realness() {
        assert_eq!(CyclotomicNumber::from_rational(7, rat(3)).as_rational(), Some(rat(3)));
        assert_eq!(CyclotomicNumber::zeta(3).as_rational(), None);
        assert!(!CyclotomicNumber::zeta(3).is_real());
        let z = CyclotomicNumber::zeta(5);
        let s = &z + &z.pow(4).unwrap();
        assert!(s.is_real());
        assert_eq!(s.as_rational(), None);
    }

    #[test]
    fn shifted_factorial() {
        let z = CyclotomicNumber::zeta(3);
        assert_eq!(t_shifted_factorial(&z, &z, 0), CyclotomicNumber::one(3));
        assert_eq!(t_shifted_factorial(&z, &z, 2).as_rational(), Some(rat(3)));
        for r in 2..=6u32 {
            let z = CyclotomicNumber::zeta(r);
            for n in r as usize..r as usize + 3 {
                assert!(Scalar::is_zero_elem(&t_shifted_factorial(&z, &z, n)));
            }
        }
        let t = Poly::t();
        assert_eq!(
            t_shifted_factorial(&t, &t, 2),
            &Poly::one_minus_t_pow(1) * &Poly::one_minus_t_pow(2)
        );
    }

    #[test]
    fn display() {
        let x = &CyclotomicNumber::zeta(5) * &CyclotomicNumber::from_rational(5, rat(-2));
        assert_eq!(x.to_string(), "-2ζ");
        assert_eq!(CyclotomicNumber::zero(3).to_string(), "0");
    }
}
