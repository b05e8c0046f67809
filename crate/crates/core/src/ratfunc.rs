//! Rational functions in `t`, for inner products at a generic parameter.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::poly::Poly;
use crate::scalar::Scalar;

/// `num / den` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero").recip();
        RationalFunction { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_poly(Poly::t())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// The polynomial this equals, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.den == Poly::one()).then_some(&self.num)
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(&(&self.num * &rhs.den) - &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction { num: -&self.num, den: self.den }
    }
}

impl Scalar for RationalFunction {
    fn zero_like(&self) -> Self {
        Self::from_poly(Poly::zero())
    }

    fn one_like(&self) -> Self {
        Self::from_poly(Poly::one())
    }

    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational_like(&self, q: &BigRational) -> Self {
        Self::from_poly(Poly::constant(q.clone()))
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.num.is_zero() {
            return None;
        }
        Some(Self::new(&self.num * &rhs.den, &self.den * &rhs.num))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
