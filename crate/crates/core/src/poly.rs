//! Dense univariate polynomials with rational coefficients.
//!
//! Used both as the coefficient ring `ℚ[t]` of Hall–Littlewood functions and as
//! the representation of elements of a cyclotomic field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{rat, rational_to_string, serde_rational_vec, Scalar};

/// A polynomial `c_0 + c_1 t + ...` with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

/// A bare coefficient array, constant term first.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_rational_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        serde_rational_vec::deserialize(d).map(Poly::new)
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c · t^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        Self::one() - Self::monomial(BigRational::one(), k)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Evaluates at a point of any coefficient domain, by Horner's rule.
    pub fn eval<C: Scalar>(&self, at: &C) -> C {
        let mut acc = at.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + at.from_rational_like(c);
        }
        acc
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let lead = divisor.leading().expect("division by the zero polynomial").clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Makes the leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Extended Euclid: returns `(g, s, u)` with `s·a + u·b = g`, `g` monic.
    pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut u0, mut u1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let u = &u0 - &(&q * &u1);
            u0 = std::mem::replace(&mut u1, u);
        }
        match r0.leading().cloned() {
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), u0.scale(&inv))
            }
            None => (r0, s0, u0),
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, if all coefficients are integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Scalar for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }

    fn one_like(&self) -> Self {
        Poly::one()
    }

    fn is_zero_elem(&self) -> bool {
        Poly::is_zero(self)
    }

    fn from_rational_like(&self, q: &BigRational) -> Self {
        Poly::constant(q.clone())
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, "t")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Writes `a_0 + a_1 x + a_2 x^2 ...`, skipping zero terms.
pub(crate) fn fmt_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigRational], var: &str) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let unit = abs.is_one();
        match k {
            0 => write!(f, "{}", rational_to_string(&abs))?,
            _ => {
                if !unit {
                    write!(f, "{}", rational_to_string(&abs))?;
                }
                if k == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{k}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn arithmetic() {
        let a = Poly::from_ints(&[1, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(a.pow(3), Poly::from_ints(&[1, 3, 3, 1]));
        assert_eq!(Poly::from_ints(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn division() {
        let x3m1 = Poly::from_ints(&[-1, 0, 0, 1]);
        let (q, r) = x3m1.div_rem(&Poly::from_ints(&[-1, 1]));
        assert_eq!(q, Poly::from_ints(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = Poly::from_ints(&[1, 0, 1]).div_rem(&Poly::from_ints(&[0, 2]));
        assert_eq!(q, Poly::new(vec![rat(0), ratio(1, 2)]));
        assert_eq!(r, Poly::from_ints(&[1]));
    }

    #[test]
    fn extended_gcd() {
        let a = Poly::from_ints(&[1, 1, 1]);
        let b = Poly::from_ints(&[2, 1]);
        let (g, s, u) = Poly::ext_gcd(&a, &b);
        assert_eq!(g, Poly::one());
        assert_eq!(&(&s * &a) + &(&u * &b), g);
        let c = Poly::from_ints(&[-1, 0, 1]);
        let d = Poly::from_ints(&[1, 2, 1]);
        assert_eq!(Poly::gcd(&c, &d), Poly::from_ints(&[1, 1]));
    }

    #[test]
    fn evaluation_and_display() {
        let p = Poly::from_ints(&[1, -2, 0, 1]);
        assert_eq!(p.eval(&rat(2)), rat(5));
        assert_eq!(p.to_string(), "1 - 2t + t^3");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
