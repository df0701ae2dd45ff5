use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::Poly;
use super::quad::QuadRational;
use super::FieldError;

/// A reduced fraction of polynomials with a monic denominator.
///
/// The normal form is unique, but equality is still decided by
/// cross-multiplication so it never depends on how a value was built.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Builds the reduced form of `num / den`.
pub fn ratfunc_reduce(num: Poly, den: Poly) -> Result<RatFunc, FieldError> {
    RatFunc::new(num, den)
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, FieldError> {
        if num.d() != den.d() {
            return Err(FieldError::MismatchedSurd { left: num.d(), right: den.d() });
        }
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let d = den.d();
        if num.is_zero() {
            return Ok(RatFunc { num, den: Poly::one(d) });
        }
        let g = num.gcd(&den)?;
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.divmod(&g)?.0, den.divmod(&g)?.0)
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = lead.inv()?;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn zero(d: u32) -> Self {
        RatFunc { num: Poly::zero(d), den: Poly::one(d) }
    }

    pub fn one(d: u32) -> Self {
        RatFunc { num: Poly::one(d), den: Poly::one(d) }
    }

    pub fn from_integer(n: i64, d: u32) -> Self {
        Self::from_poly(Poly::from_integer(n, d))
    }

    pub fn from_quad(c: QuadRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        let d = p.d();
        RatFunc { num: p, den: Poly::one(d) }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn d(&self) -> u32 {
        self.num.d()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this fraction equals, if its reduced denominator is `1`.
    pub fn is_polynomial(&self) -> Option<Poly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        if self.den == other.den {
            return Self::new(self.num.checked_add(&other.num)?, self.den.clone());
        }
        let num = self.num.checked_mul(&other.den)?.checked_add(&other.num.checked_mul(&self.den)?)?;
        Self::new(num, self.den.checked_mul(&other.den)?)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        if self.den.is_one() && other.den.is_one() {
            return Ok(RatFunc { num: self.num.checked_mul(&other.num)?, den: self.den.clone() });
        }
        Self::new(self.num.checked_mul(&other.num)?, self.den.checked_mul(&other.den)?)
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, c: &QuadRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.d());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        Self::new(self.num.shift(k), self.den.clone()).expect("reduced input stays valid")
    }

    /// Divides by `q^k`.
    pub fn unshift(&self, k: usize) -> Self {
        Self::new(self.num.clone(), self.den.shift(k)).expect("nonzero denominator")
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.d() == other.d() && &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.checked_add(rhs).expect("mismatched quadratic fields")
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.checked_sub(rhs).expect("mismatched quadratic fields")
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.checked_mul(rhs).expect("mismatched quadratic fields")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s, 2).unwrap()
    }

    #[test]
    fn cancels_common_factor() {
        let r = ratfunc_reduce(p("q^4-1"), p("q^2-1")).unwrap();
        assert_eq!(r.is_polynomial(), Some(p("q^2+1")));
        assert!(r.denom().is_one());
    }

    #[test]
    fn reduces_over_the_extension() {
        let r = ratfunc_reduce(p("q^2-sqrt2*q+1"), p("q^4+1")).unwrap();
        assert_eq!(r.numer(), &Poly::one(2));
        assert_eq!(r.denom(), &p("q^2+sqrt2*q+1"));
    }

    #[test]
    fn zero_normal_form() {
        let r = ratfunc_reduce(Poly::zero(2), p("q^8")).unwrap();
        assert!(r.numer().is_zero());
        assert!(r.denom().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(ratfunc_reduce(p("q"), Poly::zero(2)).unwrap_err(), FieldError::DivisionByZero);
    }

    #[test]
    fn polynomial_detection() {
        assert_eq!(RatFunc::from_poly(p("q^6-q^2")).is_polynomial(), Some(p("q^6-q^2")));
        assert_eq!(ratfunc_reduce(Poly::one(2), p("q^2-1")).unwrap().is_polynomial(), None);
        let r = ratfunc_reduce(&p("q^2-1") * &p("q^4+1"), p("q^2-1")).unwrap();
        assert_eq!(r.is_polynomial(), Some(p("q^4+1")));
    }

    #[test]
    fn content_moves_to_numerator() {
        let r = ratfunc_reduce(p("1"), p("2*q-2")).unwrap();
        assert_eq!(r.numer(), &parse_poly("1/2", 2).unwrap());
        assert_eq!(r.denom(), &p("q-1"));
    }
}
