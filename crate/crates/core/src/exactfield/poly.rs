use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::quad::{check_surd, QuadRational};
use super::FieldError;

/// Serialized polynomial: coefficient pairs, lowest degree first.
pub type PolyRepr = Vec<[String; 2]>;

/// A polynomial in `q` with coefficients in ℚ(√d).
///
/// The coefficient vector never has a trailing zero, so the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    coeffs: Vec<QuadRational>,
    d: u32,
}

impl Poly {
    pub fn zero(d: u32) -> Self {
        Poly { coeffs: Vec::new(), d }
    }

    pub fn one(d: u32) -> Self {
        Self::constant(QuadRational::one(d))
    }

    pub fn constant(c: QuadRational) -> Self {
        let d = c.d();
        Self::trimmed(vec![c], d)
    }

    pub fn from_integer(n: i64, d: u32) -> Self {
        Self::constant(QuadRational::from_integer(n, d))
    }

    /// The indeterminate `q`.
    pub fn q(d: u32) -> Self {
        Self::monomial(QuadRational::one(d), 1)
    }

    pub fn monomial(c: QuadRational, degree: usize) -> Self {
        let d = c.d();
        let mut coeffs = vec![QuadRational::zero(d); degree];
        coeffs.push(c);
        Self::trimmed(coeffs, d)
    }

    pub fn from_coeffs(coeffs: Vec<QuadRational>, d: u32) -> Result<Self, FieldError> {
        check_surd(d)?;
        if let Some(c) = coeffs.iter().find(|c| c.d() != d) {
            return Err(FieldError::MismatchedSurd { left: d, right: c.d() });
        }
        Ok(Self::trimmed(coeffs, d))
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64], d: u32) -> Self {
        Self::trimmed(coeffs.iter().map(|&c| QuadRational::from_integer(c, d)).collect(), d)
    }

    fn trimmed(mut coeffs: Vec<QuadRational>, d: u32) -> Self {
        while coeffs.last().is_some_and(QuadRational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, d }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn coeffs(&self) -> &[QuadRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&QuadRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> QuadRational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| QuadRational::zero(self.d))
    }

    /// True when every coefficient lies in ℚ.
    pub fn is_surd_free(&self) -> bool {
        self.coeffs.iter().all(QuadRational::is_rational)
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(FieldError::MismatchedSurd { left: self.d, right: other.d })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        Ok(Self::trimmed(coeffs, self.d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect();
        Ok(Self::trimmed(coeffs, self.d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.d));
        }
        let mut coeffs = vec![QuadRational::zero(self.d); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(Self::trimmed(coeffs, self.d))
    }

    pub fn scale(&self, c: &QuadRational) -> Self {
        Self::trimmed(self.coeffs.iter().map(|a| a * c).collect(), self.d)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![QuadRational::zero(self.d); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs, d: self.d }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.d);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = quotient·divisor + remainder`, `deg remainder < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), FieldError> {
        self.same_field(divisor)?;
        let dlead = divisor.leading().ok_or(FieldError::DivisionByZero)?;
        let dinv = dlead.inv()?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Self::zero(self.d), self.clone()));
        }
        let mut quot = vec![QuadRational::zero(self.d); rem.len() - ddeg];
        for k in (ddeg..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = &rem[k] * &dinv;
            let shift = k - ddeg;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem[shift + j] = &rem[shift + j] - &(&c * b);
                }
            }
            quot[shift] = c;
        }
        rem.truncate(ddeg);
        Ok((Self::trimmed(quot, self.d), Self::trimmed(rem, self.d)))
    }

    /// Scales to leading coefficient one. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Monic gcd over ℚ(√d) by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Horner evaluation at a field element.
    pub fn eval(&self, x: &QuadRational) -> Result<QuadRational, FieldError> {
        if x.d() != self.d {
            return Err(FieldError::MismatchedSurd { left: self.d, right: x.d() });
        }
        let mut acc = QuadRational::zero(self.d);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        Ok(acc)
    }

    /// `p(q) ↦ p(-q)`.
    pub fn negate_variable(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Poly { coeffs, d: self.d }
    }

    pub fn to_repr(&self) -> PolyRepr {
        self.coeffs.iter().map(QuadRational::to_pair).collect()
    }

    pub fn from_repr(repr: &[[String; 2]], d: u32) -> Result<Self, FieldError> {
        let coeffs = repr.iter().map(|p| QuadRational::from_pair(p, d)).collect::<Result<Vec<_>, _>>()?;
        Self::from_coeffs(coeffs, d)
    }
}

/// Exact product of two polynomials over the same field.
pub fn poly_mul(a: &Poly, b: &Poly) -> Result<Poly, FieldError> {
    a.checked_mul(b)
}

/// Quotient and remainder of `a` by `b`.
pub fn poly_divmod(a: &Poly, b: &Poly) -> Result<(Poly, Poly), FieldError> {
    a.divmod(b)
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("mismatched quadratic fields")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("mismatched quadratic fields")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("mismatched quadratic fields")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect(), d: self.d }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

fn fmt_power(k: usize) -> String {
    if k == 1 {
        "q".to_string()
    } else {
        format!("q^{k}")
    }
}

/// Descending powers; surds as `sqrt2`/`sqrt3`; zero as `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = if k == 0 {
                c.to_string()
            } else if c.is_one() {
                fmt_power(k)
            } else if (-c).is_one() {
                format!("-{}", fmt_power(k))
            } else if c.is_rational() || c.rational_part().is_zero() {
                format!("{}*{}", c, fmt_power(k))
            } else {
                format!("({})*{}", c, fmt_power(k))
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, d: u32) -> Poly {
        crate::exactfield::parse_poly(s, d).unwrap()
    }

    #[test]
    fn product_of_quartic_factors() {
        assert_eq!(p("q^2-sqrt2*q+1", 2).checked_mul(&p("q^2+sqrt2*q+1", 2)).unwrap(), p("q^4+1", 2));
    }

    #[test]
    fn sum_of_cubes() {
        assert_eq!(poly_mul(&p("q^2+1", 1), &p("q^4-q^2+1", 1)).unwrap(), p("q^6+1", 1));
    }

    #[test]
    fn zero_annihilates() {
        assert!(poly_mul(&Poly::zero(2), &p("q^8", 2)).unwrap().is_zero());
    }

    #[test]
    fn divmod_examples() {
        let (quot, rem) = poly_divmod(&p("q^4+1", 2), &p("q^2-sqrt2*q+1", 2)).unwrap();
        assert_eq!(quot, p("q^2+sqrt2*q+1", 2));
        assert!(rem.is_zero());

        let (quot, rem) = poly_divmod(&p("q^3", 1), &p("q-1", 1)).unwrap();
        assert_eq!(quot, p("q^2+q+1", 1));
        assert_eq!(rem, Poly::one(1));

        let (quot, rem) = poly_divmod(&p("q^2-1", 1), &p("q^2-1", 1)).unwrap();
        assert_eq!(quot, Poly::one(1));
        assert!(rem.is_zero());
    }

    #[test]
    fn divide_by_zero_polynomial() {
        assert_eq!(poly_divmod(&p("q", 2), &Poly::zero(2)), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn mismatched_field_product() {
        assert!(matches!(
            poly_mul(&p("q", 2), &p("q", 3)),
            Err(FieldError::MismatchedSurd { left: 2, right: 3 })
        ));
    }

    #[test]
    fn gcd_is_monic() {
        let a = p("2*q^4-2", 1);
        let b = p("3*q^2-3", 1);
        assert_eq!(a.gcd(&b).unwrap(), p("q^2-1", 1));
    }

    #[test]
    fn renders_descending() {
        assert_eq!(p("q^6-q^4+q^2-1", 2).to_string(), "q^6-q^4+q^2-1");
        assert_eq!(p("q^2-sqrt2*q+1", 2).to_string(), "q^2-sqrt2*q+1");
        assert_eq!(p("(1+sqrt3)*q-1/2", 3).to_string(), "(1+sqrt3)*q-1/2");
        assert_eq!(Poly::zero(2).to_string(), "0");
    }

    #[test]
    fn repr_round_trip() {
        let a = p("q^3-1/2*sqrt2*q+7", 2);
        assert_eq!(Poly::from_repr(&a.to_repr(), 2).unwrap(), a);
        assert_eq!(a.to_repr()[0], ["7/1".to_string(), "0/1".to_string()]);
    }
}
