use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FieldError;

/// Surds the engine knows how to carry. `1` means plain rationals.
pub const SUPPORTED_SURDS: [u32; 3] = [1, 2, 3];

pub(crate) fn check_surd(d: u32) -> Result<u32, FieldError> {
    if SUPPORTED_SURDS.contains(&d) {
        Ok(d)
    } else {
        Err(FieldError::UnsupportedSurd(d))
    }
}

/// An element `rational + surd·√d` of ℚ(√d).
///
/// For `d = 1` the surd part is folded into the rational part, so every value
/// has exactly one representation and derived equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadRational {
    rational: BigRational,
    surd: BigRational,
    d: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Fallible binary arithmetic on two field elements.
pub fn quad_arith(x: &QuadRational, y: &QuadRational, op: QuadOp) -> Result<QuadRational, FieldError> {
    match op {
        QuadOp::Add => x.checked_add(y),
        QuadOp::Sub => x.checked_sub(y),
        QuadOp::Mul => x.checked_mul(y),
        QuadOp::Div => x.checked_div(y),
    }
}

impl QuadRational {
    pub fn new(rational: BigRational, surd: BigRational, d: u32) -> Result<Self, FieldError> {
        check_surd(d)?;
        Ok(Self::canonical(rational, surd, d))
    }

    fn canonical(rational: BigRational, surd: BigRational, d: u32) -> Self {
        if d == 1 {
            QuadRational { rational: rational + surd, surd: BigRational::zero(), d }
        } else {
            QuadRational { rational, surd, d }
        }
    }

    pub fn zero(d: u32) -> Self {
        QuadRational { rational: BigRational::zero(), surd: BigRational::zero(), d }
    }

    pub fn one(d: u32) -> Self {
        Self::from_integer(1, d)
    }

    pub fn from_integer(n: i64, d: u32) -> Self {
        QuadRational { rational: BigRational::from_integer(BigInt::from(n)), surd: BigRational::zero(), d }
    }

    pub fn from_rational(r: BigRational, d: u32) -> Self {
        QuadRational { rational: r, surd: BigRational::zero(), d }
    }

    /// `num/den + 0·√d`.
    pub fn from_fraction(num: i64, den: i64, d: u32) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()), d)
    }

    /// The generator `√d` itself. For `d = 1` this is just `1`.
    pub fn sqrt_d(d: u32) -> Self {
        Self::canonical(BigRational::zero(), BigRational::one(), d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rational.is_one() && self.surd.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    /// Returns the value as an integer when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.surd.is_zero() && self.rational.is_integer() {
            Some(self.rational.to_integer())
        } else {
            None
        }
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
        Ok(Self::canonical(&self.rational + &other.rational, &self.surd + &other.surd, self.d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(Self::canonical(&self.rational - &other.rational, &self.surd - &other.surd, self.d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let d = BigRational::from_integer(BigInt::from(self.d));
        let rational = &self.rational * &other.rational + &self.surd * &other.surd * d;
        let surd = &self.rational * &other.surd + &self.surd * &other.rational;
        Ok(Self::canonical(rational, surd, self.d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// The Galois conjugate `a − b√d`.
    pub fn conj(&self) -> Self {
        QuadRational { rational: self.rational.clone(), surd: -self.surd.clone(), d: self.d }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        let d = BigRational::from_integer(BigInt::from(self.d));
        &self.rational * &self.rational - &self.surd * &self.surd * d
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadRational { rational: &self.rational / &n, surd: -(&self.surd / &n), d: self.d })
    }

    /// Sign of the real embedding with `√d > 0`, decided exactly.
    pub fn signum(&self) -> i32 {
        let a = self.rational.signum();
        let b = self.surd.signum();
        let (sa, sb) = (sign_of(&a), sign_of(&b));
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        // opposite signs: compare a² with d·b²
        let lhs = &self.rational * &self.rational;
        let rhs = &self.surd * &self.surd * BigRational::from_integer(BigInt::from(self.d));
        if lhs > rhs {
            sa
        } else if lhs < rhs {
            sb
        } else {
            0
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.d);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

// Operator impls panic on mismatched surds. They are for code paths where the
// field has already been fixed (everything inside one validated case).
impl<'a> Add<&'a QuadRational> for &'a QuadRational {
    type Output = QuadRational;
    fn add(self, rhs: &QuadRational) -> QuadRational {
        self.checked_add(rhs).expect("mismatched quadratic fields")
    }
}

impl<'a> Sub<&'a QuadRational> for &'a QuadRational {
    type Output = QuadRational;
    fn sub(self, rhs: &QuadRational) -> QuadRational {
        self.checked_sub(rhs).expect("mismatched quadratic fields")
    }
}

impl<'a> Mul<&'a QuadRational> for &'a QuadRational {
    type Output = QuadRational;
    fn mul(self, rhs: &QuadRational) -> QuadRational {
        self.checked_mul(rhs).expect("mismatched quadratic fields")
    }
}

impl Neg for &QuadRational {
    type Output = QuadRational;
    fn neg(self) -> QuadRational {
        QuadRational { rational: -self.rational.clone(), surd: -self.surd.clone(), d: self.d }
    }
}

impl Neg for QuadRational {
    type Output = QuadRational;
    fn neg(self) -> QuadRational {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders `c·sqrtd` with the unit coefficient elided.
fn fmt_surd_term(b: &BigRational, d: u32) -> String {
    if b.is_one() {
        format!("sqrt{d}")
    } else if (-b).is_one() {
        format!("-sqrt{d}")
    } else {
        format!("{}*sqrt{d}", fmt_rational(b))
    }
}

impl fmt::Display for QuadRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.surd.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.rational)),
            (true, false) => write!(f, "{}", fmt_surd_term(&self.surd, self.d)),
            (false, false) => {
                let s = fmt_surd_term(&self.surd, self.d);
                if s.starts_with('-') {
                    write!(f, "{}{}", fmt_rational(&self.rational), s)
                } else {
                    write!(f, "{}+{}", fmt_rational(&self.rational), s)
                }
            }
        }
    }
}

pub(crate) fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let s = s.trim();
    let bad = || FieldError::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(FieldError::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl QuadRational {
    /// `["num/den", "num/den"]`, rational part first.
    pub fn to_pair(&self) -> [String; 2] {
        [rational_to_string(&self.rational), rational_to_string(&self.surd)]
    }

    pub fn from_pair(pair: &[String; 2], d: u32) -> Result<Self, FieldError> {
        Self::new(parse_rational(&pair[0])?, parse_rational(&pair[1])?, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qr(a: (i64, i64), b: (i64, i64), d: u32) -> QuadRational {
        QuadRational::new(BigRational::new(a.0.into(), a.1.into()), BigRational::new(b.0.into(), b.1.into()), d)
            .unwrap()
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let s = QuadRational::sqrt_d(2);
        assert_eq!(&s * &s, QuadRational::from_integer(2, 2));
    }

    #[test]
    fn norm_form_product() {
        let a = qr((1, 1), (1, 1), 2);
        let b = qr((1, 1), (-1, 1), 2);
        assert_eq!(&a * &b, QuadRational::from_integer(-1, 2));
    }

    #[test]
    fn scalar_multiple() {
        let a = qr((1, 2), (3, 2), 3);
        let two = QuadRational::from_integer(2, 3);
        assert_eq!(&a * &two, qr((1, 1), (3, 1), 3));
    }

    #[test]
    fn mismatched_fields_error() {
        let a = QuadRational::sqrt_d(2);
        let b = QuadRational::sqrt_d(3);
        assert_eq!(
            quad_arith(&a, &b, QuadOp::Add),
            Err(FieldError::MismatchedSurd { left: 2, right: 3 })
        );
    }

    #[test]
    fn division_by_zero() {
        let a = QuadRational::one(2);
        assert_eq!(quad_arith(&a, &QuadRational::zero(2), QuadOp::Div), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn d_one_is_canonical() {
        let a = qr((1, 1), (2, 1), 1);
        assert_eq!(a, QuadRational::from_integer(3, 1));
        assert!(a.surd_part().is_zero());
    }

    #[test]
    fn unsupported_surd() {
        assert!(matches!(
            QuadRational::new(BigRational::zero(), BigRational::one(), 5),
            Err(FieldError::UnsupportedSurd(5))
        ));
    }

    #[test]
    fn signum_exact() {
        assert_eq!(qr((3, 2), (-1, 1), 2).signum(), 1); // 1.5 - 1.414
        assert_eq!(qr((1, 1), (-1, 1), 2).signum(), -1);
        assert_eq!(qr((-2, 1), (3, 2), 3).signum(), 1); // -2 + 2.598
    }

    #[test]
    fn display_forms() {
        assert_eq!(qr((0, 1), (-1, 1), 2).to_string(), "-sqrt2");
        assert_eq!(qr((1, 2), (-3, 2), 3).to_string(), "1/2-3/2*sqrt3");
        assert_eq!(QuadRational::from_integer(-4, 2).to_string(), "-4");
    }
}
