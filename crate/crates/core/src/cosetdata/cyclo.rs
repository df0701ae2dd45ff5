use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};

/// An element of ℚ(ζ₁₂) in the basis `1, ζ, ζ², ζ³` with `ζ⁴ = ζ² − 1`.
///
/// Holds every character value of the component groups (orders ≤ 8, exponents dividing 12 or 4).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cyclo([Ratio<i64>; 4]);

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo([Ratio::zero(); 4])
    }

    pub fn from_integer(n: i64) -> Self {
        let mut c = Self::zero();
        c.0[0] = Ratio::from_integer(n);
        c
    }

    /// `ζ₁₂^k`.
    pub fn root_of_unity(k: i64) -> Self {
        let zeta = Cyclo([Ratio::zero(), Ratio::one(), Ratio::zero(), Ratio::zero()]);
        (0..k.rem_euclid(12)).fold(Self::from_integer(1), |acc, _| acc * zeta)
    }

    /// A primitive `n`-th root of unity raised to `k`, for `n` dividing 12.
    pub fn nth_root(n: i64, k: i64) -> Self {
        assert!(n > 0 && 12 % n == 0, "order {n} does not divide 12");
        Self::root_of_unity(k * (12 / n))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Complex conjugate, `ζ ↦ ζ⁻¹ = ζ¹¹`.
    pub fn conj(&self) -> Self {
        (0..4).fold(Self::zero(), |acc, k| acc + Self::root_of_unity(12 - k as i64).scale(self.0[k]))
    }

    pub fn scale(&self, r: Ratio<i64>) -> Self {
        Cyclo(self.0.map(|c| c * r))
    }

    pub fn to_rational(&self) -> Option<Ratio<i64>> {
        self.0[1..].iter().all(Zero::is_zero).then_some(self.0[0])
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        Cyclo([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2], self.0[3] + rhs.0[3]])
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        self + (-rhs)
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo(self.0.map(|c| -c))
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        let mut prod = [Ratio::<i64>::zero(); 7];
        for i in 0..4 {
            for j in 0..4 {
                prod[i + j] += self.0[i] * rhs.0[j];
            }
        }
        // ζ^k = ζ^{k-2} − ζ^{k-4} for k ≥ 4
        for k in (4..7).rev() {
            let c = prod[k];
            prod[k] = Ratio::zero();
            prod[k - 2] += c;
            prod[k - 4] -= c;
        }
        Cyclo([prod[0], prod[1], prod[2], prod[3]])
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{}+{}z+{}z^2+{}z^3", self.0[0], self.0[1], self.0[2], self.0[3]),
        }
    }
}
