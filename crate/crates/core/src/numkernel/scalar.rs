use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::gamma::{complex_gamma, recip_gamma};
use crate::error::{Error, Result};
use crate::sfact::sf_general;

/// Double-precision complex value.
pub type ComplexScalar = Complex64;

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// Distance from a forbidden point below which a complex argument is treated as hitting it.
pub const POLE_TOLERANCE: f64 = 1e-10;

/// Field arithmetic shared by the floating complex path and the exact rational path.
///
/// Everything that only needs `+ - * /` (products of shifted factorials, binomial sums,
/// fraction-free elimination) is written once against this trait.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// `true` when the arithmetic is exact.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    fn from_bigint(v: &BigInt) -> Self;

    /// Zero for the purpose of side conditions: exact zero on rationals,
    /// `|x| < POLE_TOLERANCE` on complex values.
    fn near_zero(&self) -> bool;

    fn modulus(&self) -> f64;

    fn to_c64(&self) -> Complex64;

    /// Back-conversion from the complex path; `None` when the target type cannot represent it.
    fn from_c64(c: Complex64) -> Option<Self>;

    /// Integer power; negative exponents divide (callers check for zero first).
    fn powi(&self, e: i32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * self.clone();
        }
        if e < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }

    /// `Γ(x)`; unsupported on exact scalars.
    fn gamma(&self) -> Result<Self> {
        Err(Error::Unsupported(format!("gamma of {self:?} on an exact scalar")))
    }

    /// `1/Γ(x)`, zero at the poles; unsupported on exact scalars.
    fn recip_gamma(&self) -> Result<Self> {
        Err(Error::Unsupported(format!("reciprocal gamma of {self:?} on an exact scalar")))
    }

    /// `(z)_{s;t}` for a complex index `t`; unsupported on exact scalars.
    fn shifted_factorial(z: &Self, s: &Self, t: Complex64) -> Result<Self> {
        let _ = s;
        Err(Error::Unsupported(format!("s-shifted factorial of {z:?} with complex index {t}")))
    }

    fn checked_div(self, rhs: Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn from_bigint(v: &BigInt) -> Self {
        Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn near_zero(&self) -> bool {
        self.norm() < POLE_TOLERANCE
    }

    fn modulus(&self) -> f64 {
        self.norm()
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }

    fn from_c64(c: Complex64) -> Option<Self> {
        Some(c)
    }

    fn powi(&self, e: i32) -> Self {
        Complex64::powi(self, e)
    }

    fn gamma(&self) -> Result<Self> {
        Ok(complex_gamma(*self)?)
    }

    fn recip_gamma(&self) -> Result<Self> {
        Ok(recip_gamma(*self))
    }

    fn shifted_factorial(z: &Self, s: &Self, t: Complex64) -> Result<Self> {
        sf_general(*z, *s, t)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn near_zero(&self) -> bool {
        self.is_zero()
    }

    fn modulus(&self) -> f64 {
        self.to_f64().map_or(f64::INFINITY, f64::abs)
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn from_c64(_: Complex64) -> Option<Self> {
        None
    }
}

/// Relative difference `|a - b| / scale`, with `scale` floored at the larger modulus of the two.
///
/// Exactly zero on the rational path iff `a == b`.
pub fn relative_residual<T: Scalar>(a: &T, b: &T, scale: f64) -> f64 {
    let diff = (a.clone() - b.clone()).modulus();
    if diff == 0.0 {
        return 0.0;
    }
    let denom = scale.max(a.modulus()).max(b.modulus());
    if denom == 0.0 {
        diff
    } else {
        diff / denom
    }
}

/// `(-1)^k` in any scalar type.
pub fn sign_pow<T: Scalar>(k: i64) -> T {
    if k.rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_residual_is_exact() {
        let a = BigRational::new(1.into(), 3.into());
        let b = BigRational::new(2.into(), 6.into());
        assert_eq!(relative_residual(&a, &b, 0.0), 0.0);
        let c = BigRational::new(1.into(), 4.into());
        assert!(relative_residual(&a, &c, 0.0) > 0.0);
    }

    #[test]
    fn rational_powi_negative() {
        let two = BigRational::from_int(2);
        assert_eq!(two.powi(-3), BigRational::new(1.into(), 8.into()));
        assert_eq!(two.powi(0), BigRational::one());
    }

    #[test]
    fn sign_pow_parity() {
        assert_eq!(sign_pow::<BigRational>(3), BigRational::from_int(-1));
        assert_eq!(sign_pow::<BigRational>(-2), BigRational::one());
    }
}
