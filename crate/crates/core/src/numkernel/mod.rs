//! Scalar arithmetic shared by every other module: complex and exact rational scalars,
//! the complex gamma function, principal powers, exact binomials and literal parsing.

mod exact;
mod extended;
mod gamma;
mod literal;
mod scalar;

pub use exact::{binomial_u64, exact_binomial, exact_factorial};
pub use extended::ExtendedComplex;
pub use gamma::{
    complex_gamma, complex_log_gamma, nonpositive_integer, principal_log, principal_power,
    recip_gamma, sin_pi,
};
pub use literal::{parse_complex, parse_rational};
pub use scalar::{
    relative_residual, sign_pow, ComplexScalar, ExactRational, Scalar, POLE_TOLERANCE,
};

use num_complex::Complex64;

/// Shorthand constructor.
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Running product kept as a sum of principal logarithms, for products of gamma values
/// that would overflow when multiplied directly. A zero factor short-circuits to zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogProduct {
    log: Complex64,
    zero: bool,
}

impl Default for LogProduct {
    fn default() -> Self {
        LogProduct {
            log: Complex64::new(0.0, 0.0),
            zero: false,
        }
    }
}

impl LogProduct {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn mul(&mut self, x: Complex64) -> &mut Self {
        if x == Complex64::new(0.0, 0.0) {
            self.zero = true;
        } else {
            self.log += principal_log(x);
        }
        self
    }

    pub fn div(&mut self, x: Complex64) -> Result<&mut Self, crate::error::Error> {
        if x == Complex64::new(0.0, 0.0) {
            return Err(crate::error::Error::Domain("division by zero in product".into()));
        }
        self.log -= principal_log(x);
        Ok(self)
    }

    pub fn mul_gamma(&mut self, z: Complex64) -> Result<&mut Self, crate::error::PoleError> {
        self.log += complex_log_gamma(z)?;
        Ok(self)
    }

    /// Multiply by `1/Γ(z)`; a pole of `Γ` makes the product zero.
    pub fn div_gamma(&mut self, z: Complex64) -> &mut Self {
        match complex_log_gamma(z) {
            Ok(lg) => self.log -= lg,
            Err(_) => self.zero = true,
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn value(&self) -> Complex64 {
        if self.zero {
            Complex64::new(0.0, 0.0)
        } else {
            self.log.exp()
        }
    }
}
