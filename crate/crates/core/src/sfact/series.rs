use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::numkernel::principal_power;

/// Truncated exponential generating function `Σ_{n<=N} (z)_{s;n} x^n / n!`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratingSeries {
    pub z: Complex64,
    pub s: Complex64,
    pub coefficients: Vec<Complex64>,
}

/// Coefficients `c_n = (z)_{s;n} / n!` for `n = 0..=order`, built by `c_{n+1} = c_n (z+ns)/(n+1)`.
pub fn generating_series(z: Complex64, s: Complex64, order: usize) -> GeneratingSeries {
    let mut coefficients = Vec::with_capacity(order + 1);
    let mut c = Complex64::one();
    for n in 0..=order {
        coefficients.push(c);
        c = c * (z + s * n as f64) / (n as f64 + 1.0);
    }
    GeneratingSeries { z, s, coefficients }
}

impl GeneratingSeries {
    pub fn truncation_order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// The full series converges for `|s x| < 1` (everywhere when `s = 0`).
    pub fn converges_at(&self, x: Complex64) -> bool {
        (self.s * x).norm() < 1.0
    }

    /// Partial sum at `x` (Horner).
    pub fn evaluate(&self, x: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * x + c)
    }

    /// The summed series: `(1 - s x)^(-z/s)`, or `exp(x z)` when `s = 0`.
    pub fn closed_form(&self, x: Complex64) -> Result<Complex64> {
        if self.s == Complex64::zero() {
            return Ok((x * self.z).exp());
        }
        principal_power(Complex64::one() - self.s * x, -self.z / self.s)
    }
}
