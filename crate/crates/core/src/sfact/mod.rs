//! The s-shifted factorial `(z)_{s;t}`.
//!
//! For a nonnegative integer index it is the product `z (z+s) ... (z+(n-1)s)`; it reduces to
//! the power `z^n` at `s = 0`, to the rising factorial at `s = 1` and to the falling factorial
//! at `s = -1`. Negative integer indices are reciprocals of products, and a complex index goes
//! through the gamma ratio `s^t Γ(z/s + t) / Γ(z/s)`.
//!
//! Integer indices are always evaluated as products, never as gamma ratios, so removable
//! singularities such as `(-2)_{1;3} = 0` come out exactly instead of as pole errors.
//! Every integer-index function is generic over [`Scalar`] and is exact on rationals.

mod connecting;
mod series;

pub use connecting::{connecting_table, ConnectingCoefficients, ConnectingKind};
pub use series::{generating_series, GeneratingSeries};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, PoleError, Result};
use crate::numkernel::{complex_log_gamma, nonpositive_integer, principal_power, Scalar, POLE_TOLERANCE};

/// `(z)_{s;n} = z (z+s) ... (z+(n-1)s)`, and `1` for `n = 0`.
pub fn sf_product<T: Scalar>(z: &T, s: &T, n: u32) -> T {
    let mut acc = T::one();
    let mut term = z.clone();
    for _ in 0..n {
        acc = acc * term.clone();
        term = term + s.clone();
    }
    acc
}

/// `(z)_{s;-q} = 1 / ((z-qs)(z-(q-1)s)...(z-s))`.
pub fn sf_negative<T: Scalar>(z: &T, s: &T, q: u32) -> Result<T> {
    let mut denom = T::one();
    for k in 1..=q {
        let factor = z.clone() - T::from_int(k as i64) * s.clone();
        if factor.near_zero() {
            return Err(PoleError::new(
                factor.to_c64(),
                format!("factor z - {k}s vanishes in (z)_{{s;-{q}}}"),
            )
            .into());
        }
        denom = denom * factor;
    }
    Ok(T::one() / denom)
}

/// `(z)_{s;q}` for any integer `q`.
pub fn sf_int<T: Scalar>(z: &T, s: &T, q: i64) -> Result<T> {
    if q >= 0 {
        Ok(sf_product(z, s, q as u32))
    } else {
        sf_negative(z, s, q.unsigned_abs() as u32)
    }
}

fn as_integer(t: Complex64) -> Option<i64> {
    (t.im == 0.0 && t.re.fract() == 0.0 && t.re.abs() < 1e9).then_some(t.re as i64)
}

/// The generalized s-shifted factorial for complex `z`, `s`, `t`.
///
/// Integer `t` dispatches to the product forms; `s == 0` (exactly) dispatches to the
/// principal power `z^t`; everything else uses [`sf_gamma_ratio`].
pub fn sf_general(z: Complex64, s: Complex64, t: Complex64) -> Result<Complex64> {
    if let Some(q) = as_integer(t) {
        return sf_int(&z, &s, q);
    }
    if s == Complex64::zero() {
        return principal_power(z, t);
    }
    sf_gamma_ratio(z, s, t)
}

/// `s^t Γ(z/s + t) / Γ(z/s)` evaluated through log-gamma differences, regardless of whether
/// `t` is an integer. `s^t` is the principal power, so `s = 1` contributes exactly `1`.
pub fn sf_gamma_ratio(z: Complex64, s: Complex64, t: Complex64) -> Result<Complex64> {
    if s == Complex64::zero() {
        return Err(Error::Domain("gamma-ratio form needs a nonzero shift".into()));
    }
    let x = z / s;
    if let Some(k) = nonpositive_integer(x, POLE_TOLERANCE) {
        return Err(PoleError::new(x, format!("z/s = {k} is a pole of Γ(z/s)")).into());
    }
    let log_ratio = complex_log_gamma(x + t)? - complex_log_gamma(x)?;
    Ok(principal_power(s, t)? * log_ratio.exp())
}

/// Rising factorial `(z)_t = (z)_{1;t}`.
pub fn rising(z: Complex64, t: Complex64) -> Result<Complex64> {
    sf_general(z, Complex64::one(), t)
}

/// Falling factorial `[z]_t = (z)_{-1;t}`.
pub fn falling(z: Complex64, t: Complex64) -> Result<Complex64> {
    sf_general(z, -Complex64::one(), t)
}

/// Generalized binomial coefficient `C(z, k) = [z]_k / k!`, zero for `k < 0`.
pub fn gen_binomial<T: Scalar>(z: &T, k: i64) -> T {
    if k < 0 {
        return T::zero();
    }
    let k = k as u32;
    let fact = sf_product(&T::one(), &T::one(), k);
    sf_product(z, &-T::one(), k) / fact
}

/// `Δ_s^p (z)_{s;t} = [t]_p s^p (z+ps)_{s;t-p}`, where `Δ_s f(z) = f(z+s) - f(z)`.
pub fn delta_s_power(z: Complex64, s: Complex64, t: Complex64, p: u32) -> Result<Complex64> {
    if p == 0 {
        return sf_general(z, s, t);
    }
    let falling_t = sf_product(&t, &-Complex64::one(), p);
    if falling_t == Complex64::zero() {
        return Ok(Complex64::zero());
    }
    let pf = p as f64;
    Ok(falling_t * s.powi(p as i32) * sf_general(z + pf * s, s, t - pf)?)
}

/// Coefficients of `(z)_{s;n}` in the monomial basis, lowest degree first.
///
/// The coefficient of `z^k` is `c(n,k) s^(n-k)` with `c` the unsigned Stirling numbers of
/// the first kind.
pub fn monomial_expansion<T: Scalar>(s: &T, n: u32) -> Vec<T> {
    let table = connecting_table(ConnectingKind::StirlingFirst, n as usize);
    (0..=n as usize)
        .map(|k| {
            let unsigned: BigInt = table.get(n as usize, k).magnitude().clone().into();
            T::from_bigint(&unsigned) * s.powi((n as usize - k) as i32)
        })
        .collect()
}

/// Index regime of an s-shifted factorial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Index {
    NonNegInt(u32),
    Int(i64),
    Complex(Complex64),
}

/// Arguments `(z, s, index)` of one s-shifted factorial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SFArgs {
    pub z: Complex64,
    pub s: Complex64,
    pub index: Index,
}

impl SFArgs {
    pub fn new(z: Complex64, s: Complex64, index: Index) -> Self {
        SFArgs { z, s, index }
    }

    pub fn evaluate(&self) -> Result<Complex64> {
        match self.index {
            Index::NonNegInt(n) => Ok(sf_product(&self.z, &self.s, n)),
            Index::Int(q) => sf_int(&self.z, &self.s, q),
            Index::Complex(t) => sf_general(self.z, self.s, t),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::{c64, ExactRational};

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn product_examples() {
        assert_eq!(sf_product(&c64(7.3, 0.0), &c64(-2.1, 0.0), 0), c64(1.0, 0.0));
        assert_eq!(sf_product(&c64(1.0, 0.0), &c64(1.0, 0.0), 4), c64(24.0, 0.0));
        assert_eq!(sf_product(&c64(-2.0, 0.0), &c64(1.0, 0.0), 3), c64(0.0, 0.0));
        assert_eq!(sf_product(&q(3, 1), &q(-1, 1), 3), q(6, 1));
    }

    #[test]
    fn s_times_factorial_special_value() {
        // (s)_{s;n} = n! s^n
        let s = q(3, 7);
        for n in 0..8u32 {
            let fact = sf_product(&q(1, 1), &q(1, 1), n);
            assert_eq!(sf_product(&s, &s, n), fact * s.powi(n as i32));
        }
    }

    #[test]
    fn negative_index_examples() {
        assert_eq!(sf_negative(&q(3, 1), &q(1, 1), 1).unwrap(), q(1, 2));
        assert_eq!(sf_negative(&q(5, 1), &q(1, 1), 2).unwrap(), q(1, 12));
        assert_eq!(sf_int(&q(5, 1), &q(1, 1), 0).unwrap(), q(1, 1));
        let err = sf_negative(&q(3, 1), &q(1, 1), 3).unwrap_err();
        assert!(matches!(err, Error::Pole(_)));
    }

    #[test]
    fn general_examples() {
        let z = c64(2.5, 1.0);
        let s = c64(0.7, 0.0);
        assert_eq!(sf_general(z, s, c64(0.0, 0.0)).unwrap(), c64(1.0, 0.0));
        assert!(close(sf_general(z, s, c64(1.0, 0.0)).unwrap(), z, 1e-15));
        // through the gamma ratio, at an integer index
        assert!(close(sf_gamma_ratio(z, s, c64(1.0, 0.0)).unwrap(), z, 1e-13));
        assert!(close(sf_gamma_ratio(c64(3.0, 0.0), c64(1.0, 0.0), c64(5.0, 0.0)).unwrap(), c64(2520.0, 0.0), 1e-13));
        assert_eq!(sf_general(c64(3.0, 0.0), c64(1.0, 0.0), c64(5.0, 0.0)).unwrap(), c64(2520.0, 0.0));
    }

    #[test]
    fn integer_index_never_hits_gamma_poles() {
        assert_eq!(sf_general(c64(-2.0, 0.0), c64(1.0, 0.0), c64(3.0, 0.0)).unwrap(), c64(0.0, 0.0));
        assert!(sf_gamma_ratio(c64(-2.0, 0.0), c64(1.0, 0.0), c64(3.0, 0.0)).is_err());
    }

    #[test]
    fn zero_shift_is_a_power() {
        let z = c64(1.3, -0.4);
        let t = c64(0.6, 0.2);
        assert_eq!(sf_general(z, c64(0.0, 0.0), t).unwrap(), principal_power(z, t).unwrap());
        assert!(sf_general(c64(0.0, 0.0), c64(0.0, 0.0), c64(-0.5, 0.0)).is_err());
    }

    #[test]
    fn rising_and_falling() {
        assert_eq!(rising(c64(3.0, 0.0), c64(2.0, 0.0)).unwrap(), c64(12.0, 0.0));
        assert_eq!(falling(c64(3.0, 0.0), c64(2.0, 0.0)).unwrap(), c64(6.0, 0.0));
        assert_eq!(falling(c64(2.0, 0.0), c64(3.0, 0.0)).unwrap(), c64(0.0, 0.0));
        // non-integer index through Γ(z+t)/Γ(z)
        let r = rising(c64(0.5, 0.0), c64(0.5, 0.0)).unwrap();
        assert!(close(r, c64(1.0 / std::f64::consts::PI.sqrt(), 0.0), 1e-13));
    }

    #[test]
    fn delta_power_examples() {
        let z = c64(1.0, 0.0);
        let s = c64(1.0, 0.0);
        let t = c64(3.0, 0.0);
        assert_eq!(delta_s_power(z, s, t, 0).unwrap(), sf_general(z, s, t).unwrap());
        assert_eq!(delta_s_power(z, s, t, 1).unwrap(), c64(18.0, 0.0));
        assert_eq!(delta_s_power(z, s, c64(2.0, 0.0), 3).unwrap(), c64(0.0, 0.0));
        // second route: (2)_{1;3} - (1)_{1;3}
        assert_eq!(
            sf_product(&c64(2.0, 0.0), &s, 3) - sf_product(&z, &s, 3),
            c64(18.0, 0.0)
        );
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(monomial_expansion(&q(1, 1), 0), vec![q(1, 1)]);
        assert_eq!(monomial_expansion(&q(1, 1), 2), vec![q(0, 1), q(1, 1), q(1, 1)]);
        assert_eq!(
            monomial_expansion(&q(2, 1), 3),
            vec![q(0, 1), q(8, 1), q(6, 1), q(1, 1)]
        );
    }

    #[test]
    fn monomial_expansion_matches_direct_polynomial_product() {
        // oracle: multiply out (z)(z+s)...(z+(n-1)s) coefficient by coefficient
        let s = q(-5, 3);
        for n in 0..=10u32 {
            let mut poly = vec![q(1, 1)];
            for k in 0..n {
                let shift = s.clone() * q(k as i64, 1);
                let mut next = vec![q(0, 1); poly.len() + 1];
                for (d, c) in poly.iter().enumerate() {
                    next[d + 1] = next[d + 1].clone() + c.clone();
                    next[d] = next[d].clone() + c.clone() * shift.clone();
                }
                poly = next;
            }
            let got = monomial_expansion(&s, n);
            assert_eq!(got, poly, "n = {n}");
            if n >= 1 {
                // anchors: leading 1, next n(n-1)s/2, linear (n-1)! s^(n-1), constant 0
                assert_eq!(got[n as usize], q(1, 1));
                assert_eq!(got[0], q(0, 1));
                let fact = sf_product(&q(1, 1), &q(1, 1), n - 1);
                assert_eq!(got[1], fact * s.powi(n as i32 - 1));
                assert_eq!(got[n as usize - 1], q((n * (n - 1) / 2) as i64, 1) * s.clone());
            }
        }
    }

    #[test]
    fn sf_args_dispatch() {
        let z = c64(4.0, 0.0);
        let s = c64(1.0, 0.0);
        assert_eq!(SFArgs::new(z, s, Index::NonNegInt(2)).evaluate().unwrap(), c64(20.0, 0.0));
        assert_eq!(SFArgs::new(z, s, Index::Int(-1)).evaluate().unwrap(), c64(1.0 / 3.0, 0.0));
        let t = c64(0.5, 0.25);
        assert_eq!(
            SFArgs::new(z, s, Index::Complex(t)).evaluate().unwrap(),
            sf_gamma_ratio(z, s, t).unwrap()
        );
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(gen_binomial(&q(5, 1), 2), q(10, 1));
        assert_eq!(gen_binomial(&q(1, 2), 2), q(-1, 8));
        assert_eq!(gen_binomial(&q(4, 1), -1), q(0, 1));
        assert_eq!(gen_binomial(&q(3, 1), 5), q(0, 1));
    }
}
