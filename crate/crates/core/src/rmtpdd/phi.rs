use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::ensemble::{Ensemble, EnsembleSpec, Parity};
use super::quad::{integrate_with_magnitude, Interval, Node, Rule};
use crate::error::{Error, Result};
use crate::numkernel::{binomial_u64, c64, complex_gamma, recip_gamma, Scalar};

pub(crate) fn check_convergence(ens: &Ensemble, s: Complex64) -> Result<()> {
    let ok = match *ens {
        Ensemble::Laguerre { alpha } => s.re + alpha > 0.0,
        _ => s.re > 0.0,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!("the {} moment integral diverges at s = {s}", ens.name())))
    }
}

fn lift<T: Scalar>(v: f64) -> Result<T> {
    T::from_c64(c64(v, 0.0)).ok_or_else(|| Error::Unsupported(format!("{v} has no representation in the target scalar")))
}

/// `∫ w(x) ε(x) |x|^{s-1} x^m dx` for the Gegenbauer weight.
fn gegenbauer_moment<T: Scalar>(lambda: f64, m: usize, s: &T, parity: Parity) -> Result<T> {
    if !keeps_even(m, parity) {
        return Ok(T::zero());
    }
    let h = (s.clone() + T::from_int(m as i64)) * lift(0.5)?;
    let shift = lift::<T>(lambda + 0.5)?;
    Ok(shift.gamma()? * h.gamma()? * (h + shift).recip_gamma()?)
}

/// Coefficients of `x^m` in `(x-1)^j (x+1)^k`.
fn jacobi_basis_coefficients(j: usize, k: usize) -> Vec<i64> {
    let binom = |n: usize, r: usize| binomial_u64(n as u64, r as u64).to_i64().unwrap_or(i64::MAX);
    let mut c = vec![0; j + k + 1];
    for p in 0..=j {
        let sign = if (j - p).is_multiple_of(2) { 1 } else { -1 };
        for q in 0..=k {
            c[p + q] += sign * binom(j, p) * binom(k, q);
        }
    }
    c
}

/// `Φ_{j,k}` of the symmetric Jacobi weight in the basis `(x-1)^j`, `(1+x)^k`, by expanding
/// the basis in monomials.
fn jacobi_symmetric_element<T: Scalar>(a: f64, j: usize, k: usize, s: &T, parity: Parity) -> Result<T> {
    let lambda = a + 0.5;
    let mut acc = T::zero();
    for (m, cm) in jacobi_basis_coefficients(j, k).into_iter().enumerate() {
        if cm != 0 {
            acc = acc + T::from_int(cm) * gegenbauer_moment(lambda, m, s, parity)?;
        }
    }
    Ok(acc)
}

fn jacobi_at_one<T: Scalar>(a: f64, b: f64, j: usize, k: usize) -> Result<T> {
    let (ji, ki) = (j as i64, k as i64);
    let sign = T::from_int(if j.is_multiple_of(2) { 1 } else { -1 });
    let base = lift::<T>(a + b + 2.0)?;
    let g = (lift::<T>(a + 1.0)? + T::from_int(ji)).gamma()?
        * (lift::<T>(b + 1.0)? + T::from_int(ki)).gamma()?
        * (base + T::from_int(ji + ki)).recip_gamma()?;
    Ok(g * sign * lift(2f64.powf(a + b + 1.0))? * T::from_int(2).powi((j + k) as i32))
}

/// `Φ_{j,k}` of the Jacobi weight at `s = 1`, even part:
/// `(-1)^j 2^{a+b+1+j+k} Γ(a+1+j) Γ(b+1+k) / Γ(a+b+2+j+k)`.
pub fn jacobi_element_at_one(a: f64, b: f64, j: usize, k: usize) -> Result<Complex64> {
    jacobi_at_one(a, b, j, k)
}

/// [`phi_element`] in any scalar with a gamma function. Parameters enter as doubles; `s` and
/// every gamma argument built from it are formed in `T`.
pub fn phi_element_in<T: Scalar>(ens: &EnsembleSpec, j: usize, k: usize, s: &T, parity: Parity) -> Result<T> {
    ens.validate()?;
    let sc = s.to_c64();
    check_convergence(&ens.kind, sc)?;
    let m = j + k;
    let mt = T::from_int(m as i64);
    match ens.kind {
        Ensemble::Hermite => {
            if !keeps_even(m, parity) {
                return Ok(T::zero());
            }
            ((s.clone() + mt) * lift(0.5)?).gamma()
        }
        Ensemble::Laguerre { alpha } => (s.clone() + lift(alpha)? + mt).gamma(),
        Ensemble::Gegenbauer { lambda } => gegenbauer_moment(lambda, m, s, parity),
        Ensemble::Jacobi { a, b } => {
            if sc == c64(1.0, 0.0) && parity == Parity::Plus {
                jacobi_at_one(a, b, j, k)
            } else if a == b {
                jacobi_symmetric_element(a, j, k, s, parity)
            } else {
                Err(Error::Unsupported(format!(
                    "Jacobi elements with a != b are only available at s = 1, parity + (got s = {sc}, parity {parity})"
                )))
            }
        }
    }
}

/// Closed-form element `Φ^±_{j,k}(s) = ∫ w(x) ε^±(x) |x|^{s-1} P_j(x) Q_k(x) dx`.
///
/// The basis is `x^j`, `x^k` except for Jacobi, which uses `(x-1)^j`, `(1+x)^k`:
///
/// * Hermite: `(1 ± (-1)^{j+k})/2 · Γ((s+j+k)/2)`
/// * Laguerre: `Γ(s+alpha+j+k)` for both parities
/// * Gegenbauer: `(1 ± (-1)^{j+k})/2 · Γ(lambda+1/2) Γ((s+j+k)/2) / Γ(lambda+(s+j+k+1)/2)`
/// * Jacobi: the gamma form of [`jacobi_element_at_one`] at `s = 1`, even part; for `a = b`
///   any `s`, by expanding the basis in monomials. Other Jacobi cases are unsupported.
pub fn phi_element(ens: &EnsembleSpec, j: usize, k: usize, s: Complex64, parity: Parity) -> Result<Complex64> {
    phi_element_in(ens, j, k, &s, parity)
}

/// Whether `(1 ± (-1)^m)/2` is one, i.e. the parity keeps the moment of order `m` of an
/// even weight.
fn keeps_even(m: usize, parity: Parity) -> bool {
    match parity {
        Parity::Plus => m.is_multiple_of(2),
        Parity::Minus => m % 2 == 1,
    }
}

fn basis(ens: &Ensemble, j: usize, k: usize, x: f64) -> f64 {
    match ens {
        Ensemble::Jacobi { .. } => (x - 1.0).powi(j as i32) * (1.0 + x).powi(k as i32),
        _ => x.powi((j + k) as i32),
    }
}

/// Quadrature of the defining integral of [`phi_element`] for real `s`, splitting the domain
/// at `x = 0` so the `|x|^{s-1}` factor sits at an interval end.
pub fn quadrature_phi(ens: &EnsembleSpec, j: usize, k: usize, s: f64, parity: Parity) -> Result<Complex64> {
    quadrature_phi_with(ens, j, k, s, parity, &Rule::default())
}

pub fn quadrature_phi_with(
    ens: &EnsembleSpec,
    j: usize,
    k: usize,
    s: f64,
    parity: Parity,
    rule: &Rule,
) -> Result<Complex64> {
    quadrature_phi_magnitude(ens, j, k, s, parity, rule).map(|(v, _)| v)
}

/// [`quadrature_phi_with`] together with the integral of the integrand's magnitude, the scale
/// against which a cancelling element should be compared.
pub fn quadrature_phi_magnitude(
    ens: &EnsembleSpec,
    j: usize,
    k: usize,
    s: f64,
    parity: Parity,
    rule: &Rule,
) -> Result<(Complex64, f64)> {
    ens.validate()?;
    check_convergence(&ens.kind, c64(s, 0.0))?;
    let sign = parity.sign();
    let kind = ens.kind;
    let pq = |x: f64| basis(&kind, j, k, x);
    let fold = |g: f64, h: f64| (g + sign * h, g.abs() + h.abs());
    let (value, magnitude) = match kind {
        Ensemble::Hermite => integrate_with_magnitude(Interval::UpperHalf { lo: 0.0 }, rule, |n: Node| {
            let x = n.x;
            let w = (-x * x + (s - 1.0) * x.ln()).exp();
            fold(w * pq(x), w * pq(-x))
        })?,
        Ensemble::Laguerre { alpha } => integrate_with_magnitude(Interval::UpperHalf { lo: 0.0 }, rule, |n: Node| {
            let x = n.x;
            let v = (-x + (alpha + s - 1.0) * x.ln()).exp() * pq(x);
            (v, v.abs())
        })?,
        Ensemble::Gegenbauer { lambda } => {
            let e = lambda - 0.5;
            integrate_with_magnitude(Interval::Finite { lo: 0.0, hi: 1.0 }, rule, |n: Node| {
                let (x, c) = (n.from_lo, n.to_hi);
                let w = x.powf(s - 1.0) * (c * (1.0 + x)).powf(e);
                fold(w * pq(x), w * pq(-x))
            })?
        }
        Ensemble::Jacobi { a, b } => integrate_with_magnitude(Interval::Finite { lo: 0.0, hi: 1.0 }, rule, |n: Node| {
            let (x, c) = (n.from_lo, n.to_hi);
            let w = x.powf(s - 1.0);
            let right = c.powf(a) * (1.0 + x).powf(b) * (-c).powi(j as i32) * (1.0 + x).powi(k as i32);
            let left = (1.0 + x).powf(a) * c.powf(b) * (-(1.0 + x)).powi(j as i32) * c.powi(k as i32);
            fold(w * right, w * left)
        })?,
    };
    Ok((c64(value, 0.0), magnitude))
}

/// `det[Γ(b+i+j)]_{i,j<m} = ∏_{j<m} j! Γ(b+j)`.
pub fn hankel_gamma(b: Complex64, m: usize) -> Result<Complex64> {
    let mut acc = c64(1.0, 0.0);
    let mut fact = 1.0;
    for j in 0..m {
        if j > 0 {
            fact *= j as f64;
        }
        acc *= fact * complex_gamma(b + j as f64)?;
    }
    Ok(acc)
}

/// `det[Γ(c+i+j)/Γ(d+i+j)]_{i,j<m} = ∏_{j<m} j! (d-c)_j Γ(c+j) / Γ(d+m-1+j)`.
pub fn hankel_gamma_ratio(c: Complex64, d: Complex64, m: usize) -> Result<Complex64> {
    let mut acc = c64(1.0, 0.0);
    let mut fact = 1.0;
    let mut rising = c64(1.0, 0.0);
    for j in 0..m {
        if j > 0 {
            fact *= j as f64;
            rising *= d - c + (j - 1) as f64;
        }
        acc *= fact * rising * complex_gamma(c + j as f64)? * recip_gamma(d + (m - 1 + j) as f64);
    }
    Ok(acc)
}

/// `det[1/Γ(b+i+j)]_{i,j<m} = (-1)^{m(m-1)/2} ∏_{j<m} j! / Γ(b+m-1+j)`.
pub fn hankel_recip_gamma(b: Complex64, m: usize) -> Complex64 {
    let mut acc = c64(if (m * m.saturating_sub(1) / 2).is_multiple_of(2) { 1.0 } else { -1.0 }, 0.0);
    let mut fact = 1.0;
    for j in 0..m {
        if j > 0 {
            fact *= j as f64;
        }
        acc *= fact * recip_gamma(b + (m - 1 + j) as f64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::detform::{det_oracle, DetKind, DeterminantSpec, Matrix, NodeSet};
    use std::f64::consts::PI;

    fn spec(kind: Ensemble) -> EnsembleSpec {
        EnsembleSpec::new(kind, 1).unwrap()
    }

    fn close(a: Complex64, b: f64, tol: f64) -> bool {
        (a - c64(b, 0.0)).norm() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn documented_elements() {
        let h = spec(Ensemble::Hermite);
        assert_eq!(phi_element(&h, 0, 1, c64(1.0, 0.0), Parity::Plus).unwrap(), Complex64::zero());
        assert!(close(phi_element(&h, 0, 0, c64(2.0, 0.0), Parity::Plus).unwrap(), 1.0, 1e-14));
        let l = spec(Ensemble::Laguerre { alpha: 0.0 });
        assert!(close(phi_element(&l, 0, 0, c64(1.0, 0.0), Parity::Plus).unwrap(), 1.0, 1e-14));
        let l1 = spec(Ensemble::Laguerre { alpha: 1.0 });
        assert!(close(phi_element(&l1, 1, 0, c64(1.0, 0.0), Parity::Minus).unwrap(), 2.0, 1e-14));
        let leg = spec(Ensemble::Gegenbauer { lambda: 0.5 });
        assert!(close(phi_element(&leg, 0, 0, c64(1.0, 0.0), Parity::Plus).unwrap(), 2.0, 1e-14));
        assert!(close(phi_element(&h, 0, 0, c64(1.0, 0.0), Parity::Plus).unwrap(), PI.sqrt(), 1e-14));
    }

    #[test]
    fn documented_quadratures() {
        let h = spec(Ensemble::Hermite);
        assert!(close(quadrature_phi(&h, 0, 0, 1.0, Parity::Plus).unwrap(), PI.sqrt(), 1e-12));
        assert!(close(quadrature_phi(&h, 0, 0, 2.0, Parity::Plus).unwrap(), 1.0, 1e-12));
        let leg = spec(Ensemble::Gegenbauer { lambda: 0.5 });
        assert!(close(quadrature_phi(&leg, 0, 0, 1.0, Parity::Plus).unwrap(), 2.0, 1e-12));
        let l1 = spec(Ensemble::Laguerre { alpha: 1.0 });
        assert!(close(quadrature_phi(&l1, 1, 0, 1.0, Parity::Plus).unwrap(), 2.0, 1e-12));
        let odd = quadrature_phi(&h, 1, 1, 1.5, Parity::Minus).unwrap();
        assert!(odd.norm() < 1e-14);
    }

    #[test]
    fn jacobi_symmetric_matches_gamma_form_at_one() {
        for (j, k) in [(0, 0), (1, 0), (2, 3), (4, 4)] {
            let direct = jacobi_element_at_one(1.5, 1.5, j, k).unwrap();
            let expanded = jacobi_symmetric_element(1.5, j, k, &c64(1.0, 0.0), Parity::Plus).unwrap();
            assert!((direct - expanded).norm() <= 1e-12 * direct.norm(), "({j},{k})");
        }
    }

    #[test]
    fn jacobi_unsupported_case() {
        let jac = spec(Ensemble::Jacobi { a: 1.5, b: 2.5 });
        assert!(matches!(phi_element(&jac, 0, 0, c64(2.0, 0.0), Parity::Plus), Err(Error::Unsupported(_))));
        assert!(phi_element(&jac, 0, 0, c64(1.0, 0.0), Parity::Plus).is_ok());
    }

    #[test]
    fn divergent_moments_are_rejected() {
        let l = spec(Ensemble::Laguerre { alpha: -0.5 });
        assert!(matches!(phi_element(&l, 0, 0, c64(0.4, 0.0), Parity::Plus), Err(Error::Domain(_))));
        assert!(matches!(quadrature_phi(&spec(Ensemble::Hermite), 0, 0, -1.0, Parity::Plus), Err(Error::Domain(_))));
    }

    #[test]
    fn hankel_forms_match_node_determinants() {
        let b = c64(0.8, 0.3);
        for m in 1..=5 {
            let nodes = NodeSet::new((0..m).map(|j| b + j as f64).collect()).unwrap();
            let g = DeterminantSpec::new(DetKind::GammaShift, c64(1.0, 0.0)).det_closed(&nodes).unwrap();
            assert!((hankel_gamma(b, m).unwrap() - g).norm() <= 1e-12 * g.norm());
            let r = DeterminantSpec::new(DetKind::InvGamma, c64(1.0, 0.0)).det_closed(&nodes).unwrap();
            assert!((hankel_recip_gamma(b, m) - r).norm() <= 1e-12 * r.norm());
            let d = c64(2.1, -0.4);
            let spec = DeterminantSpec::new(DetKind::GammaRatio, c64(1.0, 0.0)).with_ab(c64(1.0, 0.0), d - b);
            let q = spec.det_closed(&nodes).unwrap();
            assert!((hankel_gamma_ratio(b, d, m).unwrap() - q).norm() <= 1e-12 * q.norm());
            let lu = det_oracle(&Matrix::from_fn(m, |i, j| complex_gamma(b + (i + j) as f64).unwrap()));
            assert!((hankel_gamma(b, m).unwrap() - lu).norm() <= 1e-10 * lu.norm());
        }
    }
}
