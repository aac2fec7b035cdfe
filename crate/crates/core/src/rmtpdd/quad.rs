//! Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh on `[lo, ∞)` and
//! sinh-sinh on the real line. Endpoint singularities of the form `(x - lo)^p` with
//! `p > -1` are integrated to near machine precision, which Gauss rules matched to a fixed
//! weight cannot do once an extra `|x|^{s-1}` factor is present.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Integration domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Interval {
    Finite { lo: f64, hi: f64 },
    UpperHalf { lo: f64 },
    Real,
}

/// A quadrature node with its distances to the interval ends (infinite for open ends).
/// Integrands should use `from_lo` and `to_hi` rather than `x - lo` and `hi - x`: near an
/// endpoint they keep full relative precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub x: f64,
    pub from_lo: f64,
    pub to_hi: f64,
}

/// Stopping rule: successive halvings of the step agree to `tolerance` relative to the
/// integral of `|f|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rule {
    pub tolerance: f64,
    pub min_level: u32,
    pub max_level: u32,
}

impl Default for Rule {
    fn default() -> Self {
        Rule { tolerance: 1e-13, min_level: 3, max_level: 9 }
    }
}

impl Interval {
    fn t_range(&self) -> (f64, f64) {
        match self {
            Interval::Finite { .. } => (-6.5, 6.5),
            Interval::UpperHalf { .. } => (-6.5, 4.5),
            Interval::Real => (-4.5, 4.5),
        }
    }

    /// Node and weight `dx/dt` at parameter `t`, or `None` once the node has collapsed
    /// onto an endpoint.
    fn node(&self, t: f64) -> Option<(Node, f64)> {
        let u = FRAC_PI_2 * t.sinh();
        let du = FRAC_PI_2 * t.cosh();
        match *self {
            Interval::Finite { lo, hi } => {
                let half = 0.5 * (hi - lo);
                let e = (-2.0 * u.abs()).exp();
                let near = half * 2.0 * e / (1.0 + e);
                let far = half * 2.0 / (1.0 + e);
                let weight = half * 4.0 * e / ((1.0 + e) * (1.0 + e)) * du;
                if near == 0.0 || weight == 0.0 {
                    return None;
                }
                let (from_lo, to_hi) = if u >= 0.0 { (far, near) } else { (near, far) };
                let x = if u >= 0.0 { hi - to_hi } else { lo + from_lo };
                Some((Node { x, from_lo, to_hi }, weight))
            }
            Interval::UpperHalf { lo } => {
                let d = u.exp();
                let weight = d * du;
                if d == 0.0 || !weight.is_finite() {
                    return None;
                }
                Some((Node { x: lo + d, from_lo: d, to_hi: f64::INFINITY }, weight))
            }
            Interval::Real => {
                let x = u.sinh();
                let weight = u.cosh() * du;
                if !weight.is_finite() {
                    return None;
                }
                Some((Node { x, from_lo: f64::INFINITY, to_hi: f64::INFINITY }, weight))
            }
        }
    }
}

/// Sum of `f * w` and `m * w` over `t = k h`, `k` restricted by `odd_only`, where `f`
/// returns the integrand value and magnitude `(f, m)`.
fn level_sum(interval: &Interval, f: &mut impl FnMut(Node) -> (f64, f64), h: f64, odd_only: bool) -> (f64, f64) {
    let (t_lo, t_hi) = interval.t_range();
    let mut sum = 0.0;
    let mut mass = 0.0;
    let step = if odd_only { 2 } else { 1 };
    let start = if odd_only { 1 } else { 0 };
    let mut visit = |t: f64, sum: &mut f64, mass: &mut f64| -> bool {
        match interval.node(t) {
            Some((node, w)) => {
                let (v, m) = f(node);
                *sum += v * w;
                *mass += m.abs() * w;
                true
            }
            None => false,
        }
    };
    let mut k = start;
    while k as f64 * h <= t_hi {
        if !visit(k as f64 * h, &mut sum, &mut mass) {
            break;
        }
        k += step;
    }
    let mut k = 1;
    while -(k as f64) * h >= t_lo {
        if !visit(-(k as f64) * h, &mut sum, &mut mass) {
            break;
        }
        k += step;
    }
    (sum, mass)
}

/// `∫ f(x) dx` over `interval`.
pub fn integrate(interval: Interval, rule: &Rule, mut f: impl FnMut(Node) -> f64) -> Result<f64> {
    integrate_with_magnitude(interval, rule, |n| {
        let v = f(n);
        (v, v.abs())
    })
    .map(|(v, _)| v)
}

/// `(∫ f(x) dx, ∫ m(x) dx)` with convergence judged against the second, where `f` returns
/// `(f, m)`.
/// For an integrand that is a difference of terms, `m` is the sum of their sizes, so an
/// integral that cancels to zero still converges.
pub fn integrate_with_magnitude(interval: Interval, rule: &Rule, mut f: impl FnMut(Node) -> (f64, f64)) -> Result<(f64, f64)> {
    let mut h = 1.0;
    let (mut sum, mut mass) = level_sum(&interval, &mut f, h, false);
    let mut estimate = sum * h;
    for level in 1..=rule.max_level {
        h *= 0.5;
        let (s, m) = level_sum(&interval, &mut f, h, true);
        sum += s;
        mass += m;
        let next = sum * h;
        if !next.is_finite() {
            return Err(Error::Quadrature(format!("non-finite integrand on {interval:?}")));
        }
        let scale = (mass * h).max(f64::MIN_POSITIVE);
        if level >= rule.min_level && (next - estimate).abs() <= rule.tolerance * scale {
            return Ok((next, mass * h));
        }
        estimate = next;
    }
    Err(Error::Quadrature(format!(
        "no agreement to {:e} after {} halvings on {interval:?} (last estimate {estimate:e})",
        rule.tolerance, rule.max_level
    )))
}

/// `∫ g(x) ∫ f(x, y) dy dx` as nested one-dimensional rules. Keeping the outer factor `g`
/// out of the inner integrand avoids overflow when both nodes sit at singular endpoints.
pub fn integrate_2d(
    outer: Interval,
    inner: Interval,
    rule: &Rule,
    outer_weight: impl Fn(Node) -> f64,
    f: impl Fn(Node, Node) -> f64,
) -> Result<f64> {
    let mut failure = None;
    let value = integrate(outer, rule, |p| match integrate(inner, rule, |q| f(p, q)) {
        Ok(v) => outer_weight(p) * v,
        Err(e) => {
            failure.get_or_insert(e);
            0.0
        }
    });
    match failure {
        Some(e) => Err(e),
        None => value,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn finite_with_endpoint_singularities() {
        let rule = Rule::default();
        // ∫_0^1 x^{-1/2} (1-x)^{-0.9} dx = B(1/2, 1/10)
        let v = integrate(Interval::Finite { lo: 0.0, hi: 1.0 }, &rule, |n| {
            n.from_lo.powf(-0.5) * n.to_hi.powf(-0.9)
        })
        .unwrap();
        let want = 11.323_086_975_215_753;
        assert!(rel(v, want) < 1e-11, "{v}");
        let v = integrate(Interval::Finite { lo: -1.0, hi: 3.0 }, &rule, |n| n.x * n.x).unwrap();
        assert!(rel(v, 28.0 / 3.0) < 1e-13);
    }

    #[test]
    fn cancelling_integrand_converges_against_magnitude() {
        let rule = Rule::default();
        let f = |n: Node| n.from_lo.powf(-0.3) * (n.x * n.x - n.x * n.x);
        assert!(integrate(Interval::Finite { lo: 0.0, hi: 1.0 }, &rule, f).is_ok());
        let v = integrate_with_magnitude(Interval::Finite { lo: 0.0, hi: 1.0 }, &rule, |n| {
            let (a, b) = (n.from_lo.powf(-0.3) * (1.0 + n.x).sqrt(), n.from_lo.powf(-0.3) * (1.0 + n.x).sqrt());
            (a - b, a.abs() + b.abs())
        })
        .unwrap();
        assert_eq!(v.0, 0.0);
        assert!(v.1 > 1.0);
    }

    #[test]
    fn half_line_and_real_line() {
        let rule = Rule::default();
        let v = integrate(Interval::UpperHalf { lo: 0.0 }, &rule, |n| (-n.x).exp() * n.x.powf(2.5)).unwrap();
        // Γ(3.5)
        assert!(rel(v, 3.323_350_970_447_843) < 1e-12, "{v}");
        let v = integrate(Interval::Real, &rule, |n| (-n.x * n.x).exp()).unwrap();
        assert!(rel(v, PI.sqrt()) < 1e-13, "{v}");
    }

    #[test]
    fn nested_rule() {
        let rule = Rule { tolerance: 1e-10, ..Rule::default() };
        let sq = Interval::Finite { lo: -1.0, hi: 1.0 };
        let v = integrate_2d(sq, sq, &rule, |_| 1.0, |p, q| (p.x - q.x).powi(2)).unwrap();
        assert!(rel(v, 8.0 / 3.0) < 1e-10, "{v}");
    }

    #[test]
    fn divergent_integral_reports_failure() {
        let rule = Rule::default();
        let r = integrate(Interval::Finite { lo: 0.0, hi: 1.0 }, &rule, |n| 1.0 / n.from_lo.powf(1.5));
        assert!(matches!(r, Err(Error::Quadrature(_))));
    }
}
