use num_complex::Complex64;
use num_traits::{One, Zero};

use super::kind::DetKind;
use super::matrix::{det_exact, det_lu, Matrix};
use crate::error::{Error, PoleError, Result};
use crate::numkernel::{
    nonpositive_integer, relative_residual, sign_pow, ExactRational, ExtendedComplex,
    LogProduct, Scalar, POLE_TOLERANCE,
};
use crate::sfact::{gen_binomial, sf_general, sf_negative, sf_product};

/// Ordered nodes `z_0 .. z_{n-1}`, `n >= 1`. Duplicates are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet<T = Complex64> {
    nodes: Vec<T>,
}

impl<T: Scalar> NodeSet<T> {
    pub fn new(nodes: Vec<T>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::Domain("a node set needs at least one node".into()));
        }
        Ok(NodeSet { nodes })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[T] {
        &self.nodes
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> NodeSet<T> {
        NodeSet {
            nodes: self.nodes.iter().map(f).collect(),
        }
    }

    /// Element-wise conversion to another scalar type.
    pub fn convert<U: Scalar>(&self, f: impl Fn(&T) -> U) -> NodeSet<U> {
        NodeSet {
            nodes: self.nodes.iter().map(f).collect(),
        }
    }
}

impl<T> std::ops::Index<usize> for NodeSet<T> {
    type Output = T;
    fn index(&self, j: usize) -> &T {
        &self.nodes[j]
    }
}

/// Product of differences `∏_{i<j} (z_j - z_i)`, `1` for a single node.
pub fn prod_diff<T: Scalar>(nodes: &[T]) -> T {
    let mut acc = T::one();
    for j in 1..nodes.len() {
        for i in 0..j {
            acc = acc * (nodes[j].clone() - nodes[i].clone());
        }
    }
    acc
}

/// Kind-specific parameters. Unused fields are ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct DetParams<T = Complex64> {
    pub a: Option<T>,
    pub b: Option<T>,
    pub t: Option<Complex64>,
    pub offsets: Vec<T>,
    pub w: Option<NodeSet<T>>,
}

impl<T> Default for DetParams<T> {
    fn default() -> Self {
        DetParams {
            a: None,
            b: None,
            t: None,
            offsets: Vec::new(),
            w: None,
        }
    }
}

/// A determinant family together with its shift and parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct DeterminantSpec<T = Complex64> {
    pub kind: DetKind,
    pub s: T,
    pub params: DetParams<T>,
}

impl<T: Scalar> DeterminantSpec<T> {
    pub fn new(kind: DetKind, s: T) -> Self {
        DeterminantSpec {
            kind,
            s,
            params: DetParams::default(),
        }
    }

    /// The same spec over another scalar type.
    pub fn convert<U: Scalar>(&self, f: impl Fn(&T) -> U) -> DeterminantSpec<U> {
        let p = &self.params;
        DeterminantSpec {
            kind: self.kind,
            s: f(&self.s),
            params: DetParams {
                a: p.a.as_ref().map(&f),
                b: p.b.as_ref().map(&f),
                t: p.t,
                offsets: p.offsets.iter().map(&f).collect(),
                w: p.w.as_ref().map(|w| w.convert(&f)),
            },
        }
    }

    pub fn with_ab(mut self, a: T, b: T) -> Self {
        self.params.a = Some(a);
        self.params.b = Some(b);
        self
    }

    pub fn with_t(mut self, t: Complex64) -> Self {
        self.params.t = Some(t);
        self
    }

    pub fn with_offsets(mut self, offsets: Vec<T>) -> Self {
        self.params.offsets = offsets;
        self
    }

    pub fn with_w(mut self, w: NodeSet<T>) -> Self {
        self.params.w = Some(w);
        self
    }

    fn a(&self) -> Result<T> {
        self.params.a.clone().ok_or_else(|| missing(self.kind, "a"))
    }

    fn b(&self) -> Result<T> {
        self.params.b.clone().ok_or_else(|| missing(self.kind, "b"))
    }

    fn t(&self) -> Result<Complex64> {
        self.params.t.ok_or_else(|| missing(self.kind, "t"))
    }

    fn w(&self, n: usize) -> Result<&[T]> {
        let w = self.params.w.as_ref().ok_or_else(|| missing(self.kind, "w"))?;
        if w.len() != n {
            return Err(Error::Domain(format!(
                "{}: second node set has {} nodes, expected {n}",
                self.kind,
                w.len()
            )));
        }
        Ok(w.as_slice())
    }

    fn offsets(&self, n: usize) -> Result<&[T]> {
        if self.params.offsets.len() != n {
            return Err(Error::Domain(format!(
                "{}: expected {n} offsets, got {}",
                self.kind,
                self.params.offsets.len()
            )));
        }
        Ok(&self.params.offsets)
    }

    /// Checks the family's exclusions on `nodes` and reports the first violated one.
    pub fn check_side_conditions(&self, nodes: &NodeSet<T>) -> Result<()> {
        let n = nodes.len();
        let z = nodes.as_slice();
        let s = self.s.clone();
        let kind = self.kind;
        // x + k*step must not vanish for k in ks
        let avoid = |x: &T, step: &T, ks: std::ops::Range<i64>, j: usize, what: &str| -> Result<()> {
            for k in ks {
                if (x.clone() + T::from_int(k) * step.clone()).near_zero() {
                    return Err(Error::SideCondition {
                        kind: kind.name(),
                        condition: format!("{what} hits the excluded value at k = {k}"),
                        index: j,
                    });
                }
            }
            Ok(())
        };
        let no_pole = |x: Complex64, j: usize, what: &str| -> Result<()> {
            match nonpositive_integer(x, POLE_TOLERANCE) {
                Some(k) => Err(Error::SideCondition {
                    kind: kind.name(),
                    condition: format!("{what} = {k} is a pole of the gamma function"),
                    index: j,
                }),
                None => Ok(()),
            }
        };
        let m = (n as i64 - 1).max(0);
        match kind {
            DetKind::SShifted | DetKind::InvNegIndex | DetKind::BinomialElem | DetKind::TwoSetBinomial => {}
            DetKind::InvGamma | DetKind::InvGammaNeg => {}
            DetKind::SShiftedOffsets => {
                self.offsets(n)?;
            }
            DetKind::TwoSetSymmetric => {
                self.w(n)?;
            }
            DetKind::SShiftedComplexIndex => {
                self.t()?;
                if !s.is_zero() {
                    for (j, zj) in z.iter().enumerate() {
                        no_pole((zj.clone() / s.clone()).to_c64(), j, "z_j/s")?;
                    }
                } else if self.t()?.re <= 0.0 {
                    for (j, zj) in z.iter().enumerate() {
                        avoid(zj, &s, 0..1, j, "z_j (power with Re t <= 0)")?;
                    }
                }
            }
            DetKind::InvSShifted => {
                for (j, zj) in z.iter().enumerate() {
                    avoid(zj, &s, 0..m, j, "z_j + k s, k = 0..n-2,")?;
                }
            }
            DetKind::RatioSShifted => {
                let (a, b) = (self.a()?, self.b()?);
                for (j, zj) in z.iter().enumerate() {
                    avoid(&(a.clone() * zj.clone() + b.clone()), &s, 0..m, j, "a z_j + b + k s, k = 0..n-2,")?;
                }
            }
            DetKind::NegIndex => {
                for (j, zj) in z.iter().enumerate() {
                    avoid(zj, &-s.clone(), 1..m + 1, j, "z_j - k s, k = 1..n-1,")?;
                }
            }
            DetKind::RatioNegIndex => {
                let (a, b) = (self.a()?, self.b()?);
                for (j, zj) in z.iter().enumerate() {
                    avoid(&(a.clone() * zj.clone() + b.clone()), &-s.clone(), 1..m + 1, j, "a z_j + b - k s, k = 1..n-1,")?;
                }
            }
            DetKind::GammaShift | DetKind::GammaRatio => {
                self.ab_if_needed()?;
                for (j, zj) in z.iter().enumerate() {
                    no_pole(zj.to_c64(), j, "z_j")?;
                }
            }
            DetKind::InvBinomial => {
                for (j, zj) in z.iter().enumerate() {
                    avoid(zj, &-T::one(), 0..m, j, "z_j - k, k = 0..n-2,")?;
                }
            }
            DetKind::BinomialRatio => {
                let (a, b) = (self.a()?, self.b()?);
                for (j, zj) in z.iter().enumerate() {
                    avoid(&(a.clone() * zj.clone() + b.clone()), &-T::one(), 0..m, j, "a z_j + b - k, k = 0..n-2,")?;
                }
            }
            DetKind::GammaNegShift => {
                for (j, zj) in z.iter().enumerate() {
                    no_pole(zj.to_c64() - m as f64, j, "z_j - (n-1)")?;
                }
            }
            DetKind::GammaRatioNeg => {
                let (a, b) = (self.a()?, self.b()?);
                for (j, zj) in z.iter().enumerate() {
                    let x = (a.clone() * zj.clone() + b.clone()).to_c64();
                    no_pole(x - m as f64, j, "a z_j + b - (n-1)")?;
                }
            }
            DetKind::TwoSetGammaRatio => {
                let w = self.w(n)?;
                for (i, zi) in z.iter().enumerate() {
                    for wj in w {
                        no_pole((zi.clone() + wj.clone()).to_c64(), i, "z_i + w_j")?;
                    }
                }
            }
        }
        Ok(())
    }

    fn ab_if_needed(&self) -> Result<()> {
        if self.kind.uses_ab() {
            self.a()?;
            self.b()?;
        }
        Ok(())
    }

    /// The matrix `[M_{i,j}]` with row index `i` and column (node) index `j`.
    pub fn build_matrix(&self, nodes: &NodeSet<T>) -> Result<Matrix<T>> {
        self.check_side_conditions(nodes)?;
        let n = nodes.len();
        let z = nodes.as_slice();
        let s = self.s.clone();
        let one = T::one();
        let neg_one = -T::one();
        let kind = self.kind;
        let exact_unsupported = |e: Error| match e {
            Error::Unsupported(_) => Error::Unsupported(format!("{kind} has no exact evaluation path")),
            other => other,
        };
        let gamma = |x: T, i: usize, j: usize| -> Result<T> {
            x.gamma().map_err(|e| match e {
                Error::Pole(p) => PoleError::new(p.location, format!("{kind} entry ({i},{j}): {}", p.context)).into(),
                other => exact_unsupported(other),
            })
        };
        let recip = |x: T| -> Result<T> { x.recip_gamma().map_err(exact_unsupported) };
        let ab = if kind.uses_ab() { Some((self.a()?, self.b()?)) } else { None };
        let w = if kind.two_sets() { Some(self.w(n)?.to_vec()) } else { None };
        let last = n as u32 - 1;
        Matrix::try_from_fn(n, |i, j| -> Result<T> {
            let iu = i as u32;
            let zj = z[j].clone();
            let fi = T::from_int(i as i64);
            match kind {
                DetKind::SShifted => Ok(sf_product(&zj, &s, iu)),
                DetKind::SShiftedOffsets => {
                    let b = &self.params.offsets[i];
                    Ok(sf_product(&(b.clone() + zj), &s, iu))
                }
                DetKind::SShiftedComplexIndex => {
                    let t = self.t()?;
                    T::shifted_factorial(&zj, &s, t + i as f64).map_err(exact_unsupported)
                }
                DetKind::InvSShifted => Ok(one.clone() / sf_product(&zj, &s, iu)),
                DetKind::RatioSShifted => {
                    let (a, b) = ab.clone().unwrap();
                    Ok(sf_product(&zj, &s, iu) / sf_product(&(a * zj.clone() + b), &s, iu))
                }
                DetKind::NegIndex => sf_negative(&zj, &s, iu),
                DetKind::InvNegIndex => Ok(sf_product(&(zj - s.clone()), &-s.clone(), iu)),
                DetKind::RatioNegIndex => {
                    let (a, b) = ab.clone().unwrap();
                    Ok(sf_negative(&(a * zj.clone() + b), &s, iu)? * sf_product(&(zj - s.clone()), &-s.clone(), iu))
                }
                DetKind::TwoSetSymmetric => {
                    let w = w.as_ref().unwrap();
                    Ok(sf_product(&(z[i].clone() + w[j].clone()), &s, last))
                }
                DetKind::GammaShift => gamma(zj + fi, i, j),
                DetKind::BinomialElem => Ok(gen_binomial(&zj, i as i64)),
                DetKind::InvGamma => recip(zj + fi),
                DetKind::InvBinomial => Ok(one.clone() / gen_binomial(&zj, i as i64)),
                DetKind::GammaRatio => {
                    let (a, b) = ab.clone().unwrap();
                    let x = a * zj.clone() + b;
                    Ok(gamma(zj + fi.clone(), i, j)? * recip(x + fi)?)
                }
                DetKind::BinomialRatio => {
                    let (a, b) = ab.clone().unwrap();
                    Ok(sf_product(&zj, &neg_one, iu) / sf_product(&(a * zj.clone() + b), &neg_one, iu))
                }
                DetKind::GammaNegShift => gamma(zj - fi, i, j),
                DetKind::InvGammaNeg => recip(zj - fi),
                DetKind::GammaRatioNeg => {
                    let (a, b) = ab.clone().unwrap();
                    let x = a * zj.clone() + b;
                    Ok(gamma(x - fi.clone(), i, j)? * recip(zj - fi)?)
                }
                DetKind::TwoSetGammaRatio => {
                    let w = w.as_ref().unwrap();
                    let x = z[i].clone() + w[j].clone();
                    Ok(gamma(x.clone() + T::from_int(last as i64), i, j)? / gamma(x, i, j)?)
                }
                DetKind::TwoSetBinomial => {
                    let w = w.as_ref().unwrap();
                    Ok(gen_binomial(&(z[i].clone() + w[j].clone()), last as i64))
                }
            }
        })
    }

    /// The closed-form value of the determinant.
    pub fn det_closed(&self, nodes: &NodeSet<T>) -> Result<T> {
        self.check_side_conditions(nodes)?;
        let n = nodes.len();
        let z = nodes.as_slice();
        let s = self.s.clone();
        let kind = self.kind;
        let delta = prod_diff(z);
        let m = n as u32 - 1;
        let half = (n * (n - 1) / 2) as i64;
        let sigma = sign_pow::<T>(half);
        let fact = |k: u32| sf_product(&T::one(), &T::one(), k);
        let fact_prod = (0..n as u32).fold(T::one(), |acc, j| acc * fact(j));
        let neg_one = -T::one();
        let complex = |v: Complex64| -> Result<T> {
            T::from_c64(v).ok_or_else(|| Error::Unsupported(format!("{kind} has no exact evaluation path")))
        };
        let dc = delta.to_c64();
        let sign_c = if half % 2 == 0 { 1.0 } else { -1.0 };
        match kind {
            DetKind::SShifted | DetKind::SShiftedOffsets | DetKind::InvNegIndex => Ok(delta),
            DetKind::SShiftedComplexIndex => {
                let t = self.t()?;
                let sc = s.to_c64();
                let mut acc = Complex64::one();
                for zj in z {
                    acc *= sf_general(zj.to_c64(), sc, t)?;
                }
                complex(acc * dc)
            }
            DetKind::InvSShifted => {
                let den = z.iter().fold(T::one(), |acc, zj| acc * sf_product(zj, &s, m));
                Ok(sigma * delta / den)
            }
            DetKind::RatioSShifted => {
                let (a, b) = (self.a()?, self.b()?);
                let mut acc = delta;
                for (j, zj) in z.iter().enumerate() {
                    let base = b.clone()
                        + T::from_int((n - 1 - j) as i64) * (T::one() - a.clone()) * s.clone();
                    acc = acc * sf_product(&base, &s, j as u32)
                        / sf_product(&(a.clone() * zj.clone() + b.clone()), &s, m);
                }
                Ok(acc)
            }
            DetKind::NegIndex => {
                let mut acc = sigma * delta;
                for zj in z {
                    acc = acc * sf_negative(zj, &s, m)?;
                }
                Ok(acc)
            }
            DetKind::RatioNegIndex => {
                let (a, b) = (self.a()?, self.b()?);
                let mut acc = delta;
                for (j, zj) in z.iter().enumerate() {
                    let base = b.clone()
                        + T::from_int((n - j) as i64) * (a.clone() - T::one()) * s.clone();
                    acc = acc
                        * sf_negative(&(a.clone() * zj.clone() + b.clone()), &s, m)?
                        * sf_product(&base, &-s.clone(), j as u32);
                }
                Ok(acc)
            }
            DetKind::TwoSetSymmetric | DetKind::TwoSetGammaRatio => {
                let w = self.w(n)?;
                let num = fact(m).powi(n as i32);
                let v = sigma * num / (fact_prod.clone() * fact_prod) * delta * prod_diff(w);
                if kind == DetKind::TwoSetGammaRatio {
                    complex(v.to_c64())
                } else {
                    Ok(v)
                }
            }
            DetKind::TwoSetBinomial => {
                let w = self.w(n)?;
                Ok(sigma / (fact_prod.clone() * fact_prod) * delta * prod_diff(w))
            }
            DetKind::BinomialElem => Ok(delta / fact_prod),
            DetKind::InvBinomial => {
                let mut acc = sigma * delta * fact_prod;
                for zj in z {
                    acc = acc / sf_product(zj, &neg_one, m);
                }
                Ok(acc)
            }
            DetKind::BinomialRatio => {
                let (a, b) = (self.a()?, self.b()?);
                let mut acc = delta;
                for (j, zj) in z.iter().enumerate() {
                    let base = b.clone() - T::from_int((n - 1 - j) as i64) * (T::one() - a.clone());
                    acc = acc * sf_product(&base, &neg_one, j as u32)
                        / sf_product(&(a.clone() * zj.clone() + b.clone()), &neg_one, m);
                }
                Ok(acc)
            }
            DetKind::GammaShift => {
                let mut lp = LogProduct::new();
                for zj in z {
                    lp.mul_gamma(zj.to_c64())?;
                }
                complex(lp.value() * dc)
            }
            DetKind::InvGamma => {
                let mut lp = LogProduct::new();
                for zj in z {
                    lp.div_gamma(zj.to_c64() + m as f64);
                }
                complex(sign_c * lp.value() * dc)
            }
            DetKind::GammaRatio => {
                let (a, b) = (self.a()?.to_c64(), self.b()?.to_c64());
                let mut lp = LogProduct::new();
                for (j, zj) in z.iter().enumerate() {
                    let base = b + (n - 1 - j) as f64 * (1.0 - a);
                    lp.mul(sf_product(&base, &Complex64::one(), j as u32));
                    lp.mul_gamma(zj.to_c64())?;
                    lp.div_gamma(a * zj.to_c64() + b + m as f64);
                }
                complex(lp.value() * dc)
            }
            DetKind::GammaNegShift => {
                let mut lp = LogProduct::new();
                for zj in z {
                    lp.mul_gamma(zj.to_c64() - m as f64)?;
                }
                complex(sign_c * lp.value() * dc)
            }
            DetKind::InvGammaNeg => {
                let mut lp = LogProduct::new();
                for zj in z {
                    lp.div_gamma(zj.to_c64());
                }
                complex(lp.value() * dc)
            }
            DetKind::GammaRatioNeg => {
                let (a, b) = (self.a()?.to_c64(), self.b()?.to_c64());
                let mut lp = LogProduct::new();
                for (j, zj) in z.iter().enumerate() {
                    let base = b + (n - j) as f64 * (a - 1.0);
                    lp.mul(sf_product(&base, &-Complex64::one(), j as u32));
                    lp.mul_gamma(a * zj.to_c64() + b - m as f64)?;
                    lp.div_gamma(zj.to_c64());
                }
                complex(lp.value() * dc)
            }
        }
    }
}

/// Closed form, oracle and their relative difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetResult {
    pub closed_form: Complex64,
    pub oracle: Option<Complex64>,
    pub residual: Option<f64>,
}

impl DeterminantSpec<Complex64> {
    /// Closed form plus the pivoted-LU determinant of the built matrix.
    ///
    /// The matrix entries and the elimination are carried in double-double arithmetic, so the
    /// oracle stays accurate on ill-conditioned matrices whose double-precision entries would
    /// already lose the determinant to rounding.
    pub fn evaluate(&self, nodes: &NodeSet<Complex64>) -> Result<DetResult> {
        let closed_form = self.det_closed(nodes)?;
        let oracle = self.det_extended(nodes)?;
        let residual = (oracle != Complex64::zero())
            .then(|| (closed_form - oracle).norm() / oracle.norm());
        Ok(DetResult {
            closed_form,
            oracle: Some(oracle),
            residual,
        })
    }

    /// Pivoted-LU determinant of the matrix built in double-double arithmetic.
    pub fn det_extended(&self, nodes: &NodeSet<Complex64>) -> Result<Complex64> {
        let lift = |c: &Complex64| ExtendedComplex::from_f64(c.re, c.im);
        let spec = self.convert(lift);
        let m = spec.build_matrix(&nodes.convert(lift))?;
        Ok(det_lu(&m).to_c64())
    }
}

impl DeterminantSpec<ExactRational> {
    /// Exact closed form and fraction-free oracle; `residual` is exactly zero on agreement.
    pub fn evaluate_exact(&self, nodes: &NodeSet<ExactRational>) -> Result<(ExactRational, ExactRational)> {
        let closed = self.det_closed(nodes)?;
        let oracle = det_exact(&self.build_matrix(nodes)?);
        Ok((closed, oracle))
    }
}

/// `|closed - oracle| / max(|oracle|, scale)`, for callers that need a floor on the scale.
pub fn det_residual(closed: Complex64, oracle: Complex64, scale: f64) -> f64 {
    relative_residual(&closed, &oracle, scale)
}

fn missing(kind: DetKind, what: &str) -> Error {
    Error::Domain(format!("{kind} requires the parameter {what}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::c64;

    fn nodes(v: &[f64]) -> NodeSet {
        NodeSet::new(v.iter().map(|&x| c64(x, 0.0)).collect()).unwrap()
    }

    fn close(a: Complex64, b: f64) -> bool {
        (a - c64(b, 0.0)).norm() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn prod_diff_examples() {
        assert_eq!(prod_diff(&[c64(3.0, 1.0)]), c64(1.0, 0.0));
        assert_eq!(prod_diff(nodes(&[0.0, 1.0, 2.0]).as_slice()), c64(2.0, 0.0));
        assert_eq!(prod_diff(nodes(&[1.0, 3.0, 5.0]).as_slice()), c64(16.0, 0.0));
    }

    #[test]
    fn build_matrix_examples() {
        let m = DeterminantSpec::new(DetKind::SShifted, c64(0.0, 0.0)).build_matrix(&nodes(&[2.0, 3.0])).unwrap();
        assert_eq!(m.rows(), vec![vec![c64(1.0, 0.0), c64(1.0, 0.0)], vec![c64(2.0, 0.0), c64(3.0, 0.0)]]);
        let m = DeterminantSpec::new(DetKind::GammaShift, c64(1.0, 0.0)).build_matrix(&nodes(&[1.0, 2.0])).unwrap();
        let want = [[1.0, 1.0], [1.0, 2.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert!(close(m[(i, j)], want[i][j]));
            }
        }
        let m = DeterminantSpec::new(DetKind::BinomialElem, c64(1.0, 0.0)).build_matrix(&nodes(&[3.0, 4.0])).unwrap();
        assert_eq!(m.rows(), vec![vec![c64(1.0, 0.0), c64(1.0, 0.0)], vec![c64(3.0, 0.0), c64(4.0, 0.0)]]);
    }

    #[test]
    fn det_closed_examples() {
        let r = DeterminantSpec::new(DetKind::SShifted, c64(0.4, -1.0)).evaluate(&nodes(&[0.0, 1.0, 2.0])).unwrap();
        assert!(close(r.closed_form, 2.0) && close(r.oracle.unwrap(), 2.0));

        let r = DeterminantSpec::new(DetKind::GammaShift, c64(1.0, 0.0)).evaluate(&nodes(&[1.0, 2.0, 3.0])).unwrap();
        assert!(close(r.closed_form, 4.0) && close(r.oracle.unwrap(), 4.0));

        let spec = DeterminantSpec::new(DetKind::TwoSetSymmetric, c64(2.5, 0.5)).with_w(nodes(&[0.0, 1.0]));
        let closed = spec.det_closed(&nodes(&[0.0, 1.0])).unwrap();
        assert!(close(closed, -1.0));

        let r = DeterminantSpec::new(DetKind::InvGamma, c64(1.0, 0.0)).evaluate(&nodes(&[1.0, 2.0])).unwrap();
        assert!(close(r.closed_form, -0.5) && close(r.oracle.unwrap(), -0.5));
    }

    #[test]
    fn side_conditions_are_named() {
        let spec = DeterminantSpec::new(DetKind::InvSShifted, c64(1.0, 0.0));
        match spec.det_closed(&nodes(&[0.5, -1.0, 2.0])) {
            Err(Error::SideCondition { kind, index, .. }) => {
                assert_eq!(kind, "InvSShifted");
                assert_eq!(index, 1);
            }
            other => panic!("expected a side-condition error, got {other:?}"),
        }
        let spec = DeterminantSpec::new(DetKind::GammaShift, c64(1.0, 0.0));
        assert!(matches!(spec.build_matrix(&nodes(&[0.5, -2.0])), Err(Error::SideCondition { .. })));
        let spec = DeterminantSpec::new(DetKind::RatioSShifted, c64(1.0, 0.0));
        assert!(matches!(spec.det_closed(&nodes(&[0.5, 2.0])), Err(Error::Domain(_))));
    }

    #[test]
    fn exact_path_rejects_gamma_kinds() {
        let spec = DeterminantSpec::new(DetKind::GammaShift, ExactRational::one());
        let z = NodeSet::new(vec![ExactRational::one(), ExactRational::from_int(2)]).unwrap();
        assert!(matches!(spec.det_closed(&z), Err(Error::Unsupported(_))));
    }
}
