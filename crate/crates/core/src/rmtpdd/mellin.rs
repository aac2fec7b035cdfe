use std::fmt;

use num_complex::Complex64;

use super::ensemble::{Ensemble, EnsembleSpec, Parity};
use super::phi::{check_convergence, hankel_gamma, hankel_gamma_ratio, hankel_recip_gamma, phi_element, phi_element_in, quadrature_phi_with};
use super::quad::{integrate_2d, Interval, Node, Rule};
use crate::detform::{det_lu, det_oracle, Matrix};
use crate::error::{Error, Result};
use crate::numkernel::{c64, complex_gamma, complex_log_gamma, sign_pow, ExtendedComplex, Scalar};

/// Rows and columns of `Φ` kept in a block of the checkerboard factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// All rows and columns (Laguerre and the Jacobi normalization).
    Full,
    /// `Φ_{2j,2k}`.
    EvenEven,
    /// `Φ_{2j+1,2k+1}`.
    OddOdd,
    /// `Φ_{2j,2k+1}`.
    EvenOdd,
}

impl BlockKind {
    pub fn name(self) -> &'static str {
        match self {
            BlockKind::Full => "full",
            BlockKind::EvenEven => "even-even",
            BlockKind::OddOdd => "odd-odd",
            BlockKind::EvenOdd => "even-odd",
        }
    }

    fn offsets(self) -> (usize, usize) {
        match self {
            BlockKind::Full | BlockKind::EvenEven => (0, 0),
            BlockKind::OddOdd => (1, 1),
            BlockKind::EvenOdd => (0, 1),
        }
    }

    fn row_col(self, j: usize, k: usize) -> (usize, usize) {
        let (r, c) = self.offsets();
        match self {
            BlockKind::Full => (j, k),
            _ => (2 * j + r, 2 * k + c),
        }
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One factor of the determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Block {
    pub kind: BlockKind,
    pub size: usize,
    pub value: Complex64,
}

/// `M^±_n(s) = ½ C_n n! det[Φ^±(s)]` with the determinant and its factors.
#[derive(Debug, Clone, PartialEq)]
pub struct MellinResult {
    pub s: Complex64,
    pub parity: Parity,
    pub value: Complex64,
    pub determinant: Complex64,
    pub factorization: Vec<Block>,
}

/// The `n x n` matrix `[Φ^±_{j,k}(s)]` from [`phi_element`].
pub fn phi_matrix(ens: &EnsembleSpec, s: Complex64, parity: Parity) -> Result<Matrix<Complex64>> {
    Matrix::try_from_fn(ens.n, |j, k| phi_element(ens, j, k, s, parity))
}

/// The same matrix by quadrature, for real `s`.
pub fn quadrature_phi_matrix(ens: &EnsembleSpec, s: f64, parity: Parity) -> Result<Matrix<Complex64>> {
    let rule = Rule::default();
    Matrix::try_from_fn(ens.n, |j, k| quadrature_phi_with(ens, j, k, s, parity, &rule))
}

/// Blocks of the checkerboard factorization of an even weight, in order, with their sizes.
/// The odd part of an odd-dimensional matrix has none: its determinant vanishes.
pub fn checkerboard_blocks(n: usize, parity: Parity) -> Vec<(BlockKind, usize)> {
    match parity {
        Parity::Plus => [(BlockKind::EvenEven, n.div_ceil(2)), (BlockKind::OddOdd, n / 2)]
            .into_iter()
            .filter(|(_, m)| *m > 0)
            .collect(),
        Parity::Minus if n.is_multiple_of(2) => vec![(BlockKind::EvenOdd, n / 2)],
        Parity::Minus => Vec::new(),
    }
}

/// The submatrix of `Φ` selected by `kind`.
pub fn block_matrix(ens: &EnsembleSpec, s: Complex64, parity: Parity, kind: BlockKind, size: usize) -> Result<Matrix<Complex64>> {
    Matrix::try_from_fn(size, |j, k| {
        let (r, c) = kind.row_col(j, k);
        phi_element(ens, r, c, s, parity)
    })
}

/// LU determinant of the block selected by `kind` (the whole matrix for [`BlockKind::Full`]),
/// with elements and elimination in double-double so that the ill-conditioning of these
/// Hankel-like matrices does not reach the 1e-9 level.
pub fn block_determinant_oracle(ens: &EnsembleSpec, s: Complex64, parity: Parity, kind: BlockKind, size: usize) -> Result<Complex64> {
    let sx = ExtendedComplex::from_c64(s).expect("complex values lift to double-double");
    let m = Matrix::try_from_fn(size, |j, k| {
        let (r, c) = kind.row_col(j, k);
        phi_element_in(ens, r, c, &sx, parity)
    })?;
    Ok(det_lu(&m).to_c64())
}

/// Double-double LU determinant of the full `Φ^±(s)` matrix.
pub fn phi_determinant_oracle(ens: &EnsembleSpec, s: Complex64, parity: Parity) -> Result<Complex64> {
    block_determinant_oracle(ens, s, parity, BlockKind::Full, ens.n)
}

/// Product of the block determinants, with the `(-1)^{n/2}` of the odd part.
pub fn checkerboard_determinant(n: usize, parity: Parity, blocks: &[Block]) -> Complex64 {
    match parity {
        Parity::Plus => blocks.iter().map(|b| b.value).product(),
        Parity::Minus if n % 2 == 1 => c64(0.0, 0.0),
        Parity::Minus => {
            let v = blocks[0].value;
            sign_pow::<Complex64>((n / 2) as i64) * v * v
        }
    }
}

/// Closed form of one checkerboard block. In every block the entries are `Γ(b+j+k)`
/// (Hermite) or `Γ(λ+½) Γ(b+j+k) / Γ(b+λ+½+j+k)` (Gegenbauer) with `b = (s + r + c)/2`.
fn block_closed(kind: &Ensemble, s: Complex64, block: BlockKind, size: usize) -> Result<Complex64> {
    let (r, c) = block.offsets();
    let b = (s + (r + c) as f64) * 0.5;
    match *kind {
        Ensemble::Hermite => hankel_gamma(b, size),
        Ensemble::Gegenbauer { lambda } => {
            let g = complex_gamma(c64(lambda + 0.5, 0.0))?;
            Ok(g.powi(size as i32) * hankel_gamma_ratio(b, b + lambda + 0.5, size)?)
        }
        _ => unreachable!("only even weights have checkerboard blocks"),
    }
}

/// `det[Φ^±(s)]` by its factorization into closed-form blocks.
pub fn determinant_closed(ens: &EnsembleSpec, s: Complex64, parity: Parity) -> Result<(Complex64, Vec<Block>)> {
    ens.validate()?;
    check_convergence(&ens.kind, s)?;
    let n = ens.n;
    match ens.kind.reduced() {
        Ensemble::Laguerre { alpha } => {
            let value = hankel_gamma(s + alpha, n)?;
            Ok((value, vec![Block { kind: BlockKind::Full, size: n, value }]))
        }
        Ensemble::Jacobi { a, b } => {
            if s != c64(1.0, 0.0) || parity != Parity::Plus {
                return Err(Error::Unsupported(format!(
                    "the Jacobi ensemble with a != b has a closed form only at s = 1, parity + (got s = {s}, parity {parity})"
                )));
            }
            let value = jacobi_phi_determinant(a, b, n)?;
            Ok((value, vec![Block { kind: BlockKind::Full, size: n, value }]))
        }
        even => {
            let blocks = checkerboard_blocks(n, parity)
                .into_iter()
                .map(|(kind, size)| Ok(Block { kind, size, value: block_closed(&even, s, kind, size)? }))
                .collect::<Result<Vec<_>>>()?;
            Ok((checkerboard_determinant(n, parity, &blocks), blocks))
        }
    }
}

/// Determinant of the Jacobi `Φ(1)` matrix: row and column factors times the reciprocal-gamma
/// Hankel determinant.
pub fn jacobi_phi_determinant(a: f64, b: f64, n: usize) -> Result<Complex64> {
    let mut pre = c64(1.0, 0.0);
    for j in 0..n {
        let jf = j as f64;
        pre *= sign_pow::<Complex64>(j as i64)
            * 2f64.powf(a + b + 1.0 + 2.0 * jf)
            * complex_gamma(c64(a + 1.0 + jf, 0.0))?
            * complex_gamma(c64(b + 1.0 + jf, 0.0))?;
    }
    Ok(pre * hankel_recip_gamma(c64(a + b + 2.0, 0.0), n))
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn ln_gamma(x: f64) -> f64 {
    complex_log_gamma(c64(x, 0.0)).map(|v| v.re).unwrap_or(f64::NAN)
}

/// `1/C_n = n! 2^{n(n-1)+(a+b+1)n} ∏_{j<n} j! Γ(a+1+j) Γ(b+1+j) / Γ(a+b+n+1+j)` for the
/// Jacobi weight.
pub fn jacobi_inverse_normalization(a: f64, b: f64, n: usize) -> f64 {
    let nf = n as f64;
    let mut log = (nf * (nf - 1.0) + (a + b + 1.0) * nf) * std::f64::consts::LN_2 + ln_gamma(nf + 1.0);
    for j in 0..n {
        let jf = j as f64;
        log += ln_gamma(jf + 1.0) + ln_gamma(a + 1.0 + jf) + ln_gamma(b + 1.0 + jf) - ln_gamma(a + b + nf + 1.0 + jf);
    }
    log.exp()
}

/// Squared norms `ν_0 .. ν_{n-1}` of the monic orthogonal polynomials of the weight, from
/// `ν_0 = ∫ w` and `ν_k = β_k ν_{k-1}` with the monic three-term recurrence coefficients `β_k`.
pub fn monic_norms(kind: &Ensemble, n: usize) -> Result<Vec<f64>> {
    kind.validate()?;
    let (nu0, beta): (f64, Box<dyn Fn(f64) -> f64>) = match *kind {
        Ensemble::Hermite => (std::f64::consts::PI.sqrt(), Box::new(|k| k / 2.0)),
        Ensemble::Laguerre { alpha } => (ln_gamma(alpha + 1.0).exp(), Box::new(move |k| k * (k + alpha))),
        Ensemble::Gegenbauer { lambda } => {
            let a = lambda - 0.5;
            (jacobi_mass(a, a), Box::new(move |k| jacobi_beta(a, a, k)))
        }
        Ensemble::Jacobi { a, b } => (jacobi_mass(a, b), Box::new(move |k| jacobi_beta(a, b, k))),
    };
    let mut out = Vec::with_capacity(n);
    let mut nu = nu0;
    for k in 0..n {
        if k > 0 {
            nu *= beta(k as f64);
        }
        out.push(nu);
    }
    Ok(out)
}

fn jacobi_mass(a: f64, b: f64) -> f64 {
    ((a + b + 1.0) * std::f64::consts::LN_2 + ln_gamma(a + 1.0) + ln_gamma(b + 1.0) - ln_gamma(a + b + 2.0)).exp()
}

fn jacobi_beta(a: f64, b: f64, k: f64) -> f64 {
    let t = 2.0 * k + a + b;
    if k == 1.0 {
        return 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
    }
    4.0 * k * (k + a) * (k + b) * (k + a + b) / (t * t * (t + 1.0) * (t - 1.0))
}

/// The normalization constant `C_n` of the eigenvalue density: the Jacobi closed form for the
/// Jacobi weight, `1/(n! ∏ ν_j)` with [`monic_norms`] otherwise.
pub fn normalization_const(ens: &EnsembleSpec) -> Result<f64> {
    ens.validate()?;
    match ens.kind {
        Ensemble::Jacobi { a, b } => Ok(1.0 / jacobi_inverse_normalization(a, b, ens.n)),
        kind => {
            let norms = monic_norms(&kind, ens.n)?;
            Ok(1.0 / (factorial(ens.n) * norms.iter().product::<f64>()))
        }
    }
}

/// `M^±_n(s)` with the determinant from [`determinant_closed`].
pub fn mellin_closed(ens: &EnsembleSpec, s: Complex64, parity: Parity) -> Result<MellinResult> {
    let (determinant, factorization) = determinant_closed(ens, s, parity)?;
    let scale = 0.5 * normalization_const(ens)? * factorial(ens.n);
    Ok(MellinResult { s, parity, value: scale * determinant, determinant, factorization })
}

/// `M^±_n(s)` with the determinant from [`phi_determinant_oracle`].
pub fn mellin_oracle(ens: &EnsembleSpec, s: Complex64, parity: Parity) -> Result<Complex64> {
    let det = phi_determinant_oracle(ens, s, parity)?;
    Ok(0.5 * normalization_const(ens)? * factorial(ens.n) * det)
}

/// `M^±_n(s)` with every matrix element from quadrature, for real `s`.
pub fn mellin_quadrature(ens: &EnsembleSpec, s: f64, parity: Parity) -> Result<Complex64> {
    let det = det_oracle(&quadrature_phi_matrix(ens, s, parity)?);
    Ok(0.5 * normalization_const(ens)? * factorial(ens.n) * det)
}

/// `E[det^q] = (1+(-1)^q) M^+(q+1) + (1-(-1)^q) M^-(q+1)`; only the surviving parity is
/// evaluated.
pub fn integer_moment(ens: &EnsembleSpec, q: u32) -> Result<f64> {
    let parity = Parity::of_power(q);
    let m = mellin_closed(ens, c64(q as f64 + 1.0, 0.0), parity)?;
    Ok(2.0 * m.value.re)
}

fn domain(kind: &Ensemble) -> Interval {
    match kind {
        Ensemble::Hermite => Interval::Real,
        Ensemble::Laguerre { .. } => Interval::UpperHalf { lo: 0.0 },
        _ => Interval::Finite { lo: -1.0, hi: 1.0 },
    }
}

fn weight(kind: &Ensemble, p: Node) -> f64 {
    match *kind {
        Ensemble::Hermite => (-p.x * p.x).exp(),
        Ensemble::Laguerre { alpha } => (-p.x + alpha * p.from_lo.ln()).exp(),
        Ensemble::Gegenbauer { lambda } => (p.to_hi * p.from_lo).powf(lambda - 0.5),
        Ensemble::Jacobi { a, b } => p.to_hi.powf(a) * p.from_lo.powf(b),
    }
}

/// `∫∫ w(x) w(y) φ(x) φ(y) (x - y)² dx dy`, the two-eigenvalue integral, by nested quadrature.
pub fn pair_integral(kind: &Ensemble, phi: impl Fn(f64) -> f64, rule: &Rule) -> Result<f64> {
    kind.validate()?;
    let d = domain(kind);
    integrate_2d(d, d, rule, |p| weight(kind, p) * phi(p.x), |p, q| {
        let diff = p.x - q.x;
        weight(kind, q) * phi(q.x) * diff * diff
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn spec(kind: Ensemble, n: usize) -> EnsembleSpec {
        EnsembleSpec::new(kind, n).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn documented_normalizations() {
        assert!(rel(normalization_const(&spec(Ensemble::Hermite, 1)).unwrap(), 1.0 / PI.sqrt()) < 1e-15);
        assert!(rel(normalization_const(&spec(Ensemble::Laguerre { alpha: 0.0 }, 1)).unwrap(), 1.0) < 1e-15);
        assert!(rel(normalization_const(&spec(Ensemble::Jacobi { a: 0.0, b: 0.0 }, 1)).unwrap(), 0.5) < 1e-14);
    }

    #[test]
    fn documented_blocks() {
        let (_, blocks) = determinant_closed(&spec(Ensemble::Hermite, 3), c64(2.0, 0.0), Parity::Plus).unwrap();
        assert_eq!(blocks[0].kind, BlockKind::EvenEven);
        assert_eq!(blocks[0].size, 2);
        assert!((blocks[0].value - c64(1.0, 0.0)).norm() < 1e-14);
        for kind in [Ensemble::Hermite, Ensemble::Gegenbauer { lambda: 1.0 }] {
            let m = mellin_closed(&spec(kind, 3), c64(1.7, 0.2), Parity::Minus).unwrap();
            assert_eq!(m.value, c64(0.0, 0.0));
        }
        let lag = spec(Ensemble::Laguerre { alpha: 0.0 }, 2);
        let m = mellin_closed(&lag, c64(1.0, 0.0), Parity::Plus).unwrap();
        assert!((m.determinant - c64(1.0, 0.0)).norm() < 1e-14);
        assert!((m.value - c64(0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn documented_moments() {
        assert!(rel(integer_moment(&spec(Ensemble::Hermite, 1), 2).unwrap(), 0.5) < 1e-14);
        assert!(rel(integer_moment(&spec(Ensemble::Laguerre { alpha: 0.0 }, 1), 1).unwrap(), 1.0) < 1e-14);
        for kind in [
            Ensemble::Hermite,
            Ensemble::Laguerre { alpha: 0.5 },
            Ensemble::Gegenbauer { lambda: 1.5 },
            Ensemble::Jacobi { a: 1.5, b: 2.5 },
        ] {
            for n in 1..=4 {
                let m0 = integer_moment(&spec(kind, n), 0).unwrap();
                assert!((m0 - 1.0).abs() < 1e-12, "{kind} n={n}: {m0}");
            }
        }
    }

    #[test]
    fn jacobi_routes_agree() {
        for n in 1..=5 {
            let closed = jacobi_inverse_normalization(1.5, 2.5, n);
            let by_determinant = factorial(n) * jacobi_phi_determinant(1.5, 2.5, n).unwrap().re;
            let norms: f64 = monic_norms(&Ensemble::Jacobi { a: 1.5, b: 2.5 }, n).unwrap().iter().product();
            assert!(rel(by_determinant, closed) < 1e-12, "n={n}");
            assert!(rel(factorial(n) * norms, closed) < 1e-12, "n={n}");
        }
    }

    #[test]
    fn symmetric_jacobi_matches_gegenbauer() {
        let jac = spec(Ensemble::Jacobi { a: 0.75, b: 0.75 }, 4);
        let geg = spec(Ensemble::Gegenbauer { lambda: 1.25 }, 4);
        for parity in Parity::BOTH {
            let a = mellin_closed(&jac, c64(2.3, 0.0), parity).unwrap().value;
            let b = mellin_closed(&geg, c64(2.3, 0.0), parity).unwrap().value;
            assert!((a - b).norm() <= 1e-12 * b.norm().max(1e-300));
            let lu = mellin_oracle(&jac, c64(2.3, 0.0), parity).unwrap();
            assert!((lu - b).norm() <= 1e-9 * b.norm().max(1e-300), "{parity}: {lu} vs {b}");
        }
    }

    #[test]
    fn pair_integral_normalization() {
        let rule = Rule { tolerance: 1e-9, ..Rule::default() };
        let v = pair_integral(&Ensemble::Jacobi { a: 1.5, b: 2.5 }, |_| 1.0, &rule).unwrap();
        let closed = jacobi_inverse_normalization(1.5, 2.5, 2);
        assert!(rel(v, closed) < 1e-6, "{v} vs {closed}");
    }
}
