use num_complex::Complex64;

use super::{Check, CheckResult, Sampler};
use crate::detform::{det_oracle, Matrix};
use crate::numkernel::{c64, relative_residual};
use crate::rmtpdd::quad::Rule;
use crate::rmtpdd::{
    block_determinant_oracle, checkerboard_blocks, checkerboard_determinant, determinant_closed, integer_moment,
    jacobi_inverse_normalization, jacobi_phi_determinant, mellin_closed, mellin_oracle, monic_norms,
    normalization_const, pair_integral, phi_determinant_oracle, phi_element, phi_matrix, quadrature_phi_magnitude,
    quadrature_phi_matrix, Block, Ensemble, EnsembleSpec, Parity,
};

const SUITE: &str = "rmtpdd";
/// Closed-form elements against quadrature.
pub const ELEMENT_TOLERANCE: f64 = 1e-8;
/// Full determinant against the product of its checkerboard blocks.
pub const CHECKERBOARD_TOLERANCE: f64 = 1e-9;
/// Closed-form block determinants against LU.
pub const BLOCK_TOLERANCE: f64 = 1e-9;
/// Jacobi normalization against the reciprocal-gamma determinant route.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-10;
/// Normalization against the two-eigenvalue integral.
pub const PAIR_NORMALIZATION_TOLERANCE: f64 = 1e-5;
/// Normalization against a determinant of quadrature moments.
pub const QUADRATURE_NORMALIZATION_TOLERANCE: f64 = 1e-8;
/// `E[1] = 1`.
pub const MOMENT_TOLERANCE: f64 = 1e-8;
/// Integer moments against the LU route.
pub const MOMENT_ORACLE_TOLERANCE: f64 = 1e-9;
/// Two-eigenvalue expectation against the determinant formula.
pub const EXPECTATION_TOLERANCE: f64 = 1e-6;

/// Largest `j + k` of the element sweep.
pub const ELEMENT_ORDER: usize = 8;
/// Mellin variables of the element sweep.
pub const ELEMENT_S: [f64; 4] = [0.7, 1.0, 2.0, 3.5];
/// Largest dimension of the checkerboard and Laguerre sweeps.
pub const CHECKERBOARD_N: usize = 6;
pub const LAGUERRE_N: usize = 5;
pub const JACOBI_N: usize = 5;
pub const MOMENT_N: usize = 4;
/// Largest block of the closed-form block sweep.
pub const BLOCK_SIZE: usize = 4;

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn spec(kind: Ensemble, n: usize) -> EnsembleSpec {
    EnsembleSpec::new(kind, n).expect("sampled parameters are in range")
}

fn draw_alpha(rng: &mut Sampler) -> f64 {
    rng.uniform(-0.25, 3.0)
}

fn draw_lambda(rng: &mut Sampler) -> f64 {
    rng.uniform(-0.45, 3.0)
}

fn draw_jacobi(rng: &mut Sampler) -> (f64, f64) {
    (rng.uniform(-0.9, 3.0), rng.uniform(-0.9, 3.0))
}

fn draw_kind(rng: &mut Sampler, family: usize) -> Ensemble {
    match family % 4 {
        0 => Ensemble::Hermite,
        1 => Ensemble::Laguerre { alpha: draw_alpha(rng) },
        2 => Ensemble::Gegenbauer { lambda: draw_lambda(rng) },
        _ => {
            let (a, b) = draw_jacobi(rng);
            Ensemble::Jacobi { a, b }
        }
    }
}

/// Point with `0.5 <= Re s <= 6`, `|Im s| <= 2`.
fn draw_s(rng: &mut Sampler) -> Complex64 {
    c64(rng.uniform(0.5, 6.0), rng.uniform(-2.0, 2.0))
}

/// Elements that cancel between `x` and `-x` are compared against `∫ |integrand|`.
fn element_sweep(check: &mut Check, ens: &EnsembleSpec, s_values: &[f64], parities: &[Parity]) {
    let rule = Rule::default();
    for &s in s_values {
        for &parity in parities {
            for m in 0..=ELEMENT_ORDER {
                for j in 0..=m {
                    let k = m - j;
                    let detail = || format!("{} j={j} k={k} s={s} parity {parity}", ens.kind);
                    let closed = phi_element(ens, j, k, c64(s, 0.0), parity);
                    let quad = quadrature_phi_magnitude(ens, j, k, s, parity, &rule);
                    match (closed, quad) {
                        (Ok(a), Ok((b, scale))) => {
                            check.residual(relative_residual(&a, &b, scale), || format!("{}: {a} vs {b}", detail()))
                        }
                        (Err(e), _) | (_, Err(e)) => check.error(format!("{}: {e}", detail())),
                    }
                }
            }
        }
    }
}

type Family = (&'static str, fn(&mut Sampler) -> Ensemble);

/// `phi_element` against quadrature for `j + k <= 8` at `s` in [`ELEMENT_S`]. The Jacobi weight
/// with `a != b` only has a closed form at `s = 1`, parity `+`; the symmetric case runs at all `s`.
pub fn elements(seed: u64, draws: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let families: [Family; 5] = [
        ("elements/hermite", |_| Ensemble::Hermite),
        ("elements/laguerre", |r| Ensemble::Laguerre { alpha: draw_alpha(r) }),
        ("elements/gegenbauer", |r| Ensemble::Gegenbauer { lambda: draw_lambda(r) }),
        ("elements/jacobi", |r| {
            let (a, b) = draw_jacobi(r);
            Ensemble::Jacobi { a, b }
        }),
        ("elements/jacobi_symmetric", |r| {
            let a = r.uniform(-0.9, 3.0);
            Ensemble::Jacobi { a, b: a }
        }),
    ];
    for (name, draw) in families {
        let mut check = Check::new(SUITE, name, ELEMENT_TOLERANCE);
        let mut rng = Sampler::new(seed, name);
        let rounds = if name == "elements/hermite" { 1 } else { draws };
        for _ in 0..rounds {
            let kind = draw(&mut rng);
            let ens = spec(kind, 1);
            if name == "elements/jacobi" {
                element_sweep(&mut check, &ens, &[1.0], &[Parity::Plus]);
            } else {
                element_sweep(&mut check, &ens, &ELEMENT_S, &Parity::BOTH);
            }
        }
        out.push(check.finish());
    }
    out
}

fn det_blocks_oracle(ens: &EnsembleSpec, s: Complex64, parity: Parity) -> crate::error::Result<Vec<Block>> {
    checkerboard_blocks(ens.n, parity)
        .into_iter()
        .map(|(kind, size)| Ok(Block { kind, size, value: block_determinant_oracle(ens, s, parity, kind, size)? }))
        .collect()
}

/// `|det| / ∏ ||row||`, the size of a determinant relative to Hadamard's bound.
fn hadamard_scaled(m: &Matrix<Complex64>) -> f64 {
    let bound: f64 = m.rows().iter().map(|r| r.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()).product();
    let det = det_oracle(m).norm();
    if det == 0.0 {
        0.0
    } else {
        det / bound
    }
}

/// LU of the full `Φ^±` matrix against the product of LU block determinants, Hermite and
/// Gegenbauer, `n <= 6`. The odd part of an odd-dimensional matrix must be singular.
pub fn checkerboard(seed: u64, trials: usize) -> CheckResult {
    let name = "checkerboard";
    let mut check = Check::new(SUITE, name, CHECKERBOARD_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for t in 0..trials {
        let kind = if t % 2 == 0 { Ensemble::Hermite } else { Ensemble::Gegenbauer { lambda: draw_lambda(&mut rng) } };
        let n = rng.int(1, CHECKERBOARD_N as i64) as usize;
        let ens = spec(kind, n);
        let s = draw_s(&mut rng);
        for parity in Parity::BOTH {
            let detail = || format!("{kind} n={n} s={s} parity {parity}");
            let full = match phi_matrix(&ens, s, parity) {
                Ok(m) => m,
                Err(e) => {
                    check.error(format!("{}: {e}", detail()));
                    continue;
                }
            };
            if parity == Parity::Minus && n % 2 == 1 {
                check.residual(hadamard_scaled(&full), detail);
                continue;
            }
            match det_blocks_oracle(&ens, s, parity) {
                Ok(blocks) => {
                    let product = checkerboard_determinant(n, parity, &blocks);
                    match phi_determinant_oracle(&ens, s, parity) {
                        Ok(d) => check.compare(&d, &product, detail),
                        Err(e) => check.error(format!("{}: {e}", detail())),
                    }
                }
                Err(e) => check.error(format!("{}: {e}", detail())),
            }
        }
    }
    check.finish()
}

/// Closed-form checkerboard blocks (Hermite, Gegenbauer) against LU, block size <= 4.
pub fn closed_blocks(seed: u64, trials: usize) -> CheckResult {
    let name = "blocks/closed";
    let mut check = Check::new(SUITE, name, BLOCK_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for t in 0..trials {
        let kind = if t % 2 == 0 { Ensemble::Hermite } else { Ensemble::Gegenbauer { lambda: draw_lambda(&mut rng) } };
        let n = rng.int(1, 2 * BLOCK_SIZE as i64) as usize;
        let ens = spec(kind, n);
        let s = draw_s(&mut rng);
        for parity in Parity::BOTH {
            let detail = || format!("{kind} n={n} s={s} parity {parity}");
            let blocks = match determinant_closed(&ens, s, parity) {
                Ok((_, blocks)) => blocks,
                Err(e) => {
                    check.error(format!("{}: {e}", detail()));
                    continue;
                }
            };
            for b in blocks {
                match block_determinant_oracle(&ens, s, parity, b.kind, b.size) {
                    Ok(d) => check.compare(&b.value, &d, || format!("{} {} block of size {}", detail(), b.kind, b.size)),
                    Err(e) => check.error(format!("{}: {e}", detail())),
                }
            }
        }
    }
    check.finish()
}

/// `det[Γ(s+α+j+k)] = ∏ j! Γ(s+α+j)` against LU for `n <= 5`, and the same value for both
/// parities.
pub fn laguerre(seed: u64, trials: usize) -> CheckResult {
    let name = "blocks/laguerre";
    let mut check = Check::new(SUITE, name, BLOCK_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..trials {
        let kind = Ensemble::Laguerre { alpha: draw_alpha(&mut rng) };
        let n = rng.int(1, LAGUERRE_N as i64) as usize;
        let ens = spec(kind, n);
        let s = draw_s(&mut rng);
        let detail = || format!("{kind} n={n} s={s}");
        let run = || -> crate::error::Result<[Complex64; 4]> {
            Ok([
                determinant_closed(&ens, s, Parity::Plus)?.0,
                determinant_closed(&ens, s, Parity::Minus)?.0,
                phi_determinant_oracle(&ens, s, Parity::Plus)?,
                phi_determinant_oracle(&ens, s, Parity::Minus)?,
            ])
        };
        match run() {
            Ok([plus, minus, lu_plus, lu_minus]) => {
                check.compare(&plus, &lu_plus, || format!("{}: closed {plus} vs LU {lu_plus}", detail()));
                check.compare(&minus, &lu_minus, || format!("{} parity -", detail()));
                check.compare(&plus, &minus, || format!("{}: parities differ", detail()));
            }
            Err(e) => check.error(format!("{}: {e}", detail())),
        }
    }
    check.finish()
}

/// The Jacobi normalization closed form against `n! det[Φ(1)]` by the reciprocal-gamma
/// determinant, by LU, and by the monic norms, `n <= 5`.
pub fn jacobi_normalization(seed: u64, trials: usize) -> Vec<CheckResult> {
    let names = ["jacobi_norm/determinant", "jacobi_norm/lu", "jacobi_norm/monic_norms"];
    let mut checks: Vec<Check> = names.iter().map(|n| Check::new(SUITE, n, NORMALIZATION_TOLERANCE)).collect();
    let mut rng = Sampler::new(seed, "jacobi_norm");
    for _ in 0..trials {
        let (a, b) = draw_jacobi(&mut rng);
        for n in 1..=JACOBI_N {
            let closed = c64(jacobi_inverse_normalization(a, b, n), 0.0);
            let nf = factorial(n);
            let detail = || format!("a={a} b={b} n={n}");
            match jacobi_phi_determinant(a, b, n) {
                Ok(d) => checks[0].compare(&(nf * d), &closed, || format!("{}: {} vs {closed}", detail(), nf * d)),
                Err(e) => checks[0].error(format!("{}: {e}", detail())),
            }
            match phi_determinant_oracle(&spec(Ensemble::Jacobi { a, b }, n), c64(1.0, 0.0), Parity::Plus) {
                Ok(d) => checks[1].compare(&(nf * d), &closed, detail),
                Err(e) => checks[1].error(format!("{}: {e}", detail())),
            }
            match monic_norms(&Ensemble::Jacobi { a, b }, n) {
                Ok(v) => checks[2].compare(&c64(nf * v.iter().product::<f64>(), 0.0), &closed, detail),
                Err(e) => checks[2].error(format!("{}: {e}", detail())),
            }
        }
    }
    checks.into_iter().map(Check::finish).collect()
}

fn pair_rule() -> Rule {
    Rule { tolerance: 1e-9, ..Rule::default() }
}

/// `1/C_2 = ∫∫ w(x) w(y) (x-y)² dx dy` by nested quadrature, for the Jacobi closed form.
pub fn jacobi_pair(seed: u64, trials: usize) -> CheckResult {
    let name = "jacobi_norm/pair_integral";
    let mut check = Check::new(SUITE, name, PAIR_NORMALIZATION_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    let mut cases = vec![(1.5, 2.5)];
    cases.extend((1..trials).map(|_| draw_jacobi(&mut rng)));
    for (a, b) in cases {
        let closed = jacobi_inverse_normalization(a, b, 2);
        match pair_integral(&Ensemble::Jacobi { a, b }, |_| 1.0, &pair_rule()) {
            Ok(v) => check.compare(&c64(v, 0.0), &c64(closed, 0.0), || format!("a={a} b={b}: {v} vs {closed}")),
            Err(e) => check.error(format!("a={a} b={b}: {e}")),
        }
    }
    check.finish()
}

/// `1/C_n` from the monic norms against `n! det` of the quadrature moment matrix at `s = 1`.
pub fn quadrature_normalization(seed: u64, trials: usize) -> CheckResult {
    let name = "normalization/quadrature";
    let mut check = Check::new(SUITE, name, QUADRATURE_NORMALIZATION_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for t in 0..trials {
        let kind = draw_kind(&mut rng, t % 3);
        let n = rng.int(1, MOMENT_N as i64) as usize;
        let ens = spec(kind, n);
        let detail = || format!("{kind} n={n}");
        let run = || -> crate::error::Result<(f64, Complex64)> {
            let inv = 1.0 / normalization_const(&ens)?;
            Ok((inv, factorial(n) * det_oracle(&quadrature_phi_matrix(&ens, 1.0, Parity::Plus)?)))
        };
        match run() {
            Ok((inv, quad)) => check.compare(&c64(inv, 0.0), &quad, || format!("{}: {inv} vs {quad}", detail())),
            Err(e) => check.error(format!("{}: {e}", detail())),
        }
    }
    check.finish()
}

/// `E[det^0] = 1` for every ensemble and `n <= 4`.
pub fn total_probability(seed: u64, trials: usize) -> CheckResult {
    let name = "moments/total";
    let mut check = Check::new(SUITE, name, MOMENT_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for t in 0..trials {
        let kind = draw_kind(&mut rng, t);
        for n in 1..=MOMENT_N {
            match integer_moment(&spec(kind, n), 0) {
                Ok(v) => check.residual((v - 1.0).abs(), || format!("{kind} n={n}: {v}")),
                Err(e) => check.error(format!("{kind} n={n}: {e}")),
            }
        }
    }
    check.finish()
}

/// Integer moments from the closed blocks against `2 Re M^±(q+1)` by LU of the element matrix.
pub fn moment_routes(seed: u64, trials: usize) -> CheckResult {
    let name = "moments/oracle";
    let mut check = Check::new(SUITE, name, MOMENT_ORACLE_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for t in 0..trials {
        let kind = draw_kind(&mut rng, t % 3);
        let n = rng.int(1, MOMENT_N as i64) as usize;
        let q = rng.int(0, 6) as u32;
        let ens = spec(kind, n);
        let detail = || format!("{kind} n={n} q={q}");
        let run = || -> crate::error::Result<(f64, f64)> {
            let lu = mellin_oracle(&ens, c64(q as f64 + 1.0, 0.0), Parity::of_power(q))?;
            Ok((integer_moment(&ens, q)?, 2.0 * lu.re))
        };
        match run() {
            Ok((closed, lu)) => check.compare(&c64(closed, 0.0), &c64(lu, 0.0), || format!("{}: {closed} vs {lu}", detail())),
            Err(e) => check.error(format!("{}: {e}", detail())),
        }
    }
    check.finish()
}

/// `∫∫ w w φ(x) φ(y) (x-y)² = 2 det[Φ]` for `n = 2`: Hermite with `φ = x^{2p}` and Laguerre with
/// `φ = x^σ`, where `Φ` is the element matrix at `s = 2p+1` or `σ+1`.
pub fn expectation(seed: u64, trials: usize) -> CheckResult {
    let name = "expectation/pair";
    let mut check = Check::new(SUITE, name, EXPECTATION_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    let mut cases: Vec<(Ensemble, f64)> = vec![(Ensemble::Hermite, 2.0), (Ensemble::Hermite, 0.0), (Ensemble::Hermite, 4.0)];
    for _ in 0..trials.saturating_sub(cases.len()) {
        cases.push((Ensemble::Laguerre { alpha: draw_alpha(&mut rng) }, rng.uniform(0.0, 3.0)));
    }
    for (kind, power) in cases {
        let detail = || format!("{kind} phi=x^{power}");
        let mellin = mellin_closed(&spec(kind, 2), c64(power + 1.0, 0.0), Parity::Plus);
        let direct = pair_integral(&kind, |x: f64| x.abs().powf(power), &pair_rule());
        match (mellin, normalization_const(&spec(kind, 2)), direct) {
            (Ok(m), Ok(c), Ok(v)) => {
                let formula = 2.0 * m.determinant;
                check.compare(&formula, &c64(v, 0.0), || format!("{}: {formula} vs {v}", detail()));
                let expected = 2.0 * m.value.re;
                check.compare(&c64(expected, 0.0), &c64(c * v, 0.0), || format!("{}: E = {expected} vs {}", detail(), c * v));
            }
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => check.error(format!("{}: {e}", detail())),
        }
    }
    check.finish()
}

pub fn run(seed: u64, trials: usize) -> Vec<CheckResult> {
    let draws = trials.div_ceil(50).max(2);
    let mut out = elements(seed, draws);
    out.push(checkerboard(seed, trials));
    out.push(closed_blocks(seed, trials));
    out.push(laguerre(seed, trials));
    out.extend(jacobi_normalization(seed, trials.div_ceil(4).max(5)));
    out.push(jacobi_pair(seed, draws + 1));
    out.push(quadrature_normalization(seed, trials.div_ceil(4).max(6)));
    out.push(total_probability(seed, trials.div_ceil(4).max(8)));
    out.push(moment_routes(seed, trials));
    out.push(expectation(seed, draws + 3));
    out
}
