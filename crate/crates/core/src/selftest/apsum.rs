use num_complex::Complex64;

use super::{Check, CheckResult, Sampler};
use crate::apsum::{ap_sum, ap_sum_direct, APSumArgs, Method};
use crate::numkernel::{sign_pow, ExactRational, Scalar};
use crate::sfact::sf_product;

const SUITE: &str = "apsum";
/// Largest factorial order and term count of the exact sweeps.
pub const P_MAX: u32 = 8;
pub const N_MAX: u32 = 20;
const SCALING_TOLERANCE: f64 = 1e-10;
const COMPLEX_TOLERANCE: f64 = 1e-10;

fn int(k: i64) -> ExactRational {
    ExactRational::from_int(k)
}

/// Direct, recurrence and (for `r = ±s`) closed sums over the full `p <= 8`, `n <= 20` grid.
pub fn triple_agreement(seed: u64, draws: usize) -> CheckResult {
    let name = "triple_agreement/exact";
    let mut check = Check::exact(SUITE, name);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..draws {
        let a = rng.rational(12, 5);
        let s = rng.nonzero_rational(6, 4);
        let r = rng.nonzero_rational(6, 4);
        for step in [r, s.clone(), -s.clone()] {
            let closed_applies = step == s || step == -s.clone();
            for p in 0..=P_MAX {
                for n in 1..=N_MAX {
                    let args = APSumArgs { a: a.clone(), r: step.clone(), s: s.clone(), p, n };
                    let direct = ap_sum_direct(&args);
                    let detail = || format!("a={a} r={step} s={s} p={p} n={n}");
                    let methods: &[Method] = if closed_applies { &[Method::Recurrence, Method::Closed] } else { &[Method::Recurrence] };
                    for &m in methods {
                        match ap_sum(&args, m) {
                            Ok(v) => check.compare(&v, &direct, || format!("{m}: {}", detail())),
                            Err(e) => check.error(format!("{m}: {}: {e}", detail())),
                        }
                    }
                }
            }
        }
    }
    check.finish()
}

/// Rising and falling factorial sums at `a = r = 1`, including the vanishing branch `p > n`.
pub fn anchors() -> CheckResult {
    let mut check = Check::exact(SUITE, "anchors");
    let one = int(1);
    let sweep = |check: &mut Check, args: &APSumArgs<ExactRational>, want: &ExactRational, label: &str| {
        for m in Method::ALL {
            match ap_sum(args, m) {
                Ok(v) => check.compare(&v, want, || format!("{label} p={} n={} {m}: got {v}, want {want}", args.p, args.n)),
                Err(e) => check.error(format!("{label} p={} n={} {m}: {e}", args.p, args.n)),
            }
        }
    };
    sweep(&mut check, &APSumArgs { a: one.clone(), r: one.clone(), s: one.clone(), p: 1, n: 3 }, &int(6), "rising");
    for n in 1..=N_MAX {
        let nq = int(n as i64);
        for p in 0..=P_MAX {
            let rising = APSumArgs { a: one.clone(), r: one.clone(), s: one.clone(), p, n };
            let want = sf_product(&nq, &one, p + 1) / int(p as i64 + 1);
            sweep(&mut check, &rising, &want, "rising");
        }
        for p in 0..=n + 3 {
            let falling = APSumArgs { a: one.clone(), r: one.clone(), s: -one.clone(), p, n };
            let want = if p == 0 {
                nq.clone()
            } else if p <= n {
                sf_product(&(nq.clone() + one.clone()), &-one.clone(), p + 1) / int(p as i64 + 1)
            } else {
                int(0)
            };
            sweep(&mut check, &falling, &want, "falling");
        }
    }
    check.finish()
}

/// `S_{s;p,n}(-a,-r) = (-1)^p S_{-s;p,n}(a,r)`.
pub fn negation(seed: u64, draws: usize) -> CheckResult {
    let name = "negation/exact";
    let mut check = Check::exact(SUITE, name);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..draws {
        let (a, r, s) = (rng.rational(12, 5), rng.rational(6, 4), rng.rational(6, 4));
        let p = rng.int(0, P_MAX as i64) as u32;
        let n = rng.int(1, N_MAX as i64) as u32;
        let lhs = ap_sum_direct(&APSumArgs { a: -a.clone(), r: -r.clone(), s: s.clone(), p, n });
        let rhs = sign_pow::<ExactRational>(p as i64) * ap_sum_direct(&APSumArgs { a: a.clone(), r: r.clone(), s: -s.clone(), p, n });
        check.compare(&lhs, &rhs, || format!("a={a} r={r} s={s} p={p} n={n}"));
    }
    check.finish()
}

/// `S_{s;p,n}(a,r) = s^p S_{1;p,n}(a/s, r/s)` on complex samples.
pub fn shift_scaling(seed: u64, trials: usize) -> CheckResult {
    let name = "shift_scaling";
    let mut check = Check::new(SUITE, name, SCALING_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    let one = Complex64::new(1.0, 0.0);
    for _ in 0..trials {
        let a = rng.disc(3.0);
        let r = rng.disc(2.0);
        let s = rng.disc_away_from_zero(2.0, 0.25);
        let p = rng.int(0, P_MAX as i64) as u32;
        let n = rng.int(1, N_MAX as i64) as u32;
        let lhs = ap_sum_direct(&APSumArgs { a, r, s, p, n });
        let rhs = s.powi(p as i32) * ap_sum_direct(&APSumArgs { a: a / s, r: r / s, s: one, p, n });
        check.compare(&lhs, &rhs, || format!("a={a} r={r} s={s} p={p} n={n}"));
    }
    check.finish()
}

/// Recurrence and closed form against the direct sum on complex samples, with the residual
/// measured against `Σ |terms|` because both alternative routes subtract end-point values.
pub fn complex_routes(seed: u64, trials: usize) -> CheckResult {
    let name = "routes/complex";
    let mut check = Check::new(SUITE, name, COMPLEX_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for t in 0..trials {
        let a = rng.disc(3.0);
        let s = rng.disc_away_from_zero(2.0, 0.25);
        let r = match t % 3 {
            0 => s,
            1 => -s,
            _ => rng.disc_away_from_zero(2.0, 0.25),
        };
        let p = rng.int(0, P_MAX as i64) as u32;
        let n = rng.int(1, N_MAX as i64) as u32;
        let args = APSumArgs { a, r, s, p, n };
        let direct = ap_sum_direct(&args);
        let scale: f64 = (0..n).map(|k| sf_product(&args.term(k), &s, p).norm()).sum();
        let methods: &[Method] = if t % 3 == 2 { &[Method::Recurrence] } else { &[Method::Recurrence, Method::Closed] };
        for &m in methods {
            match ap_sum(&args, m) {
                Ok(v) => check.residual((v - direct).norm() / scale.max(direct.norm()), || format!("{m}: a={a} r={r} s={s} p={p} n={n}")),
                Err(e) => check.error(format!("{m}: {e}")),
            }
        }
    }
    check.finish()
}

pub fn run(seed: u64, trials: usize) -> Vec<CheckResult> {
    let exact_draws = trials.div_ceil(10).max(3);
    vec![
        triple_agreement(seed, exact_draws),
        anchors(),
        negation(seed, trials),
        shift_scaling(seed, trials),
        complex_routes(seed, trials),
    ]
}
