use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::report::{Check, CheckResult};
use super::sample::{clear_of_poles, clear_of_zero, Sampler};
use crate::error::Result;
use crate::numkernel::{principal_power, sign_pow, sin_pi, ExactRational, ExtendedComplex, Scalar};
use crate::sfact::{
    connecting_table, delta_s_power, gen_binomial, generating_series, monomial_expansion,
    sf_gamma_ratio, sf_general, sf_int, sf_negative, sf_product, ConnectingKind,
};

const SUITE: &str = "sfact";
/// Relative tolerance of the random complex identity checks.
pub const IDENTITY_TOLERANCE: f64 = 1e-10;
/// Relative tolerance of the truncated generating function.
pub const SERIES_TOLERANCE: f64 = 1e-9;
/// Relative tolerance of the small-shift limit.
pub const ZERO_SHIFT_TOLERANCE: f64 = 1e-4;
const MAX_DRAWS: usize = 10_000;

type Pairs<T> = Result<Vec<(T, T)>>;

/// Lifts a sampled point to double-double so cancelling sums keep their accuracy.
fn x(z: Complex64) -> ExtendedComplex {
    ExtendedComplex::from_f64(z.re, z.im)
}

fn int<T: Scalar>(k: i64) -> T {
    T::from_int(k)
}

fn fact<T: Scalar>(k: u32) -> T {
    sf_product(&T::one(), &T::one(), k)
}

fn binom<T: Scalar>(n: u32, k: i64) -> T {
    gen_binomial(&int::<T>(n as i64), k)
}

fn falling<T: Scalar>(z: &T, k: u32) -> T {
    sf_product(z, &-T::one(), k)
}

// ---------------------------------------------------------------------------------------
// Integer-index identities, generic over the scalar type. Each returns (lhs, rhs) pairs.

fn sign_flip<T: Scalar>(z: &T, s: &T, q: i64) -> Pairs<T> {
    Ok(vec![(sf_int(z, s, q)?, sign_pow::<T>(q) * sf_int(&-z.clone(), &-s.clone(), q)?)])
}

fn reversal<T: Scalar>(z: &T, s: &T, q: i64) -> Pairs<T> {
    let start = z.clone() + int::<T>(q - 1) * s.clone();
    Ok(vec![(sf_int(z, s, q)?, sf_int(&start, &-s.clone(), q)?)])
}

fn multiplication_int<T: Scalar>(z: &T, s: &T, t: i64, r: i64) -> Pairs<T> {
    let lhs = sf_int(z, s, t)? * sf_int(&(z.clone() + int::<T>(t) * s.clone()), s, r)?;
    Ok(vec![(lhs, sf_int(z, s, t + r)?)])
}

fn inversion_int<T: Scalar>(z: &T, s: &T, t: i64) -> Pairs<T> {
    let lhs = sf_int(z, s, t)? * sf_int(&(z.clone() + int::<T>(t) * s.clone()), s, -t)?;
    Ok(vec![(lhs, T::one())])
}

fn negative_index<T: Scalar>(z: &T, s: &T, q: u32) -> Pairs<T> {
    let v = sf_negative(z, s, q)?;
    let a = T::one() / sf_product(&(z.clone() - int::<T>(q as i64) * s.clone()), s, q);
    let b = T::one() / sf_product(&(z.clone() - s.clone()), &-s.clone(), q);
    Ok(vec![(v.clone(), a), (v, b)])
}

fn binomial_products<T: Scalar>(z: &T, n: u32, p: u32) -> Pairs<T> {
    let (ni, pi) = (n as i64, p as i64);
    let first = (
        gen_binomial(z, ni) * gen_binomial(&(z.clone() - int::<T>(ni)), pi),
        binom::<T>(n + p, ni) * gen_binomial(z, ni + pi),
    );
    let second = (
        gen_binomial(z, ni) * falling(&int::<T>(ni), p),
        falling(z, p) * gen_binomial(&(z.clone() - int::<T>(pi)), ni - pi),
    );
    Ok(vec![first, second])
}

fn scaling<T: Scalar>(w: &T, z: &T, s: &T, q: i64) -> Pairs<T> {
    let lhs = sf_int(&(w.clone() * z.clone()), s, q)?;
    let rhs = w.powi(q as i32) * sf_int(z, &(s.clone() / w.clone()), q)?;
    Ok(vec![(lhs, rhs)])
}

fn k_fold<T: Scalar>(z: &T, s: &T, k: u32, n: u32) -> Pairs<T> {
    let kt = int::<T>(k as i64);
    let lhs = sf_product(&(kt.clone() * z.clone()), s, k * n);
    let mut rhs = kt.powi((k * n) as i32);
    for l in 0..k {
        let base = z.clone() + int::<T>(l as i64) * s.clone() / kt.clone();
        rhs = rhs * sf_product(&base, s, n);
    }
    Ok(vec![(lhs, rhs)])
}

fn inverse_decomposition<T: Scalar>(z: &T, s: &T, p: u32, n: u32) -> Pairs<T> {
    let inv = T::one() / sf_product(z, s, p);
    let zp = z.clone() + int::<T>(p as i64) * s.clone();
    let zn = sf_product(z, s, n);
    let top = z.clone() + int::<T>(n as i64 - 1) * s.clone();
    Ok(vec![
        (inv.clone(), sf_int(&zp, s, -(p as i64))?),
        (inv.clone(), sf_product(&zp, s, n - p) / zn.clone()),
        (inv, sf_product(&top, &-s.clone(), n - p) / zn),
    ])
}

fn pascal_int<T: Scalar>(z: &T, s: &T, t: i64) -> Pairs<T> {
    let lhs = sf_int(z, s, t)? - sf_int(&(z.clone() - s.clone()), s, t)?;
    let rhs = int::<T>(t) * s.clone() * sf_int(z, s, t - 1)?;
    Ok(vec![(lhs, rhs)])
}

fn binomial_pascal<T: Scalar>(z: &T, n: u32) -> Pairs<T> {
    let n = n as i64;
    let lhs = gen_binomial(&(z.clone() + T::one()), n);
    Ok(vec![(lhs, gen_binomial(z, n) + gen_binomial(z, n - 1))])
}

fn differences_int<T: Scalar>(z: &T, s: &T, t: i64) -> Pairs<T> {
    let f = |x: &T| sf_int(x, s, t);
    let ts = int::<T>(t) * s.clone();
    let forward = f(&(z.clone() + s.clone()))? - f(z)?;
    let backward = f(&(z.clone() - s.clone()))? - f(z)?;
    Ok(vec![
        (forward, ts.clone() * sf_int(&(z.clone() + s.clone()), s, t - 1)?),
        (backward, -ts * sf_int(z, s, t - 1)?),
    ])
}

fn iterated_difference_int<T: Scalar>(z: &T, s: &T, t: i64, p: u32) -> Pairs<T> {
    let mut lhs = T::zero();
    for k in 0..=p {
        let x = z.clone() + int::<T>(k as i64) * s.clone();
        lhs = lhs + sign_pow::<T>((p - k) as i64) * binom::<T>(p, k as i64) * sf_int(&x, s, t)?;
    }
    let shifted = z.clone() + int::<T>(p as i64) * s.clone();
    let rhs = falling(&int::<T>(t), p) * s.powi(p as i32) * sf_int(&shifted, s, t - p as i64)?;
    Ok(vec![(lhs, rhs)])
}

fn binomial_formula<T: Scalar>(z: &T, w: &T, s: &T, n: u32) -> Pairs<T> {
    let mut rhs = T::zero();
    for k in 0..=n {
        rhs = rhs + binom::<T>(n, k as i64) * sf_product(z, s, k) * sf_product(w, s, n - k);
    }
    Ok(vec![(sf_product(&(z.clone() + w.clone()), s, n), rhs)])
}

fn binomial_coefficients<T: Scalar>(z: &T, w: &T, n: u32) -> Pairs<T> {
    let n = n as i64;
    let mut rhs = T::zero();
    for k in 0..=n {
        rhs = rhs + gen_binomial(z, k) * gen_binomial(w, n - k);
    }
    Ok(vec![(gen_binomial(&(z.clone() + w.clone()), n), rhs)])
}

fn multinomial<T: Scalar>(z: [&T; 3], s: &T, n: u32) -> Pairs<T> {
    let mut rhs = T::zero();
    for a in 0..=n {
        for b in 0..=n - a {
            let c = n - a - b;
            let coef = fact::<T>(n) / (fact::<T>(a) * fact::<T>(b) * fact::<T>(c));
            rhs = rhs + coef * sf_product(z[0], s, a) * sf_product(z[1], s, b) * sf_product(z[2], s, c);
        }
    }
    let sum = z[0].clone() + z[1].clone() + z[2].clone();
    Ok(vec![(sf_product(&sum, s, n), rhs)])
}

fn difference_binomial<T: Scalar>(z: &T, w: &T, s: &T, n: u32) -> Pairs<T> {
    let mut rhs = T::zero();
    for k in 0..=n {
        rhs = rhs
            + sign_pow::<T>((n - k) as i64)
                * binom::<T>(n, k as i64)
                * sf_product(z, s, k)
                * sf_product(w, &-s.clone(), n - k);
    }
    Ok(vec![(sf_product(&(z.clone() - w.clone()), s, n), rhs)])
}

fn inverse_binomial<T: Scalar>(z: &T, w: &T, s: &T, n: u32) -> Pairs<T> {
    let mut lhs = T::zero();
    for k in 0..=n {
        lhs = lhs + binom::<T>(n, k as i64) / (sf_product(z, s, k) * sf_product(w, s, n - k));
    }
    let top = z.clone() + w.clone() + int::<T>(n as i64 - 1) * s.clone();
    let rhs = sf_product(&top, s, n) / (sf_product(z, s, n) * sf_product(w, s, n));
    Ok(vec![(lhs, rhs)])
}

fn ratio_sum<T: Scalar>(z: &T, w: &T, s: &T, n: u32) -> Pairs<T> {
    let mut lhs = T::zero();
    for k in 0..=n {
        lhs = lhs
            + sign_pow::<T>((n - k) as i64) * binom::<T>(n, k as i64) * sf_product(z, s, k)
                / sf_product(w, s, k);
    }
    let top = z.clone() - w.clone() - int::<T>(n as i64 - 1) * s.clone();
    Ok(vec![(lhs, sf_product(&top, s, n) / sf_product(w, s, n))])
}

fn weighted_sum<T: Scalar>(z: &T, w: &T, s: &T, n: u32, p: u32) -> Pairs<T> {
    let mut lhs = T::zero();
    for k in 0..=n {
        lhs = lhs
            + binom::<T>(n, k as i64)
                * falling(&int::<T>(k as i64), p)
                * sf_product(z, s, k)
                * sf_product(w, s, n - k);
    }
    let zw = z.clone() + w.clone() + int::<T>(p as i64) * s.clone();
    let rhs = falling(&int::<T>(n as i64), p) * sf_product(z, s, p) * sf_product(&zw, s, n - p);
    Ok(vec![(lhs, rhs)])
}

// ---------------------------------------------------------------------------------------
// Complex-index identities.

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn multiplication_complex(z: Complex64, s: Complex64, t: Complex64, r: Complex64) -> Pairs<Complex64> {
    let lhs = sf_general(z, s, t)? * sf_general(z + t * s, s, r)?;
    Ok(vec![(lhs, sf_general(z, s, t + r)?)])
}

fn inversion_complex(z: Complex64, s: Complex64, t: Complex64) -> Pairs<Complex64> {
    Ok(vec![(sf_general(z, s, t)? * sf_general(z + t * s, s, -t)?, c(1.0))])
}

fn negative_index_gamma(z: Complex64, s: Complex64, q: u32) -> Pairs<Complex64> {
    Ok(vec![(sf_negative(&z, &s, q)?, sf_gamma_ratio(z, s, c(-(q as f64)))?)])
}

fn pascal_complex(z: Complex64, s: Complex64, t: Complex64) -> Pairs<Complex64> {
    let lhs = sf_general(z, s, t)? - sf_general(z - s, s, t)?;
    Ok(vec![(lhs, t * s * sf_general(z, s, t - 1.0)?)])
}

fn differences_complex(z: Complex64, s: Complex64, t: Complex64) -> Pairs<Complex64> {
    let f = |x: Complex64| sf_general(x, s, t);
    Ok(vec![
        (f(z + s)? - f(z)?, t * s * sf_general(z + s, s, t - 1.0)?),
        (f(z - s)? - f(z)?, -t * s * sf_general(z, s, t - 1.0)?),
    ])
}

/// The alternating sum cancels heavily, so it is accumulated in double-double.
fn iterated_difference_complex(z: Complex64, s: Complex64, t: Complex64, p: u32) -> Pairs<Complex64> {
    let (zx, sx) = (x(z), x(s));
    let mut lhs = ExtendedComplex::zero();
    for k in 0..=p {
        let start = zx + ExtendedComplex::from_int(k as i64) * sx;
        let term = ExtendedComplex::shifted_factorial(&start, &sx, t)?;
        lhs = lhs + sign_pow::<ExtendedComplex>((p - k) as i64) * binom::<ExtendedComplex>(p, k as i64) * term;
    }
    Ok(vec![(lhs.to_c64(), delta_s_power(z, s, t, p)?)])
}

fn sign_relation(z: Complex64, s: Complex64, t: Complex64) -> Pairs<Complex64> {
    let ratio = principal_power(s, t)? / principal_power(-s, t)?;
    Ok(vec![(sf_general(z, s, t)?, ratio * sf_general(-z, -s, t)?)])
}

fn reflection_reversal(z: Complex64, s: Complex64, t: Complex64) -> Pairs<Complex64> {
    let x = z / s;
    let ratio = principal_power(s, t)? / principal_power(-s, t)?;
    let rhs = ratio * sin_pi(x) / sin_pi(x + t) * sf_general(z + (t - 1.0) * s, -s, t)?;
    Ok(vec![(sf_general(z, s, t)?, rhs)])
}

// ---------------------------------------------------------------------------------------
// Drivers.

struct Ctx {
    seed: u64,
    trials: usize,
}

impl Ctx {
    /// Runs `trials` complex trials; `draw` returns `None` to ask for a redraw.
    /// Pairs in a wider scalar type are rounded to `Complex64` before comparison.
    fn complex<T: Scalar>(
        &self,
        name: &str,
        tol: f64,
        mut draw: impl FnMut(&mut Sampler) -> Option<(String, Pairs<T>)>,
    ) -> CheckResult {
        let mut check = Check::new(SUITE, name, tol);
        let mut rng = Sampler::new(self.seed, name);
        let mut done = 0;
        let mut draws = 0;
        while done < self.trials && draws < MAX_DRAWS {
            draws += 1;
            let Some((detail, pairs)) = draw(&mut rng) else { continue };
            done += 1;
            match pairs {
                Ok(pairs) => {
                    for (a, b) in pairs {
                        let (a, b) = (a.to_c64(), b.to_c64());
                        check.compare(&a, &b, || format!("{detail}: {a} vs {b}"));
                    }
                }
                Err(e) => check.error(format!("{detail}: {e}")),
            }
        }
        check.finish()
    }

    /// Exact counterpart; draws whose evaluation hits a pole are redrawn.
    fn exact(
        &self,
        name: &str,
        mut draw: impl FnMut(&mut Sampler) -> (String, Pairs<ExactRational>),
    ) -> CheckResult {
        let key = format!("{name}/exact");
        let mut check = Check::exact(SUITE, &key);
        let mut rng = Sampler::new(self.seed, &key);
        let mut done = 0;
        let mut draws = 0;
        while done < self.trials && draws < MAX_DRAWS {
            draws += 1;
            let (detail, pairs) = draw(&mut rng);
            let Ok(pairs) = pairs else { continue };
            done += 1;
            for (a, b) in pairs {
                check.compare(&a, &b, || format!("{detail}: {a} vs {b}"));
            }
        }
        check.finish()
    }
}

fn zs(rng: &mut Sampler) -> (Complex64, Complex64) {
    (rng.disc(5.0), rng.disc_away_from_zero(5.0, 0.1))
}

fn q_zs(rng: &mut Sampler) -> (ExactRational, ExactRational) {
    (rng.rational(12, 5), rng.nonzero_rational(6, 4))
}

/// `|z + k s| >= 0.05` for every `k` in `ks`.
fn factors_clear(z: Complex64, s: Complex64, ks: impl IntoIterator<Item = i64>) -> bool {
    ks.into_iter().all(|k| (z + k as f64 * s).norm() >= 0.05)
}

/// Gamma arguments used by `(z)_{s;t}` on the gamma path.
fn gamma_path_clear(z: Complex64, s: Complex64, ts: &[Complex64]) -> bool {
    let x = z / s;
    let mut args = vec![x];
    args.extend(ts.iter().map(|t| x + t));
    clear_of_poles(&args)
}

fn integer_index_checks(ctx: &Ctx, out: &mut Vec<CheckResult>) {
    let q_range = |rng: &mut Sampler| rng.int(-6, 6);

    out.push(ctx.complex("sign_flip", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let q = q_range(rng);
        factors_clear(z, s, q.min(0)..0).then(|| (format!("z={z} s={s} q={q}"), sign_flip(&x(z), &x(s), q)))
    }));
    out.push(ctx.exact("sign_flip", |rng| {
        let (z, s) = q_zs(rng);
        let q = q_range(rng);
        (format!("z={z} s={s} q={q}"), sign_flip(&z, &s, q))
    }));

    out.push(ctx.complex("reversal", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let q = q_range(rng);
        factors_clear(z, s, q.min(0)..0).then(|| (format!("z={z} s={s} q={q}"), reversal(&x(z), &x(s), q)))
    }));
    out.push(ctx.exact("reversal", |rng| {
        let (z, s) = q_zs(rng);
        let q = q_range(rng);
        (format!("z={z} s={s} q={q}"), reversal(&z, &s, q))
    }));

    out.push(ctx.exact("multiplication_law", |rng| {
        let (z, s) = q_zs(rng);
        let (t, r) = (rng.int(-5, 5), rng.int(-5, 5));
        (format!("z={z} s={s} t={t} r={r}"), multiplication_int(&z, &s, t, r))
    }));
    out.push(ctx.exact("inversion", |rng| {
        let (z, s) = q_zs(rng);
        let t = rng.int(-6, 6);
        (format!("z={z} s={s} t={t}"), inversion_int(&z, &s, t))
    }));

    out.push(ctx.complex("negative_index", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let q = rng.int(1, 6) as u32;
        factors_clear(z, s, -(q as i64)..0).then(|| (format!("z={z} s={s} q={q}"), negative_index(&x(z), &x(s), q)))
    }));
    out.push(ctx.complex("negative_index_gamma_route", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let q = rng.int(1, 6) as u32;
        let ok = factors_clear(z, s, -(q as i64)..0) && gamma_path_clear(z, s, &[c(-(q as f64))]);
        ok.then(|| (format!("z={z} s={s} q={q}"), negative_index_gamma(z, s, q)))
    }));
    out.push(ctx.exact("negative_index", |rng| {
        let (z, s) = q_zs(rng);
        let q = rng.int(1, 6) as u32;
        (format!("z={z} s={s} q={q}"), negative_index(&z, &s, q))
    }));

    out.push(ctx.complex("binomial_products", IDENTITY_TOLERANCE, |rng| {
        let z = rng.disc(5.0);
        let (n, p) = (rng.int(0, 6) as u32, rng.int(0, 6) as u32);
        Some((format!("z={z} n={n} p={p}"), binomial_products(&x(z), n, p)))
    }));
    out.push(ctx.exact("binomial_products", |rng| {
        let z = rng.rational(12, 5);
        let (n, p) = (rng.int(0, 6) as u32, rng.int(0, 6) as u32);
        (format!("z={z} n={n} p={p}"), binomial_products(&z, n, p))
    }));

    out.push(ctx.complex("scaling", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let w = rng.disc_away_from_zero(5.0, 0.1);
        let q = q_range(rng);
        let ok = factors_clear(w * z, s, q.min(0)..0);
        ok.then(|| (format!("w={w} z={z} s={s} q={q}"), scaling(&x(w), &x(z), &x(s), q)))
    }));
    out.push(ctx.exact("scaling", |rng| {
        let (z, s) = q_zs(rng);
        let w = rng.nonzero_rational(6, 4);
        let q = q_range(rng);
        (format!("w={w} z={z} s={s} q={q}"), scaling(&w, &z, &s, q))
    }));

    out.push(ctx.complex("k_fold", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let (k, n) = (rng.int(2, 3) as u32, rng.int(0, 4) as u32);
        Some((format!("z={z} s={s} k={k} n={n}"), k_fold(&x(z), &x(s), k, n)))
    }));
    out.push(ctx.exact("k_fold", |rng| {
        let (z, s) = q_zs(rng);
        let (k, n) = (rng.int(2, 3) as u32, rng.int(0, 4) as u32);
        (format!("z={z} s={s} k={k} n={n}"), k_fold(&z, &s, k, n))
    }));

    out.push(ctx.complex("inverse_decomposition", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let n = rng.int(0, 6) as u32;
        let p = rng.int(0, n as i64) as u32;
        factors_clear(z, s, 0..n as i64)
            .then(|| (format!("z={z} s={s} p={p} n={n}"), inverse_decomposition(&x(z), &x(s), p, n)))
    }));
    out.push(ctx.exact("inverse_decomposition", |rng| {
        let (z, s) = q_zs(rng);
        let n = rng.int(0, 6) as u32;
        let p = rng.int(0, n as i64) as u32;
        let ok = (0..n as i64).all(|k| !(z.clone() + ExactRational::from_int(k) * s.clone()).is_zero());
        let pairs = if ok { inverse_decomposition(&z, &s, p, n) } else { Err(crate::Error::Domain("pole".into())) };
        (format!("z={z} s={s} p={p} n={n}"), pairs)
    }));

    out.push(ctx.exact("pascal", |rng| {
        let (z, s) = q_zs(rng);
        let t = rng.int(-6, 6);
        (format!("z={z} s={s} t={t}"), pascal_int(&z, &s, t))
    }));

    out.push(ctx.complex("binomial_pascal", IDENTITY_TOLERANCE, |rng| {
        let z = rng.disc(5.0);
        let n = rng.int(0, 10) as u32;
        Some((format!("z={z} n={n}"), binomial_pascal(&x(z), n)))
    }));
    out.push(ctx.exact("binomial_pascal", |rng| {
        let z = rng.rational(12, 5);
        let n = rng.int(0, 10) as u32;
        (format!("z={z} n={n}"), binomial_pascal(&z, n))
    }));

    out.push(ctx.exact("difference_operator", |rng| {
        let (z, s) = q_zs(rng);
        let t = rng.int(-6, 6);
        (format!("z={z} s={s} t={t}"), differences_int(&z, &s, t))
    }));
    out.push(ctx.exact("iterated_difference", |rng| {
        let (z, s) = q_zs(rng);
        let t = rng.int(-6, 6);
        let p = rng.int(0, 4) as u32;
        (format!("z={z} s={s} t={t} p={p}"), iterated_difference_int(&z, &s, t, p))
    }));

    out.push(ctx.complex("binomial_formula", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let w = rng.disc(5.0);
        let n = rng.int(0, 10) as u32;
        Some((format!("z={z} w={w} s={s} n={n}"), binomial_formula(&x(z), &x(w), &x(s), n)))
    }));
    out.push(ctx.exact("binomial_formula", |rng| {
        let (z, s) = q_zs(rng);
        let w = rng.rational(12, 5);
        let n = rng.int(0, 10) as u32;
        (format!("z={z} w={w} s={s} n={n}"), binomial_formula(&z, &w, &s, n))
    }));

    out.push(ctx.complex("binomial_coefficients", IDENTITY_TOLERANCE, |rng| {
        let (z, w) = (rng.disc(5.0), rng.disc(5.0));
        let n = rng.int(0, 10) as u32;
        Some((format!("z={z} w={w} n={n}"), binomial_coefficients(&x(z), &x(w), n)))
    }));
    out.push(ctx.exact("binomial_coefficients", |rng| {
        let (z, w) = (rng.rational(12, 5), rng.rational(12, 5));
        let n = rng.int(0, 10) as u32;
        (format!("z={z} w={w} n={n}"), binomial_coefficients(&z, &w, n))
    }));

    out.push(ctx.complex("multinomial", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let (w, v) = (rng.disc(5.0), rng.disc(5.0));
        let n = rng.int(0, 6) as u32;
        Some((format!("z={z} w={w} v={v} s={s} n={n}"), multinomial([&x(z), &x(w), &x(v)], &x(s), n)))
    }));
    out.push(ctx.exact("multinomial", |rng| {
        let (z, s) = q_zs(rng);
        let (w, v) = (rng.rational(12, 5), rng.rational(12, 5));
        let n = rng.int(0, 6) as u32;
        (format!("z={z} w={w} v={v} s={s} n={n}"), multinomial([&z, &w, &v], &s, n))
    }));

    out.push(ctx.complex("difference_binomial", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let w = rng.disc(5.0);
        let n = rng.int(0, 10) as u32;
        Some((format!("z={z} w={w} s={s} n={n}"), difference_binomial(&x(z), &x(w), &x(s), n)))
    }));
    out.push(ctx.exact("difference_binomial", |rng| {
        let (z, s) = q_zs(rng);
        let w = rng.rational(12, 5);
        let n = rng.int(0, 10) as u32;
        (format!("z={z} w={w} s={s} n={n}"), difference_binomial(&z, &w, &s, n))
    }));

    out.push(ctx.complex("inverse_binomial", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let w = rng.disc(5.0);
        let n = rng.int(0, 6) as u32;
        let ok = factors_clear(z, s, 0..n as i64) && factors_clear(w, s, 0..n as i64);
        ok.then(|| (format!("z={z} w={w} s={s} n={n}"), inverse_binomial(&x(z), &x(w), &x(s), n)))
    }));
    out.push(ctx.exact("inverse_binomial", |rng| {
        let (z, s) = q_zs(rng);
        let w = rng.rational(12, 5);
        let n = rng.int(0, 6) as u32;
        let clear = |x: &ExactRational| (0..n as i64).all(|k| !(x.clone() + ExactRational::from_int(k) * s.clone()).is_zero());
        let pairs = if clear(&z) && clear(&w) { inverse_binomial(&z, &w, &s, n) } else { Err(crate::Error::Domain("pole".into())) };
        (format!("z={z} w={w} s={s} n={n}"), pairs)
    }));

    out.push(ctx.complex("ratio_sum", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let w = rng.disc(5.0);
        let n = rng.int(0, 6) as u32;
        factors_clear(w, s, 0..n as i64).then(|| (format!("z={z} w={w} s={s} n={n}"), ratio_sum(&x(z), &x(w), &x(s), n)))
    }));
    out.push(ctx.exact("ratio_sum", |rng| {
        let (z, s) = q_zs(rng);
        let w = rng.rational(12, 5);
        let n = rng.int(0, 6) as u32;
        let clear = (0..n as i64).all(|k| !(w.clone() + ExactRational::from_int(k) * s.clone()).is_zero());
        let pairs = if clear { ratio_sum(&z, &w, &s, n) } else { Err(crate::Error::Domain("pole".into())) };
        (format!("z={z} w={w} s={s} n={n}"), pairs)
    }));

    out.push(ctx.complex("weighted_sum", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let w = rng.disc(5.0);
        let n = rng.int(0, 6) as u32;
        let p = rng.int(0, n as i64) as u32;
        Some((format!("z={z} w={w} s={s} n={n} p={p}"), weighted_sum(&x(z), &x(w), &x(s), n, p)))
    }));
    out.push(ctx.exact("weighted_sum", |rng| {
        let (z, s) = q_zs(rng);
        let w = rng.rational(12, 5);
        let n = rng.int(0, 6) as u32;
        let p = rng.int(0, n as i64) as u32;
        (format!("z={z} w={w} s={s} n={n} p={p}"), weighted_sum(&z, &w, &s, n, p))
    }));
}

fn complex_index_checks(ctx: &Ctx, out: &mut Vec<CheckResult>) {
    let t_of = |rng: &mut Sampler| rng.disc(3.0);

    out.push(ctx.complex("multiplication_law", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let (t, r) = (t_of(rng), t_of(rng));
        gamma_path_clear(z, s, &[t, t + r])
            .then(|| (format!("z={z} s={s} t={t} r={r}"), multiplication_complex(z, s, t, r)))
    }));
    out.push(ctx.complex("inversion", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let t = t_of(rng);
        gamma_path_clear(z, s, &[t]).then(|| (format!("z={z} s={s} t={t}"), inversion_complex(z, s, t)))
    }));
    out.push(ctx.complex("pascal", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let t = t_of(rng);
        let ok = gamma_path_clear(z, s, &[t, t - 1.0]) && gamma_path_clear(z - s, s, &[t]);
        ok.then(|| (format!("z={z} s={s} t={t}"), pascal_complex(z, s, t)))
    }));
    out.push(ctx.complex("difference_operator", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let t = t_of(rng);
        let ok = gamma_path_clear(z - s, s, &[t, t + 1.0, t + 2.0, c(1.0), c(2.0)]);
        ok.then(|| (format!("z={z} s={s} t={t}"), differences_complex(z, s, t)))
    }));
    out.push(ctx.complex("iterated_difference", IDENTITY_TOLERANCE, |rng| {
        let z = rng.disc(5.0);
        let s = rng.disc_away_from_zero(5.0, 0.5);
        let t = t_of(rng);
        let p = rng.int(0, 4) as u32;
        let shifts: Vec<Complex64> = (0..=p).flat_map(|k| [c(k as f64), t + k as f64]).collect();
        let ok = gamma_path_clear(z, s, &shifts) && (z / s).norm() <= 20.0;
        ok.then(|| (format!("z={z} s={s} t={t} p={p}"), iterated_difference_complex(z, s, t, p)))
    }));
    out.push(ctx.complex("sign_relation", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let t = t_of(rng);
        gamma_path_clear(z, s, &[t]).then(|| (format!("z={z} s={s} t={t}"), sign_relation(z, s, t)))
    }));
    out.push(ctx.complex("reflection_reversal", IDENTITY_TOLERANCE, |rng| {
        let (z, s) = zs(rng);
        let t = t_of(rng);
        let x = z / s;
        let ok = gamma_path_clear(z, s, &[t])
            && clear_of_poles(&[1.0 - x, 1.0 - x - t])
            && clear_of_zero(&[sin_pi(x + t)], 1e-3);
        ok.then(|| (format!("z={z} s={s} t={t}"), reflection_reversal(z, s, t)))
    }));
    out.push(ctx.complex("zero_shift_limit", ZERO_SHIFT_TOLERANCE, |rng| {
        let z = rng.disc_away_from_zero(5.0, 0.5);
        let t = t_of(rng);
        let ok = z.arg().abs() <= 0.75 * std::f64::consts::PI;
        ok.then(|| {
            let pairs = (|| Ok(vec![(sf_general(z, c(1e-6), t)?, principal_power(z, t)?)]))();
            (format!("z={z} t={t}"), pairs)
        })
    }));
}

fn special_values(out: &mut Vec<CheckResult>) {
    let q = |v: i64| ExactRational::from_int(v);
    let qf = |k: u32| ExactRational::from_integer(crate::numkernel::exact_factorial(k as u64));
    let mut check = Check::exact(SUITE, "special_values");
    for k in 0..=10u32 {
        for n in 0..=10u32 {
            let rising_neg = sf_product(&q(-(k as i64)), &q(1), n);
            let via_falling = sign_pow::<ExactRational>(n as i64) * falling(&q(k as i64), n);
            let branch = if k < n {
                q(0)
            } else {
                sign_pow::<ExactRational>(n as i64) * qf(k) / qf(k - n)
            };
            check.compare(&rising_neg, &via_falling, || format!("(-{k})_{n}"));
            check.compare(&rising_neg, &branch, || format!("(-{k})_{n} branch"));

            let rising_pos = sf_product(&q(k as i64), &q(1), n);
            let via_falling = sign_pow::<ExactRational>(n as i64) * falling(&q(-(k as i64)), n);
            check.compare(&rising_pos, &via_falling, || format!("({k})_{n}"));
            if n >= 1 {
                let branch = if k == 0 { q(0) } else { qf(k + n - 1) / qf(k - 1) };
                check.compare(&rising_pos, &branch, || format!("({k})_{n} branch"));
            }
        }
    }
    out.push(check.finish());
}

fn monomial_anchors(out: &mut Vec<CheckResult>) {
    let mut check = Check::exact(SUITE, "monomial_expansion");
    let s = ExactRational::new(BigInt::from(-5), BigInt::from(3));
    let probe = ExactRational::new(BigInt::from(7), BigInt::from(2));
    for n in 0..=10u32 {
        let coef = monomial_expansion(&s, n);
        let nq = ExactRational::from_int(n as i64);
        check.compare(&coef[n as usize], &ExactRational::one(), || format!("n={n} leading"));
        if n >= 1 {
            check.compare(&coef[0], &ExactRational::zero(), || format!("n={n} constant"));
            let want = fact::<ExactRational>(n - 1) * s.powi(n as i32 - 1);
            check.compare(&coef[1], &want, || format!("n={n} linear"));
            let want = nq.clone() * (nq.clone() - ExactRational::one()) * s.clone() / ExactRational::from_int(2);
            check.compare(&coef[n as usize - 1], &want, || format!("n={n} subleading"));
        }
        let value = coef.iter().rev().fold(ExactRational::zero(), |acc, c| acc * probe.clone() + c.clone());
        check.compare(&value, &sf_product(&probe, &s, n), || format!("n={n} value"));
    }
    out.push(check.finish());
}

/// 40-term truncation of the generating function against its closed form.
pub fn generating_function_check(seed: u64, trials: usize) -> CheckResult {
    let name = "generating_function";
    let mut check = Check::new(SUITE, name, SERIES_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..trials {
        let z = rng.disc(2.0);
        let s = loop {
            let s = rng.disc(3.0);
            if s.norm() >= 1.0 {
                break s;
            }
        };
        let x = rng.disc(0.5 / s.norm());
        let g = generating_series(z, s, 40);
        match g.closed_form(x) {
            Ok(want) => {
                let got = g.evaluate(x);
                check.compare(&got, &want, || format!("z={z} s={s} x={x}"));
            }
            Err(e) => check.error(format!("z={z} s={s} x={x}: {e}")),
        }
    }
    let name = "generating_function_zero_shift";
    let mut zero = Check::new(SUITE, name, SERIES_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..trials {
        let (z, x) = (rng.disc(2.0), rng.disc(1.0));
        let g = generating_series(z, Complex64::zero(), 40);
        let want = (x * z).exp();
        zero.compare(&g.evaluate(x), &want, || format!("z={z} x={x}"));
    }
    let mut main = check.finish();
    let zero = zero.finish();
    // fold the s = 0 case into the same line
    main.trials += zero.trials;
    main.failures += zero.failures;
    main.max_residual = main.max_residual.max(zero.max_residual);
    if main.first_failure.is_none() {
        main.first_failure = zero.first_failure;
    }
    main
}

type Poly = Vec<BigInt>;

fn poly_mul_linear(p: &Poly, root: i64) -> Poly {
    // p(z) * (z - root)
    let mut out = vec![BigInt::zero(); p.len() + 1];
    for (k, c) in p.iter().enumerate() {
        out[k + 1] += c;
        out[k] -= c * BigInt::from(root);
    }
    out
}

fn falling_poly(n: usize) -> Poly {
    (0..n as i64).fold(vec![BigInt::one()], |p, k| poly_mul_linear(&p, k))
}

fn rising_poly(n: usize) -> Poly {
    (0..n as i64).fold(vec![BigInt::one()], |p, k| poly_mul_linear(&p, -k))
}

fn monomial_poly(n: usize) -> Poly {
    let mut p = vec![BigInt::zero(); n + 1];
    p[n] = BigInt::one();
    p
}

fn combine(coefs: &[BigInt], basis: impl Fn(usize) -> Poly, len: usize) -> Poly {
    let mut out = vec![BigInt::zero(); len];
    for (k, c) in coefs.iter().enumerate() {
        for (d, b) in basis(k).iter().enumerate() {
            out[d] += c * b;
        }
    }
    out
}

/// Number of set partitions of `{1..n}` into exactly `k` blocks, by enumerating
/// restricted growth strings.
pub fn count_set_partitions(n: usize, k: usize) -> u64 {
    fn walk(pos: usize, n: usize, used: usize, k: usize) -> u64 {
        if pos == n {
            return (used == k) as u64;
        }
        if used + (n - pos) < k {
            return 0;
        }
        let mut total = 0;
        for block in 0..=used {
            if block < k {
                total += walk(pos + 1, n, used.max(block + 1), k);
            }
        }
        total
    }
    if n == 0 {
        return (k == 0) as u64;
    }
    walk(0, n, 0, k)
}

/// The three basis changes hold as exact polynomial identities up to `n_max`.
pub fn connecting_checks(n_max: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut check = Check::exact(SUITE, "connecting_basis_change");
    let first = connecting_table(ConnectingKind::StirlingFirst, n_max);
    let second = connecting_table(ConnectingKind::StirlingSecond, n_max);
    let lah = connecting_table(ConnectingKind::Lah, n_max);
    let to_q = |p: &Poly| p.iter().cloned().map(ExactRational::from_integer).collect::<Vec<_>>();
    let mut record = |a: Poly, b: Poly, what: String| {
        let (a, b) = (to_q(&a), to_q(&b));
        let r = if a == b { 0.0 } else { 1.0 };
        check.residual(r, || what);
    };
    for n in 0..=n_max {
        record(falling_poly(n), combine(first.row(n), monomial_poly, n + 1), format!("first kind n={n}"));
        record(monomial_poly(n), combine(second.row(n), falling_poly, n + 1), format!("second kind n={n}"));
        record(rising_poly(n), combine(lah.row(n), falling_poly, n + 1), format!("Lah n={n}"));
    }
    out.push(check.finish());

    let mut check = Check::exact(SUITE, "stirling_second_partitions");
    for n in 0..=n_max.min(8) {
        for k in 0..=n {
            let want = BigInt::from(count_set_partitions(n, k));
            let r = if second.get(n, k) == want { 0.0 } else { 1.0 };
            check.residual(r, || format!("S({n},{k})"));
        }
    }
    out.push(check.finish());

    let mut check = Check::exact(SUITE, "lah_closed_form");
    for n in 1..=n_max as u64 {
        for k in 1..=n {
            let want = crate::numkernel::binomial_u64(n - 1, k - 1) * crate::numkernel::exact_factorial(n)
                / crate::numkernel::exact_factorial(k);
            let r = if lah.get(n as usize, k as usize) == want { 0.0 } else { 1.0 };
            check.residual(r, || format!("L({n},{k})"));
        }
    }
    out.push(check.finish());

    let mut check = Check::exact(SUITE, "stirling_first_row_sums");
    for n in 2..=n_max {
        let sum: BigInt = first.row(n).iter().sum();
        let r = if sum.abs().is_zero() { 0.0 } else { 1.0 };
        check.residual(r, || format!("n={n}"));
    }
    out.push(check.finish());
    out
}

/// Every identity check of the s-shifted factorial module.
pub fn run(seed: u64, trials: usize) -> Vec<CheckResult> {
    let ctx = Ctx { seed, trials };
    let mut out = Vec::new();
    special_values(&mut out);
    integer_index_checks(&ctx, &mut out);
    complex_index_checks(&ctx, &mut out);
    monomial_anchors(&mut out);
    out.push(generating_function_check(seed, trials.clamp(1, 50)));
    out.extend(connecting_checks(12));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(count_set_partitions(3, 2), 3);
        assert_eq!(count_set_partitions(4, 2), 7);
        assert_eq!(count_set_partitions(5, 3), 25);
        assert_eq!(count_set_partitions(0, 0), 1);
        let bell8: u64 = (0..=8).map(|k| count_set_partitions(8, k)).sum();
        assert_eq!(bell8, 4140);
    }
}
