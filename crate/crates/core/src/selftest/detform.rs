use num_complex::Complex64;
use num_traits::{One, Zero};

use super::report::{Check, CheckResult};
use super::sample::{clear_of_poles, clear_of_zero, Sampler};
use crate::detform::{
    affine_map_sides, affine_progression_sides, alternant_matrix, det_exact, det_oracle,
    diagonal_rearrangement, inversion_sides, mobius_alternant_sides, mobius_sides,
    neg_complex_index_sides, prod_diff, ratio_rearrangement, triangular_sides, triangular_sides_extended, DetKind,
    DeterminantSpec, Matrix, NodeSet, TriangularKind, TriangularParams,
};
use crate::error::{Error, Result};
use crate::numkernel::ExactRational;
use crate::sfact::sf_product;

const SUITE: &str = "detform";
/// Closed form against the pivoted-LU oracle.
pub const ORACLE_TOLERANCE: f64 = 1e-8;
/// Oracle determinants of the same matrix family at different shifts.
pub const SHIFT_TOLERANCE: f64 = 1e-9;
/// Oracle determinant with a repeated node, relative to `(max |entry|)^n`.
pub const COINCIDENT_TOLERANCE: f64 = 1e-9;
/// Product rearrangements.
pub const REARRANGEMENT_TOLERANCE: f64 = 1e-10;
/// Row combinations against closed forms for `i <= j`.
pub const TRIANGULAR_TOLERANCE: f64 = 1e-10;
/// `|row sum| / Σ|term|` for `i > j`.
pub const VANISHING_TOLERANCE: f64 = 1e-12;
/// Minimum modulus of any factor that appears in a denominator of a sampled instance.
pub const FACTOR_GUARD: f64 = 0.05;

const NODE_RADIUS: f64 = 4.0;
const NODE_SEPARATION: f64 = 0.1;
const MAX_DRAWS: usize = 1000;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn affine(x: Complex64, step: Complex64, ks: impl IntoIterator<Item = i64>) -> Vec<Complex64> {
    ks.into_iter().map(|k| x + k as f64 * step).collect()
}

/// Instance margins: factors bounded away from zero and gamma arguments away from poles.
fn well_separated(spec: &DeterminantSpec, z: &[Complex64]) -> bool {
    let n = z.len() as i64;
    let s = spec.s;
    let ab = spec.params.a.zip(spec.params.b);
    let mut factors = Vec::new();
    let mut gamma_args = Vec::new();
    for &zj in z {
        let lin = ab.map(|(a, b)| a * zj + b);
        match spec.kind {
            DetKind::SShiftedComplexIndex => {
                let x = zj / s;
                let t = spec.params.t.unwrap_or_default();
                gamma_args.push(x);
                gamma_args.extend(affine(x + t, c(1.0), 0..n));
            }
            DetKind::InvSShifted => factors.extend(affine(zj, s, 0..n - 1)),
            DetKind::RatioSShifted => factors.extend(affine(lin.unwrap(), s, 0..n - 1)),
            DetKind::NegIndex => factors.extend(affine(zj, -s, 1..n)),
            DetKind::RatioNegIndex => factors.extend(affine(lin.unwrap(), -s, 1..n)),
            DetKind::GammaShift | DetKind::GammaRatio => gamma_args.extend(affine(zj, c(1.0), 0..n)),
            DetKind::InvBinomial => factors.extend(affine(zj, c(-1.0), 0..n - 1)),
            DetKind::BinomialRatio => factors.extend(affine(lin.unwrap(), c(-1.0), 0..n - 1)),
            DetKind::GammaNegShift => gamma_args.extend(affine(zj, c(-1.0), 0..n)),
            DetKind::GammaRatioNeg => gamma_args.extend(affine(lin.unwrap(), c(-1.0), 0..n)),
            DetKind::TwoSetGammaRatio => {
                for wj in spec.params.w.as_ref().unwrap().as_slice() {
                    gamma_args.extend(affine(zj + wj, c(1.0), 0..n));
                }
            }
            _ => {}
        }
    }
    clear_of_zero(&factors, FACTOR_GUARD) && clear_of_poles(&gamma_args)
}

/// A random complex instance of `kind` with `n` nodes; `None` when the margins fail.
fn draw_complex(rng: &mut Sampler, kind: DetKind, n: usize) -> Option<(DeterminantSpec, NodeSet)> {
    let s = if kind.uses_shift() { rng.disc_away_from_zero(1.5, 0.1) } else { c(1.0) };
    let mut spec = DeterminantSpec::new(kind, s);
    if kind.uses_ab() {
        spec = spec.with_ab(rng.disc(2.0), rng.disc(2.0));
    }
    if kind == DetKind::SShiftedComplexIndex {
        spec = spec.with_t(rng.disc(2.0));
    }
    if kind == DetKind::SShiftedOffsets {
        spec = spec.with_offsets((0..n).map(|_| rng.disc(3.0)).collect());
    }
    if kind.two_sets() {
        let w = rng.separated_nodes(n, NODE_RADIUS, NODE_SEPARATION);
        spec = spec.with_w(NodeSet::new(w).ok()?);
    }
    let z = rng.separated_nodes(n, NODE_RADIUS, NODE_SEPARATION);
    well_separated(&spec, &z).then(|| (spec, NodeSet::new(z).unwrap()))
}

fn draw_exact(rng: &mut Sampler, kind: DetKind, n: usize) -> (DeterminantSpec<ExactRational>, NodeSet<ExactRational>) {
    let s = if kind.uses_shift() { rng.nonzero_rational(6, 4) } else { ExactRational::one() };
    let mut spec = DeterminantSpec::new(kind, s);
    if kind.uses_ab() {
        spec = spec.with_ab(rng.rational(6, 4), rng.rational(6, 4));
    }
    if kind == DetKind::SShiftedOffsets {
        spec = spec.with_offsets((0..n).map(|_| rng.rational(12, 5)).collect());
    }
    if kind.two_sets() {
        spec = spec.with_w(NodeSet::new(rng.distinct_rationals(n, 12, 5)).unwrap());
    }
    (spec, NodeSet::new(rng.distinct_rationals(n, 12, 5)).unwrap())
}

/// Draws until `draw` yields an instance, giving up after [`MAX_DRAWS`].
fn redraw<T>(rng: &mut Sampler, mut draw: impl FnMut(&mut Sampler) -> Option<T>) -> Option<T> {
    (0..MAX_DRAWS).find_map(|_| draw(rng))
}

fn node_text<T: std::fmt::Display>(z: &[T]) -> String {
    z.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

/// Closed form against the LU oracle for one kind, `n = 2..=8`, `trials` instances per `n`.
pub fn oracle_check(seed: u64, trials: usize, kind: DetKind) -> CheckResult {
    let name = format!("oracle/{}", kind.name());
    let mut check = Check::new(SUITE, &name, ORACLE_TOLERANCE);
    let mut rng = Sampler::new(seed, &name);
    for n in 2..=8 {
        for _ in 0..trials {
            let Some((spec, nodes)) = redraw(&mut rng, |r| draw_complex(r, kind, n)) else {
                check.error(format!("n={n}: no admissible instance drawn"));
                continue;
            };
            match spec.evaluate(&nodes) {
                Ok(res) => {
                    let oracle = res.oracle.unwrap();
                    check.compare(&res.closed_form, &oracle, || {
                        format!("n={n} s={} params={:?} nodes=[{}]: closed {} oracle {}", spec.s, spec.params, node_text(nodes.as_slice()), res.closed_form, oracle)
                    });
                }
                Err(e) => check.error(format!("n={n} nodes=[{}]: {e}", node_text(nodes.as_slice()))),
            }
        }
    }
    check.finish()
}

/// Exact closed form against fraction-free elimination, `n = 2..=6`.
pub fn exact_check(seed: u64, trials: usize, kind: DetKind) -> CheckResult {
    let name = format!("exact/{}", kind.name());
    let mut check = Check::exact(SUITE, &name);
    let mut rng = Sampler::new(seed, &name);
    for n in 2..=6 {
        for _ in 0..trials {
            let drawn = redraw(&mut rng, |r| {
                let (spec, nodes) = draw_exact(r, kind, n);
                match spec.evaluate_exact(&nodes) {
                    Err(Error::SideCondition { .. }) => None,
                    other => Some((spec, nodes, other)),
                }
            });
            match drawn {
                Some((_, nodes, Ok((closed, oracle)))) => {
                    check.compare(&closed, &oracle, || format!("n={n} nodes=[{}]: {closed} vs {oracle}", node_text(nodes.as_slice())));
                }
                Some((_, nodes, Err(e))) => check.error(format!("n={n} nodes=[{}]: {e}", node_text(nodes.as_slice()))),
                None => check.error(format!("n={n}: no admissible instance drawn")),
            }
        }
    }
    check.finish()
}

fn oracle_of(spec: &DeterminantSpec, nodes: &NodeSet) -> Result<Complex64> {
    Ok(det_oracle(&spec.build_matrix(nodes)?))
}

fn antisymmetry(seed: u64, trials: usize) -> CheckResult {
    let name = "antisymmetry";
    let mut check = Check::new(SUITE, name, ORACLE_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for kind in DetKind::ALL {
        for _ in 0..trials.div_ceil(10) {
            let n = rng.int(2, 6) as usize;
            let Some((spec, nodes)) = redraw(&mut rng, |r| draw_complex(r, kind, n)) else { continue };
            let (i, j) = (rng.int(0, n as i64 - 1) as usize, rng.int(0, n as i64 - 1) as usize);
            if i == j {
                continue;
            }
            let mut swapped = nodes.as_slice().to_vec();
            swapped.swap(i, j);
            let swapped = NodeSet::new(swapped).unwrap();
            let res = (|| {
                Ok::<_, Error>((
                    spec.det_closed(&nodes)?,
                    spec.det_closed(&swapped)?,
                    oracle_of(&spec, &nodes)?,
                    oracle_of(&spec, &swapped)?,
                ))
            })();
            match res {
                Ok((c0, c1, o0, o1)) => {
                    check.compare(&c1, &-c0, || format!("{kind} closed n={n} swap {i},{j}"));
                    check.compare(&o1, &-o0, || format!("{kind} oracle n={n} swap {i},{j}"));
                }
                Err(e) => check.error(format!("{kind} n={n}: {e}")),
            }
        }
    }
    check.finish()
}

fn coincident_nodes(seed: u64, trials: usize) -> CheckResult {
    let name = "coincident_nodes";
    let mut check = Check::new(SUITE, name, COINCIDENT_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for kind in DetKind::ALL {
        for _ in 0..trials.div_ceil(10) {
            let n = rng.int(2, 8) as usize;
            let Some((spec, nodes)) = redraw(&mut rng, |r| draw_complex(r, kind, n)) else { continue };
            let mut z = nodes.as_slice().to_vec();
            let (i, j) = (rng.int(0, n as i64 - 2) as usize, n - 1);
            z[j] = z[i];
            let dup = NodeSet::new(z).unwrap();
            let res = (|| Ok::<_, Error>((spec.det_closed(&dup)?, spec.build_matrix(&dup)?)))();
            match res {
                Ok((closed, m)) => {
                    let scale = m.rows().iter().flatten().map(|v| v.norm()).fold(0.0, f64::max);
                    let r = if closed != Complex64::zero() {
                        f64::NAN
                    } else {
                        det_oracle(&m).norm() / scale.max(f64::MIN_POSITIVE).powi(n as i32)
                    };
                    check.residual(r, || format!("{kind} n={n}: closed {closed}"));
                }
                Err(e) => check.error(format!("{kind} n={n}: {e}")),
            }
        }
    }
    check.finish()
}

fn shift_independence(seed: u64, trials: usize) -> CheckResult {
    let name = "shift_independence";
    let mut check = Check::new(SUITE, name, SHIFT_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..trials {
        let n = rng.int(2, 8) as usize;
        let nodes = NodeSet::new(rng.separated_nodes(n, NODE_RADIUS, NODE_SEPARATION)).unwrap();
        let dets: Vec<Complex64> = (0..5)
            .map(|_| {
                let s = rng.disc(1.5);
                oracle_of(&DeterminantSpec::new(DetKind::SShifted, s), &nodes).unwrap()
            })
            .collect();
        for d in &dets[1..] {
            check.compare(d, &dets[0], || format!("n={n}: {d} vs {}", dets[0]));
        }
    }
    check.finish()
}

/// Coefficient matrix: upper triangular with unit-scale entries plus small lower noise.
fn coefficient_matrix(rng: &mut Sampler, n: usize) -> Matrix<Complex64> {
    Matrix::from_fn(n, |i, k| match i.cmp(&k) {
        std::cmp::Ordering::Less => rng.disc(1.0),
        std::cmp::Ordering::Equal => rng.disc_away_from_zero(2.0, 0.5),
        std::cmp::Ordering::Greater => rng.disc(0.1),
    })
}

fn polynomial_alternant(seed: u64, trials: usize) -> Vec<CheckResult> {
    let name = "polynomial_alternant";
    let mut check = Check::new(SUITE, name, ORACLE_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..trials {
        let n = rng.int(1, 5) as usize;
        let cm = coefficient_matrix(&mut rng, n);
        let z = rng.separated_nodes(n, NODE_RADIUS, NODE_SEPARATION);
        let m = alternant_matrix(&cm, &z, |zj, k| Ok(zj.powi(k as i32))).unwrap();
        let lhs = det_oracle(&m);
        let rhs = det_oracle(&cm) * prod_diff(&z);
        check.compare(&lhs, &rhs, || format!("n={n} nodes=[{}]", node_text(&z)));
    }
    let name = "polynomial_alternant/exact";
    let mut exact = Check::exact(SUITE, name);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..trials {
        let n = rng.int(1, 5) as usize;
        let s = rng.rational(6, 4);
        let cm = Matrix::from_fn(n, |_, _| rng.rational(6, 4));
        let z = rng.distinct_rationals(n, 12, 5);
        let m = alternant_matrix(&cm, &z, |zj, k| Ok(sf_product(zj, &s, k as u32))).unwrap();
        let lhs = det_exact(&m);
        let rhs = det_exact(&cm) * prod_diff(&z);
        exact.compare(&lhs, &rhs, || format!("n={n} s={s} nodes=[{}]", node_text(&z)));
    }
    vec![check.finish(), exact.finish()]
}

fn negative_complex_index(seed: u64, trials: usize) -> CheckResult {
    let name = "negative_complex_index";
    let mut check = Check::new(SUITE, name, ORACLE_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..trials {
        let drawn = redraw(&mut rng, |r| {
            let n = r.int(1, 5) as usize;
            let s = r.disc_away_from_zero(1.5, 0.1);
            let t = r.disc(2.0);
            let z = r.separated_nodes(n, NODE_RADIUS, NODE_SEPARATION);
            let mut args = Vec::new();
            let mut factors = Vec::new();
            for &zj in &z {
                args.push(zj / s);
                args.extend(affine(zj / s + t, c(-1.0), 0..n as i64));
                factors.extend(affine(zj + t * s, -s, 1..n as i64));
            }
            (clear_of_poles(&args) && clear_of_zero(&factors, FACTOR_GUARD)).then_some((n, s, t, z))
        });
        let Some((n, s, t, z)) = drawn else { continue };
        match neg_complex_index_sides(&NodeSet::new(z.clone()).unwrap(), s, t) {
            Ok(sides) => check.compare(&sides.lhs, &sides.rhs, || format!("n={n} s={s} t={t} nodes=[{}]", node_text(&z))),
            Err(e) => check.error(format!("n={n} s={s} t={t}: {e}")),
        }
    }
    check.finish()
}

fn rearrangements(seed: u64, trials: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let name = "product_rearrangements";
    let mut check = Check::new(SUITE, name, REARRANGEMENT_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..trials {
        let n = rng.int(1, 8) as usize;
        let (a, b, s) = (rng.disc(2.0), rng.disc(2.0), rng.disc(1.5));
        let d = diagonal_rearrangement(&b, &s, n);
        check.compare(&d.lhs, &d.rhs, || format!("diagonal n={n} b={b} s={s}"));
        let r = ratio_rearrangement(&a, &b, &s, n);
        check.compare(&r.lhs, &r.rhs, || format!("ratio n={n} a={a} b={b} s={s}"));
    }
    out.push(check.finish());

    let name = "product_rearrangements/exact";
    let mut check = Check::exact(SUITE, name);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..trials {
        let n = rng.int(1, 8) as usize;
        let (a, b, s) = (rng.rational(6, 4), rng.rational(6, 4), rng.rational(6, 4));
        let d = diagonal_rearrangement(&b, &s, n);
        check.compare(&d.lhs, &d.rhs, || format!("diagonal n={n} b={b} s={s}"));
        let r = ratio_rearrangement(&a, &b, &s, n);
        check.compare(&r.lhs, &r.rhs, || format!("ratio n={n} a={a} b={b} s={s}"));
    }
    out.push(check.finish());
    out
}

fn difference_products(seed: u64, trials: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut maps = Check::exact(SUITE, "difference_product_maps");
    let mut rng = Sampler::new(seed, "difference_product_maps");
    for _ in 0..trials {
        let n = rng.int(1, 6) as usize;
        let z = rng.distinct_rationals(n, 12, 5);
        let (a, b) = (rng.nonzero_rational(6, 4), rng.nonzero_rational(6, 4));
        let sides = affine_map_sides(&z, &a, &b);
        maps.compare(&sides.lhs, &sides.rhs, || format!("affine a={a} b={b} z=[{}]", node_text(&z)));
        if let Ok(sides) = inversion_sides(&z) {
            maps.compare(&sides.lhs, &sides.rhs, || format!("inversion z=[{}]", node_text(&z)));
        }
        if let Ok(sides) = mobius_sides(&z, &a, &b) {
            maps.compare(&sides.lhs, &sides.rhs, || format!("mobius a={a} b={b} z=[{}]", node_text(&z)));
        }
        let sides = affine_progression_sides(&a, &b, n);
        maps.compare(&sides.lhs, &sides.rhs, || format!("progression a={a} b={b} n={n}"));
    }
    out.push(maps.finish());

    let name = "mobius_alternant";
    let mut check = Check::new(SUITE, name, ORACLE_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for _ in 0..trials {
        let drawn = redraw(&mut rng, |r| {
            let n = r.int(1, 5) as usize;
            let (a, b) = (r.disc(2.0), r.disc_away_from_zero(2.0, 0.5));
            let z = r.separated_nodes(n, NODE_RADIUS, NODE_SEPARATION);
            let dens: Vec<Complex64> = z.iter().map(|zj| a * zj + b).collect();
            clear_of_zero(&dens, 0.5).then_some((n, a, b, z))
        });
        let Some((n, a, b, z)) = drawn else { continue };
        let cm = coefficient_matrix(&mut rng, n);
        match mobius_alternant_sides(&cm, &z, a, b) {
            Ok(sides) => check.compare(&sides.lhs, &sides.rhs, || format!("n={n} a={a} b={b}")),
            Err(e) => check.error(format!("n={n} a={a} b={b}: {e}")),
        }
    }
    out.push(check.finish());
    out
}

/// The `s = 0` members of the shifted families reduce to power alternants.
fn zero_shift_kinds(seed: u64, trials: usize) -> Vec<CheckResult> {
    let kinds = [DetKind::SShifted, DetKind::InvSShifted, DetKind::RatioSShifted, DetKind::TwoSetSymmetric];
    let name = "zero_shift_kinds";
    let mut check = Check::new(SUITE, name, ORACLE_TOLERANCE);
    let mut rng = Sampler::new(seed, name);
    for kind in kinds {
        for _ in 0..trials.div_ceil(4) {
            let n = rng.int(2, 8) as usize;
            let drawn = redraw(&mut rng, |r| {
                let (spec, nodes) = draw_complex(r, kind, n)?;
                let mut spec = spec;
                spec.s = Complex64::zero();
                well_separated(&spec, nodes.as_slice()).then_some((spec, nodes))
            });
            let Some((spec, nodes)) = drawn else { continue };
            match spec.evaluate(&nodes) {
                Ok(res) => check.compare(&res.closed_form, &res.oracle.unwrap(), || format!("{kind} n={n}")),
                Err(e) => check.error(format!("{kind} n={n}: {e}")),
            }
        }
    }
    let name = "zero_shift_kinds/exact";
    let mut exact = Check::exact(SUITE, name);
    let mut rng = Sampler::new(seed, name);
    for kind in kinds {
        for _ in 0..trials.div_ceil(4) {
            let n = rng.int(2, 6) as usize;
            let drawn = redraw(&mut rng, |r| {
                let (mut spec, nodes) = draw_exact(r, kind, n);
                spec.s = ExactRational::zero();
                spec.evaluate_exact(&nodes).ok()
            });
            if let Some((closed, oracle)) = drawn {
                exact.compare(&closed, &oracle, || format!("{kind} n={n}: {closed} vs {oracle}"));
            }
        }
    }
    vec![check.finish(), exact.finish()]
}

const TRIANGULAR_MAX: usize = 6;

fn triangular_params(rng: &mut Sampler) -> Option<TriangularParams> {
    let s = rng.disc_away_from_zero(2.0, 0.5);
    let (b, cc, d) = (rng.disc(3.0), rng.disc(3.0), rng.disc(3.0));
    let top = 2 * TRIANGULAR_MAX as i64;
    let mut factors = affine(b, s, 0..top);
    factors.extend(affine(d, s, 0..top));
    clear_of_zero(&factors, FACTOR_GUARD).then_some(TriangularParams { s, b, c: cc, d })
}

/// Row combinations against closed forms, `i, j <= 6`, `trials` parameter draws per kind.
pub fn triangular_checks(seed: u64, trials: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for kind in TriangularKind::ALL {
        let name = format!("triangular/{}", kind.name());
        let mut check = Check::new(SUITE, &name, TRIANGULAR_TOLERANCE);
        let mut vanishing = Check::new(SUITE, &format!("triangular_vanishing/{}", kind.name()), VANISHING_TOLERANCE);
        let mut rng = Sampler::new(seed, &name);
        for _ in 0..trials {
            let Some(p) = redraw(&mut rng, triangular_params) else { continue };
            for i in 0..=TRIANGULAR_MAX {
                for j in 0..=TRIANGULAR_MAX {
                    let detail = || format!("i={i} j={j} s={} b={} c={} d={}", p.s, p.b, p.c, p.d);
                    match triangular_sides_extended(kind, &p, i, j) {
                        Ok(sides) if i > j => {
                            let r = sides.row_sum.norm() / sides.term_scale.max(f64::MIN_POSITIVE);
                            vanishing.residual(r, detail);
                            if sides.closed != Complex64::zero() {
                                vanishing.error(format!("{}: closed form {} should vanish", detail(), sides.closed));
                            }
                        }
                        Ok(sides) => check.compare(&sides.row_sum, &sides.closed, detail),
                        Err(e) => check.error(format!("{}: {e}", detail())),
                    }
                }
            }
        }
        out.push(check.finish());
        out.push(vanishing.finish());

        let name = format!("triangular/{}/exact", kind.name());
        let mut exact = Check::exact(SUITE, &name);
        let mut rng = Sampler::new(seed, &name);
        for _ in 0..trials.div_ceil(5) {
            let p = TriangularParams {
                s: rng.nonzero_rational(6, 4),
                b: rng.rational(12, 5),
                c: rng.rational(12, 5),
                d: rng.rational(12, 5),
            };
            for i in 0..=TRIANGULAR_MAX {
                for j in 0..=TRIANGULAR_MAX {
                    match triangular_sides(kind, &p, i, j) {
                        Ok(sides) => exact.compare(&sides.row_sum, &sides.closed, || format!("i={i} j={j} {p:?}")),
                        Err(Error::SideCondition { .. }) => {}
                        Err(e) => exact.error(format!("i={i} j={j}: {e}")),
                    }
                }
            }
        }
        out.push(exact.finish());
    }
    out
}

/// Every determinant check.
pub fn run(seed: u64, trials: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for kind in DetKind::ALL {
        out.push(oracle_check(seed, trials, kind));
    }
    let exact_trials = (trials / 5).max(10);
    for kind in DetKind::ALL.into_iter().filter(|k| k.exact_path()) {
        out.push(exact_check(seed, exact_trials, kind));
    }
    out.push(antisymmetry(seed, trials));
    out.push(coincident_nodes(seed, trials));
    out.push(shift_independence(seed, trials));
    out.extend(polynomial_alternant(seed, trials));
    out.push(negative_complex_index(seed, trials));
    out.extend(rearrangements(seed, trials));
    out.extend(difference_products(seed, trials));
    out.extend(zero_shift_kinds(seed, trials));
    out.extend(triangular_checks(seed, trials.clamp(1, 50)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn margins_reject_near_poles() {
        let spec = DeterminantSpec::new(DetKind::GammaShift, c(1.0));
        assert!(!well_separated(&spec, &[c(-2.01), c(1.3)]));
        assert!(well_separated(&spec, &[c(-2.5), c(1.3)]));
        let spec = DeterminantSpec::new(DetKind::InvSShifted, c(0.5));
        assert!(!well_separated(&spec, &[c(-0.52), c(1.0), c(2.0)]));
        assert!(well_separated(&spec, &[c(-0.52), c(1.0)]));
    }
}
