use num_complex::Complex64;
use shiftfact::numkernel::relative_residual;
use shiftfact::rmtpdd::{integer_moment, mellin_closed, mellin_oracle, mellin_quadrature, Ensemble, EnsembleSpec, Parity};

use super::{complex_list, worst_residual, Failure, Outcome, Result};
use crate::cli::{EnsembleName, Format, ParityArg, RmtArgs};
use crate::output::{Cell, Table};

fn ensemble(args: &RmtArgs) -> Result<Ensemble> {
    let p = &args.param;
    let want = |count: usize, names: &str| {
        if p.len() == count {
            Ok(())
        } else {
            Err(Failure::Usage(format!("--param: the {:?} ensemble takes {names} ({} given)", args.ensemble, p.len())))
        }
    };
    let kind = match args.ensemble {
        EnsembleName::Hermite => want(0, "no parameters").map(|_| Ensemble::Hermite),
        EnsembleName::Laguerre => want(1, "alpha").map(|_| Ensemble::Laguerre { alpha: p[0] }),
        EnsembleName::Gegenbauer => want(1, "lambda").map(|_| Ensemble::Gegenbauer { lambda: p[0] }),
        EnsembleName::Jacobi => want(2, "a,b").map(|_| Ensemble::Jacobi { a: p[0], b: p[1] }),
    }?;
    kind.validate().map_err(|e| Failure::Usage(format!("--param: {e}")))?;
    Ok(kind)
}

fn params_label(kind: &Ensemble) -> String {
    match *kind {
        Ensemble::Hermite => String::new(),
        Ensemble::Laguerre { alpha } => format!("alpha={alpha}"),
        Ensemble::Gegenbauer { lambda } => format!("lambda={lambda}"),
        Ensemble::Jacobi { a, b } => format!("a={a};b={b}"),
    }
}

/// `1,2,5` or the inclusive range `1..4`.
pub fn integer_list(flag: &str, text: &str) -> Result<Vec<u32>> {
    let bad = || Failure::Usage(format!("--{flag}: expected a list like 1,2,3 or a range like 1..4, got {text:?}"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    text.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
}

struct Row {
    n: u32,
    at: Cell,
    parity: Parity,
    value: Option<Complex64>,
    oracle: Complex64,
    route: &'static str,
}

/// The quadrature route for real `s`, otherwise the double-double LU of the closed-form
/// element matrix.
fn oracle(ens: &EnsembleSpec, s: Complex64, parity: Parity) -> shiftfact::Result<(Complex64, &'static str)> {
    if s.im == 0.0 {
        Ok((mellin_quadrature(ens, s.re, parity)?, "quadrature"))
    } else {
        Ok((mellin_oracle(ens, s, parity)?, "lu"))
    }
}

pub fn run(args: &RmtArgs, format: Format) -> Result<Outcome> {
    let kind = ensemble(args)?;
    let dims = integer_list("n", &args.n)?;
    if dims.contains(&0) {
        return Err(Failure::Usage("--n: dimensions start at 1".into()));
    }
    let mut rows = Vec::new();
    for &n in &dims {
        let ens = EnsembleSpec::new(kind, n as usize)?;
        if let Some(qs) = &args.q {
            for q in integer_list("q", qs)? {
                let parity = Parity::of_power(q);
                let value = if args.oracle_only { None } else { Some(Complex64::new(integer_moment(&ens, q)?, 0.0)) };
                let oracle = 2.0 * mellin_quadrature(&ens, q as f64 + 1.0, parity)?.re;
                rows.push(Row { n, at: Cell::Int(q as i64), parity, value, oracle: Complex64::new(oracle, 0.0), route: "quadrature" });
            }
        } else {
            let parities: &[Parity] = match args.parity {
                ParityArg::Plus => &[Parity::Plus],
                ParityArg::Minus => &[Parity::Minus],
                ParityArg::Both => &Parity::BOTH,
            };
            for s in complex_list("s", args.s.as_deref().expect("clap requires --s or --q"))? {
                for &parity in parities {
                    let value = if args.oracle_only { None } else { Some(mellin_closed(&ens, s, parity)?.value) };
                    let (oracle, route) = oracle(&ens, s, parity)?;
                    rows.push(Row { n, at: Cell::Complex(s), parity, value, oracle, route });
                }
            }
        }
    }
    let variable = if args.q.is_some() { "q" } else { "s" };
    let mut table = Table::new(vec!["ensemble", "params", "n", variable, "parity", "value", "oracle", "route", "residual"]);
    let mut residuals = Vec::new();
    for r in rows {
        let residual = r.value.map(|v| relative_residual(&v, &r.oracle, 0.0));
        residuals.extend(residual);
        let real_only = |z: Complex64| if args.q.is_some() { Cell::Real(z.re) } else { Cell::Complex(z) };
        table.push(vec![
            kind.name().into(),
            params_label(&kind).into(),
            Cell::Int(r.n as i64),
            r.at,
            r.parity.symbol().into(),
            r.value.map(real_only).into(),
            real_only(r.oracle),
            r.route.into(),
            residual.into(),
        ]);
    }
    let worst = worst_residual(residuals);
    let violation = (worst.is_nan() || worst > args.threshold)
        .then(|| format!("closed form and oracle differ by {worst:e} (threshold {:e})", args.threshold));
    Ok(Outcome { output: table.render(format), violation })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_and_ranges() {
        assert_eq!(integer_list("n", "1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(integer_list("n", "2, 5,7").unwrap(), vec![2, 5, 7]);
        assert!(integer_list("n", "4..1").is_err());
        assert!(integer_list("n", "x").is_err());
    }
}
