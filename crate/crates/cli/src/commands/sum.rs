use shiftfact::apsum::{ap_sum, APSumArgs, Method};
use shiftfact::numkernel::{relative_residual, Scalar};

use super::{complex_arg, rational_arg, worst_residual, Outcome, Result};
use crate::cli::{Format, SumArgs, SumMethod};
use crate::output::{Cell, Table};

fn methods(choice: SumMethod) -> Vec<Method> {
    match choice {
        SumMethod::Direct => vec![Method::Direct],
        SumMethod::Recurrence => vec![Method::Recurrence],
        SumMethod::Closed => vec![Method::Closed],
        SumMethod::All => Method::ALL.to_vec(),
    }
}

/// Values of every requested method; with `--method all` the closed form is skipped unless
/// `r = ±s`, and residuals are taken against the direct sum.
fn evaluate<T: Scalar>(
    args: &APSumArgs<T>,
    choice: SumMethod,
    cell: impl Fn(&T) -> Cell,
) -> Result<Vec<(Method, Cell, Option<f64>)>> {
    let closed_applies = (args.r.clone() - args.s.clone()).near_zero() || (args.r.clone() + args.s.clone()).near_zero();
    let direct = ap_sum(args, Method::Direct)?;
    let mut rows = Vec::new();
    for m in methods(choice) {
        if choice == SumMethod::All && m == Method::Closed && !closed_applies {
            continue;
        }
        let v = ap_sum(args, m)?;
        let residual = (choice == SumMethod::All).then(|| relative_residual(&v, &direct, 0.0));
        rows.push((m, cell(&v), residual));
    }
    Ok(rows)
}

pub fn run(args: &SumArgs, format: Format) -> Result<Outcome> {
    let rows = if args.exact {
        let sum_args = APSumArgs::new(
            rational_arg("a", &args.a)?,
            rational_arg("r", &args.r)?,
            rational_arg("s", &args.s)?,
            args.p,
            args.n,
        )?;
        evaluate(&sum_args, args.method, |v| Cell::Text(v.to_string()))?
    } else {
        let sum_args =
            APSumArgs::new(complex_arg("a", &args.a)?, complex_arg("r", &args.r)?, complex_arg("s", &args.s)?, args.p, args.n)?;
        evaluate(&sum_args, args.method, |v| Cell::Complex(*v))?
    };
    let threshold = if args.exact { 0.0 } else { args.threshold };
    let worst = worst_residual(rows.iter().filter_map(|r| r.2));
    let violation = (worst.is_nan() || worst > threshold).then(|| format!("methods disagree by {worst:e} (threshold {threshold:e})"));
    let output = if args.method == SumMethod::All {
        let mut table = Table::new(vec!["method", "value", "residual"]);
        for (m, v, r) in rows {
            table.push(vec![m.name().into(), v, r.into()]);
        }
        table.render(format)
    } else {
        let (m, v, _) = rows.into_iter().next().expect("one method");
        let mut table = Table::new(vec!["method", "p", "n", "value"]);
        table.push(vec![m.name().into(), Cell::Int(args.p as i64), Cell::Int(args.n as i64), v.clone()]);
        match format {
            Format::Text => v.text() + "\n",
            _ => table.render_record(format),
        }
    };
    Ok(Outcome { output, violation })
}
