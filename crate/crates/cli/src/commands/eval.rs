use shiftfact::numkernel::Scalar;
use shiftfact::sfact::{sf_general, sf_int, sf_product};

use super::{complex_arg, rational_arg, Outcome, Result};
use crate::cli::{EvalArgs, Format};
use crate::output::{Cell, Table};

fn index_label(args: &EvalArgs) -> String {
    match (args.n, args.q, &args.t) {
        (Some(n), _, _) => format!("n={n}"),
        (_, Some(q), _) => format!("q={q}"),
        (_, _, Some(t)) => format!("t={t}"),
        _ => unreachable!("clap requires one index"),
    }
}

fn integer_path<T: Scalar>(z: &T, s: &T, args: &EvalArgs) -> shiftfact::Result<T> {
    match (args.n, args.q) {
        (Some(n), _) => Ok(sf_product(z, s, n)),
        (_, Some(q)) => sf_int(z, s, q),
        _ => unreachable!("complex index is rejected with --exact"),
    }
}

pub fn run(args: &EvalArgs, format: Format) -> Result<Outcome> {
    let (z_cell, s_cell, value): (Cell, Cell, Cell) = if args.exact {
        let z = rational_arg("z", &args.z)?;
        let s = rational_arg("s", &args.s)?;
        let v = integer_path(&z, &s, args)?;
        (z.to_string().into(), s.to_string().into(), v.to_string().into())
    } else {
        let z = complex_arg("z", &args.z)?;
        let s = complex_arg("s", &args.s)?;
        let v = match &args.t {
            Some(t) => sf_general(z, s, complex_arg("t", t)?)?,
            None => integer_path(&z, &s, args)?,
        };
        (z.into(), s.into(), v.into())
    };
    let mut table = Table::new(vec!["z", "s", "index", "value"]);
    table.push(vec![z_cell, s_cell, index_label(args).into(), value.clone()]);
    let text = match format {
        Format::Text => value.text() + "\n",
        _ => table.render_record(format),
    };
    Ok(Outcome::ok(text))
}
