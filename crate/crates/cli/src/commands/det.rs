use std::io::Read;

use num_complex::Complex64;
use shiftfact::detform::{det_residual, DetDocument, DetKind, ParamsDocument, SCHEMA_VERSION};

use super::{complex_arg, complex_list, Failure, Outcome, Result};
use crate::cli::{DetArgs, Format};
use crate::output::{Cell, Table};

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn read_spec(path: &std::path::Path) -> Result<String> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn inline_document(args: &DetArgs) -> Result<DetDocument> {
    let name = args.kind.as_deref().expect("clap requires --kind without --spec");
    let kind = DetKind::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = DetKind::ALL.iter().map(|k| k.name()).collect();
        Failure::Usage(format!("unknown determinant kind '{name}' (expected one of {})", names.join(", ")))
    })?;
    let one = |flag: &str, v: &Option<String>| v.as_deref().map(|t| complex_arg(flag, t).map(pair)).transpose();
    let list = |flag: &str, v: &Option<String>| {
        v.as_deref().map(|t| complex_list(flag, t).map(|l| l.into_iter().map(pair).collect())).transpose()
    };
    let nodes = complex_list("nodes", args.nodes.as_deref().expect("clap requires --nodes without --spec"))?;
    Ok(DetDocument {
        schema: SCHEMA_VERSION,
        kind,
        s: pair(complex_arg("s", &args.s)?),
        params: ParamsDocument {
            a: one("a", &args.a)?,
            b: one("b", &args.b)?,
            t: one("t", &args.t)?,
            offsets: list("offsets", &args.offsets)?,
            w: list("w", &args.w)?,
        },
        nodes: nodes.into_iter().map(pair).collect(),
    })
}

pub fn run(args: &DetArgs, format: Format) -> Result<Outcome> {
    let doc = match &args.spec {
        Some(path) => DetDocument::from_json(&read_spec(path)?)?,
        None => inline_document(args)?,
    };
    let (spec, nodes) = doc.to_spec()?;
    let closed = if args.oracle_only { None } else { Some(spec.det_closed(&nodes)?) };
    let oracle = if args.closed_only { None } else { Some(spec.det_extended(&nodes)?) };
    let residual = match (closed, oracle) {
        (Some(c), Some(o)) => Some(det_residual(c, o, 0.0)),
        _ => None,
    };
    let mut table = Table::new(vec!["kind", "n", "closed", "oracle", "residual"]);
    table.push(vec![
        spec.kind.name().into(),
        Cell::Int(nodes.len() as i64),
        closed.into(),
        oracle.into(),
        residual.into(),
    ]);
    let violation = residual
        .filter(|r| r.is_nan() || *r > args.threshold)
        .map(|r| format!("closed form and oracle differ by {r:e} (threshold {:e})", args.threshold));
    Ok(Outcome { output: table.render_record(format), violation })
}
