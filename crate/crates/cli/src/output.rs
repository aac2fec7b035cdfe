use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::cli::Format;

/// Significant digits of printed values.
pub const DIGITS: usize = 12;

/// `x` with [`DIGITS`] significant digits, trailing zeros dropped; exponent form outside
/// `1e-5 <= |x| < 1e12`.
pub fn real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..DIGITS as i32).contains(&exp) {
        let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
        trim(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa))
    }
}

fn trim(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// `a`, `bi` or `a+bi`, in the syntax the parser accepts.
pub fn complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return real(z.re);
    }
    let im = match real(z.im.abs()).as_str() {
        "1" => String::new(),
        v => v.to_string(),
    };
    let sign = if z.im < 0.0 { "-" } else { "+" };
    if z.re == 0.0 {
        format!("{}{im}i", if z.im < 0.0 { "-" } else { "" })
    } else {
        format!("{}{sign}{im}i", real(z.re))
    }
}

/// A table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Real(f64),
    Complex(Complex64),
    Empty,
}

impl Cell {
    pub fn text(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => real(*v),
            Cell::Complex(z) => complex(*z),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => json!(s),
            Cell::Int(v) => json!(v),
            Cell::Real(v) if v.is_finite() => json!(v),
            Cell::Real(v) => json!(v.to_string()),
            Cell::Complex(z) => json!([z.re, z.im]),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.into())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<Complex64> for Cell {
    fn from(v: Complex64) -> Self {
        Cell::Complex(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

/// Rows with named columns.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn text(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::text).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|c| cells.iter().map(|r| r[c].len()).chain([self.columns[c].len()]).max().unwrap_or(0))
            .collect();
        let line = |items: Vec<&str>| {
            let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(self.columns.clone());
        for r in &cells {
            out += &line(r.iter().map(String::as_str).collect());
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r.iter().map(Cell::text)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    fn objects(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|r| {
                let map: Map<String, Value> = self.columns.iter().zip(r).map(|(c, v)| (c.to_string(), v.json())).collect();
                Value::Object(map)
            })
            .collect()
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(&self.objects()).expect("plain data serializes") + "\n"
    }

    /// Single-row table as `key  value` lines, or a JSON object.
    pub fn render_record(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let width = self.columns.iter().map(|c| c.len()).max().unwrap_or(0);
                let mut out = String::new();
                for (c, v) in self.columns.iter().zip(&self.rows[0]) {
                    if *v != Cell::Empty {
                        out += &format!("{c:<width$}  {}\n", v.text());
                    }
                }
                out
            }
            Format::Json => serde_json::to_string_pretty(&self.objects()[0]).expect("plain data serializes") + "\n",
            Format::Csv => self.csv(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => self.json(),
            Format::Csv => self.csv(),
        }
    }
}
