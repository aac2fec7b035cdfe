use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Classical weight `w(x)` and its domain.
///
/// | kind | `w(x)` | domain |
/// |---|---|---|
/// | `Hermite` | `exp(-x²)` | real line |
/// | `Laguerre { alpha }` | `x^alpha exp(-x)`, `alpha > -1` | `[0, ∞)` |
/// | `Gegenbauer { lambda }` | `(1-x²)^(lambda-1/2)`, `lambda > -1/2` | `[-1, 1]` |
/// | `Jacobi { a, b }` | `(1-x)^a (1+x)^b`, `a, b > -1` | `[-1, 1]` |
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Ensemble {
    Hermite,
    Laguerre { alpha: f64 },
    Gegenbauer { lambda: f64 },
    Jacobi { a: f64, b: f64 },
}

impl Ensemble {
    pub fn name(&self) -> &'static str {
        match self {
            Ensemble::Hermite => "hermite",
            Ensemble::Laguerre { .. } => "laguerre",
            Ensemble::Gegenbauer { .. } => "gegenbauer",
            Ensemble::Jacobi { .. } => "jacobi",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Domain(format!("{} ensemble needs {what}", self.name())));
        match *self {
            Ensemble::Hermite => Ok(()),
            Ensemble::Laguerre { alpha } if alpha.is_finite() && alpha > -1.0 => Ok(()),
            Ensemble::Laguerre { .. } => bad("alpha > -1"),
            Ensemble::Gegenbauer { lambda } if lambda.is_finite() && lambda > -0.5 => Ok(()),
            Ensemble::Gegenbauer { .. } => bad("lambda > -1/2"),
            Ensemble::Jacobi { a, b } if a.is_finite() && b.is_finite() && a > -1.0 && b > -1.0 => Ok(()),
            Ensemble::Jacobi { .. } => bad("a > -1 and b > -1"),
        }
    }

    /// `true` for an even weight on a symmetric domain, where the moment matrices have the
    /// checkerboard structure.
    pub fn is_even(&self) -> bool {
        match *self {
            Ensemble::Hermite | Ensemble::Gegenbauer { .. } => true,
            Ensemble::Laguerre { .. } => false,
            Ensemble::Jacobi { a, b } => a == b,
        }
    }

    /// Jacobi with `a = b` as the Gegenbauer ensemble with `lambda = a + 1/2`; otherwise unchanged.
    pub fn reduced(&self) -> Ensemble {
        match *self {
            Ensemble::Jacobi { a, b } if a == b => Ensemble::Gegenbauer { lambda: a + 0.5 },
            other => other,
        }
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ensemble::Hermite => write!(f, "hermite"),
            Ensemble::Laguerre { alpha } => write!(f, "laguerre(alpha={alpha})"),
            Ensemble::Gegenbauer { lambda } => write!(f, "gegenbauer(lambda={lambda})"),
            Ensemble::Jacobi { a, b } => write!(f, "jacobi(a={a},b={b})"),
        }
    }
}

/// An ensemble of `n x n` matrices with Dyson index `beta`. Only `beta = 2` is supported.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleSpec {
    pub kind: Ensemble,
    pub beta: u32,
    pub n: usize,
}

impl EnsembleSpec {
    pub fn new(kind: Ensemble, n: usize) -> Result<Self> {
        Self::with_beta(kind, 2, n)
    }

    pub fn with_beta(kind: Ensemble, beta: u32, n: usize) -> Result<Self> {
        let spec = EnsembleSpec { kind, beta, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.beta != 2 {
            return Err(Error::Unsupported(format!("beta = {} (only the unitary case beta = 2 is implemented)", self.beta)));
        }
        if self.n == 0 {
            return Err(Error::Domain("matrix dimension n must be at least 1".into()));
        }
        self.kind.validate()
    }
}

/// Even (`+`) or odd (`-`) part of the determinant density.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Plus, Parity::Minus];

    /// `ε(-1)`: `+1` for the even part, `-1` for the odd part.
    pub fn sign(self) -> f64 {
        match self {
            Parity::Plus => 1.0,
            Parity::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Parity::Plus => "+",
            Parity::Minus => "-",
        }
    }

    /// The parity that carries `y^q`: `+` for even `q`, `-` for odd `q`.
    pub fn of_power(q: u32) -> Parity {
        if q.is_multiple_of(2) {
            Parity::Plus
        } else {
            Parity::Minus
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "+" | "plus" | "even" => Ok(Parity::Plus),
            "-" | "minus" | "odd" => Ok(Parity::Minus),
            other => Err(Error::Parse(format!("unknown parity '{other}' (expected + or -)"))),
        }
    }
}
