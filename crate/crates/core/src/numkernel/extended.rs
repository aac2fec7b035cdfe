//! Complex double-double arithmetic (about 31 significant digits) with the handful of
//! elementary and gamma functions needed to evaluate determinant entries.
//!
//! Addition, multiplication and division come from [`twofloat`]. The transcendental
//! functions are implemented here by argument reduction plus Taylor series, with a Newton
//! step for the logarithm and the argument, so they keep full double-double accuracy on
//! moderate arguments (`|Re| < 700`, `|Im| < 1e5`).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use twofloat::{consts, TwoFloat};

use super::gamma::nonpositive_integer;
use super::scalar::{Scalar, POLE_TOLERANCE};
use crate::error::{Error, PoleError, Result};

type R = TwoFloat;

fn r(x: f64) -> R {
    R::from(x)
}

fn pow2(n: i32) -> f64 {
    2f64.powi(n)
}

/// `a / b` by three-step long division. `twofloat`'s own quotient loses the low word when
/// `b` is an exact double, so every division goes through here.
pub fn div_dd(a: R, b: R) -> R {
    let q1 = a.hi() / b.hi();
    let rem = a - b * q1;
    let q2 = rem.hi() / b.hi();
    let rem = rem - b * q2;
    let q3 = rem.hi() / b.hi();
    R::from(q1) + (R::from(q2) + q3)
}

/// `e^x` in double-double.
pub fn exp_dd(x: R) -> R {
    if x.hi() > 709.0 {
        return R::INFINITY;
    }
    if x.hi() < -745.0 {
        return r(0.0);
    }
    let n = (x.hi() / consts::LN_2.hi()).round();
    let red = (x - consts::LN_2 * n) * pow2(-5);
    let mut term = r(1.0);
    let mut sum = r(1.0);
    for k in 1..=18 {
        term = term * red / k as f64;
        sum += term;
    }
    for _ in 0..5 {
        sum = sum * sum;
    }
    // split the binary scaling so the intermediate factor never overflows
    let n = n as i32;
    let half = n / 2;
    sum * pow2(half) * pow2(n - half)
}

/// Natural logarithm of a positive double-double.
pub fn ln_dd(x: R) -> R {
    let y = r(x.hi().ln());
    y + x * exp_dd(-y) - 1.0
}

/// `(sin x, cos x)` in double-double.
pub fn sin_cos_dd(x: R) -> (R, R) {
    let k = (x.hi() / consts::FRAC_PI_2.hi()).round();
    let red = x - consts::FRAC_PI_2 * k;
    let r2 = red * red;
    let mut s = red;
    let mut c = r(1.0);
    let mut term_s = red;
    let mut term_c = r(1.0);
    for j in 1..=15 {
        let j = j as f64;
        term_s = -term_s * r2 / ((2.0 * j) * (2.0 * j + 1.0));
        term_c = -term_c * r2 / ((2.0 * j - 1.0) * (2.0 * j));
        s += term_s;
        c += term_c;
    }
    match (k as i64).rem_euclid(4) {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

/// `atan2(y, x)` in `(-π, π]`, with a negative-zero `y` treated as `+0`.
pub fn atan2_dd(y: R, x: R) -> R {
    if y.hi() == 0.0 {
        return if x.hi() < 0.0 { consts::PI } else { r(0.0) };
    }
    let t0 = r(y.hi().atan2(x.hi()));
    let (s, c) = sin_cos_dd(t0);
    t0 + div_dd(y * c - x * s, x * c + y * s)
}

/// Complex number with double-double parts.
#[derive(Clone, Copy, PartialEq)]
pub struct ExtendedComplex {
    pub re: TwoFloat,
    pub im: TwoFloat,
}

impl fmt::Debug for ExtendedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}

impl fmt::Display for ExtendedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_c64())
    }
}

impl ExtendedComplex {
    pub fn new(re: TwoFloat, im: TwoFloat) -> Self {
        ExtendedComplex { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        ExtendedComplex::new(r(re), r(im))
    }

    fn approx(&self) -> Complex64 {
        Complex64::new(self.re.hi(), self.im.hi())
    }

    pub fn norm_sqr(&self) -> TwoFloat {
        self.re * self.re + self.im * self.im
    }

    pub fn exp(&self) -> Self {
        let m = exp_dd(self.re);
        let (s, c) = sin_cos_dd(self.im);
        ExtendedComplex::new(m * c, m * s)
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        ExtendedComplex::new(ln_dd(self.norm_sqr()) * 0.5, atan2_dd(self.im, self.re))
    }

    pub fn sin(&self) -> Self {
        let (s, c) = sin_cos_dd(self.re);
        let (ep, em) = (exp_dd(self.im), exp_dd(-self.im));
        ExtendedComplex::new(s * (ep + em) * 0.5, c * (ep - em) * 0.5)
    }

    /// `sin(πz)` with the nearest integer removed from `Re z` first.
    pub fn sin_pi(&self) -> Self {
        let k = self.re.hi().round();
        let red = ExtendedComplex::new(self.re - k, self.im);
        let v = (red * ExtendedComplex::new(consts::PI, r(0.0))).sin();
        if (k as i64).rem_euclid(2) == 1 {
            -v
        } else {
            v
        }
    }

    fn scale(self, k: f64) -> Self {
        ExtendedComplex::new(self.re * k, self.im * k)
    }

    fn add_f64(self, k: f64) -> Self {
        ExtendedComplex::new(self.re + k, self.im)
    }

    /// `w^t` on the principal branch, with `1^t = 1` and integer `t` by repeated products.
    pub fn principal_power(&self, t: Complex64) -> Result<Self> {
        if *self == Self::one() {
            return Ok(Self::one());
        }
        if t.im == 0.0 && t.re.fract() == 0.0 && t.re.abs() <= 64.0 {
            let e = t.re as i32;
            if self.is_zero() && e < 0 {
                return Err(Error::Domain(format!("0 raised to the negative power {t}")));
            }
            return Ok(Scalar::powi(self, e));
        }
        if self.is_zero() {
            if t.re > 0.0 {
                return Ok(Self::zero());
            }
            return Err(Error::Domain(format!("0 raised to a power with nonpositive real part ({t})")));
        }
        Ok((Self::from_c64_exact(t) * self.ln()).exp())
    }

    fn from_c64_exact(c: Complex64) -> Self {
        ExtendedComplex::from_f64(c.re, c.im)
    }

    /// `Γ(z)`.
    pub fn gamma(&self) -> Result<Self> {
        if let Some(k) = nonpositive_integer(self.approx(), POLE_TOLERANCE) {
            return Err(PoleError::new(self.approx(), format!("gamma argument is the nonpositive integer {k}")).into());
        }
        if self.re.hi() < 0.5 {
            let pi = ExtendedComplex::new(consts::PI, r(0.0));
            let one_minus = Self::one() - *self;
            return Ok(pi / (self.sin_pi() * one_minus.gamma()?));
        }
        let shift = (STIRLING_MIN - self.re.hi()).ceil().max(0.0) as u32;
        let mut w = *self;
        let mut prod = Self::one();
        for _ in 0..shift {
            prod = prod * w;
            w = w.add_f64(1.0);
        }
        Ok(stirling_log_gamma(w).exp() / prod)
    }

    /// `1/Γ(z)`, zero at the poles.
    pub fn recip_gamma(&self) -> Self {
        match self.gamma() {
            Ok(g) => Self::one() / g,
            Err(_) => Self::zero(),
        }
    }

    /// `(z)_{s;t}`: products for integer `t`, `z^t` for `s = 0`, the gamma ratio otherwise.
    pub fn shifted_factorial(z: &Self, s: &Self, t: Complex64) -> Result<Self> {
        if t.im == 0.0 && t.re.fract() == 0.0 && t.re.abs() < 1e9 {
            return crate::sfact::sf_int(z, s, t.re as i64);
        }
        if s.is_zero() {
            return z.principal_power(t);
        }
        let x = *z / *s;
        let tt = Self::from_c64_exact(t);
        Ok(s.principal_power(t)? * (x + tt).gamma()? / x.gamma()?)
    }
}

const STIRLING_MIN: f64 = 20.0;

// B_2, B_4, ..., B_30 as exact fractions.
const BERNOULLI: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
];

/// `ln Γ(w)` by the Stirling series, for `Re w >= 20`.
fn stirling_log_gamma(w: ExtendedComplex) -> ExtendedComplex {
    let half_ln_two_pi = ln_dd(consts::TAU) * 0.5;
    let mut acc = (w.add_f64(-0.5)) * w.ln() - w;
    acc.re += half_ln_two_pi;
    let inv = ExtendedComplex::one() / w;
    let inv2 = inv * inv;
    let mut pow = inv;
    for (k, (num, den)) in BERNOULLI.iter().enumerate() {
        let two_k = 2.0 * (k as f64 + 1.0);
        let coef = div_dd(r(*num), r(*den) * (two_k * (two_k - 1.0)));
        acc = acc + pow.scale_dd(coef);
        pow = pow * inv2;
    }
    acc
}

impl ExtendedComplex {
    fn scale_dd(self, k: TwoFloat) -> Self {
        ExtendedComplex::new(self.re * k, self.im * k)
    }
}

impl Add for ExtendedComplex {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ExtendedComplex::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for ExtendedComplex {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        ExtendedComplex::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for ExtendedComplex {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        ExtendedComplex::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl Div for ExtendedComplex {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        // scale by a power of two near 1/|o| to keep the squared norm in range
        let e = o.re.hi().abs().max(o.im.hi().abs());
        let k = if e > 0.0 && e.is_finite() { pow2(-(e.log2().floor() as i32)) } else { 1.0 };
        let (a, b) = (self.scale(k), o.scale(k));
        let d = b.norm_sqr();
        ExtendedComplex::new(div_dd(a.re * b.re + a.im * b.im, d), div_dd(a.im * b.re - a.re * b.im, d))
    }
}

impl Neg for ExtendedComplex {
    type Output = Self;
    fn neg(self) -> Self {
        ExtendedComplex::new(-self.re, -self.im)
    }
}

impl Zero for ExtendedComplex {
    fn zero() -> Self {
        ExtendedComplex::from_f64(0.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re.hi() == 0.0 && self.im.hi() == 0.0
    }
}

impl One for ExtendedComplex {
    fn one() -> Self {
        ExtendedComplex::from_f64(1.0, 0.0)
    }
}

impl Scalar for ExtendedComplex {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        ExtendedComplex::new(R::from(v), r(0.0))
    }

    fn from_bigint(v: &BigInt) -> Self {
        ExtendedComplex::from_f64(v.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn near_zero(&self) -> bool {
        self.approx().norm() < POLE_TOLERANCE
    }

    fn modulus(&self) -> f64 {
        self.approx().norm()
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.hi() + self.re.lo(), self.im.hi() + self.im.lo())
    }

    fn from_c64(c: Complex64) -> Option<Self> {
        Some(ExtendedComplex::from_c64_exact(c))
    }

    fn gamma(&self) -> Result<Self> {
        ExtendedComplex::gamma(self)
    }

    fn recip_gamma(&self) -> Result<Self> {
        Ok(ExtendedComplex::recip_gamma(self))
    }

    fn shifted_factorial(z: &Self, s: &Self, t: Complex64) -> Result<Self> {
        ExtendedComplex::shifted_factorial(z, s, t)
    }
}
