//! Sums of s-shifted factorials over an arithmetic progression,
//! `S_{s;p,n}(a, r) = Σ_{k<n} (a + k r)_{s;p}`.
//!
//! Three independent evaluations are provided: the direct sum, a recurrence on `p` that only
//! needs the two end points `a` and `a + n r`, and a telescoped closed form when `r = ±s`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numkernel::{binomial_u64, Scalar};
use crate::sfact::sf_product;

/// `a`, `r`, `s`, the factorial order `p` and the term count `n >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct APSumArgs<T = Complex64> {
    pub a: T,
    pub r: T,
    pub s: T,
    pub p: u32,
    pub n: u32,
}

impl<T: Scalar> APSumArgs<T> {
    pub fn new(a: T, r: T, s: T, p: u32, n: u32) -> Result<Self> {
        let args = APSumArgs { a, r, s, p, n };
        args.validate()?;
        Ok(args)
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Domain("the progression needs at least one term (n >= 1)".into()));
        }
        Ok(())
    }

    /// `z_k = a + k r`.
    pub fn term(&self, k: u32) -> T {
        self.a.clone() + T::from_int(k as i64) * self.r.clone()
    }
}

/// Summation route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Direct,
    Recurrence,
    Closed,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Direct, Method::Recurrence, Method::Closed];

    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Recurrence => "recurrence",
            Method::Closed => "closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown summation method '{s}' (expected direct, recurrence or closed)")))
    }
}

/// Term-by-term sum. `n = 0` gives the empty sum and `r = 0` gives `n (a)_{s;p}`.
pub fn ap_sum_direct<T: Scalar>(args: &APSumArgs<T>) -> T {
    (0..args.n).fold(T::zero(), |acc, k| acc + sf_product(&args.term(k), &args.s, args.p))
}

/// Recurrence on the order, seeded with `S_{s;0,n} = n`:
///
/// `(p+1) r S_{s;p,n} = (z_n)_{s;p+1} - (z_0)_{s;p+1} - Σ_{l<p} C(p+1, l) S_{s;l,n} (r)_{s;p+1-l}`.
///
/// Every lower order is kept, so one call costs `O(p^2)` products.
pub fn ap_sum_recurrence<T: Scalar>(args: &APSumArgs<T>) -> Result<T> {
    args.validate()?;
    let r = &args.r;
    if r.near_zero() {
        return Err(Error::Domain("the recurrence divides by r, which is zero".into()));
    }
    let s = &args.s;
    let z0 = args.a.clone();
    let zn = args.term(args.n);
    let mut lower: Vec<T> = Vec::with_capacity(args.p as usize + 1);
    lower.push(T::from_int(args.n as i64));
    for p in 1..=args.p {
        let mut acc = sf_product(&zn, s, p + 1) - sf_product(&z0, s, p + 1);
        for (l, sl) in lower.iter().enumerate() {
            let c = T::from_bigint(&binomial_u64(p as u64 + 1, l as u64));
            acc = acc - c * sl.clone() * sf_product(r, s, p + 1 - l as u32);
        }
        lower.push(acc / (T::from_int(p as i64 + 1) * r.clone()));
    }
    Ok(lower.pop().expect("order 0 is always present"))
}

/// Telescoped form for `r = s` or `r = -s` with `s != 0`:
///
/// * `r = s`: `((z_{n-1})_{s;p+1} - (a - s)_{s;p+1}) / ((p+1) s)`
/// * `r = -s`: `((z_0)_{s;p+1} - (z_n)_{s;p+1}) / ((p+1) s)`
pub fn ap_sum_closed<T: Scalar>(args: &APSumArgs<T>) -> Result<T> {
    args.validate()?;
    let s = &args.s;
    if s.near_zero() {
        return Err(Error::Domain("the closed form needs s != 0".into()));
    }
    let q = args.p + 1;
    let den = T::from_int(q as i64) * s.clone();
    if (args.r.clone() - s.clone()).near_zero() {
        let top = sf_product(&args.term(args.n - 1), s, q);
        let bottom = sf_product(&(args.a.clone() - s.clone()), s, q);
        Ok((top - bottom) / den)
    } else if (args.r.clone() + s.clone()).near_zero() {
        Ok((sf_product(&args.a, s, q) - sf_product(&args.term(args.n), s, q)) / den)
    } else {
        Err(Error::Domain(format!(
            "the closed form needs r = s or r = -s (r = {:?}, s = {:?})",
            args.r, args.s
        )))
    }
}

/// Dispatch on [`Method`].
pub fn ap_sum<T: Scalar>(args: &APSumArgs<T>, method: Method) -> Result<T> {
    match method {
        Method::Direct => {
            args.validate()?;
            Ok(ap_sum_direct(args))
        }
        Method::Recurrence => ap_sum_recurrence(args),
        Method::Closed => ap_sum_closed(args),
    }
}
