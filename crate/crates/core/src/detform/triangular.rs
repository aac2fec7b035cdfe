use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numkernel::{relative_residual, sign_pow, ExtendedComplex, Scalar};
use crate::sfact::{gen_binomial, sf_product};

/// Row reductions that make an affine-node determinant triangular in one step.
///
/// * `AffineProduct`: entries `(b+js)_{s;i}`
/// * `AffineReciprocal`: entries `1/(b+js)_{s;i}`
/// * `AffineRatio`: entries `(c+js)_{s;i}/(d+js)_{s;i}`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangularKind {
    AffineProduct,
    AffineReciprocal,
    AffineRatio,
}

impl TriangularKind {
    pub const ALL: [TriangularKind; 3] = [
        TriangularKind::AffineProduct,
        TriangularKind::AffineReciprocal,
        TriangularKind::AffineRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TriangularKind::AffineProduct => "AffineProduct",
            TriangularKind::AffineReciprocal => "AffineReciprocal",
            TriangularKind::AffineRatio => "AffineRatio",
        }
    }
}

/// `b` is read by the first two kinds, `c` and `d` by the third.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangularParams<T = Complex64> {
    pub s: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

/// Both sides of a reduced entry, plus `Σ |term|` of the row combination.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangularSides<T> {
    pub row_sum: T,
    pub closed: T,
    pub term_scale: f64,
}

fn check_base<T: Scalar>(kind: TriangularKind, base: &T, s: &T, i: usize, j: usize) -> Result<()> {
    if i == 0 {
        return Ok(());
    }
    let top = (2 * i - 2).max(i + j - 1);
    for k in 0..=top {
        if (base.clone() + T::from_int(k as i64) * s.clone()).near_zero() {
            let name = if kind == TriangularKind::AffineRatio { "d" } else { "b" };
            return Err(Error::SideCondition {
                kind: kind.name(),
                condition: format!("{name} + {k} s vanishes"),
                index: k,
            });
        }
    }
    Ok(())
}

/// Evaluates the explicit row combination and the closed form of entry `(i, j)`.
pub fn triangular_sides<T: Scalar>(
    kind: TriangularKind,
    p: &TriangularParams<T>,
    i: usize,
    j: usize,
) -> Result<TriangularSides<T>> {
    let s = p.s.clone();
    let neg_s = -s.clone();
    let iu = i as u32;
    let int = |k: usize| T::from_int(k as i64);
    let falling_j = sf_product(&int(j), &-T::one(), iu);
    let mut row_sum = T::zero();
    let mut term_scale = 0.0;
    let closed = match kind {
        TriangularKind::AffineProduct => {
            let base = p.b.clone() + int(i) * s.clone() - s.clone();
            let col = p.b.clone() + int(j) * s.clone();
            for k in 0..=i {
                let term = sign_pow::<T>((i - k) as i64)
                    * gen_binomial(&int(i), k as i64)
                    * sf_product(&base, &neg_s, (i - k) as u32)
                    * sf_product(&col, &s, k as u32);
                term_scale += term.modulus();
                row_sum = row_sum + term;
            }
            s.powi(i as i32) * falling_j
        }
        TriangularKind::AffineReciprocal => {
            check_base(kind, &p.b, &s, i, j)?;
            let b = p.b.clone();
            let lead = -b.clone() - int(2 * i) * s.clone() + int(2) * s.clone();
            let col = b.clone() + int(j) * s.clone();
            for k in 0..=i {
                let term = gen_binomial(&int(i), k as i64)
                    / (sf_product(&lead, &s, (i - k) as u32) * sf_product(&col, &s, k as u32));
                term_scale += term.modulus();
                row_sum = row_sum + term;
            }
            let diag = b + int(i) * s.clone() - s.clone();
            neg_s.powi(i as i32) * falling_j / (sf_product(&diag, &s, iu) * sf_product(&col, &s, iu))
        }
        TriangularKind::AffineRatio => {
            check_base(kind, &p.d, &s, i, j)?;
            let (c, d) = (p.c.clone(), p.d.clone());
            let c_top = c.clone() + int(i) * s.clone() - s.clone();
            let d_top = d.clone() + int(2 * i) * s.clone() - int(2) * s.clone();
            let c_col = c.clone() + int(j) * s.clone();
            let d_col = d.clone() + int(j) * s.clone();
            for k in 0..=i {
                let r = (i - k) as u32;
                let term = sign_pow::<T>(r as i64)
                    * gen_binomial(&int(i), k as i64)
                    * sf_product(&c_top, &neg_s, r)
                    / sf_product(&d_top, &neg_s, r)
                    * sf_product(&c_col, &s, k as u32)
                    / sf_product(&d_col, &s, k as u32);
                term_scale += term.modulus();
                row_sum = row_sum + term;
            }
            let d_diag = d.clone() + int(i) * s.clone() - s.clone();
            s.powi(i as i32) * falling_j * sf_product(&(d - c), &s, iu)
                / (sf_product(&d_col, &s, iu) * sf_product(&d_diag, &s, iu))
        }
    };
    Ok(TriangularSides {
        row_sum,
        closed,
        term_scale,
    })
}

/// Complex sides with the row combination carried in double-double arithmetic and the closed
/// form in double precision. The row combination cancels heavily once `i` grows, so this
/// keeps the comparison meaningful at the double-precision tolerance.
pub fn triangular_sides_extended(
    kind: TriangularKind,
    p: &TriangularParams<Complex64>,
    i: usize,
    j: usize,
) -> Result<TriangularSides<Complex64>> {
    let lift = |c: &Complex64| ExtendedComplex::from_f64(c.re, c.im);
    let wide = TriangularParams { s: lift(&p.s), b: lift(&p.b), c: lift(&p.c), d: lift(&p.d) };
    let row = triangular_sides(kind, &wide, i, j)?;
    let closed = triangular_sides(kind, p, i, j)?.closed;
    Ok(TriangularSides {
        row_sum: row.row_sum.to_c64(),
        closed,
        term_scale: row.term_scale,
    })
}

/// Relative tolerance for [`triangular_entry`].
pub const TRIANGULAR_TOLERANCE: f64 = 1e-10;

/// Closed-form value of the reduced entry `(i, j)`, after checking it against the explicit
/// row combination. Disagreement is reported as an identity violation.
pub fn triangular_entry(
    kind: TriangularKind,
    p: &TriangularParams<Complex64>,
    i: usize,
    j: usize,
) -> Result<Complex64> {
    let sides = triangular_sides_extended(kind, p, i, j)?;
    let residual = if i > j {
        sides.row_sum.norm() / sides.term_scale.max(f64::MIN_POSITIVE)
    } else {
        relative_residual(&sides.row_sum, &sides.closed, 0.0)
    };
    if residual > TRIANGULAR_TOLERANCE {
        return Err(Error::IdentityViolation {
            identity: kind.name().into(),
            residual,
            tolerance: TRIANGULAR_TOLERANCE,
            detail: format!("i = {i}, j = {j}, params = {p:?}"),
        });
    }
    Ok(sides.closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::{c64, ExactRational};

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    fn cp(s: f64, b: f64, c: f64, d: f64) -> TriangularParams {
        TriangularParams {
            s: c64(s, 0.0),
            b: c64(b, 0.0),
            c: c64(c, 0.0),
            d: c64(d, 0.0),
        }
    }

    #[test]
    fn examples() {
        let p = cp(1.0, 0.7, 1.0, 3.0);
        assert_eq!(triangular_entry(TriangularKind::AffineProduct, &p, 2, 1).unwrap(), c64(0.0, 0.0));
        assert_eq!(triangular_entry(TriangularKind::AffineProduct, &p, 1, 2).unwrap(), c64(2.0, 0.0));
        let v = triangular_entry(TriangularKind::AffineRatio, &p, 1, 1).unwrap();
        assert!((v - c64(1.0 / 6.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn exact_ratio_example() {
        let p = TriangularParams { s: q(1, 1), b: q(0, 1), c: q(1, 1), d: q(3, 1) };
        let sides = triangular_sides(TriangularKind::AffineRatio, &p, 1, 1).unwrap();
        assert_eq!(sides.closed, q(1, 6));
        assert_eq!(sides.row_sum, q(1, 6));
    }

    #[test]
    fn exact_agreement_small_grid() {
        let p = TriangularParams { s: q(2, 3), b: q(5, 7), c: q(-3, 4), d: q(9, 5) };
        for kind in TriangularKind::ALL {
            for i in 0..=6 {
                for j in 0..=6 {
                    let sides = triangular_sides(kind, &p, i, j).unwrap();
                    assert_eq!(sides.row_sum, sides.closed, "{kind:?} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn reciprocal_side_condition() {
        let p = cp(1.0, -2.0, 0.0, 0.0);
        let err = triangular_entry(TriangularKind::AffineReciprocal, &p, 2, 2).unwrap_err();
        assert!(matches!(err, Error::SideCondition { index: 2, .. }));
    }
}
