//! Auxiliary determinant and product-of-differences identities, each returned as its two
//! independently computed sides.

use num_complex::Complex64;

use super::kind::DetKind;
use super::matrix::{det_oracle, Matrix};
use super::spec::{prod_diff, DeterminantSpec, NodeSet};
use crate::error::{Error, Result};
use crate::numkernel::{sign_pow, Scalar};
use crate::sfact::{sf_general, sf_product};

#[derive(Debug, Clone, PartialEq)]
pub struct Sides<T> {
    pub lhs: T,
    pub rhs: T,
}

/// `[Π_i(z_j)]` with `Π_i(z) = Σ_k c_{i,k} f(z, k)`.
pub fn alternant_matrix<T: Scalar>(
    c: &Matrix<T>,
    nodes: &[T],
    mut f: impl FnMut(&T, usize) -> Result<T>,
) -> Result<Matrix<T>> {
    let n = c.dim();
    if nodes.len() != n {
        return Err(Error::Domain(format!(
            "coefficient matrix is {n}x{n} but there are {} nodes",
            nodes.len()
        )));
    }
    let mut basis = Matrix::from_fn(n, |_, _| T::zero());
    for (j, zj) in nodes.iter().enumerate() {
        for k in 0..n {
            basis[(k, j)] = f(zj, k)?;
        }
    }
    Ok(Matrix::from_fn(n, |i, j| {
        (0..n).fold(T::zero(), |acc, k| acc + c[(i, k)].clone() * basis[(k, j)].clone())
    }))
}

/// `(z_j)_{s;t-i}` determinant against `∏ (z_j)_{s;t}` times the negative-index determinant
/// at the shifted nodes `z_j + t s`.
pub fn neg_complex_index_sides(nodes: &NodeSet<Complex64>, s: Complex64, t: Complex64) -> Result<Sides<Complex64>> {
    let n = nodes.len();
    let z = nodes.as_slice();
    let m = Matrix::try_from_fn(n, |i, j| sf_general(z[j], s, t - i as f64))?;
    let lhs = det_oracle(&m);
    let mut pre = Complex64::new(1.0, 0.0);
    for zj in z {
        pre *= sf_general(*zj, s, t)?;
    }
    let shifted = nodes.map(|zj| zj + t * s);
    let rhs = pre * DeterminantSpec::new(DetKind::NegIndex, s).det_closed(&shifted)?;
    Ok(Sides { lhs, rhs })
}

/// `∏_j (b+(j-1)s)_{s;j} (b+js)_{s;j}` against `∏_j (b+js)_{s;n-1}`.
pub fn diagonal_rearrangement<T: Scalar>(b: &T, s: &T, n: usize) -> Sides<T> {
    let m = n as u32 - 1;
    let mut lhs = T::one();
    let mut rhs = T::one();
    for j in 0..n {
        let jt = T::from_int(j as i64);
        let col = b.clone() + jt.clone() * s.clone();
        lhs = lhs * sf_product(&(col.clone() - s.clone()), s, j as u32) * sf_product(&col, s, j as u32);
        rhs = rhs * sf_product(&col, s, m);
    }
    Sides { lhs, rhs }
}

/// `∏_j (b+(n-1-j)(1-a)s)_{s;j}` against `∏_j (b+(n-1-j)s)_{(1-a)s;j}`.
pub fn ratio_rearrangement<T: Scalar>(a: &T, b: &T, s: &T, n: usize) -> Sides<T> {
    let u = (T::one() - a.clone()) * s.clone();
    let mut lhs = T::one();
    let mut rhs = T::one();
    for j in 0..n {
        let r = T::from_int((n - 1 - j) as i64);
        lhs = lhs * sf_product(&(b.clone() + r.clone() * u.clone()), s, j as u32);
        rhs = rhs * sf_product(&(b.clone() + r * s.clone()), &u, j as u32);
    }
    Sides { lhs, rhs }
}

fn pow_half<T: Scalar>(x: &T, n: usize) -> T {
    x.powi((n * n.saturating_sub(1) / 2) as i32)
}

/// `Δ(b + a z)` against `a^{n(n-1)/2} Δ(z)`.
pub fn affine_map_sides<T: Scalar>(z: &[T], a: &T, b: &T) -> Sides<T> {
    let mapped: Vec<T> = z.iter().map(|zj| b.clone() + a.clone() * zj.clone()).collect();
    Sides {
        lhs: prod_diff(&mapped),
        rhs: pow_half(a, z.len()) * prod_diff(z),
    }
}

/// `Δ(1/z)` against `(-1)^{n(n-1)/2} Δ(z) / ∏ z_j^{n-1}`.
pub fn inversion_sides<T: Scalar>(z: &[T]) -> Result<Sides<T>> {
    let n = z.len();
    if z.iter().any(|zj| zj.near_zero()) {
        return Err(Error::Domain("inversion needs nonzero nodes".into()));
    }
    let inv: Vec<T> = z.iter().map(|zj| T::one() / zj.clone()).collect();
    let den = z.iter().fold(T::one(), |acc, zj| acc * zj.powi(n as i32 - 1));
    Ok(Sides {
        lhs: prod_diff(&inv),
        rhs: sign_pow::<T>((n * (n - 1) / 2) as i64) * prod_diff(z) / den,
    })
}

/// `Δ(z / (b + a z))` against `b^{n(n-1)/2} Δ(z) / ∏ (b + a z_j)^{n-1}`.
pub fn mobius_sides<T: Scalar>(z: &[T], a: &T, b: &T) -> Result<Sides<T>> {
    let n = z.len();
    let dens: Vec<T> = z.iter().map(|zj| b.clone() + a.clone() * zj.clone()).collect();
    if dens.iter().any(|d| d.near_zero()) {
        return Err(Error::Domain("b + a z_j vanishes".into()));
    }
    let mapped: Vec<T> = z.iter().zip(&dens).map(|(zj, d)| zj.clone() / d.clone()).collect();
    let den = dens.iter().fold(T::one(), |acc, d| acc * d.powi(n as i32 - 1));
    Ok(Sides {
        lhs: prod_diff(&mapped),
        rhs: pow_half(b, n) * prod_diff(z) / den,
    })
}

/// `Δ(j ↦ b + a j)` against `a^{n(n-1)/2} ∏ j!`.
pub fn affine_progression_sides<T: Scalar>(a: &T, b: &T, n: usize) -> Sides<T> {
    let nodes: Vec<T> = (0..n).map(|j| b.clone() + a.clone() * T::from_int(j as i64)).collect();
    let facts = (0..n as u32).fold(T::one(), |acc, j| acc * sf_product(&T::one(), &T::one(), j));
    Sides {
        lhs: prod_diff(&nodes),
        rhs: pow_half(a, n) * facts,
    }
}

/// Alternant in the powers of `z/(a z + b)`: `det[Σ_k c_{i,k} (z_j/(a z_j+b))^k]` against
/// `λ b^{n(n-1)/2} Δ(z) / ∏ (a z_j + b)^{n-1}` with `λ = det c`.
pub fn mobius_alternant_sides(
    c: &Matrix<Complex64>,
    z: &[Complex64],
    a: Complex64,
    b: Complex64,
) -> Result<Sides<Complex64>> {
    let m = alternant_matrix(c, z, |zj, k| {
        let d = a * zj + b;
        if d.near_zero() {
            return Err(Error::Domain("a z_j + b vanishes".into()));
        }
        Ok((zj / d).powi(k as i32))
    })?;
    let mob = mobius_sides(z, &a, &b)?;
    Ok(Sides {
        lhs: det_oracle(&m),
        rhs: det_oracle(c) * mob.rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::{c64, ExactRational};

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    #[test]
    fn affine_progression_example() {
        let sides = affine_progression_sides(&q(2, 1), &q(5, 1), 3);
        assert_eq!(sides.lhs, q(16, 1));
        assert_eq!(sides.rhs, q(16, 1));
    }

    #[test]
    fn exact_product_maps() {
        let z = [q(1, 2), q(-3, 1), q(7, 5), q(2, 9)];
        let s = affine_map_sides(&z, &q(-2, 3), &q(4, 1));
        assert_eq!(s.lhs, s.rhs);
        let s = inversion_sides(&z).unwrap();
        assert_eq!(s.lhs, s.rhs);
        let s = mobius_sides(&z, &q(3, 2), &q(1, 4)).unwrap();
        assert_eq!(s.lhs, s.rhs);
    }

    #[test]
    fn rearrangements_exact() {
        for n in 1..=8 {
            let s = diagonal_rearrangement(&q(3, 7), &q(-5, 4), n);
            assert_eq!(s.lhs, s.rhs, "n = {n}");
            let s = ratio_rearrangement(&q(2, 3), &q(1, 5), &q(7, 2), n);
            assert_eq!(s.lhs, s.rhs, "n = {n}");
        }
    }

    #[test]
    fn negative_complex_index_small() {
        let nodes = NodeSet::new(vec![c64(0.3, 0.2), c64(1.7, -0.4), c64(-0.6, 1.1)]).unwrap();
        let sides = neg_complex_index_sides(&nodes, c64(0.8, 0.1), c64(0.35, -0.6)).unwrap();
        assert!((sides.lhs - sides.rhs).norm() <= 1e-10 * sides.rhs.norm());
    }
}
