use std::ops::{Index, IndexMut};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::numkernel::Scalar;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    /// Fallible constructor; stops at the first failing entry.
    pub fn try_from_fn<E>(
        n: usize,
        mut f: impl FnMut(usize, usize) -> Result<T, E>,
    ) -> Result<Self, E> {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j)?);
            }
        }
        Ok(Matrix { n, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        for i in 0..self.n {
            self.data.swap(i * self.n + a, i * self.n + b);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

/// Determinant by LU factorization with partial pivoting on the largest modulus.
pub fn det_oracle(m: &Matrix<Complex64>) -> Complex64 {
    det_lu(m)
}

/// [`det_oracle`] over any scalar type, used with extended-precision entries.
pub fn det_lu<T: Scalar>(m: &Matrix<T>) -> T {
    let n = m.dim();
    let mut a = m.clone();
    let mut det = T::one();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[(x, col)].modulus().total_cmp(&a[(y, col)].modulus()))
            .unwrap();
        if a[(pivot, col)].is_zero() {
            return T::zero();
        }
        if pivot != col {
            for k in 0..n {
                a.data.swap(col * n + k, pivot * n + k);
            }
            det = -det;
        }
        let p = a[(col, col)].clone();
        det = det * p.clone();
        for row in col + 1..n {
            let factor = a[(row, col)].clone() / p.clone();
            if factor.is_zero() {
                continue;
            }
            for k in col + 1..n {
                let v = a[(col, k)].clone();
                a[(row, k)] = a[(row, k)].clone() - factor.clone() * v;
            }
        }
    }
    det
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_exact(m: &Matrix<BigRational>) -> BigRational {
    let n = m.dim();
    if n == 0 {
        return BigRational::one();
    }
    let mut a = m.clone();
    let mut sign = BigRational::one();
    let mut prev = BigRational::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        let tmp = a[(k, c)].clone();
                        a[(k, c)] = a[(r, c)].clone();
                        a[(r, c)] = tmp;
                    }
                    sign = -sign;
                }
                None => return BigRational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * a[(n - 1, n - 1)].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::c64;
    use num_bigint::BigInt;

    fn cm(rows: &[&[f64]]) -> Matrix<Complex64> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| c64(x, 0.0)).collect()).collect())
    }

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    #[test]
    fn lu_examples() {
        assert_eq!(det_oracle(&cm(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]])), c64(1.0, 0.0));
        assert_eq!(det_oracle(&cm(&[&[1.0, 1.0], &[1.0, 2.0]])), c64(1.0, 0.0));
        assert_eq!(det_oracle(&cm(&[&[0.0, 1.0], &[1.0, 0.0]])), c64(-1.0, 0.0));
        assert_eq!(det_oracle(&cm(&[&[1.0, 2.0], &[2.0, 4.0]])), c64(0.0, 0.0));
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(det_exact(&qm(&[&[0, 1], &[1, 0]])), BigRational::from_integer((-1).into()));
        assert_eq!(det_exact(&qm(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])), BigRational::from_integer(0.into()));
        assert_eq!(det_exact(&qm(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]])), BigRational::from_integer((-6).into()));
        assert_eq!(det_exact(&qm(&[&[1, 2], &[3, 4]])), BigRational::from_integer((-2).into()));
    }

    #[test]
    fn complex_entries() {
        let m = Matrix::from_rows(vec![vec![c64(0.0, 1.0), c64(2.0, 0.0)], vec![c64(1.0, 1.0), c64(0.0, -1.0)]]);
        // i*(-i) - 2(1+i) = 1 - 2 - 2i
        assert!((det_oracle(&m) - c64(-1.0, -2.0)).norm() < 1e-15);
    }
}
