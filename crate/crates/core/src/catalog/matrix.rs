//! Plain dense square matrices. Used to build catalog structures and as the
//! brute-force oracle the structure-tensor pipeline is checked against, so it
//! deliberately shares nothing with [`crate::structure`].

use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::error::Error;
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    a: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            a: vec![Scalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.a[i * n + i] = scalar::one();
        }
        m
    }

    /// Matrix unit `E_ij`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.a[i * n + j] = scalar::one();
        m
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let n = d.len();
        let mut m = Self::zero(n);
        for (i, v) in d.iter().enumerate() {
            m.a[i * n + i] = v.clone();
        }
        m
    }

    pub fn diagonal_ints(d: &[i64]) -> Self {
        Self::diagonal(&d.iter().map(|&v| scalar::int(v)).collect::<Vec<_>>())
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            a.extend(row);
        }
        Ok(Matrix { n, a })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| scalar::int(v)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.a[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.a
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.a[j * self.n + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        Matrix {
            n: self.n,
            a: self.a.iter().map(|v| v * c).collect(),
        }
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn determinant(&self) -> Scalar {
        let n = self.n;
        let mut m = self.a.clone();
        let mut det = scalar::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return Scalar::zero();
            };
            if pivot != col {
                for c in 0..n {
                    m.swap(pivot * n + c, col * n + c);
                }
                det = -det;
            }
            let p = m[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                let f = &m[r * n + col] / &p;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let sub = &f * &m[col * n + c];
                    m[r * n + c] -= sub;
                }
            }
        }
        det
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.a[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        Matrix {
            n: self.n,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        Matrix {
            n: self.n,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x - y).collect(),
        }
    }
}
