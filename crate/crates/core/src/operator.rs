//! Linear operators on coordinate space and polynomials in them.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::{self, Scalar};
use crate::vector::Vector;

/// A `dim x dim` matrix acting on coordinates: `y_r = sum_c entries[r][c] * x_c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Operator {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Operator {
    pub fn zero(dim: usize) -> Self {
        Operator {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, scalar::one())
    }

    pub fn scalar(dim: usize, c: Scalar) -> Self {
        let mut op = Self::zero(dim);
        for i in 0..dim {
            op.entries[i * dim + i] = c.clone();
        }
        op
    }

    pub fn diagonal(diag: &[Scalar]) -> Self {
        let mut op = Self::zero(diag.len());
        for (i, d) in diag.iter().enumerate() {
            op.entries[i * diag.len() + i] = d.clone();
        }
        op
    }

    /// Row-major construction. Fails unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Operator { dim, entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| scalar::int(n)).collect())
                .collect(),
        )
    }

    /// The operator whose `j`-th column is `image(e_j)`.
    pub fn from_images(dim: usize, mut image: impl FnMut(usize) -> Vector) -> Self {
        let mut op = Self::zero(dim);
        for c in 0..dim {
            let col = image(c);
            assert_eq!(col.dim(), dim, "image has wrong dimension");
            for (r, v) in col.into_inner().into_iter().enumerate() {
                op.entries[r * dim + c] = v;
            }
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim.max(1))
    }

    pub fn column(&self, col: usize) -> Vector {
        Vector::from_scalars((0..self.dim).map(|r| self.entry(r, col).clone()).collect())
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector, Error> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(self.eval(x))
    }

    pub(crate) fn eval(&self, x: &Vector) -> Vector {
        debug_assert_eq!(x.dim(), self.dim);
        let mut y = vec![Scalar::zero(); self.dim];
        for (c, xc) in x.support() {
            for (r, yr) in y.iter_mut().enumerate() {
                let a = self.entry(r, c);
                if !a.is_zero() {
                    *yr += a * xc;
                }
            }
        }
        Vector::from_scalars(y)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Operator) -> Result<Operator, Error> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut out = Self::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.entry(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &Scalar) -> Operator {
        Operator {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Operator {
        let mut acc = Self::identity(self.dim);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|r| (0..r).all(|c| self.entry(r, c) == self.entry(c, r)))
    }

    pub fn transpose(&self) -> Operator {
        let n = self.dim;
        Self::from_images(n, |c| {
            Vector::from_scalars((0..n).map(|r| self.entry(c, r).clone()).collect())
        })
    }

    fn check_same_dim(&self, other: &Operator) -> Result<(), Error> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            })
        }
    }

    fn zip_with(&self, other: &Operator, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Operator {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        Operator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for &Operator {
    type Output = Operator;
    fn add(self, rhs: &Operator) -> Operator {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        self.scaled(&-scalar::one())
    }
}

/// Composition; panics on dimension mismatch (use [`Operator::compose`] to get an error).
impl Mul for &Operator {
    type Output = Operator;
    fn mul(self, rhs: &Operator) -> Operator {
        self.compose(rhs).expect("operator dimension mismatch")
    }
}

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial(pub Vec<Scalar>);

impl Polynomial {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial(coeffs.iter().map(|&n| scalar::int(n)).collect())
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.0.is_empty() || other.0.is_empty() {
            return Polynomial(Vec::new());
        }
        let mut out = vec![Scalar::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial(out)
    }

    /// `f(R) = sum_k f_k R^k` with `R^0 = 1`, evaluated by Horner's rule.
    pub fn apply_to(&self, op: &Operator) -> Operator {
        let mut acc = Operator::zero(op.dim());
        for c in self.0.iter().rev() {
            acc = &(&acc * op) + &Operator::scalar(op.dim(), c.clone());
        }
        acc
    }
}

pub fn op_polynomial(f: &Polynomial, op: &Operator) -> Operator {
    f.apply_to(op)
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial(vec![scalar::one()])
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        Polynomial::mul(&self, &rhs)
    }
}
