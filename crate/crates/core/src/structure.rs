//! Sparse structure-constant tensors for bilinear and trilinear products.
//!
//! A missing key means the product of those basis vectors is zero. Neither
//! type promises antisymmetry, Jacobi or any triple-system identity: those are
//! predicates in [`crate::identities`], so non-Lie candidates stay representable.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::scalar::Scalar;
use crate::vector::Vector;

fn check_dim(expected: usize, v: &Vector) -> Result<(), Error> {
    if v.dim() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected,
            found: v.dim(),
        })
    }
}

fn check_index(index: usize, dim: usize) -> Result<(), Error> {
    if index < dim {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, dim })
    }
}

/// Structure constants `c(i,j)` = coordinates of `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearStructure {
    dim: usize,
    entries: BTreeMap<(usize, usize), Vector>,
}

impl BilinearStructure {
    pub fn zero(dim: usize) -> Self {
        BilinearStructure {
            dim,
            entries: BTreeMap::new(),
        }
    }

    /// Builds the tensor from the value on every basis pair.
    pub fn from_fn(dim: usize, mut product: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut out = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                assert_eq!(v.dim(), dim, "product has wrong dimension");
                if !v.is_zero() {
                    out.entries.insert((i, j), v);
                }
            }
        }
        out
    }

    /// Accumulates `(i, j, k, value)` coefficients: `[e_i, e_j]_k += value`.
    pub fn from_coefficients(
        dim: usize,
        coefficients: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self, Error> {
        let mut out = Self::zero(dim);
        for (i, j, k, value) in coefficients {
            for idx in [i, j, k] {
                check_index(idx, dim)?;
            }
            let slot = out
                .entries
                .entry((i, j))
                .or_insert_with(|| Vector::zeros(dim));
            slot.add_scaled(&value, &Vector::basis(dim, k));
        }
        out.entries.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Vector> {
        self.entries.get(&(i, j))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.get(i, j).cloned().unwrap_or_else(|| Vector::zeros(self.dim))
    }

    /// Non-zero entries in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Vector)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Result<Vector, Error> {
        check_dim(self.dim, x)?;
        check_dim(self.dim, y)?;
        Ok(self.eval(x, y))
    }

    pub(crate) fn eval(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                if let Some(c) = self.entries.get(&(i, j)) {
                    out.add_scaled(&(xi * yj), c);
                }
            }
        }
        out
    }

    /// `sum_k coeffs[k] * parts[k]`
    pub fn linear_combination(dim: usize, terms: &[(Scalar, &BilinearStructure)]) -> Self {
        let mut entries: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
        for (c, b) in terms {
            assert_eq!(b.dim, dim, "bilinear dimension mismatch");
            for (key, v) in &b.entries {
                entries
                    .entry(*key)
                    .or_insert_with(|| Vector::zeros(dim))
                    .add_scaled(c, v);
            }
        }
        entries.retain(|_, v| !v.is_zero());
        BilinearStructure { dim, entries }
    }
}

/// Structure constants `t(i,j,k)` = coordinates of `<e_i, e_j, e_k>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrilinearStructure {
    dim: usize,
    entries: BTreeMap<(usize, usize, usize), Vector>,
}

impl TrilinearStructure {
    pub fn zero(dim: usize) -> Self {
        TrilinearStructure {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_fn(dim: usize, mut product: impl FnMut(usize, usize, usize) -> Vector) -> Self {
        let mut out = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = product(i, j, k);
                    assert_eq!(v.dim(), dim, "product has wrong dimension");
                    if !v.is_zero() {
                        out.entries.insert((i, j, k), v);
                    }
                }
            }
        }
        out
    }

    /// Accumulates `(i, j, k, l, value)`: `<e_i, e_j, e_k>_l += value`.
    pub fn from_coefficients(
        dim: usize,
        coefficients: impl IntoIterator<Item = (usize, usize, usize, usize, Scalar)>,
    ) -> Result<Self, Error> {
        let mut out = Self::zero(dim);
        for (i, j, k, l, value) in coefficients {
            for idx in [i, j, k, l] {
                check_index(idx, dim)?;
            }
            out.entries
                .entry((i, j, k))
                .or_insert_with(|| Vector::zeros(dim))
                .add_scaled(&value, &Vector::basis(dim, l));
        }
        out.entries.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Option<&Vector> {
        self.entries.get(&(i, j, k))
    }

    pub fn basis_product(&self, i: usize, j: usize, k: usize) -> Vector {
        self.get(i, j, k)
            .cloned()
            .unwrap_or_else(|| Vector::zeros(self.dim))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Vector)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn apply(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
        check_dim(self.dim, x)?;
        check_dim(self.dim, y)?;
        check_dim(self.dim, z)?;
        Ok(self.eval(x, y, z))
    }

    pub(crate) fn eval(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let xy = xi * yj;
                for (k, zk) in z.support() {
                    if let Some(t) = self.entries.get(&(i, j, k)) {
                        out.add_scaled(&(&xy * zk), t);
                    }
                }
            }
        }
        out
    }

    /// True when `t(i,j,k) = t(k,j,i)` for every key.
    pub fn is_outer_symmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(i, j, k), v)| self.entries.get(&(k, j, i)) == Some(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn cross_product() -> BilinearStructure {
        BilinearStructure::from_coefficients(
            3,
            [
                (0, 1, 2, int(1)),
                (1, 0, 2, int(-1)),
                (1, 2, 0, int(1)),
                (2, 1, 0, int(-1)),
                (2, 0, 1, int(1)),
                (0, 2, 1, int(-1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn bilinear_apply() {
        let b = cross_product();
        let e = |i| Vector::basis(3, i);
        assert_eq!(b.apply(&e(0), &e(1)).unwrap(), e(2));
        assert!(b.apply(&Vector::zeros(3), &e(1)).unwrap().is_zero());
        assert!(matches!(
            b.apply(&Vector::zeros(2), &e(1)),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));
        let x = Vector::from_scalars(vec![ratio(1, 2), int(0), int(3)]);
        let y = Vector::from_ints(&[0, 2, 0]);
        // (1/2, 0, 3) x (0, 2, 0) = (-6, 0, 1)
        assert_eq!(b.apply(&x, &y).unwrap(), Vector::from_ints(&[-6, 0, 1]));
    }

    #[test]
    fn out_of_range_coefficient() {
        assert!(matches!(
            BilinearStructure::from_coefficients(2, [(0, 2, 0, int(1))]),
            Err(Error::IndexOutOfRange { index: 2, dim: 2 })
        ));
        assert!(TrilinearStructure::from_coefficients(2, [(0, 0, 0, 5, int(1))]).is_err());
    }

    #[test]
    fn cancelling_coefficients_leave_no_entry() {
        let b = BilinearStructure::from_coefficients(2, [(0, 1, 0, int(1)), (0, 1, 0, int(-1))])
            .unwrap();
        assert!(b.is_zero());
    }

    #[test]
    fn trilinear_apply() {
        let t = TrilinearStructure::from_fn(2, |i, j, k| {
            if i == j && j == k {
                Vector::basis(2, i)
            } else {
                Vector::zeros(2)
            }
        });
        let x = Vector::from_ints(&[2, 1]);
        assert_eq!(t.apply(&x, &x, &x).unwrap(), Vector::from_ints(&[8, 1]));
        assert!(t.apply(&x, &Vector::zeros(2), &x).unwrap().is_zero());
        assert!(t.is_outer_symmetric());
    }

    #[test]
    fn linear_combination_of_brackets() {
        let b = cross_product();
        let sum = BilinearStructure::linear_combination(3, &[(int(2), &b), (int(-2), &b)]);
        assert!(sum.is_zero());
        let half = BilinearStructure::linear_combination(3, &[(ratio(1, 2), &b)]);
        assert_eq!(half.basis_product(0, 1), Vector::from_scalars(vec![int(0), int(0), ratio(1, 2)]));
    }
}
