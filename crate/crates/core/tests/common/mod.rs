#![allow(dead_code)]

use myb_core::catalog::matrix::Matrix;
use myb_core::catalog::monomial::{bilinear_tensor, operator_tensor, trilinear_tensor, Expr};
use myb_core::catalog::{self, CatalogEntry};
use myb_core::scalar::{int, Scalar};
use myb_core::{BilinearStructure, Operator, TrilinearStructure, Vector};

pub fn e(n: usize, i: usize) -> Vector {
    Vector::basis(n, i)
}

/// Cross product on coordinates, the expected `so(3)` bracket.
pub fn cross(u: &Vector, v: &Vector) -> Vector {
    let (a, b) = (u.as_slice(), v.as_slice());
    Vector::from_scalars(vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ])
}

pub fn gl(n: usize) -> CatalogEntry {
    catalog::gl_assoc(n).unwrap()
}

pub fn so(n: usize) -> CatalogEntry {
    catalog::so_n(n).unwrap()
}

pub fn diag_q(n: usize) -> Matrix {
    catalog::default_q(n)
}

pub fn oracle_op(expr: &str, q: &Matrix) -> Operator {
    operator_tensor(&Expr::parse(expr), q.size(), &[('Q', q)])
}

pub fn oracle_bracket(expr: &str, q: &Matrix) -> BilinearStructure {
    bilinear_tensor(&Expr::parse(expr), q.size(), &[('Q', q)])
}

pub fn oracle_triple(expr: &str, q: &Matrix) -> TrilinearStructure {
    trilinear_tensor(&Expr::parse(expr), q.size(), &[('Q', q)])
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| int(x)).collect()
}
