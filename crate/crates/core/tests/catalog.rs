mod common;

use common::*;
use myb_core::catalog::matrix::Matrix;
use myb_core::catalog::{self, example1_candidates, lookup, mult_operators, FormExample};
use myb_core::identities::check_lie;
use myb_core::jordan::check_design_condition;
use myb_core::scalar::int;
use myb_core::{Operator, Vector};

#[test]
fn so_n_entries() {
    let so3 = so(3);
    assert_eq!(so3.dim(), 3);
    let b = so3.bracket.as_ref().unwrap();
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        assert_eq!(b.basis_product(i, j), e(3, k));
    }
    // Commutator oracle on the skew basis matrices.
    let basis = so3.matrix_basis.as_ref().unwrap();
    for i in 0..3 {
        for j in 0..3 {
            let m = basis.element(i).commutator(&basis.element(j));
            assert_eq!(basis.to_matrix(&b.basis_product(i, j)), m);
        }
    }
    let so2 = so(2);
    assert_eq!(so2.dim(), 1);
    assert!(so2.bracket.as_ref().unwrap().is_zero());
    let so4 = so(4);
    assert_eq!(so4.dim(), 6);
    assert!(check_lie(so4.bracket.as_ref().unwrap()).passed);
    assert!(catalog::so_n(1).is_err());
}

#[test]
fn gl_entries() {
    let g2 = gl(2);
    assert_eq!(g2.dim(), 4);
    assert_eq!(g2.bracket.as_ref().unwrap().basis_product(1, 2), Vector::from_ints(&[1, 0, 0, -1]));
    let t = g2.triple.as_ref().unwrap();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                assert_eq!(t.basis_product(i, j, k), t.basis_product(k, j, i));
            }
        }
    }
    let g1 = gl(1);
    assert!(g1.bracket.as_ref().unwrap().is_zero());
    let x = Vector::from_ints(&[3]);
    assert_eq!(g1.triple.as_ref().unwrap().apply(&x, &x, &x).unwrap(), Vector::from_ints(&[54]));
    assert!(g1.validate().is_ok());
}

#[test]
fn multiplication_operator_examples() {
    let q = diag_q(2);
    let ops = mult_operators(&gl(2), &q).unwrap();
    let right = ops.right.as_ref().unwrap();
    assert_eq!(right.apply(&e(4, 1)).unwrap(), Vector::from_ints(&[0, 2, 0, 0]));
    assert_eq!(right, &oracle_op("XQ", &q));
    assert_eq!(ops.left.as_ref().unwrap(), &oracle_op("QX", &q));
    assert_eq!(ops.sum, oracle_op("XQ + QX", &q));
    assert_eq!(ops.rho, oracle_op("QXQ", &q));
    assert_eq!(ops.xi().unwrap(), oracle_op("QX - XQ", &q));

    let id = mult_operators(&gl(3), &Matrix::identity(3)).unwrap();
    assert_eq!(id.right.unwrap(), Operator::identity(9));
    assert_eq!(id.left.unwrap(), Operator::identity(9));
    assert_eq!(id.rho, Operator::identity(9));

    // so(3), Q = diag(1,2,3): QXQ on each skew basis matrix.
    let so3 = so(3);
    let basis = so3.matrix_basis.as_ref().unwrap();
    let q3 = diag_q(3);
    let ops = mult_operators(&so3, &q3).unwrap();
    for k in 0..3 {
        let x = basis.element(k);
        assert_eq!(basis.to_matrix(&ops.rho.column(k)), &(&q3 * &x) * &q3);
        assert_eq!(basis.to_matrix(&ops.sum.column(k)), &(&q3 * &x) + &(&x * &q3));
    }
    assert!(ops.right.is_none() && ops.left.is_none());
    let nonsym = Matrix::from_int_rows(&[&[1, 2, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
    assert!(mult_operators(&so3, &nonsym).is_err());
    assert!(mult_operators(&gl(2), &q3).is_err());
}

#[test]
fn example1_entries() {
    let ex = FormExample::default_instance();
    assert_eq!(ex.r_projection.apply(&e(3, 2)).unwrap(), e(3, 2));
    assert!(ex.r_projection.apply(&e(3, 0)).unwrap().is_zero());
    assert_eq!(ex.r_adjoint.apply(&e(3, 0)).unwrap(), cross(&e(3, 2), &e(3, 0)));
    assert_eq!(ex.r_adjoint.apply(&e(3, 0)).unwrap(), e(3, 1));
    assert!(check_design_condition(&ex.bracket, &ex.triple_standard).passed);

    let degenerate = Operator::diagonal(&ints(&[1, 1, 0]));
    assert!(example1_candidates(&e(3, 2), &degenerate).is_err());
    let nonsym = Operator::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
    assert!(example1_candidates(&e(3, 2), &nonsym).is_err());
    let scaled = example1_candidates(&e(3, 0).scaled(&int(2)), &Operator::diagonal(&ints(&[1, 2, 3]))).unwrap();
    assert_eq!(scaled.r_projection.apply(&e(3, 0)).unwrap(), e(3, 0).scaled(&int(4)));
}

#[test]
fn named_lookup() {
    for name in [
        "so3",
        "gl2",
        "example1-paper",
        "example1-standard",
        "example2-gl2",
        "example2-gl2?q=diag:1,2",
        "example3-gl2?q=rows:1,1/2;0,2",
        "example4-so3?q=seed:5",
        "example4-so4",
    ] {
        let entry = lookup(name).unwrap_or_else(|err| panic!("{name}: {err}"));
        assert_eq!(entry.name, name);
        assert!(entry.validate().is_ok());
    }
    let e2 = lookup("example2-gl2?q=diag:1,2").unwrap();
    let q = diag_q(2);
    assert_eq!(e2.operator("R1").unwrap(), &oracle_op("XQ", &q));
    assert_eq!(e2.operator("R2").unwrap(), &oracle_op("QX", &q));
    assert!(e2.operator("nope").is_err());
    assert!(e2.require_triple().is_err());
    assert!(lookup("example4-so3?q=seed:5").unwrap().operator("rho").is_ok());
    assert_eq!(lookup("example4-so3?q=seed:5").unwrap(), lookup("example4-so3?q=seed:5").unwrap());
    for bad in ["so", "gl0", "example2-gl2?q=diag:1", "example2-gl2?q=cube:1", "example2-gl2?q", "x"] {
        assert!(lookup(bad).is_err(), "{bad}");
    }
}
