mod common;

use common::*;
use myb_core::catalog::matrix::Matrix;
use myb_core::catalog::monomial::{full_derived_triple, reduced_derived_triple, Expr};
use myb_core::catalog::FormExample;
use myb_core::identities::check_jts_identity;
use myb_core::jordan::*;
use myb_core::sample::Sampler;
use myb_core::scalar::ratio;
use myb_core::{Error, JtsVariant, Operator, TrilinearStructure, Vector};

fn gl2_system(r: Operator) -> TripleWithOperator {
    TripleWithOperator::new(gl(2).triple.unwrap(), r, JtsVariant::Jacobson).unwrap()
}

#[test]
fn equivariance_examples() {
    let g = gl(2);
    assert!(check_equivariance(g.bracket.as_ref().unwrap(), g.triple.as_ref().unwrap()).passed);

    let ex1 = FormExample::default_instance();
    assert!(check_equivariance(&ex1.bracket, &ex1.triple_paper).passed);
    assert!(check_equivariance(&ex1.bracket, &ex1.triple_standard).passed);

    // <X,Y,Z> = Y_11 Z_11 X is not ad-invariant on gl(2).
    let t = TrilinearStructure::from_fn(4, |i, j, k| if j == 0 && k == 0 { e(4, i) } else { Vector::zeros(4) });
    let r = check_equivariance(g.bracket.as_ref().unwrap(), &t);
    assert!(!r.passed);
    assert!(r.witness.is_some());
}

#[test]
fn design_examples() {
    let g = gl(2);
    let d = DesignCandidate::new(g.bracket.clone().unwrap(), g.triple.clone().unwrap(), JtsVariant::Jacobson).unwrap();
    let r = check_design(&d);
    assert!(r.passed, "{r:?}");
    // 2XAX and 2AXA telescope: [A, XAX] + [X, AXA] = 0 in the free algebra.
    let (a, x) = (Expr::var('A'), Expr::var('X'));
    let xax = &(&x * &a) * &x;
    let axa = &(&a * &x) * &a;
    let comm = |u: &Expr, v: &Expr| &(u * v) - &(v * u);
    assert!((&comm(&a, &xax) + &comm(&x, &axa)).is_zero());

    for variant in JtsVariant::ALL {
        let zero = DesignCandidate::new(so(3).bracket.unwrap(), TrilinearStructure::zero(3), variant).unwrap();
        assert!(check_design(&zero).passed);
    }

    let ex1 = FormExample::default_instance();
    let paper = DesignCandidate::new(ex1.bracket.clone(), ex1.triple_paper.clone(), JtsVariant::Paper).unwrap();
    let r = check_design(&paper);
    assert_eq!(r.passed_named("jts-identity[paper]"), Some(false));
    assert_eq!(r.passed_named("equivariance"), Some(true));
    for t in [&ex1.triple_paper, &ex1.triple_standard] {
        let d = DesignCandidate::new(ex1.bracket.clone(), t.clone(), JtsVariant::Jacobson).unwrap();
        assert!(check_design(&d).passed);
    }
}

#[test]
fn design_condition_is_quadratic_in_a_and_x() {
    // Evaluate the unpolarised expression on random vectors for the standard
    // so(3) triple and for a non-design triple, and compare with the verdict.
    let ex1 = FormExample::default_instance();
    let b = &ex1.bracket;
    let expr = |t: &TrilinearStructure, a: &Vector, x: &Vector| {
        b.apply(a, &t.apply(x, a, x).unwrap()).unwrap() + b.apply(x, &t.apply(a, x, a).unwrap()).unwrap()
    };
    let mut s = Sampler::new(5);
    for _ in 0..10 {
        let a = Vector::from_scalars(s.diagonal(3));
        let x = Vector::from_scalars(s.diagonal(3));
        assert!(expr(&ex1.triple_standard, &a, &x).is_zero());
    }
    // <X,Y,Z> = X_0 Y_1 Z: the condition becomes (X_0 A_1 - A_0 X_1) [A,X].
    let odd = TrilinearStructure::from_fn(3, |i, j, k| if (i, j) == (0, 1) { e(3, k) } else { Vector::zeros(3) });
    assert!(!check_design_condition(b, &odd).passed);
    let a = Vector::from_ints(&[1, 2, 0]);
    let x = Vector::from_ints(&[0, 1, 3]);
    assert!(!expr(&odd, &a, &x).is_zero());
}

#[test]
fn triple_myb_examples() {
    let q = diag_q(2);
    assert!(check_triple_myb(&gl2_system(oracle_op("XQ", &q))).passed);
    // Both sides expand to XQYZQ + ZYXQQ + XYZQQ + ZQYXQ.
    let right = |e: &Expr| e.right_mul('Q');
    let (x, y, z) = (Expr::var('X'), Expr::var('Y'), Expr::var('Z'));
    let t = myb_core::catalog::monomial::jordan_triple;
    let lhs = &right(&t(&right(&x), &y, &z)) + &right(&t(&x, &y, &right(&z)));
    let rhs = &t(&right(&x), &y, &right(&z)) + &right(&right(&t(&x, &y, &z)));
    assert_eq!(lhs, rhs);
    assert_eq!(lhs, Expr::parse("XQYZQ + ZYXQQ + XYZQQ + ZQYXQ"));

    assert!(check_triple_myb(&gl2_system(Operator::scalar(4, ratio(3, 2)))).passed);

    let transpose = Operator::from_images(4, |k| e(4, (k % 2) * 2 + k / 2));
    let r = check_triple_myb(&gl2_system(transpose));
    assert!(!r.passed);
    assert!(r.witness.is_some());
}

#[test]
fn derived_triple_examples() {
    let t = gl(2).triple.unwrap();
    for mode in [TripleMode::Full, TripleMode::Reduced] {
        assert_eq!(triple_r(&gl2_system(Operator::identity(4)), mode).unwrap(), t);
        assert!(triple_r(&gl2_system(Operator::zero(4)), mode).unwrap().is_zero());
    }
    let q = diag_q(2);
    let s = gl2_system(oracle_op("XQ", &q));
    let full = triple_r(&s, TripleMode::Full).unwrap();
    let reduced = triple_r(&s, TripleMode::Reduced).unwrap();
    assert_eq!(full, reduced);
    let right = |e: &Expr| e.right_mul('Q');
    let plus = Expr::parse("XQYQZ + ZQYQX");
    assert_eq!(reduced_derived_triple(right), plus);
    assert_eq!(full_derived_triple(right), plus);
    assert_eq!(reduced, oracle_triple("XQYQZ + ZQYQX", &q));
    assert_ne!(reduced, oracle_triple("XQYQZ - ZQYQX", &q));

    let transpose = Operator::from_images(4, |k| e(4, (k % 2) * 2 + k / 2));
    assert!(matches!(
        triple_r(&gl2_system(transpose), TripleMode::Reduced),
        Err(Error::Precondition { .. })
    ));
}

#[test]
fn intertwining_examples() {
    let q = diag_q(2);
    for r in [oracle_op("XQ", &q), Operator::identity(4), Operator::zero(4)] {
        assert!(check_derived_triple_intertwining(&gl2_system(r)).unwrap().passed);
    }
    // Both sides are XQYQZQ + ZQYQXQ.
    let right = |e: &Expr| e.right_mul('Q');
    assert_eq!(right(&reduced_derived_triple(right)), Expr::parse("XQYQZQ + ZQYQXQ"));
}

#[test]
fn triple_bi_myb_examples() {
    let q = diag_q(2);
    let t = gl(2).triple.unwrap();
    let r = check_triple_bi_myb(&t, &oracle_op("XQ", &q), &oracle_op("QX", &q)).unwrap();
    assert!(r.passed, "{r:?}");
    for name in [
        "triple-bi-myb/normal",
        "triple-bi-myb/even-tempered",
        "triple-bi-myb/normal-concise",
        "triple-bi-myb/normal-consistency",
    ] {
        assert_eq!(r.passed_named(name), Some(true), "{name}");
    }

    let id = Operator::identity(4);
    let r = check_triple_bi_myb(&t, &id, &id).unwrap();
    assert!(r.passed);
    assert!(r.informational.iter().all(|c| c.passed));

    // R1 = R2 = right multiplication by a non-scalar Q: core passes, the
    // normal chain does not.
    let rq = oracle_op("XQ", &Matrix::from_int_rows(&[&[1, 1], &[0, 2]]).unwrap());
    let r = check_triple_bi_myb(&t, &rq, &rq).unwrap();
    assert!(r.passed);
    assert_eq!(r.passed_named("triple-bi-myb/normal"), Some(false));
    assert_eq!(r.passed_named("triple-bi-myb/normal-consistency"), Some(true));
}

#[test]
fn rho_identity_examples() {
    let q = diag_q(2);
    let t = gl(2).triple.unwrap();
    let rho = oracle_op("QXQ", &q);
    // QXQ = <Q,X,Q>/2
    let qv = Vector::from_scalars(q.entries().to_vec());
    for k in 0..4 {
        let half = t.apply(&qv, &e(4, k), &qv).unwrap().scaled(&ratio(1, 2));
        assert_eq!(half, rho.column(k));
    }
    let derived = oracle_triple("XQYQZ + ZQYQX", &q);
    let r = check_rho_identity(&t, &rho, Some(&derived)).unwrap();
    assert!(r.passed, "{r:?}");
    assert_eq!(r.passed_named("rho-identity/derived-form"), Some(true));

    assert!(check_rho_identity(&t, &Operator::identity(4), None).unwrap().passed);
    let r = check_rho_identity(&t, &Sampler::new(1).operator(4), None).unwrap();
    assert!(!r.passed);
    assert!(r.witness.is_some());
}

#[test]
fn unchecked_construction_marks_reports() {
    let ex1 = FormExample::default_instance();
    assert!(TripleWithOperator::new(ex1.triple_paper.clone(), ex1.r_projection.clone(), JtsVariant::Paper).is_err());
    let s = TripleWithOperator::new_unchecked(ex1.triple_paper.clone(), ex1.r_projection.clone(), JtsVariant::Paper).unwrap();
    assert!(!s.is_verified());
    assert!(check_triple_myb(&s).markers.iter().any(|m| m == UNVERIFIED_MARKER));
    // Both form-built triples satisfy the classical identity; neither the printed one.
    for t in [&ex1.triple_paper, &ex1.triple_standard] {
        assert!(check_jts_identity(t, JtsVariant::Jacobson).passed);
        assert!(!check_jts_identity(t, JtsVariant::Paper).passed);
    }
}
