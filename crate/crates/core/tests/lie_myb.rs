mod common;

use common::*;
use myb_core::catalog::matrix::Matrix;
use myb_core::identities::check_commute;
use myb_core::lie::*;
use myb_core::sample::Sampler;
use myb_core::scalar::{int, ratio};
use myb_core::{Error, Operator, Polynomial, Vector};

fn example2(q: &Matrix) -> LieBiOperator {
    LieBiOperator::new(gl(q.size()).bracket.unwrap(), oracle_op("XQ", q), oracle_op("QX", q)).unwrap()
}

#[test]
fn myb_examples() {
    let q = diag_q(2);
    let g = LieWithOperator::new(gl(2).bracket.unwrap(), oracle_op("XQ", &q)).unwrap();
    assert!(check_myb(&g).passed);

    for c in [int(0), int(3), ratio(-5, 7)] {
        let g = LieWithOperator::new(so(4).bracket.unwrap(), Operator::scalar(6, c)).unwrap();
        assert!(check_myb(&g).passed);
    }

    let g = LieWithOperator::new(so(3).bracket.unwrap(), Operator::diagonal(&ints(&[1, 0, 0]))).unwrap();
    let r = check_myb(&g);
    assert!(!r.passed);
    let w = r.witness.unwrap();
    assert_eq!(w.tuple, vec![1, 2]);
    // LHS is zero and RHS is R^2[e1,e2] = e0.
    assert_eq!(w.residual, -e(3, 0));
}

#[test]
fn derived_bracket_examples() {
    let b = gl(2).bracket.unwrap();
    let id = LieWithOperator::new(b.clone(), Operator::identity(4)).unwrap();
    assert_eq!(bracket_r(&id), b);
    let zero = LieWithOperator::new(b.clone(), Operator::zero(4)).unwrap();
    assert!(bracket_r(&zero).is_zero());

    let q = diag_q(2);
    let g = LieWithOperator::new(b, oracle_op("XQ", &q)).unwrap();
    let br = bracket_r(&g);
    assert_eq!(br, oracle_bracket("XQY - YQX", &q));
    // E12, E21 -> 2 E11 - E22
    assert_eq!(br.basis_product(1, 2), Vector::from_ints(&[2, 0, 0, -1]));
}

#[test]
fn polynomial_closure_examples() {
    let q = diag_q(2);
    let g = LieWithOperator::new(gl(2).bracket.unwrap(), oracle_op("XQ", &q)).unwrap();
    for f in [Polynomial::from_ints(&[1, 1]), Polynomial::from_ints(&[0, 1])] {
        assert!(check_polynomial_closure(&g, &f).unwrap().passed);
    }
    let square = Polynomial::from_ints(&[0, 0, 1]);
    assert!(check_polynomial_closure(&g, &square).unwrap().passed);
    let q2 = &q * &q;
    assert_eq!(square.apply_to(g.r()), oracle_op("XQ", &q2));

    let bad = LieWithOperator::new(so(3).bracket.unwrap(), Operator::diagonal(&ints(&[1, 0, 0]))).unwrap();
    assert!(matches!(
        check_polynomial_closure(&bad, &Polynomial::from_ints(&[0, 1])),
        Err(Error::Precondition { .. })
    ));
}

#[test]
fn bi_myb_examples() {
    let q = diag_q(2);
    let g = example2(&q);
    let r = check_bi_myb(&g);
    assert!(r.passed, "{r:?}");
    let xqy = oracle_bracket("XQY - YQX", &q);
    assert_eq!(derived_bracket(g.bracket(), g.r1()), xqy);
    assert_eq!(derived_bracket(g.bracket(), g.r2()), xqy);

    let same = LieBiOperator::new(gl(2).bracket.unwrap(), oracle_op("XQ", &q), oracle_op("XQ", &q)).unwrap();
    assert!(check_bi_myb(&same).passed);

    let q_prime = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
    let mixed = LieBiOperator::new(gl(2).bracket.unwrap(), oracle_op("XQ", &q), oracle_op("XQ", &q_prime)).unwrap();
    let r = check_bi_myb(&mixed);
    assert!(!r.passed);
    assert!(r.witness.is_some());
    assert_eq!(r.passed_named("bi-myb/commute"), Some(false));
    assert_eq!(r.passed_named("bi-myb/identical-brackets"), Some(false));
}

#[test]
fn even_tempered_examples() {
    assert!(check_even_tempered(&example2(&diag_q(2))).passed);
    let c = Operator::scalar(4, ratio(2, 3));
    let g = LieBiOperator::new(gl(2).bracket.unwrap(), c.clone(), c).unwrap();
    assert!(check_even_tempered(&g).passed);

    // A mYB-algebra used as R1 = R2 = R that is not even-tempered.
    let r = oracle_op("XQ", &Matrix::from_int_rows(&[&[1, 1], &[0, 2]]).unwrap());
    let g = LieBiOperator::new(gl(2).bracket.unwrap(), r.clone(), r).unwrap();
    assert!(check_bi_myb(&g).passed);
    let et = check_even_tempered(&g);
    assert!(!et.passed);
    assert!(et.witness.is_some());
}

#[test]
fn xi_characterization_examples() {
    let q = diag_q(2);
    let (lie, xi) = example2(&q).to_xi_form();
    assert_eq!(xi, oracle_op("QX - XQ", &q));
    let r = check_xi_characterization(&lie, &xi).unwrap();
    assert!(r.passed, "{r:?}");

    assert!(check_xi_characterization(&lie, &Operator::zero(4)).unwrap().passed);

    let r = check_xi_characterization(&lie, &Operator::identity(4)).unwrap();
    assert!(!r.passed);
    assert_eq!(r.passed_named("xi/derivation"), Some(false));
    // First pair with a nonzero bracket: [E11, E12] = E12.
    assert_eq!(r.witness.unwrap().tuple, vec![0, 1]);
}

#[test]
fn even_tempered_xi_examples() {
    let q = diag_q(2);
    let (lie, xi) = example2(&q).to_xi_form();
    assert!(check_even_tempered_xi(&lie, &xi).unwrap().passed);

    let c = LieWithOperator::new(so(3).bracket.unwrap(), Operator::scalar(3, int(5))).unwrap();
    assert!(check_even_tempered_xi(&c, &Operator::zero(3)).unwrap().passed);

    let mut s = Sampler::new(11);
    let random = LieWithOperator::new(so(3).bracket.unwrap(), s.operator(3)).unwrap();
    let r = check_even_tempered_xi(&random, &s.operator(3)).unwrap();
    assert!(!r.passed);
    assert!(r.witness.is_some());
}

#[test]
fn r0_probe_examples() {
    let r = probe_r0(&example2(&diag_q(2))).unwrap();
    assert_eq!(r.passed_named("r0/bracket-coincidence"), Some(true));
    assert!(r.find("r0/R0-myb").is_some());

    let q = diag_q(2);
    let same = LieBiOperator::new(gl(2).bracket.unwrap(), oracle_op("XQ", &q), oracle_op("XQ", &q)).unwrap();
    let r = probe_r0(&same).unwrap();
    assert!(r.passed);
    assert_eq!(r.passed_named("r0/R0-myb"), Some(true));

    // Sweep of random Q: the midpoint always gives the same bracket, and at
    // least one sample leaves the mYB class.
    let mut s = Sampler::new(42);
    let mut non_myb = 0;
    for _ in 0..10 {
        let r = probe_r0(&example2(&s.matrix(2))).unwrap();
        assert!(r.passed);
        non_myb += usize::from(r.passed_named("r0/R0-myb") == Some(false));
    }
    assert!(non_myb > 0);

    let q_prime = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
    let bad = LieBiOperator::new(gl(2).bracket.unwrap(), oracle_op("XQ", &q), oracle_op("XQ", &q_prime)).unwrap();
    assert!(matches!(probe_r0(&bad), Err(Error::Precondition { .. })));
}

#[test]
fn parameter_conversion() {
    let q = diag_q(2);
    let (r1, r2) = (oracle_op("XQ", &q), oracle_op("QX", &q));
    let (r, xi) = convert_params(&r1, &r1).unwrap();
    assert_eq!(r, r1);
    assert!(xi.is_zero());
    let (r, xi) = convert_params(&r1, &r2).unwrap();
    assert_eq!(xi, oracle_op("QX - XQ", &q));
    assert_eq!(convert_params_inverse(&r, &xi).unwrap(), (r1, r2));
    let mut s = Sampler::new(3);
    let (a, b) = (s.operator(5), s.operator(5));
    let (r, xi) = convert_params(&a, &b).unwrap();
    assert_eq!(convert_params_inverse(&r, &xi).unwrap(), (a, b));
    assert!(convert_params(&Operator::identity(2), &Operator::identity(3)).is_err());
}

#[test]
fn operators_of_example2_commute() {
    let q = Sampler::new(9).matrix(3);
    assert!(check_commute("c", &oracle_op("XQ", &q), &oracle_op("QX", &q)).passed);
}

#[test]
fn non_lie_base_is_rejected() {
    let bad = myb_core::BilinearStructure::from_coefficients(2, [(0, 0, 1, int(1))]).unwrap();
    assert!(matches!(
        LieWithOperator::new(bad, Operator::identity(2)),
        Err(Error::InvalidBase { .. })
    ));
}
