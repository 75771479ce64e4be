//! Lie algebras with one or two operators: the mYB identity, the derived
//! bracket `[X,Y]_R = [RX,Y] + [X,RY] - R[X,Y]`, bi-mYB pairs, the
//! even-tempered conditions and their `(R, xi)` reformulation.

use crate::check::{exhaustive, CheckReport};
use crate::error::Error;
use crate::identities::{check_bilinear_equal, check_commute, check_derivation, check_lie, e};
use crate::operator::{Operator, Polynomial};
use crate::scalar;
use crate::structure::BilinearStructure;

fn same_dim(expected: usize, found: usize) -> Result<(), Error> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub(crate) fn validate_lie(bracket: &BilinearStructure) -> Result<(), Error> {
    let report = check_lie(bracket);
    if report.passed {
        Ok(())
    } else {
        Err(Error::InvalidBase {
            structure: "Lie bracket",
            report: Box::new(report),
        })
    }
}

/// A Lie bracket (validated on construction) together with an operator `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieWithOperator {
    bracket: BilinearStructure,
    r: Operator,
}

impl LieWithOperator {
    pub fn new(bracket: BilinearStructure, r: Operator) -> Result<Self, Error> {
        same_dim(bracket.dim(), r.dim())?;
        validate_lie(&bracket)?;
        Ok(LieWithOperator { bracket, r })
    }

    pub fn bracket(&self) -> &BilinearStructure {
        &self.bracket
    }

    pub fn r(&self) -> &Operator {
        &self.r
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    /// Same bracket, different operator. Skips revalidating the bracket.
    pub fn with_operator(&self, r: Operator) -> Result<Self, Error> {
        same_dim(self.dim(), r.dim())?;
        Ok(LieWithOperator {
            bracket: self.bracket.clone(),
            r,
        })
    }
}

/// A Lie bracket with two operators. Commutation is checked, not enforced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieBiOperator {
    bracket: BilinearStructure,
    r1: Operator,
    r2: Operator,
}

impl LieBiOperator {
    pub fn new(bracket: BilinearStructure, r1: Operator, r2: Operator) -> Result<Self, Error> {
        same_dim(bracket.dim(), r1.dim())?;
        same_dim(bracket.dim(), r2.dim())?;
        validate_lie(&bracket)?;
        Ok(LieBiOperator { bracket, r1, r2 })
    }

    pub fn bracket(&self) -> &BilinearStructure {
        &self.bracket
    }

    pub fn r1(&self) -> &Operator {
        &self.r1
    }

    pub fn r2(&self) -> &Operator {
        &self.r2
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub(crate) fn from_parts_unchecked(bracket: BilinearStructure, r1: Operator, r2: Operator) -> Self {
        LieBiOperator { bracket, r1, r2 }
    }

    fn first(&self) -> LieWithOperator {
        LieWithOperator {
            bracket: self.bracket.clone(),
            r: self.r1.clone(),
        }
    }
}

/// `R[RX,Y] + R[X,RY] = [RX,RY] + R^2[X,Y]` for an arbitrary bracket tensor.
pub fn check_myb_identity(b: &BilinearStructure, r: &Operator) -> CheckReport {
    let n = b.dim();
    let r2 = r * r;
    exhaustive("myb", n, &["X", "Y"], |t| {
        let (x, y) = (e(n, t[0]), e(n, t[1]));
        let (rx, ry) = (r.column(t[0]), r.column(t[1]));
        let lhs = r.eval(&(b.eval(&rx, &y) + b.eval(&x, &ry)));
        let rhs = b.eval(&rx, &ry) + r2.eval(&b.eval(&x, &y));
        lhs - rhs
    })
}

pub fn check_myb(g: &LieWithOperator) -> CheckReport {
    check_myb_identity(&g.bracket, &g.r)
}

/// Tensor of `[X,Y]_R = [RX,Y] + [X,RY] - R[X,Y]`. No Lie property is claimed.
pub fn derived_bracket(b: &BilinearStructure, r: &Operator) -> BilinearStructure {
    let n = b.dim();
    BilinearStructure::from_fn(n, |i, j| {
        let (x, y) = (e(n, i), e(n, j));
        b.eval(&r.column(i), &y) + b.eval(&x, &r.column(j)) - r.eval(&b.basis_product(i, j))
    })
}

pub fn bracket_r(g: &LieWithOperator) -> BilinearStructure {
    derived_bracket(&g.bracket, &g.r)
}

/// Whether `(g, f(R))` satisfies the mYB identity, given that `(g, R)` does.
pub fn check_polynomial_closure(g: &LieWithOperator, f: &Polynomial) -> Result<CheckReport, Error> {
    let base = check_myb(g);
    if !base.passed {
        return Err(Error::precondition("polynomial closure", base));
    }
    let mut report = check_myb_identity(&g.bracket, &f.apply_to(&g.r));
    report.identity_name = "polynomial-closure".into();
    Ok(report)
}

/// Commuting operators, both mYB, with identical derived brackets.
pub fn check_bi_myb(g: &LieBiOperator) -> CheckReport {
    let rename = |mut r: CheckReport, name: &str| {
        r.identity_name = name.into();
        r
    };
    CheckReport::aggregate(
        "bi-myb",
        vec![
            check_commute("bi-myb/commute", &g.r1, &g.r2),
            rename(check_myb_identity(&g.bracket, &g.r1), "bi-myb/myb[R1]"),
            rename(check_myb_identity(&g.bracket, &g.r2), "bi-myb/myb[R2]"),
            check_bilinear_equal(
                "bi-myb/identical-brackets",
                &derived_bracket(&g.bracket, &g.r1),
                &derived_bracket(&g.bracket, &g.r2),
            ),
        ],
        vec![],
    )
}

/// `[R1X,R2Y] + [R2X,R1Y] - R1R2[X,Y] = [S X,Y] + [X,S Y] - S[X,Y]` for `S = square`.
fn check_mixed_equals_squared(name: &str, b: &BilinearStructure, r1: &Operator, r2: &Operator, square: &Operator) -> CheckReport {
    let n = b.dim();
    let r1r2 = r1 * r2;
    exhaustive(name, n, &["X", "Y"], |t| {
        let (x, y) = (e(n, t[0]), e(n, t[1]));
        let xy = b.basis_product(t[0], t[1]);
        let lhs = b.eval(&r1.column(t[0]), &r2.column(t[1])) + b.eval(&r2.column(t[0]), &r1.column(t[1]))
            - r1r2.eval(&xy);
        let rhs = b.eval(&square.column(t[0]), &y) + b.eval(&x, &square.column(t[1])) - square.eval(&xy);
        lhs - rhs
    })
}

pub fn check_even_tempered(g: &LieBiOperator) -> CheckReport {
    let (r1, r2) = (&g.r1, &g.r2);
    CheckReport::aggregate(
        "even-tempered",
        vec![
            check_mixed_equals_squared("even-tempered/R1-squared", &g.bracket, r1, r2, &(r1 * r1)),
            check_mixed_equals_squared("even-tempered/R2-squared", &g.bracket, r1, r2, &(r2 * r2)),
        ],
        vec![],
    )
}

/// The `(R, xi)` form of a bi-mYB structure with `R1 = R`, `R2 = R + xi`:
/// `xi` is a derivation commuting with `R`, `[xi X, xi Y] = [SX,Y] + [X,SY] - S[X,Y]`
/// with `S = R xi`, and `(g, R, R + xi)` is bi-mYB. Also checks that `xi`
/// derives the bracket `[.,.]_R`.
pub fn check_xi_characterization(g: &LieWithOperator, xi: &Operator) -> Result<CheckReport, Error> {
    same_dim(g.dim(), xi.dim())?;
    let n = g.dim();
    let b = &g.bracket;
    let s = &g.r * xi;
    let s_identity = exhaustive("xi/S-identity", n, &["X", "Y"], |t| {
        let (x, y) = (e(n, t[0]), e(n, t[1]));
        let lhs = b.eval(&xi.column(t[0]), &xi.column(t[1]));
        let rhs = b.eval(&s.column(t[0]), &y) + b.eval(&x, &s.column(t[1])) - s.eval(&b.basis_product(t[0], t[1]));
        lhs - rhs
    });
    let bi = LieBiOperator::from_parts_unchecked(b.clone(), g.r.clone(), &g.r + xi);
    Ok(CheckReport::aggregate(
        "xi-characterization",
        vec![
            check_derivation("xi/derivation", b, xi),
            check_commute("xi/commutes-with-R", xi, &g.r),
            s_identity,
            check_bi_myb(&bi),
            check_derivation("xi/derivation-of-bracket-R", &bracket_r(g), xi),
        ],
        vec![],
    ))
}

/// `[RX,xi Y] + [xi X,RY] - R xi[X,Y] = [R^2X,Y] - 2[RX,RY] + [X,R^2Y]`
pub fn check_even_tempered_xi(g: &LieWithOperator, xi: &Operator) -> Result<CheckReport, Error> {
    same_dim(g.dim(), xi.dim())?;
    let n = g.dim();
    let (b, r) = (&g.bracket, &g.r);
    let r_xi = r * xi;
    let r_sq = r * r;
    let two = scalar::int(2);
    Ok(exhaustive("even-tempered-xi", n, &["X", "Y"], |t| {
        let (x, y) = (e(n, t[0]), e(n, t[1]));
        let (rx, ry) = (r.column(t[0]), r.column(t[1]));
        let lhs = b.eval(&rx, &xi.column(t[1])) + b.eval(&xi.column(t[0]), &ry)
            - r_xi.eval(&b.basis_product(t[0], t[1]));
        let rhs = b.eval(&r_sq.column(t[0]), &y) - b.eval(&rx, &ry).scaled(&two)
            + b.eval(&x, &r_sq.column(t[1]));
        lhs - rhs
    }))
}

/// Midpoint probe for `R0 = (R1 + R2)/2` on a bi-mYB algebra. The
/// bracket-coincidence part is asserted; whether `(g, R0)` is mYB is
/// reported as informational.
pub fn probe_r0(g: &LieBiOperator) -> Result<CheckReport, Error> {
    let pre = check_bi_myb(g);
    if !pre.passed {
        return Err(Error::precondition("R0 probe", pre));
    }
    let r0 = (&g.r1 + &g.r2).scaled(&scalar::ratio(1, 2));
    let coincide = check_bilinear_equal(
        "r0/bracket-coincidence",
        &derived_bracket(&g.bracket, &r0),
        &derived_bracket(&g.bracket, &g.r1),
    );
    let mut r0_myb = check_myb_identity(&g.bracket, &r0);
    r0_myb.identity_name = "r0/R0-myb".into();
    Ok(CheckReport::aggregate("r0-probe", vec![coincide], vec![r0_myb]))
}

/// `(R1, R2) -> (R, xi) = (R1, R2 - R1)`
pub fn convert_params(r1: &Operator, r2: &Operator) -> Result<(Operator, Operator), Error> {
    same_dim(r1.dim(), r2.dim())?;
    Ok((r1.clone(), r2 - r1))
}

/// `(R, xi) -> (R1, R2) = (R, R + xi)`
pub fn convert_params_inverse(r: &Operator, xi: &Operator) -> Result<(Operator, Operator), Error> {
    same_dim(r.dim(), xi.dim())?;
    Ok((r.clone(), r + xi))
}

impl LieBiOperator {
    /// `(R, xi)` view of this pair, as a [`LieWithOperator`] for `R = R1`.
    pub fn to_xi_form(&self) -> (LieWithOperator, Operator) {
        let xi = &self.r2 - &self.r1;
        (self.first(), xi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::vector::Vector;

    /// Cross-product bracket on a 3-dim space, built by hand.
    fn cross() -> BilinearStructure {
        BilinearStructure::from_fn(3, |i, j| {
            if i == j {
                return Vector::zeros(3);
            }
            let k = 3 - i - j;
            if (j + 3 - i) % 3 == 1 {
                Vector::basis(3, k)
            } else {
                -Vector::basis(3, k)
            }
        })
    }

    #[test]
    fn scalar_operator_is_myb() {
        let g = LieWithOperator::new(cross(), Operator::scalar(3, ratio(-2, 3))).unwrap();
        assert!(check_myb(&g).passed);
    }

    #[test]
    fn diagonal_projection_fails_at_1_2() {
        let g = LieWithOperator::new(cross(), Operator::diagonal(&[int(1), int(0), int(0)])).unwrap();
        let r = check_myb(&g);
        assert!(!r.passed);
        let w = r.witness.unwrap();
        assert_eq!(w.tuple, vec![1, 2]);
        // LHS 0, RHS e0
        assert_eq!(w.residual, Vector::from_ints(&[-1, 0, 0]));
    }

    #[test]
    fn bracket_r_extremes() {
        let b = cross();
        let id = LieWithOperator::new(b.clone(), Operator::identity(3)).unwrap();
        assert_eq!(bracket_r(&id), b);
        let zero = LieWithOperator::new(b, Operator::zero(3)).unwrap();
        assert!(bracket_r(&zero).is_zero());
    }

    #[test]
    fn non_lie_bracket_rejected() {
        let b = BilinearStructure::from_coefficients(2, [(0, 0, 1, int(1))]).unwrap();
        assert!(matches!(
            LieWithOperator::new(b, Operator::identity(2)),
            Err(Error::InvalidBase { .. })
        ));
        assert!(matches!(
            LieWithOperator::new(cross(), Operator::identity(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn closure_precondition() {
        let g = LieWithOperator::new(cross(), Operator::diagonal(&[int(1), int(0), int(0)])).unwrap();
        assert!(matches!(
            check_polynomial_closure(&g, &Polynomial::from_ints(&[0, 1])),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn identity_xi_fails_derivation_first() {
        let g = LieWithOperator::new(cross(), Operator::identity(3)).unwrap();
        let r = check_xi_characterization(&g, &Operator::identity(3)).unwrap();
        assert!(!r.passed);
        assert_eq!(r.subchecks[0].identity_name, "xi/derivation");
        assert_eq!(r.witness.unwrap().tuple, vec![0, 1]);
    }

    #[test]
    fn zero_xi_on_myb_passes() {
        let g = LieWithOperator::new(cross(), Operator::scalar(3, int(3))).unwrap();
        assert!(check_xi_characterization(&g, &Operator::zero(3)).unwrap().passed);
        assert!(check_even_tempered_xi(&g, &Operator::zero(3)).unwrap().passed);
    }

    #[test]
    fn equal_scalar_pair_is_even_tempered() {
        let c = Operator::scalar(3, ratio(5, 2));
        let g = LieBiOperator::new(cross(), c.clone(), c).unwrap();
        assert!(check_bi_myb(&g).passed);
        assert!(check_even_tempered(&g).passed);
        let probe = probe_r0(&g).unwrap();
        assert!(probe.passed);
        assert_eq!(probe.passed_named("r0/R0-myb"), Some(true));
    }

    #[test]
    fn conversions() {
        let a = Operator::from_int_rows(&[&[1, 2], &[0, 3]]).unwrap();
        let (r, xi) = convert_params(&a, &a).unwrap();
        assert_eq!(r, a);
        assert!(xi.is_zero());
        assert!(convert_params(&a, &Operator::identity(3)).is_err());
    }
}
