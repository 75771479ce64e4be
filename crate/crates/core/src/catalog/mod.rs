//! Concrete algebras: `so(n)`, full matrix algebras with their commutator
//! bracket and Jordan triple `XYZ + ZYX`, multiplication operators by a
//! matrix `Q`, and the candidate readings of the `so(3)` example with a
//! bilinear form.
//!
//! Entries are addressable by name, optionally with a `Q` parameter:
//! `so3`, `gl2`, `example1-standard`, `example2-gl2?q=diag:1,2`,
//! `example3-gl2?q=rows:1,1;0,2`, `example4-so3?q=seed:7`.

pub mod matrix;
pub mod monomial;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Error;
use crate::identities::{check_jts_identity, check_lie, JtsVariant};
use crate::operator::Operator;
use crate::sample::Sampler;
use crate::scalar::{self, Scalar};
use crate::structure::{BilinearStructure, TrilinearStructure};
use crate::vector::Vector;

use self::matrix::Matrix;

/// How coordinates map to `n x n` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixBasis {
    /// All matrix units `E_ij`, row-major.
    Full { n: usize },
    /// `E_ij - E_ji` for each listed `(i, j)`; the coordinate is the `(i, j)` entry.
    Skew { n: usize, pairs: Vec<(usize, usize)> },
}

impl MatrixBasis {
    pub fn matrix_size(&self) -> usize {
        match self {
            MatrixBasis::Full { n } | MatrixBasis::Skew { n, .. } => *n,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            MatrixBasis::Full { n } => n * n,
            MatrixBasis::Skew { pairs, .. } => pairs.len(),
        }
    }

    pub fn element(&self, k: usize) -> Matrix {
        match self {
            MatrixBasis::Full { n } => Matrix::unit(*n, k / n, k % n),
            MatrixBasis::Skew { n, pairs } => {
                let (i, j) = pairs[k];
                &Matrix::unit(*n, i, j) - &Matrix::unit(*n, j, i)
            }
        }
    }

    /// Coordinates of a matrix in the span of the basis.
    pub fn coords(&self, m: &Matrix) -> Vector {
        match self {
            MatrixBasis::Full { .. } => Vector::from_scalars(m.entries().to_vec()),
            MatrixBasis::Skew { pairs, .. } => {
                debug_assert!(m.transpose() == m.scaled(&-scalar::one()), "matrix is not skew");
                Vector::from_scalars(pairs.iter().map(|&(i, j)| m.get(i, j).clone()).collect())
            }
        }
    }

    pub fn to_matrix(&self, v: &Vector) -> Matrix {
        let mut acc = Matrix::zero(self.matrix_size());
        for (k, c) in v.support() {
            acc = &acc + &self.element(k).scaled(c);
        }
        acc
    }

    pub fn basis_names(&self) -> Vec<String> {
        match self {
            MatrixBasis::Full { n } => (0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect(),
            MatrixBasis::Skew { pairs, .. } => pairs.iter().map(|(i, j)| format!("L{}{}", i + 1, j + 1)).collect(),
        }
    }

    pub fn bracket_from(&self, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> BilinearStructure {
        BilinearStructure::from_fn(self.dim(), |i, j| self.coords(&f(&self.element(i), &self.element(j))))
    }

    pub fn triple_from(&self, f: impl Fn(&Matrix, &Matrix, &Matrix) -> Matrix) -> TrilinearStructure {
        TrilinearStructure::from_fn(self.dim(), |i, j, k| {
            self.coords(&f(&self.element(i), &self.element(j), &self.element(k)))
        })
    }

    pub fn operator_from(&self, f: impl Fn(&Matrix) -> Matrix) -> Operator {
        Operator::from_images(self.dim(), |k| self.coords(&f(&self.element(k))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub basis_names: Vec<String>,
    pub bracket: Option<BilinearStructure>,
    pub triple: Option<TrilinearStructure>,
    /// When false the triple is a candidate under investigation, not a
    /// validated Jordan triple system.
    pub triple_validated: bool,
    pub operators: BTreeMap<String, Operator>,
    pub matrix_basis: Option<MatrixBasis>,
    pub provenance: String,
    /// Properties the entry is expected to have; checked, never assumed.
    pub expectations: Vec<String>,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn operator(&self, name: &str) -> Result<&Operator, Error> {
        self.operators
            .get(name)
            .ok_or_else(|| Error::InvalidArgument(format!("entry {} has no operator {name:?}", self.name)))
    }

    pub fn require_bracket(&self) -> Result<&BilinearStructure, Error> {
        self.bracket
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument(format!("entry {} has no bracket", self.name)))
    }

    pub fn require_triple(&self) -> Result<&TrilinearStructure, Error> {
        self.triple
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument(format!("entry {} has no triple", self.name)))
    }

    /// Re-runs the base validations (Lie bracket, Jacobson JTS for validated triples).
    pub fn validate(&self) -> Result<(), Error> {
        if let Some(b) = &self.bracket {
            let r = check_lie(b);
            if !r.passed {
                return Err(Error::InvalidBase {
                    structure: "Lie bracket",
                    report: Box::new(r),
                });
            }
        }
        if let (Some(t), true) = (&self.triple, self.triple_validated) {
            let r = check_jts_identity(t, JtsVariant::Jacobson);
            if !r.passed {
                return Err(Error::InvalidBase {
                    structure: "Jordan triple system",
                    report: Box::new(r),
                });
            }
        }
        Ok(())
    }

    fn validated(self) -> Result<Self, Error> {
        self.validate()?;
        Ok(self)
    }
}

fn so_basis(n: usize) -> MatrixBasis {
    let pairs = if n == 3 {
        // Ordered so that [e0, e1] = e2 cyclically (cross-product form).
        vec![(2, 1), (0, 2), (1, 0)]
    } else {
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
    };
    MatrixBasis::Skew { n, pairs }
}

/// Skew-symmetric `n x n` matrices under the commutator. Basis `E_ij - E_ji`
/// with `i < j`, except for `n = 3` where the basis is oriented so the bracket
/// is the cross product.
pub fn so_n(n: usize) -> Result<CatalogEntry, Error> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("so(n) needs n >= 2, got {n}")));
    }
    let basis = so_basis(n);
    CatalogEntry {
        name: format!("so{n}"),
        basis_names: basis.basis_names(),
        bracket: Some(basis.bracket_from(|x, y| x.commutator(y))),
        triple: None,
        triple_validated: false,
        operators: BTreeMap::new(),
        matrix_basis: Some(basis),
        provenance: format!("so({n}) of skew-symmetric {n}x{n} matrices with the commutator"),
        expectations: vec!["Lie".into()],
    }
    .validated()
}

/// Full matrix algebra: commutator bracket and triple `XYZ + ZYX`.
pub fn gl_assoc(n: usize) -> Result<CatalogEntry, Error> {
    if n < 1 {
        return Err(Error::InvalidArgument("gl(n) needs n >= 1".into()));
    }
    let basis = MatrixBasis::Full { n };
    CatalogEntry {
        name: format!("gl{n}"),
        basis_names: basis.basis_names(),
        bracket: Some(basis.bracket_from(|x, y| x.commutator(y))),
        triple: Some(basis.triple_from(|x, y, z| &(&(x * y) * z) + &(&(z * y) * x))),
        triple_validated: true,
        operators: BTreeMap::new(),
        matrix_basis: Some(basis),
        provenance: format!("{n}x{n} matrices: commutator Lie algebra and Jordan triple XYZ+ZYX"),
        expectations: vec!["Lie".into(), "JTS[jacobson]".into()],
    }
    .validated()
}

/// Operators induced by a matrix `Q` on a matrix-basis entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultOperators {
    /// `X -> XQ` (full matrix algebras only)
    pub right: Option<Operator>,
    /// `X -> QX` (full matrix algebras only)
    pub left: Option<Operator>,
    /// `X -> QX + XQ`
    pub sum: Operator,
    /// `X -> QXQ`
    pub rho: Operator,
}

impl MultOperators {
    /// `X -> QX - XQ`, when both one-sided multiplications exist.
    pub fn xi(&self) -> Option<Operator> {
        match (&self.left, &self.right) {
            (Some(l), Some(r)) => Some(l - r),
            _ => None,
        }
    }
}

pub fn mult_operators(entry: &CatalogEntry, q: &Matrix) -> Result<MultOperators, Error> {
    let basis = entry
        .matrix_basis
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument(format!("entry {} has no matrix realisation", entry.name)))?;
    if q.size() != basis.matrix_size() {
        return Err(Error::DimensionMismatch {
            expected: basis.matrix_size(),
            found: q.size(),
        });
    }
    if matches!(basis, MatrixBasis::Skew { .. }) && !q.is_symmetric() {
        return Err(Error::InvalidArgument(
            "Q must be symmetric to act on skew-symmetric matrices".into(),
        ));
    }
    let sum = basis.operator_from(|x| &(q * x) + &(x * q));
    let rho = basis.operator_from(|x| &(q * x) * q);
    match basis {
        MatrixBasis::Full { .. } => Ok(MultOperators {
            right: Some(basis.operator_from(|x| x * q)),
            left: Some(basis.operator_from(|x| q * x)),
            sum,
            rho,
        }),
        MatrixBasis::Skew { .. } => Ok(MultOperators {
            right: None,
            left: None,
            sum,
            rho,
        }),
    }
}

/// `diag(1, 2, ..., n)`
pub fn default_q(n: usize) -> Matrix {
    Matrix::diagonal_ints(&(1..=n as i64).collect::<Vec<_>>())
}

/// Matrix algebra with `R1 = X->XQ`, `R2 = X->QX`, `R = R1 + R2`,
/// `rho = R1 R2`, `xi = R2 - R1`. With `with_triple` the Jordan triple is kept.
pub fn multiplication_example(n: usize, q: &Matrix, with_triple: bool) -> Result<CatalogEntry, Error> {
    let mut entry = gl_assoc(n)?;
    let ops = mult_operators(&entry, q)?;
    let xi = ops.xi().expect("full matrix algebra");
    entry.operators.insert("R1".into(), ops.right.expect("full matrix algebra"));
    entry.operators.insert("R2".into(), ops.left.expect("full matrix algebra"));
    entry.operators.insert("R".into(), ops.sum);
    entry.operators.insert("rho".into(), ops.rho);
    entry.operators.insert("xi".into(), xi);
    if with_triple {
        entry.name = format!("example3-gl{n}");
        entry.provenance = "associative matrix algebra as Jordan triple system XYZ+ZYX with R1=XQ, R2=QX".into();
        entry.expectations = vec![
            "triple-bi-myb".into(),
            "normal".into(),
            "even-tempered".into(),
            "rho-identity".into(),
            "derived triple XQYQZ+ZQYQX".into(),
        ];
    } else {
        entry.triple = None;
        entry.triple_validated = false;
        entry.name = format!("example2-gl{n}");
        entry.provenance = "commutator algebra of matrices with R1=XQ, R2=QX".into();
        entry.expectations = vec![
            "bi-myb".into(),
            "even-tempered".into(),
            "derived bracket XQY-YQX".into(),
        ];
    }
    Ok(entry)
}

/// `so(n)` with `R = QX + XQ`, `rho = QXQ` for symmetric `Q`.
pub fn skew_conjugation_example(n: usize, q: &Matrix) -> Result<CatalogEntry, Error> {
    let mut entry = so_n(n)?;
    let ops = mult_operators(&entry, q)?;
    entry.operators.insert("R".into(), ops.sum);
    entry.operators.insert("rho".into(), ops.rho);
    entry.name = format!("example4-so{n}");
    entry.provenance = "so(n) with R=QX+XQ and rho=QXQ for symmetric Q".into();
    entry.expectations = vec!["rrho".into(), "gamma-bunch".into()];
    Ok(entry)
}

/// The `so(3)` example with a symmetric form `<.,.>`, both triple readings
/// and both operator readings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormExample {
    pub bracket: BilinearStructure,
    pub form: Operator,
    pub x0: Vector,
    /// `<X,Y>Z + <Y,Z>X`
    pub triple_paper: TrilinearStructure,
    /// `<X,Y>Z + <Y,Z>X - <X,Z>Y`
    pub triple_standard: TrilinearStructure,
    /// `X -> <X0,X> X0`
    pub r_projection: Operator,
    /// `X -> [X0, X]`
    pub r_adjoint: Operator,
    pub provenance: String,
}

pub fn example1_candidates(x0: &Vector, form: &Operator) -> Result<FormExample, Error> {
    let base = so_n(3)?;
    let bracket = base.bracket.expect("so(3) has a bracket");
    if x0.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: x0.dim() });
    }
    if form.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: form.dim() });
    }
    if !form.is_symmetric() {
        return Err(Error::InvalidArgument("form must be symmetric".into()));
    }
    let gram = Matrix::from_rows(form.rows().map(|r| r.to_vec()).collect())?;
    if gram.determinant().is_zero() {
        return Err(Error::InvalidArgument("form is degenerate".into()));
    }
    let pair = |u: &Vector, v: &Vector| -> Scalar {
        let gv = form.apply(v).expect("dimension checked");
        u.as_slice().iter().zip(gv.as_slice()).map(|(a, b)| a * b).sum()
    };
    let e = |i| Vector::basis(3, i);
    let triple_paper = TrilinearStructure::from_fn(3, |i, j, k| {
        e(k).scaled(&pair(&e(i), &e(j))) + e(i).scaled(&pair(&e(j), &e(k)))
    });
    let triple_standard = TrilinearStructure::from_fn(3, |i, j, k| {
        e(k).scaled(&pair(&e(i), &e(j))) + e(i).scaled(&pair(&e(j), &e(k))) - e(j).scaled(&pair(&e(i), &e(k)))
    });
    let r_projection = Operator::from_images(3, |i| x0.scaled(&pair(x0, &e(i))));
    let r_adjoint = Operator::from_images(3, |i| bracket.apply(x0, &e(i)).expect("dimension checked"));
    Ok(FormExample {
        bracket,
        form: form.clone(),
        x0: x0.clone(),
        triple_paper,
        triple_standard,
        r_projection,
        r_adjoint,
        provenance: "so(3) with a symmetric form; RX=<X0,X> read as projection or adjoint".into(),
    })
}

impl FormExample {
    /// Standard form, `X0 = e2`.
    pub fn default_instance() -> Self {
        example1_candidates(&Vector::basis(3, 2), &Operator::identity(3)).expect("identity form is nondegenerate")
    }

    pub fn to_entry(&self, paper_triple: bool) -> CatalogEntry {
        let base = so_basis(3);
        let mut operators = BTreeMap::new();
        operators.insert("R".into(), self.r_projection.clone());
        operators.insert("Ra".into(), self.r_projection.clone());
        operators.insert("Rb".into(), self.r_adjoint.clone());
        operators.insert("form".into(), self.form.clone());
        CatalogEntry {
            name: if paper_triple { "example1-paper" } else { "example1-standard" }.into(),
            basis_names: base.basis_names(),
            bracket: Some(self.bracket.clone()),
            triple: Some(if paper_triple {
                self.triple_paper.clone()
            } else {
                self.triple_standard.clone()
            }),
            triple_validated: true,
            operators,
            matrix_basis: Some(base),
            provenance: self.provenance.clone(),
            expectations: vec!["design (candidate)".into(), "myb (candidate)".into()],
        }
    }
}

fn parse_q(spec: &str, n: usize, symmetric: bool, bound: i64) -> Result<Matrix, Error> {
    let bad = |why: &str| Error::InvalidArgument(format!("bad q parameter {spec:?}: {why}"));
    let (kind, body) = spec.split_once(':').ok_or_else(|| bad("expected kind:values"))?;
    let parse_list = |s: &str| -> Result<Vec<Scalar>, Error> { s.split(',').map(|t| scalar::parse(t.trim())).collect() };
    let q = match kind {
        "diag" => Matrix::diagonal(&parse_list(body)?),
        "rows" => Matrix::from_rows(body.split(';').map(parse_list).collect::<Result<_, _>>()?)?,
        "seed" => {
            let seed: u64 = body.parse().map_err(|_| bad("seed must be an unsigned integer"))?;
            let mut s = Sampler::with_bound(seed, bound);
            if symmetric {
                s.symmetric_matrix(n)
            } else {
                s.matrix(n)
            }
        }
        _ => return Err(bad("kind must be diag, rows or seed")),
    };
    if q.size() != n {
        return Err(Error::DimensionMismatch { expected: n, found: q.size() });
    }
    Ok(q)
}

/// Names accepted by [`lookup`], with `{n}` standing for the matrix size.
pub const NAMES: &[&str] = &[
    "so{n}",
    "gl{n}",
    "example1-paper",
    "example1-standard",
    "example2-gl{n}[?q=...]",
    "example3-gl{n}[?q=...]",
    "example4-so{n}[?q=...]",
];

/// Resolves a catalog name such as `example2-gl2?q=diag:1,2`.
///
/// `q` accepts `diag:a,b,..`, `rows:a,b;c,d` or `seed:N` (seeded random,
/// symmetric for `so`), with an optional `bound=K` for seeded entries.
pub fn lookup(spec: &str) -> Result<CatalogEntry, Error> {
    let (name, query) = spec.split_once('?').unwrap_or((spec, ""));
    let mut params = BTreeMap::new();
    for kv in query.split('&').filter(|s| !s.is_empty()) {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("bad parameter {kv:?}")))?;
        params.insert(k, v);
    }
    let bound: i64 = match params.get("bound") {
        Some(b) => b
            .parse()
            .ok()
            .filter(|b| *b >= 1)
            .ok_or_else(|| Error::InvalidArgument(format!("bad bound {b:?}")))?,
        None => crate::sample::DEFAULT_ENTRY_BOUND,
    };
    let size = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix).and_then(|s| s.parse().ok()) };
    let q_for = |n: usize, symmetric: bool| -> Result<Matrix, Error> {
        match params.get("q") {
            Some(q) => parse_q(q, n, symmetric, bound),
            None => Ok(default_q(n)),
        }
    };
    let mut entry = if let Some(n) = size("example2-gl") {
        multiplication_example(n, &q_for(n, false)?, false)?
    } else if let Some(n) = size("example3-gl") {
        multiplication_example(n, &q_for(n, false)?, true)?
    } else if let Some(n) = size("example4-so") {
        skew_conjugation_example(n, &q_for(n, true)?)?
    } else if let Some(n) = size("so") {
        so_n(n)?
    } else if let Some(n) = size("gl") {
        gl_assoc(n)?
    } else if name == "example1-paper" || name == "example1-standard" {
        FormExample::default_instance().to_entry(name == "example1-paper")
    } else {
        return Err(Error::InvalidArgument(format!(
            "unknown catalog entry {name:?}; known: {}",
            NAMES.join(", ")
        )));
    };
    entry.name = spec.to_string();
    Ok(entry)
}
