//! Free associative expansion oracle.
//!
//! Expressions are integer combinations of words over single-letter
//! variables (`X`, `Y`, `Q`, ...). Identities built from associative
//! products, the triple `<x,y,z> = xyz + zyx` and left/right multiplications
//! can be expanded here symbolically and compared word by word, with no
//! reference to structure constants.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::matrix::Matrix;
use crate::identities::JtsVariant;
use crate::operator::Operator;
use crate::scalar;
use crate::structure::{BilinearStructure, TrilinearStructure};
use crate::vector::Vector;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expr(BTreeMap<String, i64>);

impl Expr {
    pub fn zero() -> Self {
        Expr::default()
    }

    pub fn var(letter: char) -> Self {
        Self::word(&letter.to_string())
    }

    pub fn word(w: &str) -> Self {
        let mut m = BTreeMap::new();
        m.insert(w.to_string(), 1);
        Expr(m)
    }

    /// Parses `"XQYQZ + ZQYQX - 2 YX"` style sums of words.
    pub fn parse(text: &str) -> Self {
        let mut out = Expr::zero();
        let mut sign = 1i64;
        for token in text.split_whitespace() {
            match token {
                "+" => sign = 1,
                "-" => sign = -1,
                t => {
                    let digits: String = t.chars().take_while(|c| c.is_ascii_digit()).collect();
                    let coeff = if digits.is_empty() { 1 } else { digits.parse().unwrap() };
                    let w = &t[digits.len()..];
                    out = out + Expr::word(w).scale(sign * coeff);
                    sign = 1;
                }
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Expr::zero();
        for (w, k) in &self.0 {
            out.push(w.clone(), k * c);
        }
        out
    }

    fn push(&mut self, w: String, k: i64) {
        let slot = self.0.entry(w.clone()).or_insert(0);
        *slot += k;
        if *slot == 0 {
            self.0.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(w, &k)| (w.as_str(), k))
    }

    /// `x * q`
    pub fn right_mul(&self, q: char) -> Self {
        self * &Expr::var(q)
    }

    /// `q * x`
    pub fn left_mul(&self, q: char) -> Self {
        &Expr::var(q) * self
    }

    /// Substitutes a matrix for every letter and sums the words.
    pub fn evaluate(&self, assign: &dyn Fn(char) -> Matrix, size: usize) -> Matrix {
        let mut acc = Matrix::zero(size);
        for (w, &k) in &self.0 {
            let mut m = Matrix::identity(size);
            for c in w.chars() {
                m = &m * &assign(c);
            }
            acc = &acc + &m.scaled(&scalar::int(k));
        }
        acc
    }
}

/// `<x,y,z> = xyz + zyx`
pub fn jordan_triple(x: &Expr, y: &Expr, z: &Expr) -> Expr {
    &(&(x * y) * z) + &(&(z * y) * x)
}

/// `<RX,RY,Z> + <X,RY,RZ> - R<X,RY,Z>` for an operator given symbolically.
pub fn reduced_derived_triple(r: impl Fn(&Expr) -> Expr) -> Expr {
    let (x, y, z) = (Expr::var('X'), Expr::var('Y'), Expr::var('Z'));
    let (rx, ry, rz) = (r(&x), r(&y), r(&z));
    &(&jordan_triple(&rx, &ry, &z) + &jordan_triple(&x, &ry, &rz)) - &r(&jordan_triple(&x, &ry, &z))
}

/// Seven-term derived triple for an operator given symbolically.
pub fn full_derived_triple(r: impl Fn(&Expr) -> Expr) -> Expr {
    let (x, y, z) = (Expr::var('X'), Expr::var('Y'), Expr::var('Z'));
    let (rx, ry, rz) = (r(&x), r(&y), r(&z));
    let t = jordan_triple;
    let quadratic = &(&t(&x, &ry, &rz) + &t(&rx, &y, &rz)) + &t(&rx, &ry, &z);
    let linear = &(&t(&rx, &y, &z) + &t(&x, &ry, &z)) + &t(&x, &y, &rz);
    &(&quadratic - &r(&linear)) + &r(&r(&t(&x, &y, &z)))
}

/// `lhs - rhs` of a five-variable JTS identity for `xyz + zyx`, in letters
/// `A, B, X, Y, Z`.
pub fn jts_residual(variant: JtsVariant) -> Expr {
    let [a, b, x, y, z] = ['A', 'B', 'X', 'Y', 'Z'].map(Expr::var);
    let t = jordan_triple;
    match variant {
        JtsVariant::Paper => {
            let lhs = t(&x, &t(&a, &z, &b), &y);
            let rhs = &(&t(&t(&x, &a, &y), &b, &z) + &t(&t(&y, &a, &z), &b, &x)) - &t(&t(&x, &b, &y), &a, &z);
            &lhs - &rhs
        }
        JtsVariant::Jacobson => {
            let lhs = t(&a, &b, &t(&x, &y, &z));
            let rhs = &(&t(&t(&a, &b, &x), &y, &z) - &t(&x, &t(&b, &a, &y), &z)) + &t(&x, &y, &t(&a, &b, &z));
            &lhs - &rhs
        }
    }
}

fn flatten(m: &Matrix) -> Vector {
    Vector::from_scalars(m.entries().to_vec())
}

fn assignment<'a>(n: usize, vars: &'a [(char, usize)], fixed: &'a [(char, &'a Matrix)]) -> impl Fn(char) -> Matrix + 'a {
    move |c| {
        if let Some(&(_, k)) = vars.iter().find(|(v, _)| *v == c) {
            return Matrix::unit(n, k / n, k % n);
        }
        match fixed.iter().find(|(v, _)| *v == c) {
            Some((_, m)) => (*m).clone(),
            None => panic!("letter {c} has no value"),
        }
    }
}

/// Operator on `n x n` matrices (basis `E_ij` at index `i*n + j`) given by an
/// expression linear in `X`; other letters are the `fixed` matrices.
pub fn operator_tensor(expr: &Expr, n: usize, fixed: &[(char, &Matrix)]) -> Operator {
    Operator::from_images(n * n, |k| flatten(&expr.evaluate(&assignment(n, &[('X', k)], fixed), n)))
}

/// Bracket tensor of an expression bilinear in `X, Y`.
pub fn bilinear_tensor(expr: &Expr, n: usize, fixed: &[(char, &Matrix)]) -> BilinearStructure {
    BilinearStructure::from_fn(n * n, |i, j| {
        flatten(&expr.evaluate(&assignment(n, &[('X', i), ('Y', j)], fixed), n))
    })
}

/// Triple tensor of an expression trilinear in `X, Y, Z`.
pub fn trilinear_tensor(expr: &Expr, n: usize, fixed: &[(char, &Matrix)]) -> TrilinearStructure {
    TrilinearStructure::from_fn(n * n, |i, j, k| {
        flatten(&expr.evaluate(&assignment(n, &[('X', i), ('Y', j), ('Z', k)], fixed), n))
    })
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (idx, (w, k)) in self.0.iter().enumerate() {
            let sign = if *k < 0 { "-" } else if idx > 0 { "+" } else { "" };
            if idx > 0 {
                f.write_str(" ")?;
            }
            f.write_str(sign)?;
            if idx > 0 || *k < 0 {
                f.write_str(" ")?;
            }
            if k.abs() != 1 {
                write!(f, "{}", k.abs())?;
            }
            f.write_str(w)?;
        }
        Ok(())
    }
}

impl Add for &Expr {
    type Output = Expr;
    fn add(self, rhs: &Expr) -> Expr {
        let mut out = self.clone();
        for (w, k) in &rhs.0 {
            out.push(w.clone(), *k);
        }
        out
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        &self + &rhs
    }
}

impl Sub for &Expr {
    type Output = Expr;
    fn sub(self, rhs: &Expr) -> Expr {
        self + &rhs.scale(-1)
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        &self - &rhs
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale(-1)
    }
}

impl Mul for &Expr {
    type Output = Expr;
    fn mul(self, rhs: &Expr) -> Expr {
        let mut out = Expr::zero();
        for (a, ka) in &self.0 {
            for (b, kb) in &rhs.0 {
                out.push(format!("{a}{b}"), ka * kb);
            }
        }
        out
    }
}
