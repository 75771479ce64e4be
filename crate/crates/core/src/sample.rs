//! Seeded random rational data for searches and property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::matrix::Matrix;
use crate::operator::{Operator, Polynomial};
use crate::scalar::{self, Scalar};

/// Default bound on `|p|` and `q` for sampled fractions `p/q`.
pub const DEFAULT_ENTRY_BOUND: i64 = 3;

pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::with_bound(seed, DEFAULT_ENTRY_BOUND)
    }

    pub fn with_bound(seed: u64, bound: i64) -> Self {
        assert!(bound >= 1, "entry bound must be positive");
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound,
        }
    }

    /// `p/q` with `|p| <= bound`, `1 <= q <= bound`.
    pub fn rational(&mut self) -> Scalar {
        let p = self.rng.gen_range(-self.bound..=self.bound);
        let q = self.rng.gen_range(1..=self.bound);
        scalar::ratio(p, q)
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        loop {
            let r = self.rational();
            if r != scalar::zero() {
                return r;
            }
        }
    }

    pub fn index(&mut self, upper: usize) -> usize {
        self.rng.gen_range(0..upper)
    }

    pub fn matrix(&mut self, n: usize) -> Matrix {
        let rows = (0..n).map(|_| (0..n).map(|_| self.rational()).collect()).collect();
        Matrix::from_rows(rows).expect("square by construction")
    }

    pub fn symmetric_matrix(&mut self, n: usize) -> Matrix {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            for j in i..n {
                let v = self.rational();
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
        m
    }

    pub fn diagonal(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn operator(&mut self, dim: usize) -> Operator {
        let rows = (0..dim).map(|_| (0..dim).map(|_| self.rational()).collect()).collect();
        Operator::from_rows(rows).expect("square by construction")
    }

    /// Polynomial of exact degree `degree`.
    pub fn polynomial(&mut self, degree: usize) -> Polynomial {
        let mut coeffs: Vec<Scalar> = (0..degree).map(|_| self.rational()).collect();
        coeffs.push(self.nonzero_rational());
        Polynomial(coeffs)
    }
}
