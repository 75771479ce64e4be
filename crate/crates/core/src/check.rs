//! Check reports and the exhaustive basis-tuple evaluator.
//!
//! Every identity handled here is multilinear, so it holds for all vectors
//! iff it holds on all tuples of basis vectors. Tuples are enumerated in
//! lexicographic order; the reported witness is the smallest failing tuple no
//! matter how the work was split across threads.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Basis indices, one per variable of the identity.
    pub tuple: Vec<usize>,
    /// `lhs - rhs` at that tuple.
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub identity_name: String,
    pub passed: bool,
    /// Names of the tuple slots, in witness order.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub variables: Vec<String>,
    pub witness: Option<Witness>,
    pub tuples_evaluated: u64,
    /// Asserted parts of an aggregate check; all must pass.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subchecks: Vec<CheckReport>,
    /// Reported outcomes that do not affect `passed`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub informational: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub markers: Vec<String>,
}

impl CheckReport {
    /// Combines sub-results. Passes iff every asserted sub-result passes; the
    /// witness is that of the first failing one.
    pub fn aggregate(
        name: impl Into<String>,
        subchecks: Vec<CheckReport>,
        informational: Vec<CheckReport>,
    ) -> Self {
        let failing = subchecks.iter().find(|c| !c.passed);
        let witness = failing.and_then(|c| c.witness.clone());
        let variables = failing.map(|c| c.variables.clone()).unwrap_or_default();
        let tuples_evaluated = subchecks
            .iter()
            .chain(&informational)
            .map(|c| c.tuples_evaluated)
            .sum();
        CheckReport {
            identity_name: name.into(),
            passed: failing.is_none(),
            variables,
            witness,
            tuples_evaluated,
            subchecks,
            informational,
            markers: Vec::new(),
        }
    }

    pub fn with_marker(mut self, marker: &str) -> Self {
        self.mark(marker);
        self
    }

    /// Adds a marker to this report and every nested report.
    pub fn mark(&mut self, marker: &str) {
        if !self.markers.iter().any(|m| m == marker) {
            self.markers.push(marker.to_string());
        }
        for c in self.subchecks.iter_mut().chain(self.informational.iter_mut()) {
            c.mark(marker);
        }
    }

    /// Finds a nested report by exact name, searching depth first.
    pub fn find(&self, name: &str) -> Option<&CheckReport> {
        if self.identity_name == name {
            return Some(self);
        }
        self.subchecks
            .iter()
            .chain(&self.informational)
            .find_map(|c| c.find(name))
    }

    pub fn passed_named(&self, name: &str) -> Option<bool> {
        self.find(name).map(|c| c.passed)
    }
}

/// Evaluates `residual` on every tuple in `0..dim` of length `variables.len()`
/// and passes iff all residuals are zero.
pub fn exhaustive<F>(name: impl Into<String>, dim: usize, variables: &[&str], residual: F) -> CheckReport
where
    F: Fn(&[usize]) -> Vector + Sync,
{
    let arity = variables.len();
    let total = (dim as u64).pow(arity as u32);
    let decode = |mut index: u64| {
        let mut tuple = vec![0usize; arity];
        for slot in tuple.iter_mut().rev() {
            *slot = (index % dim as u64) as usize;
            index /= dim as u64;
        }
        tuple
    };
    let witness = (0..total).into_par_iter().find_map_first(|index| {
        let tuple = decode(index);
        let r = residual(&tuple);
        (!r.is_zero()).then_some((index, Witness { tuple, residual: r }))
    });
    let (passed, tuples_evaluated, witness) = match witness {
        None => (true, total, None),
        Some((index, w)) => (false, index + 1, Some(w)),
    };
    CheckReport {
        identity_name: name.into(),
        passed,
        variables: variables.iter().map(|v| v.to_string()).collect(),
        witness,
        tuples_evaluated,
        subchecks: Vec::new(),
        informational: Vec::new(),
        markers: Vec::new(),
    }
}

/// Largest dimension allowed for a check with `arity` variables without force.
pub fn guard_limit(arity: usize) -> Option<usize> {
    match arity {
        0..=3 => None,
        4 => Some(12),
        _ => Some(8),
    }
}

pub fn ensure_within_guard(dim: usize, arity: usize, force: bool) -> Result<(), Error> {
    match guard_limit(arity) {
        Some(limit) if dim > limit && !force => Err(Error::GuardExceeded { dim, arity, limit }),
        _ => Ok(()),
    }
}
