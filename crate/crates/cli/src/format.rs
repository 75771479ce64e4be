//! The algebra file: JSON with a fixed schema.
//!
//! ```json
//! {
//!   "basis_names": ["e0", "e1", "e2"],
//!   "bracket": [[0, 1, 2, "1"], [1, 0, 2, "-1"]],
//!   "dimension": 3,
//!   "operators": { "R": [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]] },
//!   "triple": [[0, 0, 0, 0, "2"]]
//! }
//! ```
//!
//! Indices are 0-based. A bracket entry `[i, j, k, c]` means the coefficient
//! of `e_k` in `[e_i, e_j]` is `c`; a triple entry `[i, j, k, l, c]` likewise
//! for `<e_i, e_j, e_k>`. Scalars are `"p"` or `"p/q"` in lowest terms.
//! Operators are dense, row-major: `y_r = sum_c rows[r][c] x_c`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use myb_core::catalog::CatalogEntry;
use myb_core::scalar::{self, Scalar};
use myb_core::{BilinearStructure, Operator, TrilinearStructure};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub dimension: usize,
    pub basis_names: Option<Vec<String>>,
    pub bracket: Option<BilinearStructure>,
    pub triple: Option<TrilinearStructure>,
    pub operators: BTreeMap<String, Operator>,
}

type RawBracket = Vec<(usize, usize, usize, String)>;
type RawTriple = Vec<(usize, usize, usize, usize, String)>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    dimension: usize,
    #[serde(default)]
    basis_names: Option<Vec<String>>,
    #[serde(default)]
    bracket: Option<RawBracket>,
    #[serde(default)]
    triple: Option<RawTriple>,
    #[serde(default)]
    operators: UniqueMap,
}

/// A JSON object whose keys must be distinct.
#[derive(Default)]
struct UniqueMap(Vec<(String, Vec<Vec<String>>)>);

impl<'de> Deserialize<'de> for UniqueMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = UniqueMap;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from operator names to matrices")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<UniqueMap, A::Error> {
                let mut out: Vec<(String, Vec<Vec<String>>)> = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, Vec<Vec<String>>>()? {
                    if out.iter().any(|(name, _)| *name == k) {
                        return Err(de::Error::custom(format!("duplicate operator {k:?}")));
                    }
                    out.push((k, v));
                }
                Ok(UniqueMap(out))
            }
        }
        d.deserialize_map(V)
    }
}

fn parse_scalar(field: &str, text: &str) -> Result<Scalar, CliError> {
    scalar::parse(text).map_err(|e| CliError::field(field, e))
}

fn check_indices(field: &str, indices: &[usize], dim: usize) -> Result<(), CliError> {
    match indices.iter().find(|&&i| i >= dim) {
        Some(i) => Err(CliError::field(field, format!("index {i} out of range for dimension {dim}"))),
        None => Ok(()),
    }
}

impl AlgebraFile {
    pub fn parse(bytes: &[u8]) -> Result<Self, CliError> {
        let raw: RawFile = serde_json::from_slice(bytes).map_err(|e| CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let n = raw.dimension;
        if n == 0 {
            return Err(CliError::field("dimension", "must be positive"));
        }
        if let Some(names) = &raw.basis_names {
            if names.len() != n {
                return Err(CliError::field(
                    "basis_names",
                    format!("{} names for dimension {n}", names.len()),
                ));
            }
        }
        let bracket = match raw.bracket {
            None => None,
            Some(entries) => {
                let mut seen = BTreeSet::new();
                let mut coefficients = Vec::with_capacity(entries.len());
                for (pos, (i, j, k, c)) in entries.into_iter().enumerate() {
                    let field = format!("bracket[{pos}]");
                    check_indices(&field, &[i, j, k], n)?;
                    if !seen.insert((i, j, k)) {
                        return Err(CliError::field(field, format!("duplicate entry ({i}, {j}, {k})")));
                    }
                    coefficients.push((i, j, k, parse_scalar(&field, &c)?));
                }
                Some(BilinearStructure::from_coefficients(n, coefficients)?)
            }
        };
        let triple = match raw.triple {
            None => None,
            Some(entries) => {
                let mut seen = BTreeSet::new();
                let mut coefficients = Vec::with_capacity(entries.len());
                for (pos, (i, j, k, l, c)) in entries.into_iter().enumerate() {
                    let field = format!("triple[{pos}]");
                    check_indices(&field, &[i, j, k, l], n)?;
                    if !seen.insert((i, j, k, l)) {
                        return Err(CliError::field(field, format!("duplicate entry ({i}, {j}, {k}, {l})")));
                    }
                    coefficients.push((i, j, k, l, parse_scalar(&field, &c)?));
                }
                Some(TrilinearStructure::from_coefficients(n, coefficients)?)
            }
        };
        let mut operators = BTreeMap::new();
        for (name, rows) in raw.operators.0 {
            let field = format!("operators.{name}");
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(CliError::field(field, format!("expected a {n}x{n} matrix")));
            }
            let mut parsed = Vec::with_capacity(n);
            for (r, row) in rows.iter().enumerate() {
                let values = row
                    .iter()
                    .enumerate()
                    .map(|(c, text)| parse_scalar(&format!("{field}[{r}][{c}]"), text))
                    .collect::<Result<Vec<_>, _>>()?;
                parsed.push(values);
            }
            operators.insert(name, Operator::from_rows(parsed)?);
        }
        Ok(AlgebraFile {
            dimension: n,
            basis_names: raw.basis_names,
            bracket,
            triple,
            operators,
        })
    }

    pub fn from_entry(entry: &CatalogEntry) -> Self {
        AlgebraFile {
            dimension: entry.dim(),
            basis_names: Some(entry.basis_names.clone()),
            bracket: entry.bracket.clone(),
            triple: entry.triple.clone(),
            operators: entry.operators.clone(),
        }
    }

    pub fn require_bracket(&self) -> Result<&BilinearStructure, CliError> {
        self.bracket.as_ref().ok_or_else(|| CliError::Missing("bracket".into()))
    }

    pub fn require_triple(&self) -> Result<&TrilinearStructure, CliError> {
        self.triple.as_ref().ok_or_else(|| CliError::Missing("triple".into()))
    }

    pub fn operator(&self, name: &str) -> Result<&Operator, CliError> {
        self.operators
            .get(name)
            .ok_or_else(|| CliError::Missing(format!("operator {name:?}")))
    }

    /// Canonical text: keys sorted, entries sorted by index, zero
    /// coefficients dropped, scalars in lowest terms.
    pub fn render(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings serialise");
        let mut out = String::from("{\n");
        let mut fields: Vec<String> = Vec::new();
        if let Some(names) = &self.basis_names {
            let list: Vec<String> = names.iter().map(|s| q(s)).collect();
            fields.push(format!("  \"basis_names\": [{}]", list.join(", ")));
        }
        if let Some(b) = &self.bracket {
            let rows: Vec<String> = b
                .iter()
                .flat_map(|(&(i, j), v)| {
                    v.support()
                        .map(move |(k, c)| format!("    [{i}, {j}, {k}, {}]", q(&scalar::render(c))))
                        .collect::<Vec<_>>()
                })
                .collect();
            fields.push(list_field("bracket", &rows));
        }
        fields.push(format!("  \"dimension\": {}", self.dimension));
        let ops: Vec<String> = self
            .operators
            .iter()
            .map(|(name, op)| {
                let rows: Vec<String> = op
                    .rows()
                    .map(|row| {
                        let cells: Vec<String> = row.iter().map(|c| q(&scalar::render(c))).collect();
                        format!("      [{}]", cells.join(", "))
                    })
                    .collect();
                format!("    {}: [\n{}\n    ]", q(name), rows.join(",\n"))
            })
            .collect();
        if ops.is_empty() {
            fields.push("  \"operators\": {}".into());
        } else {
            fields.push(format!("  \"operators\": {{\n{}\n  }}", ops.join(",\n")));
        }
        if let Some(t) = &self.triple {
            let rows: Vec<String> = t
                .iter()
                .flat_map(|(&(i, j, k), v)| {
                    v.support()
                        .map(move |(l, c)| format!("    [{i}, {j}, {k}, {l}, {}]", q(&scalar::render(c))))
                        .collect::<Vec<_>>()
                })
                .collect();
            fields.push(list_field("triple", &rows));
        }
        out.push_str(&fields.join(",\n"));
        out.push_str("\n}\n");
        out
    }
}

fn list_field(name: &str, rows: &[String]) -> String {
    let mut s = String::new();
    if rows.is_empty() {
        let _ = write!(s, "  \"{name}\": []");
    } else {
        let _ = write!(s, "  \"{name}\": [\n{}\n  ]", rows.join(",\n"));
    }
    s
}
