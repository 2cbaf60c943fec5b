//! JSON instance documents.
//!
//! ```json
//! {
//!   "name": "affine2",
//!   "dim": 2,
//!   "brackets": [{ "i": 1, "j": 2, "coeffs": { "2": "1" } }],
//!   "metric": [["0", "1"], ["1", "0"]],
//!   "metadata": { "family": "affine2", "params": {} }
//! }
//! ```
//!
//! Indices are 1-based, brackets list only `i < j`, and every rational is an
//! exact string `"p/q"` or `"n"`. Parse failures carry the path of the
//! offending entry.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog::{Instance, Params};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Matrix, Rational};
use crate::lie::{LieAlgebra, StructureTable};
use crate::metric::PseudoMetric;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    pub metric: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

fn parse_err(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.into(),
        message: message.into(),
    }
}

fn rational_at(path: &str, s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| parse_err(path, format!("`{s}` is not an exact rational")))
}

impl InstanceDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| parse_err("$", e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Validates the document into an instance. Structural problems report
    /// their JSON path; algebraic ones (Jacobi, degenerate metric) keep their
    /// own error kinds.
    pub fn to_instance(&self) -> Result<Instance> {
        let n = self.dim;
        if n == 0 {
            return Err(parse_err("dim", "dimension must be at least 1"));
        }
        let mut table = StructureTable::new(n);
        let mut seen = std::collections::BTreeSet::new();
        for (k, b) in self.brackets.iter().enumerate() {
            let at = |field: &str| format!("brackets[{k}].{field}");
            if b.i < 1 || b.i > n {
                return Err(parse_err(at("i"), format!("index {} outside 1..={n}", b.i)));
            }
            if b.j < 1 || b.j > n {
                return Err(parse_err(at("j"), format!("index {} outside 1..={n}", b.j)));
            }
            if b.i >= b.j {
                return Err(parse_err(at("j"), format!("require i < j, got i={}, j={}", b.i, b.j)));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(parse_err(at("i"), format!("duplicate bracket [e{}, e{}]", b.i, b.j)));
            }
            let mut coeffs = vec![Rational::from_integer(0.into()); n];
            for (key, value) in &b.coeffs {
                let path = format!("brackets[{k}].coeffs.{key}");
                let idx: usize = key
                    .parse()
                    .map_err(|_| parse_err(&path, format!("`{key}` is not a basis index")))?;
                if idx < 1 || idx > n {
                    return Err(parse_err(&path, format!("index {idx} outside 1..={n}")));
                }
                coeffs[idx - 1] = rational_at(&path, value)?;
            }
            table.set(b.i - 1, b.j - 1, coeffs)?;
        }
        let algebra = LieAlgebra::validate(table)?;

        if self.metric.len() != n {
            return Err(parse_err("metric", format!("expected {n} rows, found {}", self.metric.len())));
        }
        let mut rows = Vec::with_capacity(n);
        for (r, row) in self.metric.iter().enumerate() {
            if row.len() != n {
                return Err(parse_err(
                    format!("metric[{r}]"),
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            rows.push(
                row.iter()
                    .enumerate()
                    .map(|(c, s)| rational_at(&format!("metric[{r}][{c}]"), s))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let metric = PseudoMetric::new(Matrix::from_rows(rows)?)?;

        let mut inst = Instance::new(self.name.clone().unwrap_or_else(|| "custom".into()), algebra, metric)?;
        if let Some(meta) = &self.metadata {
            inst.family = meta.family.clone();
            let mut params = Params::new();
            for (k, v) in &meta.params {
                params.insert(k.clone(), rational_at(&format!("metadata.params.{k}"), v)?);
            }
            inst.params = params;
        }
        Ok(inst)
    }

    pub fn from_instance(inst: &Instance) -> Self {
        let g = &inst.algebra;
        let brackets = g
            .nonzero_brackets()
            .map(|(i, j, v)| BracketEntry {
                i: i + 1,
                j: j + 1,
                coeffs: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| ((k + 1).to_string(), format_rational(c)))
                    .collect(),
            })
            .collect();
        let metric = inst
            .metric
            .gram()
            .to_rows()
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        let metadata = (inst.family.is_some() || !inst.params.is_empty()).then(|| Metadata {
            family: inst.family.clone(),
            params: inst
                .params
                .iter()
                .map(|(k, v)| (k.clone(), format_rational(v)))
                .collect(),
        });
        Self {
            name: Some(inst.name.clone()),
            dim: g.dim(),
            brackets,
            metric,
            metadata,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::instantiate;

    const AFFINE: &str = r#"{
        "dim": 2,
        "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "1"}}],
        "metric": [["0", "1"], ["1", "0"]]
    }"#;

    #[test]
    fn parses_minimal_document() {
        let inst = InstanceDocument::from_json(AFFINE).unwrap().to_instance().unwrap();
        assert_eq!(inst.algebra.dim(), 2);
        assert!(!inst.algebra.is_unimodular());
        assert_eq!(inst.name, "custom");
    }

    fn err_path(text: &str) -> String {
        match InstanceDocument::from_json(text).and_then(|d| d.to_instance()) {
            Err(Error::Parse { path, .. }) => path,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn located_errors() {
        assert_eq!(err_path(&AFFINE.replace(r#""j": 2"#, r#""j": 3"#)), "brackets[0].j");
        assert_eq!(err_path(&AFFINE.replace(r#""i": 1"#, r#""i": 2"#)), "brackets[0].j");
        assert_eq!(err_path(&AFFINE.replace(r#"{"2": "1"}"#, r#"{"5": "1"}"#)), "brackets[0].coeffs.5");
        assert_eq!(err_path(&AFFINE.replace(r#"{"2": "1"}"#, r#"{"2": "x"}"#)), "brackets[0].coeffs.2");
        assert_eq!(err_path(&AFFINE.replace(r#"["1", "0"]]"#, r#"["1", "0.5"]]"#)), "metric[1][1]");
        assert_eq!(err_path(&AFFINE.replace(r#"["1", "0"]]"#, r#"["1"]]"#)), "metric[1]");
        assert_eq!(err_path("{ not json"), "$");
    }

    #[test]
    fn algebraic_errors_keep_kind() {
        let degenerate = AFFINE.replace(r#"[["0", "1"], ["1", "0"]]"#, r#"[["1", "1"], ["1", "1"]]"#);
        assert_eq!(
            InstanceDocument::from_json(&degenerate).unwrap().to_instance().unwrap_err(),
            Error::Degenerate
        );
        let jacobi = r#"{"dim": 3, "brackets": [
            {"i": 1, "j": 2, "coeffs": {"3": "1"}},
            {"i": 1, "j": 3, "coeffs": {"1": "1"}}],
            "metric": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#;
        assert!(matches!(
            InstanceDocument::from_json(jacobi).unwrap().to_instance(),
            Err(Error::JacobiViolation { .. })
        ));
    }

    #[test]
    fn emit_parse_round_trip() {
        let mut params = Params::new();
        params.insert("alpha".into(), crate::exact::rat(-3, 2));
        params.insert("beta".into(), crate::exact::int(1));
        let inst = instantiate("nonuni3", &params).unwrap();
        let doc = InstanceDocument::from_instance(&inst);
        let back = InstanceDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        let inst2 = back.to_instance().unwrap();
        assert_eq!(inst2.algebra, inst.algebra);
        assert_eq!(inst2.metric, inst.metric);
        assert_eq!(inst2.params, inst.params);
        assert_eq!(inst2.family.as_deref(), Some("nonuni3"));
    }
}
