//! On-disk JSON schemas for orders and m-data.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use tiled_core::{cyclic_order, ExponentMatrix, GorensteinData, IntMatrix, MData, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Matrix,
    Cyclic,
}

/// `{"kind": "matrix", "m": [[...]]}` or `{"kind": "cyclic", "weights": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderSpecFile {
    pub kind: OrderKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MDataFile {
    pub m: Vec<Vec<i64>>,
    pub a: Vec<i64>,
    pub nu: Vec<usize>,
}

/// A file that could not be read or does not match its schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Malformed(pub String);

impl OrderSpecFile {
    pub fn matrix(m: Vec<Vec<i64>>) -> Self {
        OrderSpecFile { kind: OrderKind::Matrix, m: Some(m), weights: None }
    }

    pub fn cyclic(weights: Vec<i64>) -> Self {
        OrderSpecFile { kind: OrderKind::Cyclic, m: None, weights: Some(weights) }
    }

    pub fn check(&self) -> Result<(), Malformed> {
        match (self.kind, &self.m, &self.weights) {
            (OrderKind::Matrix, Some(_), None) | (OrderKind::Cyclic, None, Some(_)) => Ok(()),
            (kind, _, _) => Err(Malformed(format!(
                "kind {kind:?} needs exactly the field `{}`",
                if kind == OrderKind::Matrix { "m" } else { "weights" }
            ))),
        }
    }
}

/// A parsed order: the exponent matrix and, for cyclic input, its known data.
pub struct LoadedOrder {
    pub spec: OrderSpecFile,
    pub m: ExponentMatrix,
    pub cyclic: Option<GorensteinData>,
}

impl LoadedOrder {
    pub fn from_spec(spec: OrderSpecFile) -> Result<Self, tiled_core::Error> {
        let (m, cyclic) = match (&spec.m, &spec.weights) {
            (Some(rows), _) => (ExponentMatrix::from_rows(rows)?, None),
            (None, Some(w)) => {
                let (m, g) = cyclic_order(w)?;
                (m, Some(g))
            }
            (None, None) => unreachable!("checked by OrderSpecFile::check"),
        };
        Ok(LoadedOrder { spec, m, cyclic })
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Malformed> {
    let text = fs::read_to_string(path)
        .map_err(|e| Malformed(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Malformed(format!("{}: {e}", path.display())))
}

pub fn read_order(path: &Path) -> Result<OrderSpecFile, Malformed> {
    let spec: OrderSpecFile = read_json(path)?;
    spec.check()?;
    Ok(spec)
}

pub fn read_mdata(path: &Path) -> Result<MDataFile, Malformed> {
    read_json(path)
}

impl MDataFile {
    pub fn from_mdata(md: &MData) -> Self {
        MDataFile { m: md.m().to_rows(), a: md.a().to_vec(), nu: md.nu().images().to_vec() }
    }

    pub fn to_mdata(&self) -> Result<MData, tiled_core::Error> {
        let m = IntMatrix::from_rows(&self.m)?;
        MData::new(m, self.a.clone(), Permutation::new(self.nu.clone())?)
    }
}

/// Pretty JSON with a trailing newline; field order follows the struct.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_round_trip() {
        for spec in [
            OrderSpecFile::cyclic(vec![1, 2, 0]),
            OrderSpecFile::matrix(vec![vec![0, 1], vec![1, 0]]),
        ] {
            let text = to_json(&spec);
            let back: OrderSpecFile = serde_json::from_str(&text).unwrap();
            assert_eq!(back, spec);
            assert_eq!(to_json(&back), text);
        }
    }

    #[test]
    fn kind_must_match_field() {
        let bad: OrderSpecFile =
            serde_json::from_str(r#"{"kind":"cyclic","m":[[0]]}"#).unwrap();
        assert!(bad.check().is_err());
        let both: OrderSpecFile =
            serde_json::from_str(r#"{"kind":"matrix","m":[[0]],"weights":[1]}"#).unwrap();
        assert!(both.check().is_err());
        assert!(serde_json::from_str::<OrderSpecFile>(r#"{"kind":"ring"}"#).is_err());
    }

    #[test]
    fn emitted_field_order() {
        let text = to_json(&OrderSpecFile::cyclic(vec![1, 1]));
        assert_eq!(text, "{\n  \"kind\": \"cyclic\",\n  \"weights\": [\n    1,\n    1\n  ]\n}\n");
    }
}
