use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::kind::DetKind;
use super::spec::{DetParams, DetResult, DeterminantSpec, NodeSet};
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn unpair(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offsets: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<[f64; 2]>>,
}

/// Serialized form of a [`DeterminantSpec`] together with its nodes.
///
/// ```json
/// {"schema": 1, "kind": "GammaShift", "s": [1, 0], "params": {}, "nodes": [[1,0],[2,0],[3,0]]}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DetDocument {
    pub schema: u32,
    pub kind: DetKind,
    #[serde(default)]
    pub s: [f64; 2],
    #[serde(default)]
    pub params: ParamsDocument,
    pub nodes: Vec<[f64; 2]>,
}

impl DetDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DetDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("determinant spec: {e}")))?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema version {} (expected {SCHEMA_VERSION})",
                doc.schema
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_spec(spec: &DeterminantSpec, nodes: &NodeSet) -> Self {
        let p = &spec.params;
        DetDocument {
            schema: SCHEMA_VERSION,
            kind: spec.kind,
            s: pair(spec.s),
            params: ParamsDocument {
                a: p.a.map(pair),
                b: p.b.map(pair),
                t: p.t.map(pair),
                offsets: (!p.offsets.is_empty()).then(|| p.offsets.iter().copied().map(pair).collect()),
                w: p.w.as_ref().map(|w| w.as_slice().iter().copied().map(pair).collect()),
            },
            nodes: nodes.as_slice().iter().copied().map(pair).collect(),
        }
    }

    pub fn to_spec(&self) -> Result<(DeterminantSpec, NodeSet)> {
        let p = &self.params;
        let w = match &p.w {
            Some(w) => Some(NodeSet::new(w.iter().copied().map(unpair).collect())?),
            None => None,
        };
        let spec = DeterminantSpec {
            kind: self.kind,
            s: unpair(self.s),
            params: DetParams {
                a: p.a.map(unpair),
                b: p.b.map(unpair),
                t: p.t.map(unpair),
                offsets: p.offsets.iter().flatten().copied().map(unpair).collect(),
                w,
            },
        };
        let nodes = NodeSet::new(self.nodes.iter().copied().map(unpair).collect())?;
        Ok((spec, nodes))
    }
}

/// Serialized [`DetResult`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetResultDocument {
    pub schema: u32,
    pub kind: DetKind,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

impl DetResultDocument {
    pub fn new(kind: DetKind, n: usize, closed_form: Option<Complex64>, oracle: Option<Complex64>) -> Self {
        let residual = match (closed_form, oracle) {
            (Some(c), Some(o)) if o.norm() != 0.0 => Some((c - o).norm() / o.norm()),
            _ => None,
        };
        DetResultDocument {
            schema: SCHEMA_VERSION,
            kind,
            n,
            closed_form: closed_form.map(pair),
            oracle: oracle.map(pair),
            residual,
        }
    }

    pub fn from_result(kind: DetKind, n: usize, r: &DetResult) -> Self {
        Self::new(kind, n, Some(r.closed_form), r.oracle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_round_trip() {
        let text = r#"{"schema":1,"kind":"RatioSShifted","s":[0.5,0],"params":{"a":[2,0],"b":[1,1]},"nodes":[[0,0],[1,0],[2,0]]}"#;
        let doc = DetDocument::from_json(text).unwrap();
        let (spec, nodes) = doc.to_spec().unwrap();
        assert_eq!(spec.kind, DetKind::RatioSShifted);
        assert_eq!(nodes.len(), 3);
        assert_eq!(DetDocument::from_spec(&spec, &nodes), doc);
    }

    #[test]
    fn rejects_malformed() {
        assert!(DetDocument::from_json("{not json").is_err());
        assert!(DetDocument::from_json(r#"{"schema":2,"kind":"SShifted","nodes":[[0,0]]}"#).is_err());
        assert!(DetDocument::from_json(r#"{"schema":1,"kind":"Nope","nodes":[[0,0]]}"#).is_err());
        assert!(DetDocument::from_json(r#"{"schema":1,"kind":"SShifted","nodes":[]}"#)
            .unwrap()
            .to_spec()
            .is_err());
    }
}
