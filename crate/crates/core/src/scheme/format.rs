//! JSON diagram documents.
//!
//! ```json
//! {"crossings":[{"rotation":[0,1,2,3],"over":0}],
//!  "edges":[{"darts":[0,1],"sign":1},{"darts":[2,3],"sign":1}]}
//! ```
//!
//! A document of the form `{"pd":[[1,4,2,5],...]}` is read as a planar
//! diagram code. Unknown keys are rejected in both forms.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

use super::{import_pd, validate, EmbeddingScheme};

/// Unchecked diagram data, exactly as it appears in a document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDiagram {
    pub crossings: Vec<RawCrossing>,
    pub edges: Vec<RawEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCrossing {
    pub rotation: Vec<i64>,
    pub over: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawEdge {
    pub darts: Vec<i64>,
    pub sign: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PdDocument {
    pd: Vec<Vec<i64>>,
}

pub fn parse_diagram(text: &str) -> Result<EmbeddingScheme> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let is_pd = value.as_object().is_some_and(|o| o.contains_key("pd"));
    if is_pd {
        let doc: PdDocument =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        let mut code = Vec::with_capacity(doc.pd.len());
        for (i, x) in doc.pd.iter().enumerate() {
            let tuple: [i64; 4] = x.as_slice().try_into().map_err(|_| {
                Error::Pd(format!("crossing {i} has {} labels, expected 4", x.len()))
            })?;
            code.push(tuple);
        }
        import_pd(&code)
    } else {
        let raw: RawDiagram =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        validate(&raw)
    }
}

/// Deterministic text form: one crossing or edge per line, input order kept.
pub fn serialize_diagram(d: &EmbeddingScheme) -> String {
    let raw = d.to_raw();
    let mut out = String::from("{\n  \"crossings\": [\n");
    let items: Vec<String> = raw
        .crossings
        .iter()
        .map(|x| format!("    {}", serde_json::to_string(x).expect("plain data")))
        .collect();
    out.push_str(&items.join(",\n"));
    out.push_str("\n  ],\n  \"edges\": [\n");
    let items: Vec<String> = raw
        .edges
        .iter()
        .map(|e| format!("    {}", serde_json::to_string(e).expect("plain data")))
        .collect();
    out.push_str(&items.join(",\n"));
    out.push_str("\n  ]\n}\n");
    out
}
