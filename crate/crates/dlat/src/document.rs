//! JSON documents exchanged by the command line.

use std::path::Path;

use dlat_core::geometry::Rational;
use dlat_core::{IntVector, SemiElement};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// A vector on `{1..n}`, entries in 1-based position order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDocument {
    pub n: usize,
    pub vec: Vec<i64>,
}

impl ElementDocument {
    pub fn new(v: &IntVector) -> Self {
        ElementDocument {
            n: v.len(),
            vec: v.to_vec(),
        }
    }

    /// Parses a document and checks `vec.len() == n`.
    pub fn from_json(text: &str) -> Result<IntVector, String> {
        let doc: ElementDocument =
            serde_json::from_str(text).map_err(|e| format!("bad element document: {e}"))?;
        if doc.vec.len() != doc.n {
            return Err(format!(
                "element document has n = {} but {} entries",
                doc.n,
                doc.vec.len()
            ));
        }
        Ok(doc.vec.into())
    }

    pub fn read(path: &Path) -> Result<IntVector, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::from_json(&text)
    }
}

/// An element `(z, s)` of the semidirect product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiDocument {
    pub n: usize,
    pub z: Vec<i64>,
    pub perm: Vec<usize>,
}

impl SemiDocument {
    pub fn new(g: &SemiElement) -> Self {
        SemiDocument {
            n: g.n(),
            z: g.z.to_vec(),
            perm: g.s.images().to_vec(),
        }
    }
}

/// Output of every subcommand in `--format json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<u64>,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `"p/q"`, or `"p"` for integers.
pub fn exact(r: &Rational) -> String {
    r.to_string()
}
