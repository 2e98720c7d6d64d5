use serde::{Deserialize, Serialize};

use super::{from_parts, Audit, FiniteGroup};
use crate::error::{Error, Result};

pub const CAYLEY_FORMAT: &str = "cayley-v1";

/// On-disk form of a group: `{ format, order, mult, generators, labels }`,
/// with `mult` flattened row-major.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CayleyDocument {
    pub format: String,
    pub order: usize,
    pub mult: Vec<u32>,
    pub generators: Vec<usize>,
    pub labels: Vec<String>,
}

impl From<&FiniteGroup> for CayleyDocument {
    fn from(g: &FiniteGroup) -> Self {
        CayleyDocument {
            format: CAYLEY_FORMAT.to_string(),
            order: g.order,
            mult: g.mult.clone(),
            generators: g.generators.clone(),
            labels: g.labels.clone(),
        }
    }
}

impl TryFrom<CayleyDocument> for FiniteGroup {
    type Error = Error;

    fn try_from(doc: CayleyDocument) -> Result<Self> {
        if doc.format != CAYLEY_FORMAT {
            return Err(Error::Format(format!("unsupported format tag {:?}", doc.format)));
        }
        if doc.labels.len() != doc.order {
            return Err(Error::Format(format!(
                "{} labels for order {}",
                doc.labels.len(),
                doc.order
            )));
        }
        from_parts(doc.mult, doc.generators, doc.labels, Audit::Full)
    }
}

impl FiniteGroup {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&CayleyDocument::from(self)).expect("plain data serializes")
    }

    /// Parses and fully audits a cayley-v1 document.
    pub fn from_json(text: &str) -> Result<FiniteGroup> {
        let doc: CayleyDocument = serde_json::from_str(text)?;
        FiniteGroup::try_from(doc)
    }
}
