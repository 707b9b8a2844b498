//! JSON complex documents.
//!
//! ```text
//! document := { "name"?: string, "facets": [facet, ...], "metadata"?: object }
//! facet    := [vertex, ...]          (nonempty, no repeated vertex)
//! vertex   := integer in 0 ..= 4294967295
//! ```
//!
//! Unknown top-level keys are rejected. Facets are closed under taking faces
//! on load, so any generating set of cells is accepted.

use std::collections::BTreeMap;

use chi_config::SimplicialComplex;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub facets: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BTreeMap<String, serde_json::Value>>,
}

impl ComplexDocument {
    pub fn from_complex(x: &SimplicialComplex) -> Self {
        Self {
            name: x.name().map(str::to_string),
            facets: x.facet_lists(),
            metadata: None,
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex, CliError> {
        let x = SimplicialComplex::from_facets(self.facets.iter().map(|f| f.iter().copied()))?;
        Ok(match &self.name {
            Some(n) => x.with_name(n.clone()),
            None => x,
        })
    }
}

pub fn parse_document(bytes: &[u8]) -> Result<ComplexDocument, CliError> {
    serde_json::from_slice(bytes).map_err(|e| CliError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Parses and closes a document in one step.
pub fn parse_complex(bytes: &[u8]) -> Result<SimplicialComplex, CliError> {
    parse_document(bytes)?.to_complex()
}

pub fn emit_document(x: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexDocument::from_complex(x)).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let x = parse_complex(br#"{"name":"interval","facets":[[0,1]]}"#).unwrap();
        assert_eq!(x.num_cells(), 3);
        assert_eq!(x.name(), Some("interval"));
        assert!(parse_complex(br#"{"facets":[]}"#).unwrap().is_empty());
        assert!(matches!(
            parse_complex(br#"{"facets":[[0,0]]}"#),
            Err(CliError::Core(chi_config::Error::Malformed(_)))
        ));
        assert!(matches!(
            parse_complex(br#"{"facets":[[]]}"#),
            Err(CliError::Core(chi_config::Error::Malformed(_)))
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_document(b"{\n  \"facets\": [[0, -1]]\n}").unwrap_err();
        match err {
            CliError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_document(b"{\"facet\": []}"),
            Err(CliError::Syntax { .. })
        ));
        assert!(matches!(
            parse_document(b"[1,2"),
            Err(CliError::Syntax { .. })
        ));
    }

    #[test]
    fn metadata_is_accepted() {
        let d = parse_document(br#"{"facets":[[1]],"metadata":{"source":"hand","k":3}}"#).unwrap();
        assert_eq!(d.metadata.unwrap().len(), 2);
    }

    #[test]
    fn round_trip() {
        let x = chi_config::families::torus(3, 4).unwrap();
        let y = parse_complex(emit_document(&x).as_bytes()).unwrap();
        assert!(x.cells().eq(y.cells()));
        assert_eq!(y.name(), Some("torus 3 4"));
    }
}
