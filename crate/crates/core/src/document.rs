//! The JSON document written for a verified decomposition.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::product::{PartRecord, ProductDecomposition, ProductPath};
use crate::structured::verify_product;
use crate::verify::VerificationReport;
use crate::SCHEMA_VERSION;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDocument {
    pub schema_version: u32,
    pub g: Graph,
    pub h: Graph,
    pub source: String,
    pub declared_count: usize,
    pub bound: usize,
    pub verified: bool,
    /// Paths as `[g, h]` pairs.
    pub paths: Vec<ProductPath>,
    #[serde(default)]
    pub parts: Vec<PartRecord>,
    pub report: VerificationReport,
}

impl DecompositionDocument {
    /// Verifies `d` and records the outcome.
    pub fn new(g: &Graph, h: &Graph, d: &ProductDecomposition) -> Self {
        let report = verify_product(g, h, d);
        DecompositionDocument {
            schema_version: SCHEMA_VERSION,
            g: g.clone(),
            h: h.clone(),
            source: d.source.clone(),
            declared_count: d.declared_count,
            bound: report.bound,
            verified: report.passed,
            paths: d.paths.clone(),
            parts: d.parts.clone(),
            report,
        }
    }

    pub fn decomposition(&self) -> ProductDecomposition {
        ProductDecomposition {
            paths: self.paths.clone(),
            source: self.source.clone(),
            declared_count: self.declared_count,
            parts: self.parts.clone(),
        }
    }
}
