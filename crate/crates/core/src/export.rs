//! JSON documents for forms and fixed-point subalgebras.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::descent::{Construction, FixedSubalgebra};
use crate::report::VerificationReport;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDocument {
    pub construction: Construction,
    pub algebra: String,
    pub group: String,
    pub tower: TowerDocument,
    pub dimension: usize,
    /// Each vector as a map from basis label to its nonzero coordinate.
    pub basis: Vec<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
}

impl FormDocument {
    pub fn new(f: &FixedSubalgebra, verification: Option<VerificationReport>) -> Self {
        let [alpha, beta, gamma] = f.spec.describe();
        Self {
            construction: f.construction,
            algebra: f.algebra.kind().to_string(),
            group: f.group.to_string(),
            tower: TowerDocument {
                alpha,
                beta,
                gamma,
                degree: f.spec.degree(),
            },
            dimension: f.dim(),
            basis: f.basis.iter().map(|x| x.coordinate_map()).collect(),
            verification,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_tower::RatFunc;
    use crate::forms::basis_typeA_form;

    #[test]
    fn type_a_document_round_trips() {
        let f = basis_typeA_form(3, &RatFunc::t()).unwrap();
        let doc = FormDocument::new(&f, None);
        assert_eq!(doc.dimension, 8);
        assert_eq!(doc.tower.alpha.as_deref(), Some("t"));
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.contains("\"construction\":\"explicit\""));
        let back: FormDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }
}
