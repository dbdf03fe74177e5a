//! Serializable homomorphism definitions.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::bidegree::Bidegree;
use crate::presentations::Template;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    /// Generator images extended multiplicatively.
    RingMap,
    /// Generator values extended by the Leibniz rule.
    Derivation,
    /// A named closed-form rule on monomials.
    MonomialFormula,
}

/// Image of a generator; for families the template may use `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorImage {
    pub generator: String,
    pub image: Template,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapSpec {
    pub name: String,
    pub source: String,
    pub target: String,
    pub kind: MapKind,
    pub shift: Bidegree,
    /// The target is single-graded and the weight is dropped.
    #[serde(default)]
    pub forget_weight: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub images: Vec<GeneratorImage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
}

impl MapSpec {
    pub fn target_degree(&self, src: Bidegree) -> Bidegree {
        let p = src.p + self.shift.p;
        if self.forget_weight {
            Bidegree::single(p)
        } else {
            Bidegree::new(p, src.q + self.shift.q)
        }
    }
}
