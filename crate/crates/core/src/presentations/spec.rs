//! Serializable ring presentations.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::bidegree::Bidegree;
use crate::monomial::Coefficients;
use crate::presentations::template::Template;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Grading {
    Single,
    Bigraded,
}

/// Atomic generator, or a family `name(k)`, `k >= 0`, of bidegree
/// `degree + k·step`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: Bidegree,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step: Option<Bidegree>,
}

impl GeneratorSpec {
    pub fn atomic(name: &str, degree: Bidegree) -> Self {
        GeneratorSpec { name: name.into(), degree, step: None }
    }

    pub fn family(name: &str, degree: Bidegree, step: Bidegree) -> Self {
        GeneratorSpec { name: name.into(), degree, step: Some(step) }
    }

    pub fn is_family(&self) -> bool {
        self.step.is_some()
    }

    pub fn degree_at(&self, k: u32) -> Bidegree {
        match self.step {
            None => self.degree,
            Some(s) => self.degree + s * i64::from(k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RelationTemplate {
    /// One homogeneous element per admissible `k` (or exactly one if the
    /// template does not mention `k`).
    Element { label: String, element: Template },
    /// `left(k1)·right(k2) = left(k3)·right(k4)` whenever `k1+k2 = k3+k4`.
    SumIdentification { label: String, left: String, right: String },
}

impl RelationTemplate {
    pub fn element(label: &str, text: &str) -> Self {
        RelationTemplate::Element {
            label: label.into(),
            element: Template::parse(text).expect("bundled relation parses"),
        }
    }

    pub fn sum_identification(left: &str, right: &str) -> Self {
        RelationTemplate::SumIdentification {
            label: alloc::format!("{left}{right}-sum"),
            left: left.into(),
            right: right.into(),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            RelationTemplate::Element { label, .. } | RelationTemplate::SumIdentification { label, .. } => {
                label
            }
        }
    }
}

/// Weight `weight` of pairing letter `a` with letter `b` (possibly equal).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWeight {
    pub a: String,
    pub b: String,
    pub weight: u32,
}

/// The Laurent subring model: span of `unit^e · letters` with
/// `e >= -deficit`, plus a square-zero part `socle · multipliers`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentSpec {
    pub unit: String,
    pub letters: Vec<String>,
    pub pair_weights: Vec<PairWeight>,
    pub socle: String,
    pub socle_multipliers: Vec<Template>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingPresentation {
    pub name: String,
    pub coefficients: Coefficients,
    pub grading: Grading,
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub relations: Vec<RelationTemplate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub laurent: Option<LaurentSpec>,
}

impl RingPresentation {
    /// Drops every relation with the given label; returns how many were removed.
    pub fn remove_relation(&mut self, label: &str) -> usize {
        let before = self.relations.len();
        self.relations.retain(|r| r.label() != label);
        before - self.relations.len()
    }
}
