//! Machine-readable verdict reports: per-sample route comparisons, lemma
//! suite outcomes, counterexample bundles and the environment pin. All maps
//! are ordered so that identical campaigns serialize byte-identically.

use serde::{Deserialize, Serialize};

use crate::classify::{IgCertificate, Tri};
use crate::formats::{CopairDoc, PairDoc};
use crate::hypotheses::HypothesisReport;
use crate::tensor_ring::{Method, ModuleClass};

/// Instance pin recorded in every report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub field: u64,
    pub algebra_digest: String,
    pub bimodule_digest: String,
    pub base_certificate: IgCertificate,
    pub ring_certificate: IgCertificate,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SampleRecord {
    pub index: usize,
    pub kind: String,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_mono: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v_epi: Option<bool>,
    pub membership_route: Option<Tri>,
    pub direct_route: Option<Tri>,
    pub agree: Option<bool>,
    pub verdict: Tri,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Summary {
    pub samples: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub unknown: usize,
}

/// A failed comparison, serialized completely enough to re-load and re-run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CounterexampleBundle {
    pub sample_index: usize,
    pub class: ModuleClass,
    pub pair: Option<PairDoc>,
    pub copair: Option<CopairDoc>,
    pub membership_route: Tri,
    pub direct_route: Tri,
    pub membership_certificate: serde_json::Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PropertyRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of a campaign, a lemma suite or a single classification.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerdictReport {
    pub kind: String,
    pub verdict: Tri,
    pub environment: Environment,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<ModuleClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<HypothesisReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses_met: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub samples: Vec<SampleRecord>,
    pub properties: Vec<PropertyRecord>,
    pub summary: Summary,
    pub counterexamples: Vec<CounterexampleBundle>,
}

impl VerdictReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
