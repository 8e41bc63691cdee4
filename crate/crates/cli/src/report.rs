//! Serialized verdict reports: a query echo, the three-valued status, the
//! structured evidence, and the assumption list the verdict relied on.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use tensamp_core::surface::{Evidence, Status, Verdict};

use crate::model::render_rat_vec;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct QueryEcho {
    pub command: String,
    pub model: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub property: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VerdictReport {
    pub query: QueryEcho,
    pub status: String,
    pub evidence: Value,
    pub assumptions: Vec<String>,
}

impl VerdictReport {
    pub fn new(query: QueryEcho, verdict: &Verdict) -> VerdictReport {
        VerdictReport {
            query,
            status: verdict.status.to_string(),
            evidence: evidence_to_json(&verdict.evidence),
            assumptions: verdict
                .assumptions
                .iter()
                .map(|a| a.as_str().to_owned())
                .collect(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status.as_str() {
            "yes" => 0,
            "no" => 1,
            _ => 2,
        }
    }
}

pub fn status_exit_code(status: Status) -> i32 {
    match status {
        Status::Yes => 0,
        Status::No => 1,
        Status::Unknown => 2,
    }
}

fn verdict_to_json(v: &Verdict) -> Value {
    json!({
        "status": v.status.to_string(),
        "evidence": evidence_to_json(&v.evidence),
        "assumptions": v.assumptions.iter().map(|a| a.as_str()).collect::<Vec<_>>(),
    })
}

fn rat_pairs(pairs: &[(String, tensamp_core::Rat)]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|(name, value)| json!({"name": name, "value": value.to_string()}))
            .collect(),
    )
}

/// Structured JSON for every evidence form; rationals stay exact strings.
pub fn evidence_to_json(e: &Evidence) -> Value {
    match e {
        Evidence::CatalogPairings { pairings } => json!({
            "type": "catalog_pairings",
            "pairings": rat_pairs(pairings),
        }),
        Evidence::ConeCoefficients { cone, coefficients } => json!({
            "type": "cone_coefficients",
            "cone": format!("{cone:?}").to_lowercase(),
            "coefficients": coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }),
        Evidence::SeparatingFunctional { cone, functional } => json!({
            "type": "separating_functional",
            "cone": format!("{cone:?}").to_lowercase(),
            "functional": render_rat_vec(functional),
        }),
        Evidence::InteriorFacetValues { values } => json!({
            "type": "interior_facet_values",
            "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        }),
        Evidence::BoundaryFunctional { functional } => json!({
            "type": "boundary_functional",
            "functional": render_rat_vec(functional),
        }),
        Evidence::Decomposition {
            positive,
            negative_part,
            positive_self_int,
        } => json!({
            "type": "decomposition",
            "positive": render_rat_vec(positive.coeffs()),
            "negative_part": rat_pairs(negative_part),
            "positive_self_int": positive_self_int.to_string(),
        }),
        Evidence::SignaturePairing {
            self_int,
            witness_pairing,
        } => json!({
            "type": "signature_pairing",
            "self_int": self_int.to_string(),
            "witness_pairing": witness_pairing.to_string(),
        }),
        Evidence::WitnessObstruction { witness_pairing } => json!({
            "type": "witness_obstruction",
            "witness_pairing": witness_pairing.to_string(),
        }),
        Evidence::ZeroClass => json!({"type": "zero_class"}),
        Evidence::NotBig { big } => json!({
            "type": "not_big",
            "big": verdict_to_json(big),
        }),
        Evidence::NeitherBigNorAntiBig { big, anti_big } => json!({
            "type": "neither_big_nor_anti_big",
            "big": verdict_to_json(big),
            "anti_big": verdict_to_json(anti_big),
        }),
        Evidence::BigSideWithPairings {
            anti_side,
            big_side,
            pairings,
        } => json!({
            "type": "big_side_with_pairings",
            "anti_side": anti_side,
            "big_side": verdict_to_json(big_side),
            "pairings": rat_pairs(pairings),
        }),
        Evidence::CurveWitness { name, pairing } => json!({
            "type": "curve_witness",
            "name": name,
            "pairing": pairing.to_string(),
        }),
        Evidence::AmpleGenerator { index } => json!({
            "type": "ample_generator",
            "index": index,
        }),
        Evidence::GroupCertificate {
            point,
            combination,
            curve_pairings,
        } => json!({
            "type": "group_certificate",
            "point": render_rat_vec(point.coeffs()),
            "combination": combination.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "curve_pairings": curve_pairings
                .iter()
                .map(|(name, index, value)| json!({
                    "curve": name,
                    "generator": index,
                    "value": value.to_string(),
                }))
                .collect::<Vec<_>>(),
        }),
        Evidence::AllGeneratorsOrthogonal { name } => json!({
            "type": "all_generators_orthogonal",
            "name": name,
        }),
        Evidence::SpanMissesBig => json!({"type": "span_misses_big"}),
        Evidence::ComponentWitness { index, name, inner } => json!({
            "type": "component_witness",
            "index": index,
            "name": name,
            "inner": verdict_to_json(inner),
        }),
        Evidence::ComponentDegrees { degrees } => json!({
            "type": "component_degrees",
            "degrees": degrees
                .iter()
                .map(|(name, d)| json!({"name": name, "degree": d}))
                .collect::<Vec<_>>(),
        }),
        Evidence::ZeroDegreeComponent { index, name } => json!({
            "type": "zero_degree_component",
            "index": index,
            "name": name,
        }),
        Evidence::PointScheme => json!({"type": "point_scheme"}),
        Evidence::Components { verdicts } => json!({
            "type": "components",
            "verdicts": verdicts
                .iter()
                .map(|(name, v)| json!({"name": name, "verdict": verdict_to_json(v)}))
                .collect::<Vec<_>>(),
        }),
        Evidence::StratChain { strata } => json!({
            "type": "strat_chain",
            "strata": strata,
        }),
        Evidence::Inconclusive { reason } => json!({
            "type": "inconclusive",
            "reason": reason,
        }),
    }
}
