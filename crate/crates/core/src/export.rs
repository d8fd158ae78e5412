//! DOT, JSON and CSV renderings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::KuratowskiCertificate;
use crate::classifier::{ClassificationReport, IdealReport};
use crate::graph::IdealGraph;
use crate::semigroup::NumericalSemigroup;

/// `2,15` style list.
pub fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Undirected DOT. Vertices `v<label>` ascending; each edge once, smaller
/// label first, in lexicographic order.
pub fn to_dot(g: &IdealGraph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\""));
    for &l in g.labels() {
        let _ = writeln!(out, "  v{l};");
    }
    for (a, b) in g.labeled_edges() {
        let _ = writeln!(out, "  v{a} -- v{b};");
    }
    out.push_str("}\n");
    out
}

/// Name used for the graph of `(S, x)` in DOT output.
pub fn graph_name(s: &NumericalSemigroup, x: u32) -> String {
    format!("G_<{}>_{x}", join(s.generators()))
}

pub fn graph_json(s: &NumericalSemigroup, x: Option<u32>, g: &IdealGraph) -> Value {
    let edges: Vec<[u32; 2]> = g.labeled_edges().into_iter().map(|(a, b)| [a, b]).collect();
    json!({
        "generators": s.generators(),
        "x": x,
        "vertices": g.labels(),
        "edges": edges,
    })
}

pub fn certificate_json(c: &KuratowskiCertificate) -> Value {
    json!({ "kind": c.kind, "parts": c.parts, "paths": c.paths })
}

pub fn report_json(r: &ClassificationReport) -> Value {
    let case = r.theorem_case.as_ref().map(|c| {
        let witness: Vec<&[u32]> = c.witness.iter().map(|f| f.coefficients()).collect();
        json!({ "theorem": c.theorem, "index": c.case_index, "witness": witness })
    });
    let ty = r.table_type.as_ref().map(|t| {
        json!({
            "order": t.order,
            "index": t.type_index,
            "degree_sequence": t.degree_sequence,
            "matches_representative": t.matches_representative,
        })
    });
    let oracle = r.planarity_by_oracle.as_ref();
    json!({
        "generators": r.semigroup.generators(),
        "x": r.x,
        "order": r.order,
        "degree_sequence": r.degree_sequence,
        "case": case,
        "type": ty,
        "planar_theorem": r.planarity_by_theorem.as_bool(),
        "planar_oracle": oracle.map(|v| v.planar),
        "agreement": r.agreement,
        "exclusions": r.exclusions,
        "certificate": oracle.and_then(|v| v.certificate.as_ref()).map(certificate_json),
    })
}

pub fn ideal_report_json(s: &NumericalSemigroup, r: &IdealReport) -> Value {
    let oracle = r.planarity_by_oracle.as_ref();
    json!({
        "generators": s.generators(),
        "ideal_generators": r.ideal.generators(),
        "irreducible_at": r.irreducible_at,
        "graph": graph_json(s, r.irreducible_at, &r.graph),
        "planar_oracle": oracle.map(|v| v.planar),
        "certificate": oracle.and_then(|v| v.certificate.as_ref()).map(certificate_json),
        "classification": r.classification.as_ref().map(report_json),
    })
}

pub fn semigroup_json(s: &NumericalSemigroup) -> Value {
    json!({
        "generators": s.generators(),
        "embedding_dimension": s.embedding_dimension(),
        "frobenius": s.frobenius(),
        "gaps": s.gaps(),
        "genus": s.gaps().len(),
    })
}

/// One line of the sweep CSV. Empty fields mean "not applicable".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CsvRow {
    pub generators: String,
    pub x: u32,
    pub order: usize,
    pub case: Option<usize>,
    #[serde(rename = "type")]
    pub type_index: Option<usize>,
    pub planar_theorem: Option<bool>,
    pub planar_oracle: Option<bool>,
    pub agreement: bool,
}

impl CsvRow {
    pub fn from_report(r: &ClassificationReport) -> Self {
        Self {
            generators: join(r.semigroup.generators()),
            x: r.x,
            order: r.order,
            case: r.theorem_case.as_ref().map(|c| c.case_index),
            type_index: r.table_type.as_ref().map(|t| t.type_index),
            planar_theorem: r.planarity_by_theorem.as_bool(),
            planar_oracle: r.planarity_by_oracle.as_ref().map(|v| v.planar),
            agreement: r.agreement,
        }
    }
}
