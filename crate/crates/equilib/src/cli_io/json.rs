//! Versioned JSON documents. Every real is written with 17 significant
//! digits, so values read back bit-for-bit.

use super::IoError;
use crate::construct::{AttemptRecord, GeneratorResult};
use crate::dynamics::RollTrace;
use crate::equilibria::{EqClass, EquilibriumReport, Feature};
use crate::geom_core::{MassProperties, Vec3};
use crate::metrics::MetricsReport;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_NAME: &str = "equilib";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A real serialized as `d.dddddddddddddddde±x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F17(pub f64);

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = serde_json::value::RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for F17 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(F17(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN)))
    }
}

fn v3(v: &Vec3) -> [F17; 3] {
    [F17(v.x), F17(v.y), F17(v.z)]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl ToolInfo {
    pub fn current() -> Self {
        ToolInfo { name: TOOL_NAME.into(), version: TOOL_VERSION.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDescriptor {
    pub path: String,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassDoc {
    pub volume: F17,
    pub first_moment: [F17; 3],
    pub centroid: [F17; 3],
}

impl From<&MassProperties> for MassDoc {
    fn from(m: &MassProperties) -> Self {
        MassDoc { volume: F17(m.volume), first_moment: v3(&m.first_moment), centroid: v3(&m.centroid) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDoc {
    pub class: String,
    pub feature_kind: String,
    pub feature_id: usize,
    pub location: [F17; 3],
    pub degenerate: bool,
    pub clearance: F17,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub reference: [F17; 3],
    pub stable: usize,
    pub saddle: usize,
    pub unstable: usize,
    pub any_degenerate: bool,
    pub euler_residual: i64,
    pub points: Vec<PointDoc>,
}

impl ReportDoc {
    pub fn new(r: &EquilibriumReport, reference: &Vec3) -> Self {
        ReportDoc {
            reference: v3(reference),
            stable: r.s,
            saddle: r.h,
            unstable: r.u,
            any_degenerate: r.any_degenerate,
            euler_residual: r.euler_residual,
            points: r
                .points
                .iter()
                .map(|p| {
                    let (kind, id) = match p.feature {
                        Feature::Face(i) => ("face", i),
                        Feature::Edge(i) => ("edge", i),
                        Feature::Vertex(i) => ("vertex", i),
                    };
                    PointDoc {
                        class: p.class.name().into(),
                        feature_kind: kind.into(),
                        feature_id: id,
                        location: v3(&p.location),
                        degenerate: p.degenerate,
                        clearance: F17(p.clearance),
                    }
                })
                .collect(),
        }
    }
}

pub fn class_from_name(name: &str) -> Option<EqClass> {
    match name {
        "stable" => Some(EqClass::Stable),
        "saddle" => Some(EqClass::Saddle),
        "unstable" => Some(EqClass::Unstable),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricsDoc {
    pub diameter: F17,
    pub girth: F17,
    pub ratio: F17,
    pub hausdorff_to_ball: Option<F17>,
    pub hausdorff_error_bound: Option<F17>,
    pub girth_direction: [F17; 3],
    pub symmetry_order: usize,
    pub symmetry_axis: [F17; 3],
    pub symmetry_residual: F17,
}

impl From<&MetricsReport> for MetricsDoc {
    fn from(m: &MetricsReport) -> Self {
        MetricsDoc {
            diameter: F17(m.diameter),
            girth: F17(m.girth),
            ratio: F17(m.ratio),
            hausdorff_to_ball: m.hausdorff_to_ball.map(F17),
            hausdorff_error_bound: m.hausdorff_error_bound.map(F17),
            girth_direction: v3(&m.girth_direction),
            symmetry_order: m.symmetry_order,
            symmetry_axis: v3(&m.symmetry_axis),
            symmetry_residual: F17(m.symmetry_residual),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDoc {
    pub faces: Vec<usize>,
    pub potentials: Vec<F17>,
    pub tipped_edges: Vec<usize>,
    pub arc_length: F17,
}

impl From<&RollTrace> for TraceDoc {
    fn from(t: &RollTrace) -> Self {
        TraceDoc {
            faces: t.faces.clone(),
            potentials: t.potentials.iter().map(|&p| F17(p)).collect(),
            tipped_edges: t.tipped_edges.clone(),
            arc_length: F17(t.arc_length),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyzeParams {
    pub reference: Option<[F17; 3]>,
    pub roll: bool,
    pub symmetry_order: usize,
}

/// Output of `analyze`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisDocument {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub input: InputDescriptor,
    pub parameters: AnalyzeParams,
    pub mass: MassDoc,
    pub equilibria: ReportDoc,
    pub metrics: MetricsDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roll_traces: Option<Vec<TraceDoc>>,
}

impl AnalysisDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Parses and checks the schema version.
    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let doc: AnalysisDocument = serde_json::from_str(text).map_err(|e| IoError::Schema(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(IoError::Schema(format!("schema version {} (expected {SCHEMA_VERSION})", doc.schema_version)));
        }
        Ok(doc)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttemptDoc {
    pub attempt: usize,
    pub k: usize,
    pub s: usize,
    pub vertices: usize,
    pub counts: Option<[usize; 3]>,
    pub degenerate: bool,
    pub hausdorff: Option<F17>,
    pub symmetry_residual: Option<F17>,
    pub outcome: String,
}

impl From<&AttemptRecord> for AttemptDoc {
    fn from(a: &AttemptRecord) -> Self {
        AttemptDoc {
            attempt: a.attempt,
            k: a.k,
            s: a.s,
            vertices: a.vertices,
            counts: a.counts.map(|c| [c.0, c.1, c.2]),
            degenerate: a.degenerate,
            hausdorff: a.hausdorff.map(F17),
            symmetry_residual: a.symmetry_residual.map(F17),
            outcome: a.outcome.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerateParamsDoc {
    pub n: usize,
    pub eps: F17,
    pub mode: String,
    pub seed: u64,
}

/// Output of `generate`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerationDocument {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub parameters: GenerateParamsDoc,
    pub success: bool,
    pub output: Option<InputDescriptor>,
    pub equilibria: Option<ReportDoc>,
    pub hausdorff: Option<F17>,
    pub symmetry_residual: Option<F17>,
    pub attempts: Vec<AttemptDoc>,
}

impl GenerationDocument {
    pub fn success(params: GenerateParamsDoc, r: &GeneratorResult, path: &str, centroid: &Vec3) -> Self {
        GenerationDocument {
            schema_version: SCHEMA_VERSION,
            tool: ToolInfo::current(),
            parameters: params,
            success: true,
            output: Some(InputDescriptor {
                path: path.into(),
                vertices: r.polyhedron.num_vertices(),
                edges: r.polyhedron.num_edges(),
                faces: r.polyhedron.num_faces(),
            }),
            equilibria: Some(ReportDoc::new(&r.report, centroid)),
            hausdorff: Some(F17(r.hausdorff)),
            symmetry_residual: Some(F17(r.symmetry_residual)),
            attempts: r.log.iter().map(AttemptDoc::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainDocument {
    pub schema_version: u32,
    pub beta: F17,
    pub target: F17,
    pub k: usize,
    pub points: Vec<[F17; 2]>,
    pub radii: Vec<F17>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricsDocument {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub input: InputDescriptor,
    pub metrics: MetricsDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictDocument {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub input: InputDescriptor,
    pub monostable: bool,
    pub stable_faces: Vec<usize>,
    pub stable: usize,
    pub saddle: usize,
    pub unstable: usize,
}
