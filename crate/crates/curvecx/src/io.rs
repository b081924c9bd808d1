//! JSON documents for triangulations, multicurves, paths and reports.
//!
//! Every document carries a `schema` version tag. Serialization is
//! deterministic (struct field order, two-space pretty printing, trailing
//! newline), so identical values produce identical bytes.

use serde::{Deserialize, Serialize};

use crate::builder::{PathInHC, StepChoice, SurfaceReport};
use crate::complex::ComplexSlice;
use crate::error::{Error, Result};
use crate::normal::NormalMulticurve;
use crate::surface::{Slot, Triangulation};

pub const SCHEMA_TRIANGULATION: &str = "curvecx/triangulation/v1";
pub const SCHEMA_MULTICURVE: &str = "curvecx/multicurve/v1";
pub const SCHEMA_PATH: &str = "curvecx/path/v1";
pub const SCHEMA_REPORT: &str = "curvecx/surface-report/v1";
pub const SCHEMA_SLICE: &str = "curvecx/slice/v1";

/// Renders any serializable document with the crate's canonical layout.
pub fn to_json_string<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationDoc {
    pub schema: String,
    pub genus: u32,
    pub edges: Vec<usize>,
    pub faces: Vec<[Slot; 3]>,
}

impl TriangulationDoc {
    pub fn from_triangulation(tri: &Triangulation) -> Self {
        TriangulationDoc {
            schema: SCHEMA_TRIANGULATION.to_string(),
            genus: tri.genus(),
            edges: (0..tri.edge_count()).collect(),
            faces: tri.faces().to_vec(),
        }
    }

    /// Runs the structural invariants: gluing, counts, Euler formula,
    /// vertex link closure. Accepts exactly the standard triangulations.
    pub fn validate(&self) -> Result<Triangulation> {
        let tri = Triangulation::standard(self.genus)?;
        let expected = TriangulationDoc::from_triangulation(&tri);
        if self.edges != expected.edges || self.faces != expected.faces {
            return Err(Error::InvalidNormalCoordinates {
                face: 0,
                reason: "triangulation differs from the standard one-vertex model".into(),
            });
        }
        Ok(tri)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulticurveDoc {
    pub schema: String,
    pub genus: u32,
    pub weights: Vec<u64>,
    pub orientations: Vec<i64>,
}

impl MulticurveDoc {
    pub fn from_multicurve(tri: &Triangulation, mc: &NormalMulticurve) -> Self {
        MulticurveDoc {
            schema: SCHEMA_MULTICURVE.to_string(),
            genus: tri.genus(),
            weights: mc.weights().to_vec(),
            orientations: mc.orientations(),
        }
    }

    pub fn to_multicurve(&self, tri: &Triangulation) -> Result<NormalMulticurve> {
        NormalMulticurve::canonicalize(tri, &self.weights, &self.orientations)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathVertexDoc {
    pub weights: Vec<u64>,
    pub orientations: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDoc {
    pub schema: String,
    pub genus: u32,
    pub vertices: Vec<PathVertexDoc>,
    pub choices: Vec<StepChoice>,
}

impl PathDoc {
    pub fn to_path(&self, tri: &Triangulation) -> Result<(PathInHC, Vec<StepChoice>)> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            vertices.push(NormalMulticurve::canonicalize(tri, &v.weights, &v.orientations)?);
        }
        let path = PathInHC::new(tri, vertices)?;
        Ok((path, self.choices.clone()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDoc {
    pub schema: String,
    #[serde(flatten)]
    pub report: SurfaceReport,
}

impl ReportDoc {
    pub fn new(report: SurfaceReport) -> Self {
        ReportDoc { schema: SCHEMA_REPORT.to_string(), report }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SliceVertexDoc {
    pub weights: Vec<u64>,
    pub orientations: Vec<i64>,
    /// true when two components are the same oriented curve; the class
    /// counts such components with multiplicity
    pub parallel_duplicates: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SliceDoc {
    pub schema: String,
    pub genus: u32,
    pub alpha: Vec<i64>,
    pub weight_bound: u64,
    pub vertices: Vec<SliceVertexDoc>,
    pub edges: Vec<(usize, usize)>,
}

impl SliceDoc {
    pub fn from_slice(slice: &ComplexSlice<'_>) -> Self {
        SliceDoc {
            schema: SCHEMA_SLICE.to_string(),
            genus: slice.tri().genus(),
            alpha: slice.alpha().to_vec(),
            weight_bound: slice.weight_bound(),
            vertices: slice
                .vertices()
                .iter()
                .map(|m| SliceVertexDoc {
                    weights: m.weights().to_vec(),
                    orientations: m.orientations(),
                    parallel_duplicates: m.has_parallel_duplicates(),
                })
                .collect(),
            edges: slice.edges(),
        }
    }
}

/// Scatter CSV of a survey: one row per sampled pair.
pub fn survey_csv(report: &crate::builder::SurveyReport) -> String {
    let mut out = String::from("pair,u,v,d,genus,path_len,censored\n");
    for (k, row) in report.rows.iter().enumerate() {
        let d = row.d.map(|x| x.to_string()).unwrap_or_default();
        let g = row.genus.map(|x| x.to_string()).unwrap_or_default();
        let l = row.path_len.map(|x| x.to_string()).unwrap_or_default();
        out.push_str(&format!("{k},{},{},{d},{g},{l},{}\n", row.u, row.v, row.censored));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangulation_roundtrip_is_byte_exact() {
        let tri = Triangulation::standard(3).unwrap();
        let doc = TriangulationDoc::from_triangulation(&tri);
        let bytes = to_json_string(&doc);
        let parsed: TriangulationDoc = serde_json::from_str(&bytes).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(to_json_string(&parsed), bytes);
        parsed.validate().unwrap();
    }

    #[test]
    fn multicurve_roundtrip() {
        let tri = Triangulation::standard(2).unwrap();
        let a1 = crate::basis::basis_curve(&tri, 0).unwrap();
        let doc = MulticurveDoc::from_multicurve(&tri, &a1);
        let bytes = to_json_string(&doc);
        let parsed: MulticurveDoc = serde_json::from_str(&bytes).unwrap();
        let back = parsed.to_multicurve(&tri).unwrap();
        assert_eq!(back, a1);
        assert_eq!(to_json_string(&parsed), bytes);
    }
}
