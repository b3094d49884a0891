//! Mesh export in OFF, OBJ and exact JSON.

use std::fmt::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::incidence::{build_complex, ComplexData, PolygonalComplex};

use super::CatalogError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Off,
    Obj,
    Json,
}

impl FromStr for ExportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "off" => Ok(ExportFormat::Off),
            "obj" => Ok(ExportFormat::Obj),
            "json" => Ok(ExportFormat::Json),
            _ => Err(format!("unknown format `{s}` (off, obj, json)")),
        }
    }
}

/// Float rendering of a complex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExportMesh {
    /// Coordinates rounded to the requested number of decimals.
    pub vertices: Vec<[String; 3]>,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<Vec<usize>>,
    /// Indices into `faces` of truncated infinite faces.
    pub open_faces: Vec<usize>,
}

impl ExportMesh {
    pub fn new(c: &PolygonalComplex, precision: usize) -> Self {
        let vertices = c.vertices().iter().map(|v| [0, 1, 2].map(|i| v.0[i].to_decimal(precision))).collect();
        let faces = c.faces().iter().map(|f| f.vertices.clone()).collect();
        let open_faces = c.faces().iter().enumerate().filter(|(_, f)| !f.closed).map(|(i, _)| i).collect();
        ExportMesh { vertices, edges: c.edges().to_vec(), faces, open_faces }
    }
}

/// Renders `c`. OFF and OBJ refuse infinite faces unless `truncate` is set,
/// in which case they are written as the stored vertex paths and listed in
/// a comment.
pub fn export(c: &PolygonalComplex, format: ExportFormat, precision: usize, truncate: bool) -> Result<String, CatalogError> {
    if format == ExportFormat::Json {
        return serde_json::to_string_pretty(&c.to_data()).map_err(|e| CatalogError::Data(e.to_string()));
    }
    let mesh = ExportMesh::new(c, precision);
    if !mesh.open_faces.is_empty() && !truncate {
        return Err(CatalogError::UnsupportedFace);
    }
    let mut out = String::new();
    let open = |out: &mut String| {
        if !mesh.open_faces.is_empty() {
            let ids: Vec<String> = mesh.open_faces.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(out, "# truncated faces: {}", ids.join(" "));
        }
    };
    match format {
        ExportFormat::Off => {
            out.push_str("OFF\n");
            open(&mut out);
            let _ = writeln!(out, "{} {} {}", mesh.vertices.len(), mesh.faces.len(), mesh.edges.len());
            for [x, y, z] in &mesh.vertices {
                let _ = writeln!(out, "{x} {y} {z}");
            }
            for f in &mesh.faces {
                let ids: Vec<String> = f.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(out, "{} {}", f.len(), ids.join(" "));
            }
        }
        ExportFormat::Obj => {
            open(&mut out);
            for [x, y, z] in &mesh.vertices {
                let _ = writeln!(out, "v {x} {y} {z}");
            }
            for [a, b] in &mesh.edges {
                let _ = writeln!(out, "l {} {}", a + 1, b + 1);
            }
            for (i, f) in mesh.faces.iter().enumerate() {
                let ids: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
                let tag = if mesh.open_faces.contains(&i) { "l" } else { "f" };
                let _ = writeln!(out, "{tag} {}", ids.join(" "));
            }
        }
        ExportFormat::Json => unreachable!(),
    }
    Ok(out)
}

/// Reads a complex written by [`export`] in JSON form.
pub fn import_json(text: &str) -> Result<PolygonalComplex, CatalogError> {
    let data: ComplexData = serde_json::from_str(text).map_err(|e| CatalogError::Data(e.to_string()))?;
    build_complex(data).map_err(|e| CatalogError::Data(e.to_string()))
}
