//! The named catalog: generator data, expected records and builders.

mod export;

use std::fmt;
use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classification::{verify_complex, ClassificationError, ClassificationRecord, VerificationReport};
use crate::construction::{
    generate_from_chiral, two_skeleton, wythoff, BlendComponent, ChiralFamily, ChiralGeneratorPair, ConstructionError, GeneratorTriple, Rank4Generators,
};
use crate::geometry::Scalar;
use crate::incidence::PolygonalComplex;

pub use export::{export, import_json, ExportFormat, ExportMesh};

/// Data file shipped with the crate.
const BUILTIN: &str = include_str!("../../data/catalog.json");
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown entry `{0}`")]
    UnknownEntry(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("catalog data: {0}")]
    Data(String),
    #[error("infinite faces need --truncate for this format")]
    UnsupportedFace,
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Classification(#[from] ClassificationError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryKind {
    FiniteRegular,
    PlanarApeirohedron,
    Blended,
    PureApeirohedron,
    Rank4Skeleton,
    SimplyFlagTransitiveComplex,
    ChiralFamily,
}

impl EntryKind {
    pub const ALL: [EntryKind; 7] = [
        EntryKind::FiniteRegular,
        EntryKind::PlanarApeirohedron,
        EntryKind::Blended,
        EntryKind::PureApeirohedron,
        EntryKind::Rank4Skeleton,
        EntryKind::SimplyFlagTransitiveComplex,
        EntryKind::ChiralFamily,
    ];
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        f.write_str(&s)
    }
}

impl std::str::FromStr for EntryKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        serde_json::from_value(serde_json::Value::String(s.into())).map_err(|_| format!("unknown kind `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum GeneratorData {
    Triple(GeneratorTriple),
    /// A planar polyhedron blended with a segment or apeirogon; the height
    /// can be overridden at build time.
    Blend { base: GeneratorTriple, component: BlendComponent },
    Rank4(Rank4Generators),
    Chiral(ChiralFamily),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub kind: EntryKind,
    pub generators: GeneratorData,
    /// Default parameters of a family.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<Scalar>,
    pub expected: ClassificationRecord,
    pub radicand: u8,
    /// Structure scale `a`.
    pub scale: Scalar,
    /// Default window radius in units of `scale`.
    pub window: Scalar,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Catalog {
    pub version: u32,
    pub entries: Vec<CatalogEntry>,
}

/// Options for [`CatalogEntry::build`].
#[derive(Debug, Clone, Default)]
pub struct BuildOptions {
    pub params: Option<Vec<Scalar>>,
    /// Window radius in units of the structure scale.
    pub window: Option<Scalar>,
    pub scale: Option<Scalar>,
    /// Blend height in units of the structure scale.
    pub blend_scale: Option<Scalar>,
}

impl Catalog {
    /// The shipped catalog, or `catalog.json` in `$SKELETAL_CATALOG_DIR`.
    pub fn load() -> Result<&'static Catalog, CatalogError> {
        static CATALOG: OnceLock<Result<Catalog, String>> = OnceLock::new();
        CATALOG
            .get_or_init(|| {
                let text = match std::env::var_os("SKELETAL_CATALOG_DIR") {
                    Some(dir) => {
                        let p = PathBuf::from(dir).join("catalog.json");
                        std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?
                    }
                    None => BUILTIN.to_string(),
                };
                Catalog::parse(&text)
            })
            .as_ref()
            .map_err(|e| CatalogError::Data(e.clone()))
    }

    pub fn parse(text: &str) -> Result<Catalog, String> {
        let c: Catalog = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if c.version != SCHEMA_VERSION {
            return Err(format!("schema version {} (expected {SCHEMA_VERSION})", c.version));
        }
        let mut ids: Vec<&str> = c.entries.iter().map(|e| e.id.as_str()).collect();
        ids.sort();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(format!("duplicate id `{}`", w[0]));
        }
        Ok(c)
    }

    pub fn get(&self, id: &str) -> Result<&CatalogEntry, CatalogError> {
        self.entries.iter().find(|e| e.id == id).ok_or_else(|| CatalogError::UnknownEntry(id.into()))
    }

    pub fn list(&self, kind: Option<EntryKind>) -> Vec<&CatalogEntry> {
        self.entries.iter().filter(|e| kind.map_or(true, |k| e.kind == k)).collect()
    }

    pub fn count(&self, kind: EntryKind) -> usize {
        self.list(Some(kind)).len()
    }

    /// Verifies every entry of `kind` (all kinds for `None`) on `jobs`
    /// worker threads, in catalog order.
    pub fn verify_all(&self, kind: Option<EntryKind>, window: Option<Scalar>, jobs: usize) -> Vec<VerificationReport> {
        let entries = self.list(kind);
        let next = std::sync::atomic::AtomicUsize::new(0);
        let results = std::sync::Mutex::new(vec![None; entries.len()]);
        std::thread::scope(|s| {
            for _ in 0..jobs.max(1).min(entries.len().max(1)) {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    let Some(e) = entries.get(i) else { break };
                    let r = verify_catalog_entry(e, window.clone());
                    results.lock().expect("report slot")[i] = Some(r);
                });
            }
        });
        results.into_inner().expect("report slots").into_iter().flatten().collect()
    }

    /// Builds a family member; `window` is in units of the length of the
    /// translation part of `S₁`, rounded up.
    pub fn build_family(pair: &ChiralGeneratorPair, window: &Scalar) -> Result<PolygonalComplex, CatalogError> {
        let len = pair.s1.translation_part().norm2().to_f64().sqrt().ceil().max(1.0);
        let window = window * &Scalar::int(len as i64);
        Ok(generate_from_chiral(pair, &window)?)
    }
}


impl CatalogEntry {
    pub fn is_family(&self) -> bool {
        self.kind == EntryKind::ChiralFamily
    }

    /// Builds the entry at its defaults, overridden by `opts`.
    pub fn build(&self, opts: &BuildOptions) -> Result<PolygonalComplex, CatalogError> {
        let scale = opts.scale.clone().unwrap_or_else(|| Scalar::one());
        if scale.signum() <= 0 {
            return Err(CatalogError::BadParameters("scale must be positive".into()));
        }
        let window = &(opts.window.as_ref().unwrap_or(&self.window) * &self.scale) * &scale;
        let c = match &self.generators {
            GeneratorData::Triple(g) => wythoff(&g.scaled(&scale), Some(&window))?,
            GeneratorData::Blend { base, component } => {
                let comp = match (component, &opts.blend_scale) {
                    (c, None) => c.clone(),
                    (BlendComponent::Segment(_), Some(h)) => BlendComponent::Segment(h * &self.scale),
                    (BlendComponent::Apeirogon(_), Some(h)) => BlendComponent::Apeirogon(h * &self.scale),
                };
                wythoff(&base.blend(&comp)?.scaled(&scale), Some(&window))?
            }
            GeneratorData::Rank4(g) => two_skeleton(&g.scaled(&scale), &window)?,
            GeneratorData::Chiral(f) => {
                let params = opts.params.as_ref().unwrap_or(&self.params);
                let [c, d] = params.as_slice() else {
                    return Err(CatalogError::BadParameters(format!("{} takes two parameters", self.id)));
                };
                if c.is_zero() && d.is_zero() {
                    return Err(CatalogError::BadParameters("parameters must not both be zero".into()));
                }
                let pair = f.instance(&(c * &scale), &(d * &scale))?;
                Catalog::build_family(&pair, &window)?
            }
        };
        Ok(c)
    }

    /// Expected record, adjusted for families built away from their
    /// default parameters. Only fields shared by every member, regular
    /// members included, are kept: faces per edge, and the Schläfli type
    /// of a finite-faced family.
    pub fn expected_for(&self, params: Option<&[Scalar]>) -> ClassificationRecord {
        match (params, &self.generators) {
            (Some(p), GeneratorData::Chiral(f)) if p != self.params.as_slice() => ClassificationRecord {
                schlafli: f.spec.p.and(self.expected.schlafli.clone()),
                r: self.expected.r,
                ..Default::default()
            },
            _ => self.expected.clone(),
        }
    }

    /// Builds the entry and compares every expected field.
    pub fn verify(&self, opts: &BuildOptions) -> VerificationReport {
        let start = Instant::now();
        let w = opts.window.as_ref().unwrap_or(&self.window);
        let mut report = VerificationReport { id: self.id.clone(), fields: vec![], windows: vec![w.to_string()], seconds: 0.0, error: None };
        let expected = self.expected_for(opts.params.as_deref());
        let a = &self.scale * opts.scale.as_ref().unwrap_or(&Scalar::one());
        match self.build(opts) {
            Ok(c) => match verify_complex(&c, &expected, &a) {
                Ok(f) => report.fields = f,
                Err(e) => report.error = Some(e.to_string()),
            },
            Err(e) => report.error = Some(e.to_string()),
        }
        report.seconds = start.elapsed().as_secs_f64();
        report
    }
}

/// Verifies `entry` at its default window.
pub fn verify_catalog_entry(entry: &CatalogEntry, window: Option<Scalar>) -> VerificationReport {
    entry.verify(&BuildOptions { window, ..Default::default() })
}
