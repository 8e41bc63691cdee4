//! The on-disk JSON model format and its conversions to the core types.
//!
//! Files are tagged by a `kind` field (`surface`, `curve`, `scheme`,
//! `certificate`); unknown fields are rejected. All rationals are strings.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use tensamp_core::builders::{CurveComponent, CurveModel};
use tensamp_core::exact::{Rat, RatMat, RatVec};
use tensamp_core::scheme::{SchemeComponent, SchemeModel, StratCertificate, Stratum};
use tensamp_core::surface::{
    CurveEntry, DivisorClass, IntersectionLattice, Status, SurfaceModel, SurfaceModelData,
};

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceFile {
    pub kind: String,
    pub rank: usize,
    pub basis: Vec<String>,
    pub gram: Vec<Vec<String>>,
    pub canonical: Vec<String>,
    pub curves: Vec<CurveFileEntry>,
    pub flags: FlagsFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ample_witness: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pseff_gens: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nef_gens: Option<Vec<Vec<String>>>,
    /// Validate the (1, rank-1) signature of the form at load time.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub hodge_index: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFileEntry {
    pub name: String,
    pub class: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsFile {
    pub neg_curves_complete: bool,
    pub curve_cone_generated: bool,
    pub proper_positive_dim: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub kind: String,
    pub components: Vec<CurveComponentFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveComponentFile {
    pub name: String,
    pub degree: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeFile {
    pub kind: String,
    pub components: Vec<SchemeComponentFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeComponentFile {
    pub component: String,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub kind: String,
    pub strata: Vec<StratumFile>,
    pub terminal: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumFile {
    pub section_power: i64,
    pub open_locus_quasi_affine: bool,
}

#[derive(Clone, Debug)]
pub enum ModelFile {
    Surface(SurfaceFile),
    Curve(CurveFile),
    Scheme(SchemeFile),
    Certificate(CertificateFile),
}

impl ModelFile {
    pub fn kind(&self) -> &str {
        match self {
            ModelFile::Surface(_) => "surface",
            ModelFile::Curve(_) => "curve",
            ModelFile::Scheme(_) => "scheme",
            ModelFile::Certificate(_) => "certificate",
        }
    }
}

fn from_value<T: DeserializeOwned>(value: serde_json::Value) -> Result<T, CliError> {
    serde_json::from_value(value).map_err(|e| CliError::parse(format!("invalid model file: {e}")))
}

/// Parses any model file, dispatching on the `kind` tag and rejecting
/// unknown fields.
pub fn parse_model(text: &str) -> Result<ModelFile, CliError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| CliError::parse(format!("invalid JSON: {e}")))?;
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| CliError::parse("model file is missing the \"kind\" field"))?
        .to_owned();
    match kind.as_str() {
        "surface" => Ok(ModelFile::Surface(from_value(value)?)),
        "curve" => Ok(ModelFile::Curve(from_value(value)?)),
        "scheme" => Ok(ModelFile::Scheme(from_value(value)?)),
        "certificate" => Ok(ModelFile::Certificate(from_value(value)?)),
        other => Err(CliError::parse(format!("unknown model kind {other:?}"))),
    }
}

/// Canonical output form: pretty JSON with sorted keys (the serializer maps
/// objects through ordered maps) and a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let v = serde_json::to_value(value)
        .map_err(|e| CliError::internal(format!("serialization failed: {e}")))?;
    let mut out = serde_json::to_string_pretty(&v)
        .map_err(|e| CliError::internal(format!("serialization failed: {e}")))?;
    out.push('\n');
    Ok(out)
}

pub fn parse_rat(s: &str) -> Result<Rat, CliError> {
    s.parse()
        .map_err(|_| CliError::parse(format!("cannot parse {s:?} as an exact rational")))
}

pub fn parse_rat_vec(raw: &[String]) -> Result<RatVec, CliError> {
    raw.iter()
        .map(|s| parse_rat(s))
        .collect::<Result<Vec<_>, _>>()
        .map(RatVec::new)
}

pub fn render_rat_vec(v: &RatVec) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

impl SurfaceFile {
    pub fn to_core(&self) -> Result<SurfaceModel, CliError> {
        if self.kind != "surface" {
            return Err(CliError::parse("expected a surface model file"));
        }
        if self.basis.len() != self.rank {
            return Err(CliError::usage(format!(
                "rank {} does not match {} basis names",
                self.rank,
                self.basis.len()
            )));
        }
        if self.gram.len() != self.rank {
            return Err(CliError::usage("gram matrix row count differs from rank"));
        }
        let mut entries = Vec::with_capacity(self.rank * self.rank);
        for row in &self.gram {
            if row.len() != self.rank {
                return Err(CliError::usage("gram matrix is not square"));
            }
            for cell in row {
                entries.push(parse_rat(cell)?);
            }
        }
        let gram = RatMat::new(self.rank, self.rank, entries)
            .map_err(|e| CliError::usage(e.to_string()))?;
        let lattice = if self.hodge_index {
            IntersectionLattice::with_hodge_check(gram, self.basis.clone())
        } else {
            IntersectionLattice::new(gram, self.basis.clone())
        }
        .map_err(|e| CliError::usage(e.to_string()))?;

        let expect_rank = |raw: &[String]| -> Result<DivisorClass, CliError> {
            if raw.len() != self.rank {
                return Err(CliError::usage(format!(
                    "class has {} coefficients, rank is {}",
                    raw.len(),
                    self.rank
                )));
            }
            Ok(DivisorClass::new(parse_rat_vec(raw)?))
        };

        let canonical = expect_rank(&self.canonical)?;
        let curves = self
            .curves
            .iter()
            .map(|c| {
                CurveEntry::new(c.name.clone(), expect_rank(&c.class)?)
                    .map_err(|e| CliError::usage(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let parse_opt_gens = |gens: &Option<Vec<Vec<String>>>| -> Result<_, CliError> {
            gens.as_ref()
                .map(|list| list.iter().map(|g| expect_rank(g)).collect())
                .transpose()
        };

        let data = SurfaceModelData {
            lattice,
            canonical,
            curves,
            neg_curves_complete: self.flags.neg_curves_complete,
            curve_cone_generated: self.flags.curve_cone_generated,
            proper_positive_dim: self.flags.proper_positive_dim,
            ample_witness: self
                .ample_witness
                .as_ref()
                .map(|w| expect_rank(w))
                .transpose()?,
            pseff_gens: parse_opt_gens(&self.pseff_gens)?,
            nef_gens: parse_opt_gens(&self.nef_gens)?,
        };
        SurfaceModel::new(data).map_err(|e| CliError::usage(e.to_string()))
    }

    pub fn from_core(model: &SurfaceModel) -> SurfaceFile {
        let rank = model.rank();
        let gram = (0..rank)
            .map(|r| {
                (0..rank)
                    .map(|c| model.lattice().gram().get(r, c).to_string())
                    .collect()
            })
            .collect();
        SurfaceFile {
            kind: "surface".into(),
            rank,
            basis: model.lattice().basis_names().to_vec(),
            gram,
            canonical: render_rat_vec(model.canonical().coeffs()),
            curves: model
                .curves()
                .iter()
                .map(|c| CurveFileEntry {
                    name: c.name().to_owned(),
                    class: render_rat_vec(c.class().coeffs()),
                })
                .collect(),
            flags: FlagsFile {
                neg_curves_complete: model.neg_curves_complete(),
                curve_cone_generated: model.curve_cone_generated(),
                proper_positive_dim: model.proper_positive_dim(),
            },
            ample_witness: model
                .ample_witness()
                .map(|w| render_rat_vec(w.coeffs())),
            pseff_gens: model
                .pseff_gens()
                .map(|g| g.iter().map(|v| render_rat_vec(v.coeffs())).collect()),
            nef_gens: model
                .nef_gens()
                .map(|g| g.iter().map(|v| render_rat_vec(v.coeffs())).collect()),
            hodge_index: model.lattice().hodge_index_checked(),
        }
    }
}

impl CurveFile {
    pub fn to_core(&self) -> Result<CurveModel, CliError> {
        if self.kind != "curve" {
            return Err(CliError::parse("expected a curve model file"));
        }
        CurveModel::new(
            self.components
                .iter()
                .map(|c| CurveComponent {
                    name: c.name.clone(),
                    degree: c.degree,
                })
                .collect(),
        )
        .map_err(|e| CliError::usage(e.to_string()))
    }
}

impl SchemeFile {
    pub fn to_core(&self) -> Result<SchemeModel, CliError> {
        if self.kind != "scheme" {
            return Err(CliError::parse("expected a scheme model file"));
        }
        let mut components = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let built = match c.component.as_str() {
                "point" => SchemeComponent::Point {
                    name: c.name.clone(),
                },
                "curve" => {
                    let curve = c.curve.as_ref().ok_or_else(|| {
                        CliError::parse(format!("component {:?} is missing its curve", c.name))
                    })?;
                    SchemeComponent::Curve {
                        name: c.name.clone(),
                        model: curve.to_core()?,
                    }
                }
                "surface" => {
                    let surface = c.surface.as_ref().ok_or_else(|| {
                        CliError::parse(format!("component {:?} is missing its surface", c.name))
                    })?;
                    let model = surface.to_core()?;
                    let class_raw = c.class.as_ref().ok_or_else(|| {
                        CliError::parse(format!("component {:?} is missing its class", c.name))
                    })?;
                    if class_raw.len() != model.rank() {
                        return Err(CliError::usage(format!(
                            "component {:?}: class has {} coefficients, rank is {}",
                            c.name,
                            class_raw.len(),
                            model.rank()
                        )));
                    }
                    SchemeComponent::Surface {
                        name: c.name.clone(),
                        class: DivisorClass::new(parse_rat_vec(class_raw)?),
                        model,
                    }
                }
                other => {
                    return Err(CliError::parse(format!(
                        "unknown scheme component kind {other:?}"
                    )))
                }
            };
            components.push(built);
        }
        SchemeModel::new(components).map_err(|e| CliError::usage(e.to_string()))
    }
}

impl CertificateFile {
    pub fn to_core(&self) -> Result<StratCertificate, CliError> {
        if self.kind != "certificate" {
            return Err(CliError::parse("expected a certificate file"));
        }
        let terminal = match self.terminal.as_str() {
            "yes" => Status::Yes,
            "no" => Status::No,
            "unknown" => Status::Unknown,
            other => {
                return Err(CliError::parse(format!(
                    "terminal verdict must be yes/no/unknown, got {other:?}"
                )))
            }
        };
        Ok(StratCertificate {
            strata: self
                .strata
                .iter()
                .map(|s| Stratum {
                    section_power: s.section_power,
                    open_locus_quasi_affine: s.open_locus_quasi_affine,
                })
                .collect(),
            terminal,
        })
    }
}
