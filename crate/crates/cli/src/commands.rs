//! Subcommand definitions and implementations. Every command writes its
//! report to standard output in canonical JSON form (sorted keys, reduced
//! rationals, trailing newline), so identical inputs produce byte-identical
//! output. Verdict-producing commands exit 0/1/2 for yes/no/unknown.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use tensamp_core::builders::{
    build_blowup_p2, build_ruled, build_toric, nagata_excluded, threefold_edge_check,
    BlowupP2Config, ConormalBundle, PointConfig, RuledData, ToricCycle,
};
use tensamp_core::scheme::verify_scheme_verdict;
use tensamp_core::surface::{
    verify_group_verdict, verify_verdict, DivisorClass, Property, SurfaceModel, Verdict,
};

use crate::model::{
    parse_model, parse_rat, to_canonical_json, ModelFile, SurfaceFile,
};
use crate::plot;
use crate::report::{evidence_to_json, QueryEcho, VerdictReport};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "tensamp",
    version,
    about = "Exact-arithmetic positivity classifiers for divisor classes on surface models"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a divisor class on a surface or curve model
    Classify {
        /// Model file (resolved against TENSAMP_MODELS when not found)
        model: PathBuf,
        /// One of: nef, ample, big, antibig, tensample
        #[arg(long)]
        property: String,
        /// Comma-separated exact rationals, or the shorthands K / -K
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
    },
    /// Build a model file for one of the standard families
    Build {
        #[command(subcommand)]
        family: BuildFamily,
    },
    /// Canonical-class report for a surface model
    CanonicalReport { model: PathBuf },
    /// Emit the 2D sign pieces of the big cone: CSV on stdout, SVG to a file
    Cones {
        model: PathBuf,
        /// Two comma-separated basis indices spanning the slice plane
        #[arg(long, default_value = "0,1")]
        slice: String,
        /// Write the presentation SVG here
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Decide whether the subgroup generated by the given classes restricts
    /// to a generator on every subvariety
    Group {
        model: PathBuf,
        /// Generator class specs (comma-separated rationals, or K / -K)
        #[arg(allow_hyphen_values = true)]
        generators: Vec<String>,
    },
    /// Exact integer form of the Nagata exclusion predicate
    Nagata {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        /// Comma-separated multiplicities, one per point
        #[arg(long)]
        m: String,
    },
    /// Generation test for a threefold blown up along a curve
    Edge3fold {
        /// Degree of the bundle restricted to the curve
        #[arg(long, allow_hyphen_values = true)]
        deg: i64,
        /// Conormal bundle degree (unstable case)
        #[arg(long, allow_hyphen_values = true)]
        e: Option<i64>,
        /// Destabilizing quotient degree (unstable case)
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
        /// The conormal bundle is semistable
        #[arg(long)]
        semistable: bool,
    },
    /// Compose per-component verdicts for a scheme model
    Compose { model: PathBuf },
    /// Validate a stratification certificate
    Certify { certificate: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum BuildFamily {
    /// Ruled surface over a genus-g curve
    Ruled {
        #[arg(long)]
        g: u32,
        /// Degree of the rank-2 bundle
        #[arg(long, allow_hyphen_values = true)]
        e: i64,
        /// Degree of the destabilizing quotient (omit for semistable)
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
        #[arg(long)]
        semistable: bool,
    },
    /// Smooth complete toric surface from its boundary cycle
    Toric {
        /// Comma-separated boundary self-intersections
        #[arg(long, allow_hyphen_values = true)]
        cycle: String,
    },
    /// Blow-up of the plane in r distinct points
    BlowupP2 {
        #[arg(long)]
        r: u32,
        /// one of: general, line, conic
        #[arg(long, default_value = "general")]
        config: String,
        /// Assert the negative-curve catalog complete
        #[arg(long)]
        neg_complete: Option<bool>,
    },
}

/// Searches the literal path first, then under `TENSAMP_MODELS`.
pub fn resolve_model_path(path: &Path) -> Result<PathBuf, CliError> {
    if path.exists() {
        return Ok(path.to_owned());
    }
    if let Ok(root) = std::env::var("TENSAMP_MODELS") {
        let candidate = Path::new(&root).join(path);
        if candidate.exists() {
            return Ok(candidate);
        }
    }
    Err(CliError::io(format!("model file not found: {}", path.display())))
}

fn read_model(path: &Path) -> Result<(String, ModelFile), CliError> {
    let resolved = resolve_model_path(path)?;
    let text = std::fs::read_to_string(&resolved)
        .map_err(|e| CliError::io(format!("cannot read {}: {e}", resolved.display())))?;
    Ok((path.display().to_string(), parse_model(&text)?))
}

fn parse_class_spec(spec: &str, model: &SurfaceModel) -> Result<DivisorClass, CliError> {
    match spec.trim() {
        "K" => Ok(model.canonical().clone()),
        "-K" => Ok(model.canonical().neg()),
        csv => {
            let parts: Vec<&str> = csv.split(',').collect();
            if parts.len() != model.rank() {
                return Err(CliError::usage(format!(
                    "class spec has {} coefficients, rank is {}",
                    parts.len(),
                    model.rank()
                )));
            }
            let coeffs = parts
                .iter()
                .map(|p| parse_rat(p))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(DivisorClass::new(coeffs.into_iter().collect()))
        }
    }
}

fn render_class(d: &DivisorClass) -> Vec<String> {
    d.coeffs().iter().map(|c| c.to_string()).collect()
}

fn print_report(report: &VerdictReport) -> Result<i32, CliError> {
    print!("{}", to_canonical_json(report)?);
    Ok(report.exit_code())
}

fn classified(
    model_name: String,
    model: &SurfaceModel,
    property: Property,
    class: &DivisorClass,
) -> Result<i32, CliError> {
    let verdict = model
        .classify(property, class)
        .map_err(|e| CliError::usage(e.to_string()))?;
    if !verify_verdict(model, property, class, &verdict) {
        return Err(CliError::internal(format!(
            "{} verdict failed its own certificate verification",
            property.as_str()
        )));
    }
    let report = VerdictReport::new(
        QueryEcho {
            command: "classify".into(),
            model: model_name,
            property: Some(property.as_str().to_owned()),
            class: Some(render_class(class)),
            generators: None,
        },
        &verdict,
    );
    print_report(&report)
}

fn run_classify(path: &Path, property: &str, class: Option<&str>) -> Result<i32, CliError> {
    let (name, file) = read_model(path)?;
    match file {
        ModelFile::Surface(surface) => {
            let prop = Property::parse(property)
                .ok_or_else(|| CliError::usage(format!("unknown property {property:?}")))?;
            let model = surface.to_core()?;
            let spec = class
                .ok_or_else(|| CliError::usage("surface classification needs --class"))?;
            let d = parse_class_spec(spec, &model)?;
            classified(name, &model, prop, &d)
        }
        ModelFile::Curve(curve) => {
            if property != "tensample" {
                return Err(CliError::usage(
                    "curve models only classify the tensample property",
                ));
            }
            if class.is_some() {
                return Err(CliError::usage(
                    "curve models carry their bundle degrees; omit --class",
                ));
            }
            let model = curve.to_core()?;
            let verdict = model.tensor_ample();
            let report = VerdictReport::new(
                QueryEcho {
                    command: "classify".into(),
                    model: name,
                    property: Some("tensample".into()),
                    class: None,
                    generators: None,
                },
                &verdict,
            );
            print_report(&report)
        }
        ModelFile::Scheme(_) => Err(CliError::usage(
            "scheme models are classified with the compose subcommand",
        )),
        ModelFile::Certificate(_) => Err(CliError::usage(
            "certificates are checked with the certify subcommand",
        )),
    }
}

fn run_build(family: &BuildFamily) -> Result<i32, CliError> {
    let model = match family {
        BuildFamily::Ruled {
            g,
            e,
            d,
            semistable,
        } => {
            let rd = match (d, semistable) {
                (Some(d), false) => {
                    RuledData::unstable(*g, *e, *d).map_err(|e| CliError::usage(e.to_string()))?
                }
                (None, true) => RuledData::semistable(*g, *e),
                _ => {
                    return Err(CliError::usage(
                        "pass exactly one of --d <quotient degree> or --semistable",
                    ))
                }
            };
            build_ruled(&rd).map_err(|e| CliError::usage(e.to_string()))?
        }
        BuildFamily::Toric { cycle } => {
            let ints = cycle
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<i64>()
                        .map_err(|_| CliError::parse(format!("bad cycle entry {p:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let tc = ToricCycle::new(ints).map_err(|e| CliError::usage(e.to_string()))?;
            build_toric(&tc).map_err(|e| CliError::usage(e.to_string()))?
        }
        BuildFamily::BlowupP2 {
            r,
            config,
            neg_complete,
        } => {
            let pc = match config.as_str() {
                "general" => PointConfig::General,
                "line" => PointConfig::OnLine,
                "conic" => PointConfig::OnConic,
                other => {
                    return Err(CliError::usage(format!(
                        "unknown configuration {other:?}; use general, line or conic"
                    )))
                }
            };
            let mut cfg =
                BlowupP2Config::new(*r, pc).map_err(|e| CliError::usage(e.to_string()))?;
            if let Some(flag) = neg_complete {
                cfg = cfg.with_neg_complete(*flag);
            }
            build_blowup_p2(&cfg).map_err(|e| CliError::usage(e.to_string()))?
        }
    };
    print!("{}", to_canonical_json(&SurfaceFile::from_core(&model))?);
    Ok(0)
}

fn run_canonical_report(path: &Path) -> Result<i32, CliError> {
    let (name, file) = read_model(path)?;
    let ModelFile::Surface(surface) = file else {
        return Err(CliError::usage("canonical-report needs a surface model"));
    };
    let model = surface.to_core()?;
    let report = model
        .canonical_report()
        .map_err(|e| CliError::usage(e.to_string()))?;
    let verdict_json = |v: &Verdict| {
        json!({
            "status": v.status.to_string(),
            "evidence": evidence_to_json(&v.evidence),
            "assumptions": v.assumptions.iter().map(|a| a.as_str()).collect::<Vec<_>>(),
        })
    };
    let out = json!({
        "query": {"command": "canonical-report", "model": name},
        "canonical": render_class(model.canonical()),
        "big": verdict_json(&report.big),
        "anti_big": verdict_json(&report.anti_big),
        "minus_two_curves": report.minus_two_curves,
        "tensor_ample": verdict_json(&report.tensor_ample),
        "minus_two_free_cross_check": report.minus_two_free_cross_check,
        "status": report.tensor_ample.status.to_string(),
    });
    print!("{}", to_canonical_json(&out)?);
    Ok(crate::report::status_exit_code(report.tensor_ample.status))
}

fn run_cones(path: &Path, slice: &str, svg: Option<&Path>) -> Result<i32, CliError> {
    let (_, file) = read_model(path)?;
    let ModelFile::Surface(surface) = file else {
        return Err(CliError::usage("cones needs a surface model"));
    };
    let model = surface.to_core()?;
    let axes: Vec<usize> = slice
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::parse(format!("bad slice axis {p:?}")))
        })
        .collect::<Result<_, _>>()?;
    if axes.len() != 2 {
        return Err(CliError::usage("--slice takes exactly two basis indices"));
    }
    let data = plot::cone_plot(&model, axes[0], axes[1])?;
    if let Some(svg_path) = svg {
        std::fs::write(svg_path, plot::to_svg(&data))
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", svg_path.display())))?;
    }
    print!("{}", plot::to_csv(&data));
    Ok(0)
}

fn run_group(path: &Path, generators: &[String]) -> Result<i32, CliError> {
    let (name, file) = read_model(path)?;
    let ModelFile::Surface(surface) = file else {
        return Err(CliError::usage("group needs a surface model"));
    };
    if generators.is_empty() {
        return Err(CliError::usage("group needs at least one generator spec"));
    }
    let model = surface.to_core()?;
    let gens = generators
        .iter()
        .map(|g| parse_class_spec(g, &model))
        .collect::<Result<Vec<_>, _>>()?;
    let verdict = model
        .group_tensor_ample(&gens)
        .map_err(|e| CliError::usage(e.to_string()))?;
    if !verify_group_verdict(&model, &gens, &verdict) {
        return Err(CliError::internal(
            "group verdict failed its own certificate verification",
        ));
    }
    let report = VerdictReport::new(
        QueryEcho {
            command: "group".into(),
            model: name,
            property: Some("tensample".into()),
            class: None,
            generators: Some(gens.iter().map(render_class).collect()),
        },
        &verdict,
    );
    print_report(&report)
}

fn run_nagata(r: u32, d: u32, m: &str) -> Result<i32, CliError> {
    let mults = m
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| CliError::parse(format!("bad multiplicity {p:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let excluded = nagata_excluded(r, d, &mults).map_err(|e| CliError::usage(e.to_string()))?;
    let out = json!({
        "query": {"command": "nagata", "r": r, "d": d, "m": mults},
        "excluded": excluded,
    });
    print!("{}", to_canonical_json(&out)?);
    Ok(0)
}

fn run_edge3fold(
    deg: i64,
    e: Option<i64>,
    d: Option<i64>,
    semistable: bool,
) -> Result<i32, CliError> {
    let conormal = match (e, d, semistable) {
        (None, None, true) => ConormalBundle::Semistable,
        (Some(e), Some(d), false) => ConormalBundle::Unstable {
            degree: e,
            quotient_degree: d,
        },
        _ => {
            return Err(CliError::usage(
                "pass either --semistable or both --e and --d",
            ))
        }
    };
    let passes =
        threefold_edge_check(deg, &conormal).map_err(|e| CliError::usage(e.to_string()))?;
    let out = json!({
        "query": {
            "command": "edge3fold",
            "deg": deg,
            "conormal": match conormal {
                ConormalBundle::Semistable => json!("semistable"),
                ConormalBundle::Unstable { degree, quotient_degree } =>
                    json!({"e": degree, "d": quotient_degree}),
            },
        },
        "passes": passes,
    });
    print!("{}", to_canonical_json(&out)?);
    Ok(0)
}

fn run_compose(path: &Path) -> Result<i32, CliError> {
    let (name, file) = read_model(path)?;
    let ModelFile::Scheme(scheme) = file else {
        return Err(CliError::usage("compose needs a scheme model"));
    };
    let model = scheme.to_core()?;
    let verdict = model
        .tensor_ample()
        .map_err(|e| CliError::usage(e.to_string()))?;
    if !verify_scheme_verdict(&model, &verdict) {
        return Err(CliError::internal(
            "scheme verdict failed its own certificate verification",
        ));
    }
    let report = VerdictReport::new(
        QueryEcho {
            command: "compose".into(),
            model: name,
            property: Some("tensample".into()),
            class: None,
            generators: None,
        },
        &verdict,
    );
    print_report(&report)
}

fn run_certify(path: &Path) -> Result<i32, CliError> {
    let (name, file) = read_model(path)?;
    let ModelFile::Certificate(cert) = file else {
        return Err(CliError::usage("certify needs a certificate file"));
    };
    let verdict = cert.to_core()?.validate();
    let report = VerdictReport::new(
        QueryEcho {
            command: "certify".into(),
            model: name,
            property: Some("tensample".into()),
            class: None,
            generators: None,
        },
        &verdict,
    );
    print_report(&report)
}

/// Executes a parsed command, returning the process exit code.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Classify {
            model,
            property,
            class,
        } => run_classify(model, property, class.as_deref()),
        Command::Build { family } => run_build(family),
        Command::CanonicalReport { model } => run_canonical_report(model),
        Command::Cones { model, slice, svg } => run_cones(model, slice, svg.as_deref()),
        Command::Group { model, generators } => run_group(model, generators),
        Command::Nagata { r, d, m } => run_nagata(*r, *d, m),
        Command::Edge3fold {
            deg,
            e,
            d,
            semistable,
        } => run_edge3fold(*deg, *e, *d, *semistable),
        Command::Compose { model } => run_compose(model),
        Command::Certify { certificate } => run_certify(certificate),
    }
}
