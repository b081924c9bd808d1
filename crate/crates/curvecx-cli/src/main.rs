//! Command-line interface: validate inputs, compute homology classes and
//! intersection numbers, measure distances in a slice of the complex,
//! build surfaces from paths, and survey distance against minimal genus.
//!
//! Exit codes: 0 success, 2 parse failure, 3 invariant violation,
//! 4 precondition failure, 5 unreachable / censored result.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use curvecx::builder::{build_surface, corollary_survey, SurveyReport};
use curvecx::complex::{enumerate_vertices, Distance};
use curvecx::homology::homology_class;
use curvecx::intersect::{algebraic_intersection, geometric_intersection};
use curvecx::io::{
    survey_csv, to_json_string, MulticurveDoc, PathDoc, ReportDoc, SliceDoc, TriangulationDoc,
};
use curvecx::{Error, NormalMulticurve, Triangulation};

const EXIT_PARSE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;
const EXIT_PRECONDITION: u8 = 4;
const EXIT_CENSORED: u8 = 5;

#[derive(Parser)]
#[command(name = "curvecx", version, about = "multicurves, intersection numbers, and surfaces built from paths", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct OutputOpts {
    /// output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// write the primary artifact to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a triangulation or multicurve file against all invariants
    Validate {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Homology class of a multicurve in the symplectic basis
    Homology {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Geometric and algebraic intersection numbers of two multicurves
    Intersect {
        file1: PathBuf,
        file2: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Distance between two multicurves in a weight-bounded slice
    Distance {
        m1: PathBuf,
        m2: PathBuf,
        /// maximal total normal weight of slice vertices
        #[arg(long, value_name = "W")]
        weight_bound: u64,
        /// homology class of the slice (defaults to the class of M1)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Option<Vec<i64>>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Build the surface determined by a path file and report its genus
    Build {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Tabulate distance against minimal constructed genus over a slice
    Survey {
        #[arg(long)]
        genus: u32,
        /// homology class, e.g. 1,0,0,0
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Vec<i64>,
        #[arg(long, value_name = "W")]
        weight_bound: u64,
        /// maximal simple-path length for the genus search
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// seed for pair sampling (ChaCha8)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("CURVECX_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            if n > 0 {
                curvecx::configure_threads(n);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::GenusTooSmall(_)
        | Error::WeightLength { .. }
        | Error::InvalidNormalCoordinates { .. }
        | Error::DiscBoundingComponent(_)
        | Error::OrientationCount { .. }
        | Error::BadOrientationSign(_) => EXIT_INVARIANT,
        Error::TriangulationMismatch(..)
        | Error::NotDisjoint(_)
        | Error::NotNullHomologous { .. }
        | Error::ClassMismatch { .. }
        | Error::NonSimpleStep { .. }
        | Error::DegeneratePiece { .. }
        | Error::BadPath(_)
        | Error::ZeroAlpha
        | Error::NotInSlice(_) => EXIT_PRECONDITION,
    }
}

fn read_json(path: &Path) -> Result<serde_json::Value, ExitCode> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(EXIT_PARSE)
    })?;
    serde_json::from_str(&text).map_err(|e| {
        eprintln!("error: {} is not valid JSON: {e}", path.display());
        ExitCode::from(EXIT_PARSE)
    })
}

fn parse_doc<T: serde::de::DeserializeOwned>(
    value: serde_json::Value,
    path: &Path,
) -> Result<T, ExitCode> {
    serde_json::from_value(value).map_err(|e| {
        eprintln!("error: {} does not match the schema: {e}", path.display());
        ExitCode::from(EXIT_PARSE)
    })
}

fn load_multicurve(path: &Path) -> Result<(Triangulation, NormalMulticurve), ExitCode> {
    let value = read_json(path)?;
    let doc: MulticurveDoc = parse_doc(value, path)?;
    let tri = Triangulation::standard(doc.genus).map_err(print_err)?;
    let mc = doc.to_multicurve(&tri).map_err(print_err)?;
    Ok((tri, mc))
}

fn print_err(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code_for(&e))
}

fn emit(output: &OutputOpts, text: String) -> Result<(), ExitCode> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            ExitCode::from(EXIT_PARSE)
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, ExitCode> {
    match cmd {
        Command::Validate { file, output } => {
            let value = read_json(&file)?;
            let schema = value.get("schema").and_then(|s| s.as_str()).unwrap_or("");
            let result: Result<String, Error> = match schema {
                curvecx::io::SCHEMA_TRIANGULATION => {
                    let doc: TriangulationDoc = parse_doc(value, &file)?;
                    doc.validate().map(|tri| {
                        format!(
                            "triangulation: genus {}, E={}, F={}, chi={}",
                            tri.genus(),
                            tri.edge_count(),
                            tri.face_count(),
                            tri.euler_characteristic()
                        )
                    })
                }
                curvecx::io::SCHEMA_MULTICURVE => {
                    let doc: MulticurveDoc = parse_doc(value, &file)?;
                    Triangulation::standard(doc.genus).and_then(|tri| {
                        doc.to_multicurve(&tri).map(|mc| {
                            format!(
                                "multicurve: {} components, total weight {}, class {:?}",
                                mc.component_count(),
                                mc.total_weight(),
                                homology_class(&mc)
                            )
                        })
                    })
                }
                other => {
                    eprintln!("error: unknown schema {other:?}");
                    return Err(ExitCode::from(EXIT_PARSE));
                }
            };
            match result {
                Ok(desc) => {
                    let text = match output.format {
                        Format::Text => format!("valid: {desc}\n"),
                        Format::Json => to_json_string(&serde_json::json!({
                            "valid": true, "detail": desc,
                        })),
                    };
                    emit(&output, text)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    let text = match output.format {
                        Format::Text => format!("invalid: {e}\n"),
                        Format::Json => to_json_string(&serde_json::json!({
                            "valid": false, "errors": [e.to_string()],
                        })),
                    };
                    emit(&output, text)?;
                    Ok(ExitCode::from(exit_code_for(&e)))
                }
            }
        }

        Command::Homology { file, output } => {
            let (_tri, mc) = load_multicurve(&file)?;
            let class = homology_class(&mc);
            let text = match output.format {
                Format::Text => format!("class: {class:?}\n"),
                Format::Json => to_json_string(&serde_json::json!({ "class": class })),
            };
            emit(&output, text)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Intersect { file1, file2, output } => {
            let (tri, m1) = load_multicurve(&file1)?;
            let (tri2, m2) = load_multicurve(&file2)?;
            if tri.genus() != tri2.genus() {
                return Err(print_err(Error::TriangulationMismatch(
                    tri.edge_count(),
                    tri2.edge_count(),
                )));
            }
            let geo = geometric_intersection(&tri, &m1, &m2).map_err(print_err)?;
            let alg = algebraic_intersection(&tri, &m1, &m2).map_err(print_err)?;
            let text = match output.format {
                Format::Text => format!("geometric: {geo}\nalgebraic: {alg}\n"),
                Format::Json => {
                    to_json_string(&serde_json::json!({ "geometric": geo, "algebraic": alg }))
                }
            };
            emit(&output, text)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Distance { m1, m2, weight_bound, alpha, output } => {
            let (tri, c1) = load_multicurve(&m1)?;
            let (tri2, c2) = load_multicurve(&m2)?;
            if tri.genus() != tri2.genus() {
                return Err(print_err(Error::TriangulationMismatch(
                    tri.edge_count(),
                    tri2.edge_count(),
                )));
            }
            let alpha = alpha.unwrap_or_else(|| homology_class(&c1));
            let slice = enumerate_vertices(&tri, &alpha, weight_bound).map_err(print_err)?;
            let i = slice.require_index(&c1).map_err(print_err)?;
            let j = slice.require_index(&c2).map_err(print_err)?;
            match slice.distance(i, j) {
                Distance::Reached { d, path } => {
                    let witness: Vec<MulticurveDoc> = path
                        .iter()
                        .map(|&k| MulticurveDoc::from_multicurve(&tri, &slice.vertices()[k]))
                        .collect();
                    let text = match output.format {
                        Format::Text => {
                            let mut s = format!("distance: {d} (weight bound {weight_bound})\n");
                            for (step, doc) in witness.iter().enumerate() {
                                s.push_str(&format!(
                                    "  vertex {step}: weights {:?} orientations {:?}\n",
                                    doc.weights, doc.orientations
                                ));
                            }
                            s
                        }
                        Format::Json => to_json_string(&serde_json::json!({
                            "distance": d,
                            "weight_bound": weight_bound,
                            "witness": witness,
                        })),
                    };
                    emit(&output, text)?;
                    Ok(ExitCode::SUCCESS)
                }
                Distance::Unreachable { searched } => {
                    eprintln!(
                        "unreachable within weight bound {weight_bound}: any path in this slice is longer than {searched}"
                    );
                    Ok(ExitCode::from(EXIT_CENSORED))
                }
            }
        }

        Command::Build { file, output } => {
            let value = read_json(&file)?;
            let doc: PathDoc = parse_doc(value, &file)?;
            let tri = Triangulation::standard(doc.genus).map_err(print_err)?;
            let (path, choices) = doc.to_path(&tri).map_err(print_err)?;
            let report = build_surface(&tri, &path, &choices).map_err(print_err)?;
            let text = match output.format {
                Format::Text => format!(
                    "chi: {}\nboundary components: {}\nconnected: {}\ntotal genus: {}\ncomponents: {:?}\n",
                    report.chi,
                    report.boundary_components,
                    report.connected,
                    report.total_genus,
                    report
                        .components
                        .iter()
                        .map(|c| (c.chi, c.boundary, c.genus))
                        .collect::<Vec<_>>(),
                ),
                Format::Json => to_json_string(&ReportDoc::new(report)),
            };
            emit(&output, text)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Survey { genus, alpha, weight_bound, max_len, seed, output } => {
            let tri = Triangulation::standard(genus).map_err(print_err)?;
            let slice = enumerate_vertices(&tri, &alpha, weight_bound).map_err(print_err)?;
            if slice.is_empty() {
                eprintln!(
                    "warning: slice is empty (no multicurve of class {alpha:?} within weight {weight_bound})"
                );
            }
            let report = corollary_survey(&slice, max_len, seed, 200);
            match output.format {
                Format::Text => {
                    emit(&output, survey_csv(&report))?;
                    if output.out.is_some() {
                        print!("{}", summary_text(&report));
                    } else {
                        eprint!("{}", summary_text(&report));
                    }
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "summary": {
                            "sampled": report.sampled,
                            "censored": report.censored,
                            "zero_genus_pairs": report.zero_genus_pairs,
                            "envelope": report.envelope,
                        },
                        "rows": report.rows,
                        "slice": SliceDoc::from_slice(&slice),
                    });
                    emit(&output, to_json_string(&doc))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn summary_text(report: &SurveyReport) -> String {
    let mut s = format!(
        "sampled pairs: {}\ncensored: {}\nannulus-only pairs (genus 0): {}\n",
        report.sampled, report.censored, report.zero_genus_pairs
    );
    match report.envelope {
        Some((lo, hi)) => s.push_str(&format!("d/g envelope over genus>=1 pairs: [{lo}, {hi}]\n")),
        None => s.push_str("d/g envelope over genus>=1 pairs: (no such pairs)\n"),
    }
    s
}
