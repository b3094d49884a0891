//! Command-line front end to the catalog of skeletal polyhedra and
//! polygonal complexes.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use skeletal::catalog::{export, import_json, BuildOptions, Catalog, CatalogError, EntryKind, ExportFormat};
use skeletal::classification::{classify, VerificationReport};
use skeletal::geometry::Scalar;
use skeletal::incidence::PolygonalComplex;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "skeletal", version, about = "Build, classify and verify skeletal polyhedra and polygonal complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries.
    List {
        #[arg(long)]
        kind: Option<EntryKind>,
        /// Print entries as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Build an entry and print its element counts.
    Build {
        id: String,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Classify an entry and compare with its expected record.
    Verify {
        id: String,
        #[command(flatten)]
        build: BuildArgs,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Verify every catalog entry.
    VerifyAll {
        #[arg(long)]
        kind: Option<EntryKind>,
        #[arg(long)]
        window: Option<Scalar>,
        /// Number of worker threads.
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
    },
    /// Classify a complex stored as JSON.
    Classify { path: PathBuf },
    /// Write an entry as OFF, OBJ or JSON.
    Export {
        id: String,
        #[command(flatten)]
        build: BuildArgs,
        #[arg(long, default_value = "off")]
        format: ExportFormat,
        /// Decimal digits for float output.
        #[arg(long, default_value_t = 9)]
        precision: usize,
        /// Write infinite faces as truncated paths.
        #[arg(long)]
        truncate: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BuildArgs {
    /// Window radius in units of the structure scale (entry default if omitted).
    #[arg(long)]
    window: Option<Scalar>,
    #[arg(long)]
    scale: Option<Scalar>,
    /// Family parameters, e.g. `--params 1,2`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    params: Option<Vec<Scalar>>,
    /// Height of the blended component, in units of the structure scale.
    #[arg(long)]
    blend_scale: Option<Scalar>,
}

impl BuildArgs {
    fn options(&self) -> BuildOptions {
        BuildOptions {
            params: self.params.clone(),
            window: self.window.clone(),
            scale: self.scale.clone(),
            blend_scale: self.blend_scale.clone(),
        }
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Failure carrying its exit status.
struct Failure(u8, String);

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        let code = match e {
            CatalogError::UnknownEntry(_) | CatalogError::BadParameters(_) | CatalogError::UnsupportedFace => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        };
        Failure(code, e.to_string())
    }
}

/// `writeln!` into a `String`, which cannot fail.
macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        let _ = writeln!($out, $($arg)*);
    }};
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    // a closed pipe (e.g. `| head`) is not an error
    match std::io::stdout().lock().write_all(out.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
        _ => {}
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Command, out: &mut String) -> Result<u8, Failure> {
    let catalog = Catalog::load()?;
    match cmd {
        Command::List { kind, json } => {
            let entries = catalog.list(kind);
            if json {
                let text = serde_json::to_string_pretty(&entries).map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))?;
                outln!(out, "{text}");
            } else {
                for e in &entries {
                    let params = if e.params.is_empty() {
                        String::new()
                    } else {
                        format!("  params={}", e.params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
                    };
                    outln!(out, "{:<32} {}{params}", e.id, e.kind);
                }
                outln!(out, "{} entries", entries.len());
            }
            Ok(0)
        }
        Command::Build { id, build } => {
            let c = catalog.get(&id)?.build(&build.options())?;
            print_summary(out, &id, &c);
            Ok(0)
        }
        Command::Verify { id, build, json } => {
            let report = catalog.get(&id)?.verify(&build.options());
            if json {
                let text = serde_json::to_string_pretty(&report).map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))?;
                outln!(out, "{text}");
            } else {
                print_report(out, &report);
            }
            report_status(&report)
        }
        Command::VerifyAll { kind, window, jobs } => {
            let reports = catalog.verify_all(kind, window, jobs);
            let mut status = 0;
            for r in &reports {
                let mism = r.mismatches().count();
                let verdict = match (&r.error, mism) {
                    (Some(e), _) => format!("ERROR {e}"),
                    (None, 0) => format!("ok ({} fields)", r.fields.len()),
                    (None, n) => format!("MISMATCH {n} of {} fields", r.fields.len()),
                };
                outln!(out, "{:<32} {verdict}  [{:.2}s]", r.id, r.seconds);
                status = status.max(report_status(r).unwrap_or_else(|f| f.0));
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            outln!(out, "{passed}/{} entries verified", reports.len());
            Ok(status)
        }
        Command::Classify { path } => {
            let text = std::fs::read_to_string(&path).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
            let c = import_json(&text).map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
            let (rec, _) = classify(&c).map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))?;
            let text = serde_json::to_string_pretty(&rec).map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))?;
            outln!(out, "{text}");
            Ok(0)
        }
        Command::Export { id, build, format, precision, truncate, out: path } => {
            let c = catalog.get(&id)?.build(&build.options())?;
            let text = export(&c, format, precision, truncate)?;
            match path {
                Some(p) => std::fs::write(&p, text).map_err(|e| Failure(EXIT_INTERNAL, format!("{}: {e}", p.display())))?,
                None => out.push_str(&text),
            }
            Ok(0)
        }
    }
}

fn report_status(r: &VerificationReport) -> Result<u8, Failure> {
    match (&r.error, r.passed()) {
        (Some(e), _) => Err(Failure(EXIT_INTERNAL, format!("{}: {e}", r.id))),
        (None, true) => Ok(0),
        (None, false) => Ok(EXIT_MISMATCH),
    }
}

fn print_summary(out: &mut String, id: &str, c: &PolygonalComplex) {
    outln!(out, "{id}");
    outln!(out, "  vertices: {}", c.vertices().len());
    outln!(out, "  edges:    {}", c.edges().len());
    outln!(out, "  faces:    {}", c.faces().len());
    match c.window() {
        Some(w) => outln!(out, "  window:   {w} ({} interior vertices)", c.interior_vertices().count()),
        None => outln!(out, "  finite"),
    }
}

fn print_report(out: &mut String, r: &VerificationReport) {
    outln!(out, "{} (window {})", r.id, r.windows.join(", "));
    for f in &r.fields {
        let mark = if f.matched { "ok" } else { "MISMATCH" };
        outln!(out, "  {:<24} expected {:<24} computed {:<24} {mark}", f.field, f.expected.to_string(), f.computed.to_string());
    }
    if let Some(e) = &r.error {
        outln!(out, "  error: {e}");
    }
    outln!(out, "  {:.2}s", r.seconds);
}
