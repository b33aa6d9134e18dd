mod render;
mod specfile;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hamquot::classify::classify_unvalidated;
use hamquot::gallery;
use hamquot::simplicial::DEFAULT_MAX_SIMPLICES;
use hamquot::{validate, verify_report, Error, HamSpec, VerificationStatus};
use serde_json::{json, Value};

const EXIT_VALIDATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_SKIPPED: u8 = 4;

#[derive(Parser)]
#[command(name = "hamquot", version, about = "Orbit spaces of Hamiltonian torus actions from fixed-point data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate, stratify and classify a spec file.
    Classify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        skip_validation: bool,
    },
    /// Built-in examples.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Classify, then check the verdict against the homology of a simplicial model.
    Verify {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_SIMPLICES)]
        max_simplices: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GalleryAction {
    List,
    Show {
        name: String,
        #[arg(long, default_value_t = 1)]
        genus: u32,
    },
    Export {
        name: String,
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        genus: u32,
    },
}

/// A failure with a fixed exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
    check: Option<&'static str>,
    detail: Option<Value>,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into(), check: None, detail: None }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match &cli.command {
        Command::Classify { format, .. } | Command::Verify { format, .. } => *format,
        Command::Gallery { .. } => Format::Text,
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if format == Format::Json {
                let mut out = json!({ "error": f.message, "check": f.check });
                if let Some(d) = f.detail {
                    out["validation"] = d;
                }
                println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> std::result::Result<u8, Failure> {
    match command {
        Command::Classify { path, format, skip_validation } => cmd_classify(&path, format, skip_validation).map(|()| 0),
        Command::Gallery { action } => cmd_gallery(action).map(|()| 0),
        Command::Verify { path, max_simplices, format } => cmd_verify(&path, max_simplices, format),
    }
}

fn load(path: &Path) -> std::result::Result<HamSpec, Failure> {
    specfile::read(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{e:#}")))
}

fn library_failure(e: Error) -> Failure {
    match e {
        Error::Validation(report) => Failure {
            code: EXIT_VALIDATION,
            message: format!("validation failed: {}", report.first_failure().map_or("", |c| c.detail.as_str())),
            check: render::first_failed(&report),
            detail: Some(render::validation_json(&report)),
        },
        e @ (Error::FaceComplexity(_) | Error::InconsistentSpec(_) | Error::InvalidSpec(_)) => {
            Failure::new(EXIT_VALIDATION, e.to_string())
        }
        e => Failure::new(EXIT_INTERNAL, e.to_string()),
    }
}

fn classify_spec(
    spec: &HamSpec,
    skip_validation: bool,
) -> std::result::Result<(Option<hamquot::ValidationReport>, hamquot::TopologyReport), Failure> {
    let validation = if skip_validation {
        None
    } else {
        let v = validate(spec);
        if !v.passed() {
            return Err(library_failure(Error::Validation(Box::new(v))));
        }
        Some(v)
    };
    let report = classify_unvalidated(spec).map_err(library_failure)?;
    Ok((validation, report))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn cmd_classify(path: &Path, format: Format, skip_validation: bool) -> std::result::Result<(), Failure> {
    let spec = load(path)?;
    let (validation, report) = classify_spec(&spec, skip_validation)?;
    match format {
        Format::Text => print!("{}", render::report_text(validation.as_ref(), &report)),
        Format::Json => print_json(&render::report_json(validation.as_ref(), &report)),
    }
    Ok(())
}

fn cmd_verify(path: &Path, max_simplices: usize, format: Format) -> std::result::Result<u8, Failure> {
    let spec = load(path)?;
    let (validation, report) = classify_spec(&spec, false)?;
    let result = verify_report(&report, max_simplices).map_err(library_failure)?;
    match format {
        Format::Text => {
            print!("{}", render::report_text(validation.as_ref(), &report));
            print!("{}", render::verification_text(&result));
        }
        Format::Json => {
            let mut doc = render::report_json(validation.as_ref(), &report);
            doc["verification"] = render::verification_json(&result);
            print_json(&doc);
        }
    }
    Ok(match result.status {
        VerificationStatus::Pass => 0,
        VerificationStatus::Fail => EXIT_VALIDATION,
        VerificationStatus::Skipped(_) => EXIT_SKIPPED,
    })
}

fn gallery_spec(name: &str, genus: u32) -> std::result::Result<HamSpec, Failure> {
    gallery::lookup(name)
        .map(|e| e.build(genus))
        .ok_or_else(|| Failure::new(EXIT_PARSE, format!("unknown gallery example {name:?}")))
}

fn cmd_gallery(action: GalleryAction) -> std::result::Result<(), Failure> {
    match action {
        GalleryAction::List => {
            for e in gallery::catalog() {
                let genus = if e.takes_genus { " [--genus g]" } else { "" };
                println!("{:<14} #{:<3} {}{genus}  quotient {}", e.name, e.catalog_index, e.description, e.claimed_quotient);
            }
        }
        GalleryAction::Show { name, genus } => {
            let spec = gallery_spec(&name, genus)?;
            let p = hamquot::hamspace::moment_polytope(&spec).map_err(library_failure)?;
            print!("{}", render::spec_text(&spec, &p));
        }
        GalleryAction::Export { name, path, genus } => {
            let spec = gallery_spec(&name, genus)?;
            write_file(&path, &specfile::export(&spec)).map_err(|e| Failure::new(EXIT_INTERNAL, format!("{e:#}")))?;
        }
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}
