//! `algebroid`: reconstruct Hopf algebroids from presentations and verify
//! algebroid data stored as JSON.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use algebroid::antipode::{dual_right_comodule, right_dual_comodule};
use algebroid::error::Error;
use algebroid::field::Field;
use algebroid::io::{self, mat_json, Document, RawMat};
use algebroid::report::Report;
use algebroid::tannaka::{reconstruct, validate_presentation, ReconstructOptions};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Exit statuses; every error kind has its own.
mod exit {
    pub const OK: u8 = 0;
    pub const CHECKS_FAILED: u8 = 1;
    // 2 is clap's usage error
    pub const IO: u8 = 3;
    pub const PARSE: u8 = 4;
    pub const SCHEMA: u8 = 5;
    pub const NOT_PROJECTIVE: u8 = 6;
    pub const NO_ANTIPODE: u8 = 7;
    pub const ILL_DEFINED: u8 = 8;
}

#[derive(Parser, Debug)]
#[command(
    name = "algebroid",
    version,
    about = "Exact Hopf algebroid reconstruction and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ground field, `gf:P` or `q`; must agree with the file if it names one.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,

    /// Largest number of summands in the round-trip direct sums.
    #[arg(long, global = true, default_value_t = 2)]
    roundtrip_rank: usize,

    /// Seed for the randomized basis-independence checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Skip the comparison of the original category with comodules of the coend.
    #[arg(long, global = true)]
    skip_roundtrip: bool,

    /// Format of the report printed on stderr.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the coend of a presentation with all induced structure.
    Reconstruct(Io),
    /// Check every structure present in the `coend` block.
    Verify(Io),
    /// Check only the coalgebroid of the `coend` block.
    CheckCoalgebroid(Io),
    /// Check the coalgebroid and the bialgebroid of the `coend` block.
    CheckBialgebroid(Io),
    /// Dual comodules of every object through the antipode and the opposite antipode.
    Dualize(Io),
    /// Summarize a file.
    Info(Io),
}

#[derive(clap::Args, Debug)]
struct Io {
    /// Presentation or algebroid JSON file.
    input: PathBuf,
    /// Where to write the output JSON; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

enum Failure {
    Io(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => exit::IO,
            Failure::Core(e) => match e {
                Error::Parse(_) => exit::PARSE,
                Error::Schema(_) | Error::DimensionMismatch(_) | Error::InvalidSelector(_) => {
                    exit::SCHEMA
                }
                Error::NotProjective(_) => exit::NOT_PROJECTIVE,
                Error::NoAntipode(_) | Error::NoOppositeAntipode(_) => exit::NO_ANTIPODE,
                Error::IllDefined(_) | Error::Singular => exit::ILL_DEFINED,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<Document, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(io::parse_document(&text)?)
}

fn write(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_report(fmt: ReportFormat, rep: &Report) {
    match fmt {
        ReportFormat::Text => eprint!("{rep}"),
        ReportFormat::Json => eprint!("{}", io::to_json(rep)),
    }
}

fn reconstruct_cmd(cli: &Cli, args: &Io) -> Result<Report, Failure> {
    let doc = read(&args.input)?;
    let p = doc.presentation(cli.field)?;
    let opts = ReconstructOptions {
        seed: cli.seed,
        roundtrip_rank: cli.roundtrip_rank,
        skip_roundtrip: cli.skip_roundtrip,
        ..Default::default()
    };
    let r = reconstruct(&p, &opts)?;
    write(&args.output, &io::to_json(&io::output_document(&p, &r)))?;
    Ok(r.report)
}

#[derive(PartialEq, PartialOrd)]
enum Depth {
    Coalgebroid,
    Bialgebroid,
    All,
}

fn verify_cmd(cli: &Cli, args: &Io, depth: Depth) -> Result<Report, Failure> {
    let doc = read(&args.input)?;
    let coalg = doc.coalgebroid(cli.field)?;
    let mut rep = coalg.check()?;
    if depth >= Depth::Bialgebroid {
        match doc.bialgebroid(&coalg)? {
            Some(b) => {
                rep.merge(b.check_algebra()?);
                if depth == Depth::All {
                    if let Some(a) = doc.antipode(&b)? {
                        rep.merge(a.check()?);
                    }
                    if let Some(o) = doc.opposite_antipode(&b)? {
                        rep.merge(o.check()?);
                    }
                }
            }
            None if depth == Depth::Bialgebroid => {
                return Err(Error::Schema("coend block has no product".into()).into());
            }
            None => {}
        }
    }
    let out = json!({ "dim_L": coalg.dim(), "report": rep });
    write(&args.output, &io::to_json(&out))?;
    Ok(rep)
}

fn dualize_cmd(cli: &Cli, args: &Io) -> Result<Report, Failure> {
    let doc = read(&args.input)?;
    let p = doc.presentation(cli.field)?;
    let opts = ReconstructOptions {
        seed: cli.seed,
        skip_roundtrip: true,
        ..Default::default()
    };
    let r = reconstruct(&p, &opts)?;
    let antipode = r
        .antipode
        .as_ref()
        .ok_or_else(|| Error::NoAntipode("presentation has no left duals".into()))?;
    let opposite = r
        .opposite_antipode
        .as_ref()
        .ok_or_else(|| Error::NoOppositeAntipode("presentation has no right duals".into()))?;
    let mut rep = Report::new();
    let mut objects = Vec::new();
    for (x, m) in r.coactions.iter().enumerate().take(p.objects.len()) {
        let left = dual_right_comodule(antipode, m)?;
        let right = right_dual_comodule(opposite, m)?;
        rep.merge(left.report.clone());
        rep.merge(right.report.clone());
        let entry = |d: usize, amb: &algebroid::linalg::Mat| -> serde_json::Value {
            let coaction: RawMat = mat_json(amb);
            json!({ "dim": d, "coaction": coaction })
        };
        objects.push(json!({
            "object": p.objects[x].name,
            "left_dual": entry(left.comodule.dim(), left.comodule.delta_ambient()),
            "right_dual": entry(right.comodule.dim(), right.comodule.delta_ambient()),
        }));
    }
    let out = json!({ "dim_L": r.dim(), "duals": objects, "report": rep });
    write(&args.output, &io::to_json(&out))?;
    Ok(rep)
}

fn info_cmd(cli: &Cli, args: &Io) -> Result<Report, Failure> {
    let doc = read(&args.input)?;
    let f = doc.field(cli.field)?;
    let mut lines = vec![format!("field: {f}")];
    if doc.algebra.is_some() {
        lines.push(format!("algebra: dimension {}", doc.algebra(f)?.dim()));
    }
    let mut rep = Report::new();
    if !doc.objects.is_empty() {
        let p = doc.presentation(cli.field)?;
        for o in &p.objects {
            lines.push(format!("object {}: dimension {}", o.name, o.module.dim()));
        }
        lines.push(format!(
            "{} morphisms, {} tensor entries, {} left duals, {} right duals",
            p.morphisms.len(),
            p.tensor.len(),
            p.duals.len(),
            p.right_duals.len()
        ));
        if let Some(u) = p.unit_object {
            lines.push(format!("unit object: {}", p.objects[u].name));
        }
        rep = validate_presentation(&p);
    }
    if let Some(c) = &doc.coend {
        let parts: Vec<&str> = [
            ("product", c.product.is_some()),
            ("antipode", c.antipode.is_some()),
            ("opposite_antipode", c.opposite_antipode.is_some()),
        ]
        .iter()
        .filter(|(_, present)| *present)
        .map(|(n, _)| *n)
        .collect();
        lines.push(format!(
            "coend: dim_L = {}; also {}",
            c.dim_l,
            if parts.is_empty() {
                "nothing".into()
            } else {
                parts.join(", ")
            }
        ));
    }
    let mut text = lines.join("\n");
    text.push('\n');
    write(&args.output, &text)?;
    Ok(rep)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Reconstruct(a) => reconstruct_cmd(&cli, a),
        Command::Verify(a) => verify_cmd(&cli, a, Depth::All),
        Command::CheckCoalgebroid(a) => verify_cmd(&cli, a, Depth::Coalgebroid),
        Command::CheckBialgebroid(a) => verify_cmd(&cli, a, Depth::Bialgebroid),
        Command::Dualize(a) => dualize_cmd(&cli, a),
        Command::Info(a) => info_cmd(&cli, a),
    };
    match result {
        Ok(rep) => {
            print_report(cli.report, &rep);
            ExitCode::from(if rep.ok() {
                exit::OK
            } else {
                exit::CHECKS_FAILED
            })
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_table() {
        let cases = [
            (Failure::Io("x".into()), 3),
            (Failure::Core(Error::Parse("x".into())), 4),
            (Failure::Core(Error::Schema("x".into())), 5),
            (Failure::Core(Error::DimensionMismatch("x".into())), 5),
            (Failure::Core(Error::InvalidSelector("x".into())), 5),
            (Failure::Core(Error::NotProjective("x".into())), 6),
            (Failure::Core(Error::NoAntipode("x".into())), 7),
            (Failure::Core(Error::NoOppositeAntipode("x".into())), 7),
            (Failure::Core(Error::IllDefined("x".into())), 8),
            (Failure::Core(Error::Singular), 8),
        ];
        for (f, c) in cases {
            assert_eq!(f.code(), c, "{}", f.message());
        }
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
