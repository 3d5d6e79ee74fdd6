use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use voxgap::curves::{generate_curve, validate_curve};
use voxgap::gaps::GapReport;
use voxgap::report;
use voxgap::verify::run_identity_suite;
use voxgap::voxfile::VoxelFile;
use voxgap::{DigitalObject, DuplicatePolicy, Error};

#[derive(Parser)]
#[command(name = "voxgap", version, about = "Cell censuses and gap counts for digital objects")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct Input {
    /// Voxel file (text, or JSON when the extension is .json)
    path: PathBuf,
    /// Ambient dimension of text files
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Reject duplicate voxels instead of dropping them
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Count all, free and non-free cells per dimension
    Census(Input),
    /// Find gap hubs by brute force and compare with the closed forms
    Gaps(Input),
    /// Run the identity suite; exit 1 if any applicable row fails
    Verify(Input),
    /// Write a random digital curve
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        length: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Adjacency index of the curve
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounding constants, closed form against enumeration
    Constants {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(2..=5))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn load(input: &Input) -> Result<DigitalObject, Error> {
    let policy = if input.strict {
        DuplicatePolicy::Strict
    } else {
        DuplicatePolicy::Lenient
    };
    let (object, dropped) = VoxelFile::read(&input.path, input.n)?.into_object(policy)?;
    if dropped > 0 {
        eprintln!("warning: dropped {dropped} duplicate voxel(s)");
    }
    Ok(object)
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Census(input) => {
            let object = load(&input)?;
            let census = object.census();
            match input.format {
                Format::Text => print!("{}", report::census_text(&object, &census)),
                Format::Json => print_json(&report::census_json(&object, &census)),
            }
        }
        Command::Gaps(input) => {
            let object = load(&input)?;
            let gaps = GapReport::compute(&object)?;
            let curve = if object.ambient_n() == 3 {
                Some(validate_curve(&object, 0)?)
            } else {
                None
            };
            match input.format {
                Format::Text => print!("{}", report::gaps_text(&object, &gaps, curve.as_ref())),
                Format::Json => print_json(&report::gaps_json(&object, &gaps, curve.as_ref())),
            }
        }
        Command::Verify(input) => {
            let object = load(&input)?;
            let table = run_identity_suite(&object)?;
            match input.format {
                Format::Text => {
                    print!("n={} voxels={}", object.ambient_n(), object.len());
                    match &table.curve {
                        Some(c) if c.is_valid => println!(" 0-curve=yes"),
                        Some(_) => println!(" 0-curve=no (curve-only claims skipped)"),
                        None => println!(),
                    }
                    print!("{table}");
                    let failed = table.failures().count();
                    println!("verdict: {}", if failed == 0 { "pass".into() } else { format!("{failed} failing row(s)") });
                }
                Format::Json => print_json(&serde_json::json!({
                    "pass": table.all_pass(),
                    "curve": table.curve,
                    "rows": table.rows,
                })),
            }
            if !table.all_pass() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Gen { length, seed, k, out } => {
            let object = generate_curve(length as usize, seed, k)?;
            let file = VoxelFile::from_object(&object);
            match out {
                Some(path) => file.write(Path::new(&path))?,
                None => print!("{}", file.to_text()),
            }
        }
        Command::Constants { n, format } => {
            let rows = report::constants_table(n as usize)?;
            match format {
                Format::Text => print!("{}", report::constants_text(n as usize, &rows)),
                Format::Json => print_json(&rows),
            }
            if !rows.iter().all(report::ConstantRow::agrees) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
