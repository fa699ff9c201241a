//! Command-line front end: build rings from catalog entries, definition
//! files or inline expressions; classify them; replay the theorem suite;
//! emit reports and Hasse diagrams.
//!
//! Exit codes: 0 success, 1 failed checks or other errors, 2 axiom
//! violation, 3 size limit.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rickart::catalog;
use rickart::classify::{classify_named, classify_witness};
use rickart::error::Error;
use rickart::hasse::hasse_dot;
use rickart::parse::{parse_construction, parse_witness_matrix};
use rickart::report::{render_catalog, render_classification, render_ledger, Format};
use rickart::ring::{build_ring_with, BuildOptions, FiniteStarRing, RingElement};
use rickart::theorems::{run_grp_absent, run_suite, CheckStatus, SuiteOptions};

#[derive(Parser)]
#[command(
    name = "rickart",
    version,
    about = "Construct finite *-rings and decide their Rickart-type properties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Catalog name, path to a ring-definition file, or inline expression
    /// like `unitify(zmod(3), 3)`
    spec: String,

    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Certify/refute supplied witnesses instead of scanning the full
    /// carrier (required for rings above --max-scan)
    #[arg(long)]
    witness_mode: bool,

    /// Witness matrix file: `modulus M` header, then row-major entries
    #[arg(long)]
    witness: Option<PathBuf>,

    /// Full-carrier scan bound; larger rings need --witness-mode
    #[arg(long, default_value_t = 1 << 20)]
    max_scan: u64,

    /// Star-fixed scan bound for projection enumeration in matrix rings
    #[arg(long, default_value_t = 1 << 22)]
    max_star_scan: u64,

    /// Worker threads for the parallel scans (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a ring: all Rickart-type properties with certificates
    Classify(CommonArgs),
    /// Replay the structure-theorem suite; exits nonzero on any failure
    Prove {
        #[command(flatten)]
        common: CommonArgs,
        /// Check ids to run (default: all)
        checks: Vec<String>,
    },
    /// List the built-in example rings and their expected classifications
    Catalog {
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Emit the projection Hasse diagram in DOT format
    Hasse {
        #[command(flatten)]
        common: CommonArgs,
        /// Write to a file instead of standard output
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn build_options(common: &CommonArgs) -> BuildOptions {
    BuildOptions {
        max_scan: common.max_scan,
        max_star_scan: common.max_star_scan,
        ..BuildOptions::default()
    }
}

fn init_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        // ignore "already initialized" when the pool was set up earlier
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

struct Resolved {
    name: String,
    ring: FiniteStarRing,
    entry: Option<&'static catalog::CatalogEntry>,
}

fn resolve(spec: &str, opts: &BuildOptions) -> Result<Resolved, Error> {
    if let Some(entry) = catalog::find(spec) {
        return Ok(Resolved {
            name: entry.name.to_string(),
            ring: entry.build_with(opts)?,
            entry: Some(entry),
        });
    }
    let text = if Path::new(spec).exists() {
        std::fs::read_to_string(spec)?
    } else {
        spec.to_string()
    };
    let cons = parse_construction(&text)?;
    let name = cons.to_string();
    Ok(Resolved {
        name,
        ring: build_ring_with(&cons, opts)?,
        entry: None,
    })
}

/// The witness element: an explicit --witness file wins, then the catalog
/// entry's built-in witness.
fn resolve_witness(res: &Resolved, witness: &Option<PathBuf>) -> Result<RingElement, Error> {
    if let Some(path) = witness {
        let content = std::fs::read_to_string(path)?;
        let w = parse_witness_matrix(&content)?;
        let base_size = res
            .ring
            .base_ring()
            .map(|b| b.size())
            .ok_or_else(|| Error::BadParameter("witness matrices need a matrix ring".into()))?;
        if w.modulus != base_size {
            return Err(Error::BadParameter(format!(
                "witness modulus {} does not match the base ring size {base_size}",
                w.modulus
            )));
        }
        return res.ring.element_from_coords(&w.entries);
    }
    if let Some(entry) = res.entry {
        if let Some(coords) = entry.witness_coords {
            return res.ring.element_from_coords(coords);
        }
    }
    Err(Error::BadParameter(
        "witness mode needs --witness FILE (or a catalog entry with a built-in witness)".into(),
    ))
}

fn cmd_classify(common: CommonArgs) -> Result<String, Error> {
    init_threads(common.threads);
    let opts = build_options(&common);
    let res = resolve(&common.spec, &opts)?;
    let report = if res.ring.is_witness_only() {
        if !common.witness_mode {
            return Err(Error::TooLarge {
                what: "full classification (pass --witness-mode to certify witnesses instead)",
                size: res.ring.size(),
                bound: opts.max_scan,
            });
        }
        let w = resolve_witness(&res, &common.witness)?;
        classify_witness(&res.ring, res.name.clone(), &[w])?
    } else {
        classify_named(&res.ring, res.name.clone())?
    };
    Ok(render_classification(&report, common.format.into()))
}

fn cmd_prove(common: CommonArgs, checks: Vec<String>) -> Result<(String, bool), Error> {
    init_threads(common.threads);
    let opts = build_options(&common);
    let res = resolve(&common.spec, &opts)?;
    let selection = if checks.is_empty() {
        None
    } else {
        Some(checks.as_slice())
    };
    let mut ledger = run_suite(&res.ring, selection, &SuiteOptions::default())?;
    if common.witness_mode || res.ring.is_witness_only() {
        if let Some(slot) = ledger.iter_mut().find(|c| c.id == "grp-absent") {
            let w = resolve_witness(&res, &common.witness)?;
            *slot = run_grp_absent(&res.ring, w)?;
        }
    }
    let failed = ledger.iter().any(|c| c.status == CheckStatus::Fail);
    Ok((
        render_ledger(&res.name, &ledger, common.format.into()),
        failed,
    ))
}

fn cmd_hasse(common: CommonArgs, output: Option<PathBuf>) -> Result<String, Error> {
    init_threads(common.threads);
    let opts = build_options(&common);
    let res = resolve(&common.spec, &opts)?;
    let dot = hasse_dot(&res.ring)?;
    match output {
        Some(path) => {
            std::fs::write(&path, &dot)?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(dot),
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::AxiomViolation { .. } => 2,
        Error::TooLarge { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<(String, bool), Error> = match cli.command {
        Command::Classify(common) => cmd_classify(common).map(|s| (s, false)),
        Command::Prove { common, checks } => cmd_prove(common, checks),
        Command::Catalog { format } => {
            Ok((render_catalog(catalog::entries(), format.into()), false))
        }
        Command::Hasse { common, output } => cmd_hasse(common, output).map(|s| (s, false)),
    };
    match outcome {
        Ok((text, failed)) => {
            print!("{text}");
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
