//! `mrv`: compute graded pieces and tables, run check suites.
//!
//! Exit codes: 0 success, 1 a pass/fail check failed, 2 usage or config error.

mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context as _, Result};
use clap::{Args, Parser, Subcommand};
use mrv_core::context::Catalog;
use mrv_core::presentations::poincare_table;
use mrv_core::verify::{check_names, run_check, CheckReport};
use mrv_core::{Bidegree, Context};
use rayon::prelude::*;

use config::{Format, RunConfig};

#[derive(Parser)]
#[command(name = "mrv", version, about = "Cohomology rings of BSO(4): pieces, tables and checks")]
struct Cli {
    /// JSON catalog whose rings and maps replace bundled entries of the same name.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one graded piece: group structure and basis.
    Piece {
        #[arg(long)]
        ring: String,
        /// `p` for single-graded rings, `p,q` for bigraded ones.
        #[arg(long)]
        deg: String,
    },
    /// Print the groups of a ring over a box, rows p and columns q.
    Table {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 8)]
        pmax: i64,
        #[arg(long, default_value_t = 4)]
        qmax: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run checks and emit a report.
    Verify(VerifyArgs),
    /// List the registered checks.
    Checks,
    /// Export the ring and map catalog as JSON.
    Catalog {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated check names (default: all).
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    /// Keep only checks that read one of these rings.
    #[arg(long, value_delimiter = ',')]
    rings: Option<Vec<String>>,
    #[arg(long)]
    pmax: Option<i64>,
    #[arg(long)]
    qmax: Option<i64>,
    #[arg(long)]
    mmax: Option<i64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON file with RunConfig fields; flags override it.
    #[arg(long, env = "MRV_CONFIG")]
    config: Option<PathBuf>,
    /// Worker threads; checks run in parallel, output order is fixed.
    #[arg(long)]
    jobs: Option<usize>,
}

/// Failure that maps to exit code 2.
#[derive(Debug)]
struct Usage(anyhow::Error);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(r: Result<T>) -> Result<T> {
    r.map_err(|e| Usage(e).into())
}

fn load_catalog(path: Option<&PathBuf>) -> Result<Catalog> {
    let mut catalog = Catalog::bundled();
    if let Some(path) = path {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading catalog {}", path.display()))?;
        let overlay: Catalog =
            serde_json::from_str(&text).with_context(|| format!("parsing catalog {}", path.display()))?;
        catalog.overlay(overlay);
    }
    Ok(catalog)
}

fn parse_deg(ctx: &Context, ring: &str, text: &str) -> Result<Bidegree> {
    let r = ctx.ring(ring)?;
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let num = |s: &str| s.parse::<i64>().map_err(|_| anyhow!("bad degree component `{s}`"));
    let deg = match (parts.as_slice(), r.is_bigraded()) {
        ([p], false) => Bidegree::single(num(p)?),
        ([_], true) => bail!("ring `{ring}` is bigraded: pass --deg p,q"),
        ([p, q], true) => Bidegree::new(num(p)?, num(q)?),
        ([_, _], false) => bail!("ring `{ring}` is single-graded: pass --deg p"),
        _ => bail!("bad degree `{text}`"),
    };
    if deg.p < 0 {
        bail!("degree must be non-negative");
    }
    Ok(deg)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(catalog: Catalog, args: VerifyArgs) -> Result<bool> {
    let flags = RunConfig {
        p_max: args.pmax,
        q_max: args.qmax,
        m_max: args.mmax,
        rings: args.rings,
        checks: args.checks,
        format: args.format,
        out: args.out,
        jobs: args.jobs,
    };
    let file = match &args.config {
        Some(p) => usage(RunConfig::load(p))?,
        None => RunConfig::default(),
    };
    let cfg = file.overridden_by(flags);
    let ctx = usage(Context::new(catalog.clone()).map_err(Into::into))?;
    usage(cfg.validate(&ctx))?;
    let bounds = cfg.bounds();
    let names = cfg.checks();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs.unwrap_or(0)).build()?;
    // Contexts hold an unsynchronized cache, so each job builds its own.
    let reports: Vec<CheckReport> = pool.install(|| {
        names
            .par_iter()
            .map(|name| {
                let ctx = Context::new(catalog.clone())?;
                Ok(run_check(&ctx, name, bounds)?)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let text = render::reports(&reports, bounds, cfg.format.unwrap_or_default())?;
    emit(&text, cfg.out.as_ref())?;
    if cfg.out.is_some() {
        for r in &reports {
            eprintln!("{}: {} ({} findings)", r.check, r.status, r.findings.len());
        }
    }
    Ok(reports.iter().all(CheckReport::is_ok))
}

fn run(cli: Cli) -> Result<bool> {
    let catalog = usage(load_catalog(cli.catalog.as_ref()))?;
    match cli.command {
        Command::Piece { ring, deg } => {
            let ctx = usage(Context::new(catalog).map_err(Into::into))?;
            let deg = usage(parse_deg(&ctx, &ring, &deg))?;
            let piece = ctx.piece(&ring, deg)?;
            println!("{}", piece.render(ctx.ring(&ring)?));
            Ok(true)
        }
        Command::Table { ring, pmax, qmax, format } => {
            let ctx = usage(Context::new(catalog).map_err(Into::into))?;
            let r = usage(ctx.ring(&ring).map_err(Into::into))?;
            if pmax < 0 || qmax < 0 {
                return Err(Usage(anyhow!("bounds must be non-negative")).into());
            }
            let table = poincare_table(r, pmax, qmax)?;
            print!("{}", render::table(&table, r.is_bigraded(), format)?);
            Ok(true)
        }
        Command::Verify(args) => verify(catalog, args),
        Command::Checks => {
            for name in check_names() {
                println!("{name}");
            }
            Ok(true)
        }
        Command::Catalog { out } => {
            let ctx = usage(Context::new(catalog).map_err(Into::into))?;
            emit(&(serde_json::to_string_pretty(&ctx.catalog())? + "\n"), out.as_ref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("mrv: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
