//! Command-line driver: runs per-proposition verification suites over seeded
//! samples and exposes the individual computations (Hilbert functions, flat
//! limits, wall scans, curve counts, singularity classification).

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use qml_core::curve::{kontsevich, local_report, PlaneCurve};
use qml_core::ideal::{GradedIdeal, IdealJson};
use qml_core::pipeline::{flat_limit_over_d5, FamilyIdeal};
use qml_core::report::run_suite;
use qml_core::walls::{wall_scan, ChernCharacter};
use qml_core::{parse, ProjPoint, Rational, VarSet};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qml", about = "exact verification suites for plane-quartic moduli claims", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite over seeded random samples.
    Verify {
        /// Suite name: kontsevich, reps, mainprop1, kronecker, sum2,
        /// mainprop2, norbundle, cubic, walls.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Write the JSON report here (a markdown summary goes next to it).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Format printed to stdout.
        #[arg(long, default_value = "md")]
        format: String,
    },
    /// Hilbert function and polynomial of a graded ideal.
    Hilbert {
        /// JSON file {"vars": ["x","y","z"], "gens": ["x^2", ...]}.
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Flat limit at t = 0 of the squared ideals of a one-parameter family.
    Limit {
        /// JSON file {"vars": ["x","y","z","t"], "gens": [...]}.
        #[arg(long)]
        family: PathBuf,
        /// Inclusive degree range, e.g. 4..8.
        #[arg(long, default_value = "4..8")]
        degrees: String,
    },
    /// Wall circles for a Chern character.
    Walls {
        /// Character r,c1,ch2 with ch2 a possibly fractional rational,
        /// e.g. 0,4,-5 or 1,1,-1/2.
        #[arg(long)]
        v: String,
        /// Bounds R,C,D for |r| <= R, |c1| <= C, |2 ch2| <= D.
        #[arg(long)]
        bounds: String,
    },
    /// Counts of rational plane curves through general points.
    Kontsevich {
        #[arg(long)]
        dmax: u32,
    },
    /// Local singularity report of a plane curve at a point.
    Classify {
        /// Defining polynomial in the expression grammar, e.g.
        /// "x^4 + 2*x^2*y^2 + y^4 - 3*x^2*y*z + y^3*z".
        #[arg(long)]
        curve: String,
        /// Point a,b,c in homogeneous coordinates.
        #[arg(long)]
        point: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify {
            suite,
            seed,
            samples,
            out,
            format,
        } => {
            let run = run_suite(&suite, seed, samples)?;
            if let Some(path) = &out {
                std::fs::write(path, run.to_json_string())
                    .with_context(|| format!("writing {}", path.display()))?;
                let md_path = path.with_extension("md");
                std::fs::write(&md_path, run.to_markdown())
                    .with_context(|| format!("writing {}", md_path.display()))?;
            }
            match format.as_str() {
                "json" => print!("{}", run.to_json_string()),
                "md" => print!("{}", run.to_markdown()),
                other => bail!("unknown format `{other}` (expected json or md)"),
            }
            Ok(run.pass)
        }
        Command::Hilbert { ideal } => {
            let json: IdealJson = read_json(&ideal)?;
            let ideal = GradedIdeal::from_json(&json)?;
            let h = ideal.hilbert()?;
            let out = serde_json::json!({
                "table": h.table,
                "polynomial": h.polynomial.to_string(),
                "stabilization": h.stabilization,
                "constant": h.constant_value().map(|c| c.to_string()),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(true)
        }
        Command::Limit { family, degrees } => {
            let json: IdealJson = read_json(&family)?;
            let family = FamilyIdeal::from_json(&json)?;
            let (lo, hi) = parse_range(&degrees)?;
            let report = flat_limit_over_d5(&family, (lo, hi), &[])?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(true)
        }
        Command::Walls { v, bounds } => {
            let v = parse_character(&v)?;
            let bounds = parse_bounds(&bounds)?;
            let groups = wall_scan(&v, bounds);
            println!("{}", serde_json::to_string_pretty(&groups)?);
            Ok(true)
        }
        Command::Kontsevich { dmax } => {
            let values = kontsevich(dmax);
            println!("{:>3}  {}", "d", "N_d");
            for (i, n) in values.iter().enumerate() {
                println!("{:>3}  {}", i + 1, n);
            }
            Ok(true)
        }
        Command::Classify { curve, point } => {
            let poly = parse(&curve, &VarSet::xyz())
                .map_err(|e| anyhow!("cannot parse curve: {e}"))?;
            let curve = PlaneCurve::new(poly)?;
            let q = parse_point(&point)?;
            let report = local_report(&curve, &q);
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(true)
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_range(s: &str) -> Result<(u32, u32)> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| anyhow!("degree range must look like 4..8"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u32 = lo.trim().parse().context("range start")?;
    let hi: u32 = hi.trim().parse().context("range end")?;
    if lo > hi {
        bail!("empty degree range {lo}..{hi}");
    }
    Ok((lo, hi))
}

fn parse_character(s: &str) -> Result<ChernCharacter> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        bail!("character must be r,c1,ch2");
    }
    let r: i64 = parts[0].parse().context("rank")?;
    let c1: i64 = parts[1].parse().context("first Chern class")?;
    let ch2: Rational = parts[2]
        .parse()
        .map_err(|e| anyhow!("second character entry: {e}"))?;
    Ok(ChernCharacter::new(r, c1, ch2)?)
}

fn parse_bounds(s: &str) -> Result<(i64, i64, i64)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        bail!("bounds must be R,C,D");
    }
    Ok((
        parts[0].parse().context("rank bound")?,
        parts[1].parse().context("c1 bound")?,
        parts[2].parse().context("2ch2 bound")?,
    ))
}

fn parse_point(s: &str) -> Result<ProjPoint> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        bail!("point must be a,b,c");
    }
    let coords: Vec<Rational> = parts
        .iter()
        .map(|p| {
            p.parse::<Rational>()
                .map_err(|e| anyhow!("coordinate `{p}`: {e}"))
        })
        .collect::<Result<_>>()?;
    Ok(ProjPoint::new([
        coords[0].clone(),
        coords[1].clone(),
        coords[2].clone(),
    ])?)
}
