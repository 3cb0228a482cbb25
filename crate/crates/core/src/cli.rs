//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 internal cross-check mismatch,
//! 3 unsupported request.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::dyergraph::{bits, classify, DyerGraph};
use crate::euler::{euler_recursive, euler_via_growth, EulerError, EulerResult};
use crate::growth::{
    amalgam_growth_of, bx_series, bx_series_with, graph_product_check, growth, pd_series,
    proper_subset_sum, sphere_sizes, GrowthError, MemoTable, Strategy,
};
use crate::oracle::build_oracle;
use crate::ratfun::{format_rational, RationalFunction};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

/// Largest graph on which `check` runs the superset-sum consistency test
/// (cost grows like 3^|V|).
const CONSISTENCY_MAX_VERTICES: usize = 10;
/// Radius and element budget of the oracle census run by `check`.
const CHECK_CENSUS_RADIUS: usize = 6;
const CHECK_CENSUS_BUDGET: usize = 200_000;

#[derive(Debug, Parser)]
#[command(
    name = "dyer-growth",
    version,
    about = "Growth series and Euler characteristics of Dyer groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spherical growth series of the group
    Growth {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = GrowthMethod::Auto)]
        method: GrowthMethod,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Sphere sizes a_0..a_n
    Spheres {
        file: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        /// Compare against a breadth-first census of a normal-form model
        #[arg(long)]
        verify_oracle: bool,
    },
    /// Rational Euler characteristic
    Euler {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = EulerChoice::Both)]
        method: EulerChoice,
    },
    /// Structure report and Coxeter type of the order-2 part
    Classify { file: PathBuf },
    /// Growth series of the elements whose reduced words can end in each vertex of a subset
    Bxseries {
        file: PathBuf,
        /// Comma-separated vertex names; empty for the empty subset
        #[arg(long, default_value = "")]
        subset: String,
    },
    /// P_D(t) of a spherical graph
    Pd { file: PathBuf },
    /// Run every cross-validation on one graph
    Check { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GrowthMethod {
    Auto,
    Subset,
    Amalgam,
    CrossCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EulerChoice {
    Growth,
    Recursive,
    Both,
}

/// `growth --format json` output.
#[derive(Serialize)]
struct JsonSeries<'a> {
    numerator: Vec<String>,
    denominator: Vec<String>,
    method: &'a str,
}

/// A failed command: exit code plus message for the error stream.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<GrowthError> for Failure {
    fn from(e: GrowthError) -> Self {
        let code = match e {
            GrowthError::Graph(_) => EXIT_INVALID,
            GrowthError::NonSpherical | GrowthError::NotRightAngled { .. } => EXIT_UNSUPPORTED,
            _ => EXIT_MISMATCH,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<EulerError> for Failure {
    fn from(e: EulerError) -> Self {
        match e {
            EulerError::Growth(g) => g.into(),
            EulerError::Pole => Failure::new(EXIT_MISMATCH, e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_INVALID, e.to_string())
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<S: AsRef<str>>(args: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_INVALID
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(path: &Path) -> Result<DyerGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {e}", path.display())))?;
    DyerGraph::from_json(&text)
        .map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {e}", path.display())))
}

fn join(values: &[BigInt]) -> String {
    values
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Growth {
            file,
            method,
            format,
        } => {
            let graph = load(&file)?;
            let strategy = match method {
                GrowthMethod::Auto => Strategy::Auto,
                GrowthMethod::Subset => Strategy::Subset,
                GrowthMethod::Amalgam => Strategy::Amalgam,
                GrowthMethod::CrossCheck => Strategy::CrossCheck,
            };
            let result = growth(&graph, strategy)?;
            match format {
                Format::Plain => writeln!(out, "{}", result.series)?,
                Format::Latex => writeln!(out, "{}", result.series.latex())?,
                Format::Json => {
                    let coeffs = |p: &crate::ratfun::Polynomial| -> Vec<String> {
                        p.coeffs().iter().map(BigInt::to_string).collect()
                    };
                    let doc = JsonSeries {
                        numerator: coeffs(result.series.numerator()),
                        denominator: coeffs(result.series.denominator()),
                        method: result.method.as_str(),
                    };
                    let text = serde_json::to_string(&doc)
                        .map_err(|e| Failure::new(EXIT_MISMATCH, e.to_string()))?;
                    writeln!(out, "{text}")?;
                }
            }
        }
        Command::Spheres {
            file,
            n,
            verify_oracle,
        } => {
            let graph = load(&file)?;
            let spheres = sphere_sizes(&graph, n)?;
            writeln!(out, "{}", join(&spheres))?;
            if verify_oracle {
                let oracle = build_oracle(&graph)
                    .map_err(|u| Failure::new(EXIT_UNSUPPORTED, u.to_string()))?;
                let census = oracle.group.bfs_census(n);
                let census: Vec<BigInt> = census.spheres.iter().map(|&c| c.into()).collect();
                if census != spheres {
                    writeln!(out, "oracle: MISMATCH {}", join(&census))?;
                    return Err(Failure::new(EXIT_MISMATCH, "oracle census disagrees"));
                }
                writeln!(out, "oracle: MATCH")?;
            }
        }
        Command::Euler { file, method } => {
            let graph = load(&file)?;
            match method {
                EulerChoice::Growth => {
                    writeln!(out, "{}", format_rational(&euler_via_growth(&graph)?.value))?
                }
                EulerChoice::Recursive => {
                    writeln!(out, "{}", format_rational(&euler_recursive(&graph)?.value))?
                }
                EulerChoice::Both => {
                    let (a, b) = euler_pair(&graph)?;
                    if a.value != b.value {
                        writeln!(
                            out,
                            "{}: {}\n{}: {}",
                            a.method,
                            format_rational(&a.value),
                            b.method,
                            format_rational(&b.value)
                        )?;
                        return Err(Failure::new(
                            EXIT_MISMATCH,
                            "Euler characteristics disagree",
                        ));
                    }
                    writeln!(out, "{} (both methods agree)", format_rational(&a.value))?;
                }
            }
        }
        Command::Classify { file } => {
            let graph = load(&file)?;
            let r = classify(&graph);
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            writeln!(out, "vertices: {}", graph.len())?;
            writeln!(out, "involutions: {}", r.n_involutions)?;
            writeln!(out, "finite order > 2: {}", r.n_finite_higher)?;
            writeln!(out, "infinite order: {}", r.n_infinite)?;
            writeln!(out, "complete: {}", yes_no(r.is_complete))?;
            writeln!(out, "spherical: {}", yes_no(r.is_spherical))?;
            writeln!(out, "finite group: {}", yes_no(r.is_finite_group))?;
            writeln!(out, "coxeter type: {}", r.coxeter)?;
        }
        Command::Bxseries { file, subset } => {
            let graph = load(&file)?;
            let names: Vec<&str> = subset
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            let x = graph
                .subset(&names)
                .map_err(|e| Failure::new(EXIT_INVALID, e.to_string()))?;
            writeln!(out, "{}", bx_series(&graph, &x)?)?;
        }
        Command::Pd { file } => {
            let graph = load(&file)?;
            writeln!(out, "{}", pd_series(&graph)?)?;
        }
        Command::Check { file } => {
            let graph = load(&file)?;
            check(&graph, out)?;
        }
    }
    Ok(())
}

fn euler_pair(graph: &DyerGraph) -> Result<(EulerResult, EulerResult), Failure> {
    Ok((euler_via_growth(graph)?, euler_recursive(graph)?))
}

fn verdict(out: &mut dyn Write, name: &str, ok: bool, detail: &str) -> Result<bool, Failure> {
    let status = if ok { "OK" } else { "MISMATCH" };
    if detail.is_empty() {
        writeln!(out, "{name}: {status}")?;
    } else {
        writeln!(out, "{name}: {status} ({detail})")?;
    }
    Ok(ok)
}

fn check(graph: &DyerGraph, out: &mut dyn Write) -> Result<(), Failure> {
    let mut ok = true;

    let g = match growth(graph, Strategy::CrossCheck) {
        Ok(r) => {
            verdict(out, "strategies", true, "")?;
            r.series
        }
        Err(GrowthError::CrossCheckMismatch { subset, amalgam }) => {
            verdict(out, "strategies", false, &format!("{subset} vs {amalgam}"))?;
            return Err(Failure::new(EXIT_MISMATCH, "growth strategies disagree"));
        }
        Err(e) => return Err(e.into()),
    };
    writeln!(out, "growth: {g}")?;

    if graph.all_labels_two() {
        let gp = graph_product_check(graph)?;
        ok &= verdict(out, "graph product", gp == g, "")?;
    } else {
        writeln!(out, "graph product: skipped (labels other than 2)")?;
    }

    let report = classify(graph);
    if report.is_spherical {
        let sign = if graph.len().is_multiple_of(2) { -1 } else { 1 };
        let lhs = (&pd_series(graph)? + &RationalFunction::constant(sign))
            .checked_div(&g)
            .map_err(GrowthError::from)?;
        let rhs = proper_subset_sum(graph, &mut MemoTable::new(graph))?;
        ok &= verdict(out, "alternating identity", lhs == rhs, "spherical")?;
    } else {
        let b = bx_series(graph, &graph.empty_subset())?;
        ok &= verdict(out, "alternating identity", b.is_zero(), "B_empty = 0")?;
    }

    if graph.len() <= CONSISTENCY_MAX_VERTICES {
        ok &= verdict(out, "superset sums", superset_sums_hold(graph, &g)?, "")?;
    } else {
        writeln!(
            out,
            "superset sums: skipped (more than {CONSISTENCY_MAX_VERTICES} vertices)"
        )?;
    }

    let (a, b) = euler_pair(graph)?;
    ok &= verdict(out, "euler", a.value == b.value, &format_rational(&a.value))?;

    match build_oracle(graph) {
        Ok(oracle) => {
            let census = oracle
                .group
                .bfs_census_bounded(CHECK_CENSUS_RADIUS, CHECK_CENSUS_BUDGET);
            let radius = census.spheres.len() - 1;
            let engine = g.taylor_coefficients(radius).map_err(GrowthError::from)?;
            let census: Vec<BigInt> = census.spheres.iter().map(|&c| c.into()).collect();
            ok &= verdict(out, "oracle", census == engine, &format!("radius {radius}"))?;
        }
        Err(u) => writeln!(out, "oracle: skipped ({})", u.reason)?,
    }

    if ok {
        Ok(())
    } else {
        Err(Failure::new(EXIT_MISMATCH, "cross-validation failed"))
    }
}

/// `sum_{Y containing X} G_{B_Y} = G / G_X` for every subset `X`.
fn superset_sums_hold(graph: &DyerGraph, g: &RationalFunction) -> Result<bool, Failure> {
    let mut memo = MemoTable::new(graph);
    let full = graph.full_mask();
    let mut bx = Vec::with_capacity(1 << graph.len());
    for mask in 0..=full {
        bx.push(bx_series_with(
            graph,
            &graph.subset_from_mask(mask),
            &mut memo,
        )?);
    }
    for x in 0..=full {
        let mut sum = RationalFunction::zero();
        for extra in bits::submasks(full & !x) {
            sum = &sum + &bx[(x | extra) as usize];
        }
        let gx = amalgam_growth_of(graph, &graph.subset_from_mask(x), &mut memo)?;
        if sum != g.checked_div(&gx).map_err(GrowthError::from)? {
            return Ok(false);
        }
    }
    Ok(true)
}
