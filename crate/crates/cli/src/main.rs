mod json;
mod parse;
mod svg;

use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use bicentric_core::bicentric::{analyze, AnalysisOptions};
use bicentric_core::chordal::{self, robbins_polynomial};
use bicentric_core::linkage::is_tangential;
use bicentric_core::oracle::{
    circumcircle_fit, incircle_fit, reconstruct_cyclic, reconstruct_tangential, shoelace_area, Circle, Point,
};
use bicentric_core::quad::quad_report;
use bicentric_core::roots::Domain;
use bicentric_core::tangential::{arctan_inradius, pentagon_inradii, sylvester_polynomial};
use bicentric_core::tolerance::{FIT_RESIDUAL, RESULTANT_ZERO, ROOT_MATCH, ROOT_REFINEMENT};
use bicentric_core::{to_f64, Linkage, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::json::*;
use crate::parse::{parse_sides, Sides};

const TOOL: &str = "bicentric";
const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Tangential, cyclic and bicentric configurations of polygonal linkages.
///
/// Sides are given as comma-separated integers, decimals or fractions
/// (`29,30,31,32,33`, `1/2,0.75,1`) and are handled exactly.
#[derive(Debug, Parser)]
#[command(name = "bicentric", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tangent lengths of an odd linkage and whether all are positive
    Tangent(Batch),
    /// Inradii and areas of the tangential configurations
    Inradius(Batch),
    /// Robbins polynomial of a pentagon, its real roots and the convex area
    Robbins(Batch),
    /// Full bicentricity analysis of a pentagon
    Bicentric {
        #[command(flatten)]
        batch: Batch,
        #[command(flatten)]
        tolerances: Tolerances,
    },
    /// Pitot condition and inradius range of a quadrilateral
    Quad(Batch),
    /// SVG of a reconstructed configuration
    Render(RenderArgs),
}

#[derive(Debug, Args)]
struct Batch {
    /// Comma-separated side lengths; repeat the flag to analyze several linkages
    #[arg(long, required = true, value_parser = parse_sides)]
    sides: Vec<Sides>,
    /// Analyze a batch on this many threads
    #[arg(long)]
    jobs: Option<NonZeroUsize>,
}

#[derive(Debug, Args)]
struct Tolerances {
    /// Relative tolerance when matching 16A^2 against Robbins roots
    #[arg(long, default_value_t = ROOT_MATCH)]
    match_tolerance: f64,
    /// Root-separation threshold for the resultant test on inexact input
    #[arg(long, default_value_t = RESULTANT_ZERO)]
    resultant_tolerance: f64,
    /// Fit residual threshold for the coordinate oracle, relative to the diameter
    #[arg(long, default_value_t = FIT_RESIDUAL)]
    oracle_tolerance: f64,
    /// Skip the coordinate oracle
    #[arg(long)]
    no_oracle: bool,
}

impl Tolerances {
    fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            match_tolerance: self.match_tolerance,
            resultant_tolerance: self.resultant_tolerance,
            oracle: !self.no_oracle,
            oracle_tolerance: self.oracle_tolerance,
            ..AnalysisOptions::default()
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConfigKind {
    Tangential,
    Cyclic,
}

#[derive(Debug, Args)]
struct RenderArgs {
    /// Comma-separated side lengths
    #[arg(long, value_parser = parse_sides)]
    sides: Sides,
    /// Which configuration to build
    #[arg(long, value_enum, default_value_t = ConfigKind::Tangential)]
    config: ConfigKind,
    /// Winding number (1 convex, 2 star)
    #[arg(long, default_value_t = 1)]
    winding: u32,
    /// Write the SVG here and print a JSON summary; without it the SVG goes to stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Draw the incircle
    #[arg(long)]
    incircle: bool,
    /// Draw the circumcircle
    #[arg(long)]
    circumcircle: bool,
}

fn envelope<T: Serialize>(command: &'static str, sides: &[Rational], result: T) -> Result<Value, String> {
    let report = Envelope { tool: TOOL, version: VERSION, command, input: Input { sides: exact_list(sides) }, result };
    serde_json::to_value(report).map_err(|e| e.to_string())
}

fn linkage(sides: &Sides) -> Result<Linkage, String> {
    Linkage::new(sides.0.clone()).map_err(|e| e.to_string())
}

fn tangent(sides: &Sides) -> Result<Value, String> {
    let l = linkage(sides)?;
    let tangency = is_tangential(&l).map_err(|e| e.to_string())?;
    let result = TangentResult {
        n: l.n(),
        tangential: tangency.is_tangential(),
        tangent_lengths: exact_list(tangency.tangent_lengths.values()),
        non_positive: tangency.non_positive.clone(),
        semiperimeter: Number::exact(&l.semiperimeter()),
    };
    envelope("tangent", l.sides(), result)
}

fn inradius(sides: &Sides) -> Result<Value, String> {
    let l = linkage(sides)?;
    let t = is_tangential(&l).map_err(|e| e.to_string())?.tangent_lengths;
    let poly = sylvester_polynomial(&t).map_err(|e| e.to_string())?;
    let p = to_f64(&l.semiperimeter());
    let configurations = (1..=(l.n() as u32 - 1) / 2)
        .map(|winding| {
            let r = arctan_inradius(&t, winding).map_err(|e| e.to_string())?;
            let area = r * p;
            Ok(Configuration {
                winding,
                inradius: Number::float(r),
                area: Number::float(area),
                sixteen_area_squared: Number::float(16.0 * area * area),
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let pair = if l.n() == 5 { Some(pentagon_inradii(&t).map_err(|e| e.to_string())?) } else { None };
    let result = InradiusResult {
        tangent_lengths: exact_list(t.values()),
        semiperimeter: Number::exact(&l.semiperimeter()),
        configurations,
        sylvester: Sylvester {
            coefficients: exact_list(&poly.coefficients),
            discriminant: pair.as_ref().map(|p| Number::exact(&p.discriminant)),
            r_convex: pair.as_ref().map(|p| Number::float(p.r_convex)),
            r_star: pair.as_ref().map(|p| Number::float(p.r_star)),
        },
    };
    envelope("inradius", l.sides(), result)
}

fn robbins(sides: &Sides) -> Result<Value, String> {
    let h = robbins_polynomial(&sides.0).map_err(|e| e.to_string())?;
    let roots = chordal::real_roots(&h, &Domain::all(), ROOT_REFINEMENT);
    let max_root = roots.max().filter(|r| r.upper.is_positive()).map(|r| Number::float(r.value));
    let result = RobbinsResult {
        elementary: exact_list(h.elementary().values()),
        coefficients: exact_list(&h.coefficients()),
        roots: roots.roots.iter().map(Root::from).collect(),
        max_root,
        convex_area: chordal::convex_cyclic_area(&sides.0).ok().map(Number::float),
    };
    envelope("robbins", &sides.0, result)
}

fn bicentric(sides: &Sides, options: &AnalysisOptions) -> Result<Value, String> {
    let l = linkage(sides)?;
    let report = analyze(&l, options).map_err(|e| e.to_string())?;
    envelope("bicentric", l.sides(), BicentricResult::from(&report))
}

fn quad(sides: &Sides) -> Result<Value, String> {
    let l = linkage(sides)?;
    let report = quad_report(&l).map_err(|e| e.to_string())?;
    envelope("quad", l.sides(), QuadResult::new(&report, &l.semiperimeter()))
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

fn run_batch<F>(batch: &Batch, command: &'static str, f: F) -> ExitCode
where
    F: Fn(&Sides) -> Result<Value, String> + Sync,
{
    let results: Vec<Result<Value, String>> = match batch.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs.get()).build() {
            Ok(pool) => pool.install(|| batch.sides.par_iter().map(&f).collect()),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
        },
        None => batch.sides.iter().map(&f).collect(),
    };

    if let [single] = results.as_slice() {
        return match single {
            Ok(value) => {
                print_json(value);
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        };
    }
    let failed = results.iter().any(Result::is_err);
    let items: Vec<Value> = results
        .into_iter()
        .zip(&batch.sides)
        .map(|(r, sides)| {
            r.unwrap_or_else(|e| {
                serde_json::json!({
                    "tool": TOOL,
                    "version": VERSION,
                    "command": command,
                    "input": { "sides": exact_list(&sides.0) },
                    "error": e,
                })
            })
        })
        .collect();
    print_json(&Value::Array(items));
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn render(args: &RenderArgs) -> Result<Option<Value>, String> {
    let l = linkage(&args.sides)?;
    let f = l.sides_f64();
    let (config, incircle, circumcircle) = match args.config {
        ConfigKind::Tangential => {
            let t = is_tangential(&l).map_err(|e| e.to_string())?.tangent_lengths;
            let r = arctan_inradius(&t, args.winding).map_err(|e| e.to_string())?;
            let rebuilt = reconstruct_tangential(&t.to_f64(), r, args.winding).map_err(|e| e.to_string())?;
            let circum = circumcircle_fit(&rebuilt.configuration).circle;
            (rebuilt.configuration, Circle { center: Point::ORIGIN, radius: r }, circum)
        }
        ConfigKind::Cyclic => {
            let (config, circum) = reconstruct_cyclic(&f, args.winding).map_err(|e| e.to_string())?;
            let incircle = incircle_fit(&config).circle;
            (config, incircle, circum)
        }
    };
    let mut circles = Vec::new();
    let mut described = Vec::new();
    if args.incircle {
        circles.push(incircle);
        described.push(CircleJson::new("incircle", &incircle));
    }
    if args.circumcircle {
        circles.push(circumcircle);
        described.push(CircleJson::new("circumcircle", &circumcircle));
    }

    let Some(path) = &args.output else {
        print!("{}", svg::svg_document(&config, &circles));
        return Ok(None);
    };
    svg::render_svg(&config, &circles, path).map_err(|e| format!("{}: {e}", path.display()))?;
    let result = RenderResult {
        config: match args.config {
            ConfigKind::Tangential => "tangential",
            ConfigKind::Cyclic => "cyclic",
        },
        winding: args.winding,
        output: Some(path.display().to_string()),
        vertices: vertices(&config),
        circles: described,
        shoelace_area: Number::float(shoelace_area(&config)),
        incircle_residual: incircle_fit(&config).residual,
        circumcircle_residual: circumcircle_fit(&config).residual,
    };
    envelope("render", l.sides(), result).map(Some)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Tangent(batch) => run_batch(batch, "tangent", tangent),
        Command::Inradius(batch) => run_batch(batch, "inradius", inradius),
        Command::Robbins(batch) => run_batch(batch, "robbins", robbins),
        Command::Bicentric { batch, tolerances } => {
            let options = tolerances.options();
            run_batch(batch, "bicentric", |s| bicentric(s, &options))
        }
        Command::Quad(batch) => run_batch(batch, "quad", quad),
        Command::Render(args) => match render(args) {
            Ok(Some(summary)) => {
                print_json(&summary);
                ExitCode::SUCCESS
            }
            Ok(None) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
    }
}
