//! `helly`: certify linear systems and disk families from instance files.
//!
//! Exit codes: 0 consistent / common point / success, 1 inconsistent /
//! violating triple, 2 any input error.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use helly_core::disks::{
    closest_pair, intersect_region, minimalist_helly_check, separating_line, Disk, HellyOutcome,
    QuadPoint,
};
use helly_core::enclosure::{Enclosure, PointEnclosure, DEFAULT_PRECISION};
use helly_core::generate;
use helly_core::instance::Instance;
use helly_core::linear::{helly_certify, sample_consistency, HellyCertificate, LinearSystem};
use helly_core::report;
use helly_core::svg;
use helly_core::Rat;

#[derive(Parser)]
#[command(name = "helly", version, about = "Exact Helly-type certification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Linear systems of equations.
    #[command(subcommand)]
    Linear(LinearCmd),
    /// Families of closed disks in the plane.
    #[command(subcommand)]
    Disks(DisksCmd),
    /// Write a generated instance file.
    Gen(GenArgs),
}

#[derive(Subcommand)]
enum LinearCmd {
    /// Decide consistency; print a witness or a minimum inconsistent subsystem.
    Certify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Test random subsystems of a fixed size.
    Sample {
        path: PathBuf,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum DisksCmd {
    /// Find a common point or a triple with empty intersection.
    Check {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw the family and its intersection region.
    Svg {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: u32,
        /// Treat disk `i` as a query against the intersection of the others.
        #[arg(long)]
        query: Option<usize>,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Tetrahedron,
    RandomLinear,
    ConsistentLinear,
    RandomDisks,
    HellyDisks,
}

/// Exit status of a successful run.
#[derive(Clone, Copy)]
enum Verdict {
    Yes,
    No,
}

type Run = Result<Verdict, String>;

/// `print!` that tolerates a closed stdout, e.g. when piped into `head`.
macro_rules! say {
    ($fmt:literal $($arg:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout(), concat!($fmt, "\n") $($arg)*);
    }};
}

fn fail(e: impl Display) -> String {
    e.to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Linear(LinearCmd::Certify { path, format }) => linear_certify(&path, format),
        Command::Linear(LinearCmd::Sample {
            path,
            size,
            trials,
            seed,
            format,
        }) => linear_sample(&path, size, trials, seed, format),
        Command::Disks(DisksCmd::Check {
            path,
            precision,
            format,
        }) => disks_check(&path, precision, format),
        Command::Disks(DisksCmd::Svg {
            path,
            out,
            precision,
            query,
        }) => disks_svg(&path, out.as_deref(), precision, query),
        Command::Gen(args) => gen(&args),
    };
    match result {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<Instance, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Instance::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_linear(path: &Path) -> Result<LinearSystem, String> {
    match load(path)? {
        Instance::Linear(s) => Ok(s),
        other => Err(format!(
            "{}: expected a linear instance, found {}",
            path.display(),
            other.kind()
        )),
    }
}

fn load_disks(path: &Path) -> Result<Vec<Disk>, String> {
    match load(path)? {
        Instance::Disks(d) => Ok(d),
        other => Err(format!(
            "{}: expected a disks instance, found {}",
            path.display(),
            other.kind()
        )),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            {
                use std::io::Write;
                let _ = std::io::stdout().write_all(text.as_bytes());
            }
            Ok(())
        }
    }
}

fn print_json(v: &Value) {
    say!("{}", report::pretty(v));
}

fn vector(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn index_set(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn interval(e: &Enclosure) -> String {
    if e.is_exact() {
        e.lo.to_string()
    } else {
        let w = Enclosure::exact(e.width()).to_f64();
        format!("{} (enclosure width {w:.1e})", e.to_f64())
    }
}

fn point_text(p: &QuadPoint, prec: u32) -> String {
    let enc = PointEnclosure::of(p, prec);
    format!(
        "x = {}, y = {}  [exact: ({}, {})]",
        interval(&enc.x),
        interval(&enc.y),
        p.x,
        p.y
    )
}

fn linear_certify(path: &Path, format: Format) -> Run {
    let s = load_linear(path)?;
    let cert = helly_certify(&s);
    if format == Format::Json {
        print_json(&report::certificate_json(&cert));
    } else {
        match &cert {
            HellyCertificate::Consistent { witness } => {
                say!("consistent");
                say!("point: {}", vector(&witness.point));
                say!("dimension: {}", witness.dimension());
                for b in &witness.basis {
                    say!("direction: {}", vector(b));
                }
            }
            HellyCertificate::Inconsistent { subsystem } => {
                say!("inconsistent");
                say!("certificate: {}", index_set(subsystem));
            }
        }
    }
    Ok(if cert.is_consistent() {
        Verdict::Yes
    } else {
        Verdict::No
    })
}

fn linear_sample(path: &Path, size: usize, trials: usize, seed: u64, format: Format) -> Run {
    let s = load_linear(path)?;
    let r = sample_consistency(&s, size, trials, seed).map_err(fail)?;
    if format == Format::Json {
        print_json(&report::sampling_json(&r));
    } else {
        say!("samples_drawn: {}", r.samples_drawn);
        say!("subsystem_size: {}", r.subsystem_size);
        say!("inconsistent_samples: {}", r.inconsistent_samples);
        match &r.first_hit {
            Some(hit) => say!("first_hit: {}", index_set(hit)),
            None => say!("first_hit: none"),
        }
        say!("rng: {} seed {}", r.rng, r.seed);
    }
    Ok(Verdict::Yes)
}

fn disks_check(path: &Path, precision: u32, format: Format) -> Run {
    let family = load_disks(path)?;
    let outcome = minimalist_helly_check(&family).map_err(fail)?;
    if format == Format::Json {
        print_json(&report::helly_outcome_json(&outcome, precision));
    } else {
        match &outcome {
            HellyOutcome::CommonPoint(p) => {
                say!("common point");
                say!("{}", point_text(p, precision));
            }
            HellyOutcome::ViolatingTriple(t) => {
                say!("violating triple");
                say!("triple: {}", index_set(t));
            }
        }
    }
    Ok(match outcome {
        HellyOutcome::CommonPoint(_) => Verdict::Yes,
        HellyOutcome::ViolatingTriple(_) => Verdict::No,
    })
}

fn disks_svg(path: &Path, out: Option<&Path>, precision: u32, query: Option<usize>) -> Run {
    let family = load_disks(path)?;
    let Some(q) = query else {
        let region = intersect_region(&family).map_err(fail)?;
        emit(out, &svg::render(&family, &region, None))?;
        return Ok(Verdict::Yes);
    };
    if q >= family.len() {
        return Err(format!("--query {q}: family has {} disks", family.len()));
    }
    let others: Vec<Disk> = family
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != q)
        .map(|(_, d)| d.clone())
        .collect();
    let t = &family[q];
    let region = intersect_region(&others).map_err(fail)?;
    let closest = closest_pair(t, &region, precision).map_err(fail)?;
    let mut line = separating_line(t, &region).map_err(fail)?;
    // report disks by their index in the file, not among the others
    for i in &mut line.separated {
        if *i >= q {
            *i += 1;
        }
    }
    let drawing = svg::render(
        &family,
        &region,
        Some(&svg::Query {
            disk: q,
            closest: &closest,
            line: &line,
        }),
    );
    emit(out, &drawing)?;
    if out.is_some() {
        print_json(&json!({
            "closest_pair": report::closest_pair_json(&closest, precision),
            "separating_line": report::separating_line_json(&line, precision),
        }));
    }
    Ok(Verdict::Yes)
}

fn gen(args: &GenArgs) -> Run {
    let n = args.n;
    let k = args.k.unwrap_or(3);
    if k == 0 && matches!(args.kind, GenKind::RandomLinear | GenKind::ConsistentLinear) {
        return Err("--k must be positive".into());
    }
    let instance = match args.kind {
        GenKind::Tetrahedron => Instance::Linear(generate::tetrahedron()),
        GenKind::RandomLinear => {
            Instance::Linear(generate::random_linear(n.unwrap_or(10), k, args.seed))
        }
        GenKind::ConsistentLinear => {
            Instance::Linear(generate::consistent_linear(n.unwrap_or(100), k, args.seed).0)
        }
        GenKind::RandomDisks => Instance::Disks(generate::random_disks(n.unwrap_or(6), args.seed)),
        GenKind::HellyDisks => Instance::Disks(generate::helly_disks(n.unwrap_or(8), args.seed).0),
    };
    emit(args.out.as_deref(), &instance.to_json())?;
    Ok(Verdict::Yes)
}
