//! `gradedalg`: validate, analyze, construct and decompose graded algebras
//! stored as JSON.
//!
//! Exit codes: 0 success, 1 a roundtrip sweep had failures, 2 invalid input
//! (including a rejected decomposition), 3 unreadable or unparsable file,
//! 4 input is not graded simple, 5 the field does not split the algebra.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gradedalg::analysis::analyze;
use gradedalg::cohomology::h2_group;
use gradedalg::io::{self, CocycleJson, ElementRef, FieldJson, GroupJson, ModelSpecJson, ReportJson};
use gradedalg::recovery::{decompose, decomposition_verify};
use gradedalg::sweep::{self, Execution, SweepConfig};
use gradedalg::{Error, FiniteGroup};

#[derive(Parser)]
#[command(name = "gradedalg", version, about = "Group-graded algebras over finite fields")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file holds a valid graded algebra.
    Validate { path: PathBuf },
    /// Unit, graded simplicity, radical, identity component and center.
    Analyze { path: PathBuf },
    /// Build the model algebra M_k(F^σ[H]).
    Construct(ConstructArgs),
    /// Recover (k, tuple, H, σ) and an explicit isomorphism.
    Decompose {
        path: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-check a decomposition against its algebra.
    Verify { algebra: PathBuf, decomposition: PathBuf },
    /// Second cohomology with coefficients in the m-th roots of unity.
    H2 {
        #[arg(long)]
        group: String,
        /// Defaults to the group order.
        #[arg(long)]
        m: Option<u64>,
    },
    /// Model, scramble, decompose and compare over a parameter grid.
    Roundtrip(RoundtripArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// JSON model specification; the flags below are ignored when given.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// `p` or `p^k`.
    #[arg(long, default_value = "5")]
    field: String,
    #[arg(long, default_value = "Z1")]
    group: String,
    #[arg(long)]
    k: Option<usize>,
    /// Comma-separated element names or indices; defaults to `e` repeated k times.
    #[arg(long)]
    tuple: Option<String>,
    /// `trivial`, `whole`, or comma-separated members.
    #[arg(long, default_value = "trivial")]
    subgroup: String,
    /// Cocycle JSON on the subgroup, inline or as a file path.
    #[arg(long)]
    cocycle: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RoundtripArgs {
    /// Comma-separated group names.
    #[arg(long, default_value = "Z2,Z4,Z2xZ2,Z6,S3")]
    groups: String,
    /// Skip groups of larger order.
    #[arg(long, default_value_t = 8)]
    gmax: usize,
    #[arg(long, default_value_t = 3)]
    kmax: usize,
    #[arg(long, default_value_t = 4)]
    hmax: usize,
    #[arg(long, default_value_t = 3)]
    tuples: usize,
    #[arg(long, default_value_t = 25)]
    seeds: u64,
    /// Comma-separated primes.
    #[arg(long, default_value = "5,7,13")]
    fields: String,
    /// Run grid points one at a time.
    #[arg(long)]
    sequential: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse(_) => 3,
            Error::NotGradedSimple => 4,
            Error::NotSplit { .. } => 5,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure { code: 3, message: format!("{}: {e}", path.display()) })
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure { code: 3, message: format!("{}: {e}", p.display()) }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn validate(cli: &Cli, path: &Path) -> Result<u8, Failure> {
    let r = io::algebra_from_str(&read(path)?)?;
    if cli.json {
        let doc = serde_json::json!({
            "schema": io::SCHEMA,
            "valid": true,
            "dim": r.dim(),
            "support": r.support(),
            "has_unit": r.unit().is_some(),
        });
        print!("{}", io::to_pretty(&doc));
    } else {
        println!("valid: dimension {}, support {:?}", r.dim(), r.support());
    }
    Ok(0)
}

fn show<T: std::fmt::Debug>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "unknown".to_string(), |x| format!("{x:?}"))
}

fn cmd_analyze(cli: &Cli, path: &Path) -> Result<u8, Failure> {
    let r = io::algebra_from_str(&read(path)?)?;
    let report = analyze(&r, cli.seed)?;
    if cli.json {
        print!("{}", io::report_to_string(r.field(), &report));
        return Ok(0);
    }
    let doc = ReportJson::of(r.field(), &report);
    println!("dimension:          {}", doc.dim);
    println!("support:            {:?}", doc.support);
    println!("unit:               {}", doc.unit.as_ref().map_or("none".into(), |u| serde_json::to_string(u).unwrap()));
    println!("graded simple:      {}", doc.graded_simple);
    if let Some(w) = &doc.witness {
        println!("  proper ideal:     {}", serde_json::to_string(w).unwrap());
    }
    println!("graded division:    {}", doc.graded_division);
    println!("radical dimension:  {}", show(&doc.radical_dim));
    println!("identity summands:  {}", show(&doc.identity_summands));
    println!("center dimension:   {}", doc.center_dim);
    println!("simple (ungraded):  {}", show(&doc.simple));
    for c in &doc.caveats {
        println!("caveat:             {}", serde_json::to_string(c).unwrap());
    }
    Ok(0)
}

fn field_flag(s: &str) -> Result<FieldJson, Failure> {
    let parse = |x: &str| x.trim().parse().map_err(|_| bad_input(format!("bad field {s:?}; expected p or p^k")));
    match s.split_once('^') {
        Some((p, k)) => Ok(FieldJson { p: parse(p)?, k: parse(k)? as usize, modulus: None }),
        None => Ok(FieldJson { p: parse(s)?, k: 1, modulus: None }),
    }
}

fn refs(list: &str) -> Vec<ElementRef> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_or_else(|_| ElementRef::Name(s.to_string()), ElementRef::Index))
        .collect()
}

fn construct(args: &ConstructArgs) -> Result<u8, Failure> {
    let spec = match &args.spec {
        Some(path) => io::model_spec_from_str(&read(path)?)?,
        None => {
            let g = FiniteGroup::named(&args.group).ok_or_else(|| bad_input(format!("unknown group {:?}", args.group)))?;
            let tuple = match (&args.tuple, args.k) {
                (Some(t), _) => refs(t),
                (None, k) => vec![ElementRef::Index(g.identity()); k.unwrap_or(1)],
            };
            let subgroup = match args.subgroup.as_str() {
                "trivial" => None,
                "whole" => Some(g.elements().map(ElementRef::Index).collect()),
                list => Some(refs(list)),
            };
            let cocycle = match &args.cocycle {
                None => None,
                Some(c) => {
                    let text = if c.trim_start().starts_with('{') { c.clone() } else { read(Path::new(c))? };
                    Some(serde_json::from_str::<CocycleJson>(&text).map_err(|e| Failure { code: 3, message: e.to_string() })?)
                }
            };
            ModelSpecJson {
                schema: None,
                field: field_flag(&args.field)?,
                group: GroupJson::Named(args.group.clone()),
                k: args.k,
                tuple,
                subgroup,
                cocycle,
            }
        }
    };
    let r = spec.build()?;
    emit(&io::algebra_to_string(&r), args.output.as_deref())?;
    Ok(0)
}

fn cmd_decompose(cli: &Cli, path: &Path, output: Option<&Path>) -> Result<u8, Failure> {
    let r = io::algebra_from_str(&read(path)?)?;
    let d = decompose(&r, cli.seed)?;
    emit(&io::decomposition_to_string(r.field(), &d), output)?;
    if output.is_some() && !cli.json {
        let names: Vec<&str> = d.tuple.iter().map(|&g| r.group().name(g)).collect();
        println!("k = {}, tuple ({}), |H| = {}", d.k, names.join(", "), d.subgroup.order());
    }
    Ok(0)
}

fn verify(cli: &Cli, algebra: &Path, decomposition: &Path) -> Result<u8, Failure> {
    let r = io::algebra_from_str(&read(algebra)?)?;
    let d = io::decomposition_from_str(&read(decomposition)?, r.field(), r.group())?;
    let outcome = decomposition_verify(&r, &d);
    if cli.json {
        let doc = serde_json::json!({
            "schema": io::SCHEMA,
            "verified": outcome.is_ok(),
            "failure": outcome.as_ref().err().map(ToString::to_string),
        });
        print!("{}", io::to_pretty(&doc));
    }
    match outcome {
        Ok(()) => {
            if !cli.json {
                println!("verified");
            }
            Ok(0)
        }
        Err(e) => Err(bad_input(format!("rejected: {e}"))),
    }
}

fn h2(cli: &Cli, group: &str, m: Option<u64>) -> Result<u8, Failure> {
    let g = FiniteGroup::named(group).ok_or_else(|| bad_input(format!("unknown group {group:?}")))?;
    let m = m.unwrap_or(g.order() as u64);
    let c = h2_group(&g, m)?;
    if cli.json {
        print!("{}", io::cohomology_to_string(&g, &c));
        return Ok(0);
    }
    if c.is_trivial() {
        println!("H^2({group}, mu_{m}) = 0");
    } else {
        let parts: Vec<String> = c.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        println!("H^2({group}, mu_{m}) = {}", parts.join(" + "));
        for (d, rep) in c.invariant_factors.iter().zip(&c.representatives) {
            println!("generator of order {d}: {}", serde_json::to_string(&rep.rows()).unwrap());
        }
    }
    Ok(0)
}

fn roundtrip(cli: &Cli, args: &RoundtripArgs) -> Result<u8, Failure> {
    let mut groups = Vec::new();
    for name in args.groups.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let g = FiniteGroup::named(name).ok_or_else(|| bad_input(format!("unknown group {name:?}")))?;
        if g.order() <= args.gmax {
            groups.push(name.to_string());
        }
    }
    let primes = args
        .fields
        .split(',')
        .map(|s| s.trim().parse::<u64>().map_err(|_| bad_input(format!("bad prime {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let config = SweepConfig {
        groups,
        max_k: args.kmax,
        max_subgroup_order: args.hmax,
        tuples_per_k: args.tuples,
        primes,
        seeds: args.seeds,
    };
    let exec = if args.sequential { Execution::Sequential } else { Execution::Parallel };
    let report = sweep::run(&config, exec)?;
    if cli.json {
        print!("{}", io::to_pretty(&report));
    } else {
        for pt in &report.points {
            let status = if pt.failures.is_empty() { "PASS" } else { "FAIL" };
            println!(
                "{status} {:<6} p={:<3} k={} tuple={:?} H={:?} class={} {}/{}",
                pt.group,
                pt.p,
                pt.k,
                pt.tuple,
                pt.subgroup,
                pt.class,
                pt.passed,
                pt.passed + pt.failures.len() as u64
            );
            for (seed, msg) in &pt.failures {
                println!("    seed {seed}: {msg}");
            }
        }
        println!("{} of {} runs passed over {} grid points", report.passed, report.runs, report.points.len());
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Validate { path } => validate(cli, path),
        Command::Analyze { path } => cmd_analyze(cli, path),
        Command::Construct(args) => construct(args),
        Command::Decompose { path, output } => cmd_decompose(cli, path, output.as_deref()),
        Command::Verify { algebra, decomposition } => verify(cli, algebra, decomposition),
        Command::H2 { group, m } => h2(cli, group, *m),
        Command::Roundtrip(args) => roundtrip(cli, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
