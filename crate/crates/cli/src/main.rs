mod cache;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fockcan_core::canonical::{self, BasisKind};
use fockcan_core::engine::EngineConfig;
use fockcan_core::io::{self, TableRecord, VectorRecord};
use fockcan_core::registry::{MethodRegistry, SuiteParams, SuiteRegistry};
use fockcan_core::rmatrix::{ThetaFactorization, WordScheme};
use fockcan_core::transport::{self, TransportOptions};
use fockcan_core::{Engine, Error, FockVector, WeightFunction, ZeroOneSequence};
use serde::Serialize;

use crate::cache::Cache;

#[derive(Parser)]
#[command(
    name = "fockcan",
    version,
    about = "Canonical bases of mixed tensor Fock spaces"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cache results as JSON files in this directory.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Recompute cache hits and fail if they disagree.
    #[arg(long, global = true)]
    check_cache: bool,
    /// Highest level tried while stabilizing.
    #[arg(long, global = true, default_value_t = 8)]
    max_k: i32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical element T_f, untruncated unless --k is given.
    Canon {
        #[arg(long)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        k: Option<i32>,
        #[arg(long, default_value = "direct")]
        method: String,
    },
    /// Dual canonical element L_f truncated at level k.
    Dual {
        #[arg(long)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        k: Option<i32>,
    },
    /// All t_gf or l_gf with f in the level-k window.
    Table {
        #[arg(long)]
        b: String,
        #[arg(long)]
        k: i32,
        #[arg(long, default_value = "canonical")]
        kind: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        k: Option<i32>,
    },
    /// T_f computed from the standard sequence, with every intermediate element.
    Transport {
        #[arg(long)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Root vectors of the quasi-R-matrix at level k.
    Theta {
        #[arg(long)]
        k: i32,
        #[arg(long, default_value = "descending")]
        scheme: String,
    },
    /// Available methods and suites.
    List,
}

/// A verification ran and reported failures.
#[derive(Debug)]
struct VerificationFailed(usize);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} check(s) failed", self.0)
    }
}

impl std::error::Error for VerificationFailed {}

fn parse_seq(s: &str) -> Result<ZeroOneSequence> {
    s.parse().with_context(|| format!("invalid --b `{s}`"))
}

fn parse_pair(b: &str, f: &str) -> Result<(ZeroOneSequence, WeightFunction)> {
    let seq = parse_seq(b)?;
    let f: WeightFunction = f.parse().with_context(|| format!("invalid --f `{f}`"))?;
    if f.len() != seq.len() {
        return Err(Error::LengthMismatch(format!(
            "--b has {} entries, --f has {}",
            seq.len(),
            f.len()
        ))
        .into());
    }
    Ok((seq, f))
}

struct Ctx {
    engine: Engine,
    cache: Option<Cache>,
    format: Format,
}

impl Ctx {
    fn cached_vector(
        &self,
        config: String,
        compute: impl FnOnce() -> Result<FockVector>,
    ) -> Result<FockVector> {
        let Some(cache) = &self.cache else {
            return compute();
        };
        let valid = |r: &VectorRecord| FockVector::try_from(r).is_ok();
        let (rec, _) =
            cache.get_or_compute(&config, valid, || Ok(VectorRecord::from(&compute()?)))?;
        Ok(FockVector::try_from(&rec)?)
    }

    fn render_vector(&self, v: &FockVector) -> Result<String> {
        Ok(match self.format {
            Format::Text => format!("{v}\n"),
            Format::Json => format!("{}\n", io::vector_to_json(v)),
            Format::Csv => {
                let mut out = String::from("f,coefficient\n");
                for (f, c) in v.iter() {
                    writeln!(out, "\"{f}\",{c}")?;
                }
                out
            }
        })
    }
}

fn run(cli: Cli) -> Result<()> {
    let engine = Engine::new(EngineConfig {
        max_level: cli.max_k,
        ..Default::default()
    });
    let cache = cli
        .cache_dir
        .as_deref()
        .map(|d| Cache::new(d, cli.check_cache))
        .transpose()?;
    let ctx = Ctx {
        engine,
        cache,
        format: cli.format,
    };
    let out = match cli.command {
        Command::Canon { b, f, k, method } => {
            let (seq, f) = parse_pair(&b, &f)?;
            let methods = MethodRegistry::builtin();
            let m = methods.get(&method)?;
            let config = format!(
                "canon b={seq} f={f} k={k:?} method={method} max_k={}",
                cli.max_k
            );
            let v = ctx.cached_vector(config, || match k {
                Some(k) => Ok(canonical::canonical_element(&ctx.engine, &seq, k, &f)?),
                None => Ok(m.compute(&ctx.engine, &seq, &f)?),
            })?;
            ctx.render_vector(&v)?
        }
        Command::Dual { b, f, k } => {
            let (seq, f) = parse_pair(&b, &f)?;
            let k = k.unwrap_or(f.max_abs().max(1));
            eprintln!("note: L_f has infinite support; showing its truncation at level {k}");
            let config = format!("dual b={seq} f={f} k={k}");
            let v = ctx.cached_vector(config, || {
                Ok(canonical::dual_canonical_element(&ctx.engine, &seq, k, &f)?)
            })?;
            ctx.render_vector(&v)?
        }
        Command::Table { b, k, kind } => {
            let seq = parse_seq(&b)?;
            let kind: BasisKind = kind.parse()?;
            let compute = || -> Result<TableRecord> {
                let t = canonical::bkl_table(&ctx.engine, &seq, k, kind)?;
                Ok(serde_json::from_str(&io::table_to_json(&t))?)
            };
            let rec = match &ctx.cache {
                Some(c) => {
                    c.get_or_compute(
                        &format!("table b={seq} k={k} kind={kind}"),
                        |_| true,
                        compute,
                    )?
                    .0
                }
                None => compute()?,
            };
            render_table(&rec, ctx.format)?
        }
        Command::Verify { suite, b, k } => {
            let suites = SuiteRegistry::builtin();
            let s = suites.get(&suite)?;
            let seq = b.as_deref().map(parse_seq).transpose()?;
            let report = s.run(&ctx.engine, &SuiteParams::new(seq, k))?;
            let (ok, bad) = report.count();
            let text = match ctx.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&report)?),
                Format::Text | Format::Csv => {
                    let mut out = String::new();
                    for c in &report.checks {
                        writeln!(
                            out,
                            "{} {:<24} {}",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        )?;
                    }
                    writeln!(out, "{}: {ok} passed, {bad} failed", report.suite)?;
                    out
                }
            };
            print!("{text}");
            if bad > 0 {
                return Err(VerificationFailed(bad).into());
            }
            String::new()
        }
        Command::Transport { b, f } => {
            let (seq, f) = parse_pair(&b, &f)?;
            let r = transport::transport_canonical(
                &ctx.engine,
                &seq,
                &f,
                &TransportOptions::default(),
            )?;
            render_transport(&r, ctx.format)?
        }
        Command::Theta { k, scheme } => {
            let scheme: WordScheme = scheme.parse()?;
            let theta = ThetaFactorization::build(k, scheme)?;
            let records = theta.records();
            match ctx.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&records)?),
                Format::Text | Format::Csv => {
                    let mut out = format!("word: {:?}\n", theta.word());
                    for (p, r) in theta.pairs().iter().zip(&records) {
                        writeln!(
                            out,
                            "t={} a={} root=({},{})\n  E = {}\n  F = {}",
                            r.t, r.a_t, p.root.0, p.root.1, r.e, r.f
                        )?;
                    }
                    out
                }
            }
        }
        Command::List => {
            let mut out = String::from("methods:\n");
            for m in MethodRegistry::builtin().iter() {
                writeln!(out, "  {:<12} {}", m.name(), m.description())?;
            }
            out.push_str("suites:\n");
            for s in SuiteRegistry::builtin().iter() {
                writeln!(out, "  {:<12} {}", s.name(), s.description())?;
            }
            out
        }
    };
    print!("{out}");
    Ok(())
}

fn render_table(rec: &TableRecord, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(rec)?),
        Format::Csv => {
            let mut out = String::from("g,f,polynomial\n");
            for r in &rec.rows {
                writeln!(out, "\"{}\",\"{}\",{}", r.g, r.f, r.polynomial)?;
            }
            out
        }
        Format::Text => {
            let sym = if rec.kind == "dual" { "l" } else { "t" };
            let mut out = String::new();
            for r in &rec.rows {
                writeln!(out, "{sym}[({}),({})] = {}", r.g, r.f, r.polynomial)?;
            }
            out
        }
    })
}

#[derive(Serialize)]
struct ChainRecord {
    kappa: Option<usize>,
    b: String,
    f: Vec<i32>,
    vector: VectorRecord,
}

fn render_transport(r: &transport::TransportResult, format: Format) -> Result<String> {
    let start = r.start.vector.seq().clone();
    let mut chain = vec![ChainRecord {
        kappa: None,
        b: start.to_string(),
        f: r.g.values().to_vec(),
        vector: VectorRecord::from(&r.start.vector),
    }];
    for s in &r.steps {
        let small = s.vector.at_level(s.vector.max_abs().max(1))?;
        chain.push(ChainRecord {
            kappa: Some(s.kappa),
            b: s.seq.to_string(),
            f: s.f.values().to_vec(),
            vector: VectorRecord::from(&small),
        });
    }
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&chain)?),
        Format::Text | Format::Csv => {
            let mut out = String::new();
            writeln!(
                out,
                "word: {}",
                r.word
                    .iter()
                    .map(|k| format!("R_{k}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            )?;
            writeln!(out, "g = ({})", r.g)?;
            writeln!(out, "T^{}_({}) = {}", start, r.g, r.start.vector)?;
            for s in &r.steps {
                writeln!(out, "R_{}: T^{}_({}) = {}", s.kappa, s.seq, s.f, s.vector)?;
            }
            out
        }
    })
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<VerificationFailed>().is_some() {
        return 1;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::StabilizationCap(_)) => 3,
        Some(
            Error::Parse { .. }
            | Error::Unknown { .. }
            | Error::LengthMismatch(_)
            | Error::Dominance(_)
            | Error::SequencePattern(_)
            | Error::Truncation(_)
            | Error::IndexOutOfRange(_),
        ) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let code = exit_code(&e);
            if e.downcast_ref::<VerificationFailed>().is_none() {
                eprintln!("error: {e:#}");
            }
            if code == 3 {
                eprintln!("hint: raise --max-k, or pass --k to get a truncated element instead");
            }
            ExitCode::from(code)
        }
    }
}
