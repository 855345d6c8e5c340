use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use log::{info, warn};
use serde::Serialize;

use normal_depth::depth::{verify_one_depth_for_map, OneDepthReport};
use normal_depth::enumerate::DEFAULT_CAP;
use normal_depth::sociability::{check_tfae_sociable, classify_all};
use normal_depth::{
    factor_xn_minus_1, EnumOptions, Error, ExtCtx, FieldCtx, FrobeniusModule, NormalBasisMap, ReportRecord,
    SociabilityReport, TraceNormalization,
};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "normal-depth",
    version,
    about = "Normal elements, normal depth and sociability in finite fields"
)]
struct Cli {
    /// Largest q^n that may be enumerated
    #[arg(long, global = true, env = "NORMAL_DEPTH_CAP", default_value_t = DEFAULT_CAP)]
    cap: u64,

    /// Worker threads for enumeration (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Canonical index (hex) to start the normal-element search from
    #[arg(long, global = true, value_parser = parse_hex)]
    seed_alpha: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor x^n - 1 over F_q
    Factor {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
    },
    /// Count normal, depth-b, sociable and lonely elements
    Classify {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        b: u32,
    },
    /// Classify every point of a q x n x b grid (comma-separated lists)
    Sweep {
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        q: Vec<String>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        n: Vec<String>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        b: Vec<String>,
    },
    /// Check every equivalence and applicable formula exhaustively
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        b: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_hex(s: &str) -> Result<u64, String> {
    let digits = s.trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(digits, 16).map_err(|e| format!("invalid hex index {s:?}: {e}"))
}

/// Error carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INVALID,
        };
        let message = match e {
            Error::NotPrimePower(q) => format!("q must be a prime power (got {q})"),
            other => other.to_string(),
        };
        Failure { code, message }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: format!("{e:#}"),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.into(),
    }
}

struct Ctx {
    opts: EnumOptions,
    format: Option<Format>,
    out: Option<PathBuf>,
    seed_alpha: Option<u64>,
}

impl Ctx {
    fn writer(&self) -> anyhow::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        let mut w = self.writer()?;
        w.write_all(text.as_bytes())
            .and_then(|_| w.flush())
            .context("write failed")?;
        Ok(())
    }

    /// Builds 𝔽_{q^n} and its normal basis map, honouring `--seed-alpha`.
    fn module(&self, q: u64, n: u64) -> Result<FrobeniusModule, Failure> {
        let base = FieldCtx::with_order(q)?;
        if n == 0 {
            return Err(invalid("n must be at least 1"));
        }
        self.opts.check_size(q, n)?;
        let ext = ExtCtx::new(&base, n as usize, None)?;
        let start = self.seed_alpha.unwrap_or(0);
        let map = NormalBasisMap::search_from(&ext, start, TraceNormalization::NOverTau)?;
        info!("alpha = {}", ext.format(map.alpha()));
        Ok(FrobeniusModule::with_map(map))
    }
}

fn json(value: &impl Serialize) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).context("serialization failed")?;
    s.push('\n');
    Ok(s)
}

fn csv_table(rows: &[ReportRecord]) -> Result<String, Failure> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        w.serialize(row).context("csv serialization failed")?;
    }
    let body = w.into_inner().map_err(|e| anyhow::anyhow!("csv flush failed: {e}"))?;
    let body = String::from_utf8(body).context("csv output is not UTF-8")?;
    Ok(format!("{}\n{body}", ReportRecord::CSV_HEADER))
}

fn cmd_factor(ctx: &Ctx, q: u64, n: u64) -> Result<(), Failure> {
    let field = FieldCtx::with_order(q)?;
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let fact = factor_xn_minus_1(&field, n);
    let ring = field.poly_ring();
    if ctx.format == Some(Format::Json) {
        #[derive(Serialize)]
        struct Factor<'a> {
            poly: String,
            #[serde(flatten)]
            factor: &'a normal_depth::CyclotomicFactor,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            q: u64,
            n: u64,
            tau: u64,
            n0: u64,
            factors: Vec<Factor<'a>>,
        }
        let out = Out {
            q,
            n,
            tau: fact.tau,
            n0: fact.n0,
            factors: fact
                .factors
                .iter()
                .map(|f| Factor {
                    poly: ring.format(&f.poly),
                    factor: f,
                })
                .collect(),
        };
        return ctx.emit(&json(&out)?);
    }
    let mut s = format!("x^{n} - 1 over F_{q}: tau = {}, n0 = {}\n", fact.tau, fact.n0);
    for (i, f) in fact.factors.iter().enumerate() {
        let coset: Vec<String> = f.coset.iter().map(u64::to_string).collect();
        s.push_str(&format!(
            "f{} = {}  degree {}  coset {{{}}}  root order {}\n",
            i + 1,
            ring.format(&f.poly),
            f.degree,
            coset.join(","),
            f.root_order
        ));
    }
    ctx.emit(&s)
}

fn classify(ctx: &Ctx, q: u64, n: u64, b: u32) -> Result<SociabilityReport, Failure> {
    let module = ctx.module(q, n)?;
    Ok(classify_all(&module, b, &ctx.opts)?)
}

fn cmd_classify(ctx: &Ctx, q: u64, n: u64, b: u32) -> Result<(), Failure> {
    let record = classify(ctx, q, n, b)?.to_record();
    match ctx.format {
        Some(Format::Csv) => ctx.emit(&csv_table(&[record])?),
        _ => ctx.emit(&json(&record)?),
    }
}

fn parse_list<T: std::str::FromStr>(name: &str, raw: &[String]) -> Result<Vec<T>, Failure> {
    raw.iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| invalid(format!("invalid {name} value {s:?}"))))
        .collect()
}

fn cmd_sweep(ctx: &Ctx, qs: &[String], ns: &[String], bs: &[String]) -> Result<(), Failure> {
    let qs: Vec<u64> = parse_list("q", qs)?;
    let ns: Vec<u64> = parse_list("n", ns)?;
    let bs: Vec<u32> = parse_list("b", bs)?;
    for &q in &qs {
        FieldCtx::with_order(q)?;
    }
    if ns.contains(&0) {
        return Err(invalid("n must be at least 1"));
    }
    if bs.contains(&0) {
        return Err(invalid("b must be at least 1"));
    }
    let mut rows = Vec::new();
    for &q in &qs {
        let p = FieldCtx::with_order(q)?.p();
        for &n in &ns {
            for &b in &bs {
                let reason = if u64::from(b) > p {
                    Some("b>p")
                } else if ctx.opts.check_size(q, n).is_err() {
                    Some("cap")
                } else {
                    None
                };
                let row = match reason {
                    Some(r) => {
                        warn!("skipping q={q} n={n} b={b}: {r}");
                        ReportRecord::skipped(q, n, b, r)
                    }
                    None => {
                        info!("classifying q={q} n={n} b={b}");
                        classify(ctx, q, n, b)?.to_record()
                    }
                };
                rows.push(row);
            }
        }
    }
    match ctx.format {
        Some(Format::Json) => ctx.emit(&json(&rows)?),
        _ => ctx.emit(&csv_table(&rows)?),
    }
}

#[derive(Serialize)]
struct ElementFailure {
    beta: u64,
    conditions: Vec<bool>,
}

#[derive(Serialize)]
struct FormulaFailure {
    formula: String,
    value: String,
    enumerated: u64,
}

#[derive(Serialize)]
struct VerifyOutput {
    passed: bool,
    report: ReportRecord,
    normal_equivalence_failures: Vec<ElementFailure>,
    tfae_sociable_failures: Vec<ElementFailure>,
    formula_failures: Vec<FormulaFailure>,
    one_depth: OneDepthReport,
    reference: Option<normal_depth::sociability::ReferenceValues>,
}

const MAX_LISTED: usize = 16;

fn cmd_verify(ctx: &Ctx, q: u64, n: u64, b: u32) -> Result<bool, Failure> {
    let module = ctx.module(q, n)?;
    let report = classify_all(&module, b, &ctx.opts)?;
    let ext = &module.ext;
    let total = ext.order().expect("checked against the cap");
    let mut normal_failures = Vec::new();
    let mut tfae_failures = Vec::new();
    let (mut normal_bad, mut tfae_bad) = (0usize, 0usize);
    for i in 0..total {
        let beta = ext.element(i);
        let eq = module.check_normal_equivalences(&beta);
        if !eq.agree() {
            normal_bad += 1;
            if normal_failures.len() < MAX_LISTED {
                normal_failures.push(ElementFailure {
                    beta: i,
                    conditions: eq.as_array().to_vec(),
                });
            }
        }
        let t = check_tfae_sociable(&module, &beta, b)?;
        if !t.agree() {
            tfae_bad += 1;
            if tfae_failures.len() < MAX_LISTED {
                tfae_failures.push(ElementFailure {
                    beta: i,
                    conditions: t.as_array().to_vec(),
                });
            }
        }
    }
    let mut formula_failures: Vec<FormulaFailure> = report
        .checks
        .iter()
        .filter(|c| !c.matches)
        .map(|c| FormulaFailure {
            formula: c.formula.tag().to_string(),
            value: c.value.to_string(),
            enumerated: report.sociable,
        })
        .collect();
    if let Some(l) = report.lonely_formula.as_ref().filter(|l| l.0 != report.lonely.into()) {
        formula_failures.push(FormulaFailure {
            formula: "irreducible_cofactor_lonely".into(),
            value: l.to_string(),
            enumerated: report.lonely,
        });
    }
    let one_depth = verify_one_depth_for_map(&module.map, TraceNormalization::NOverTau, &ctx.opts)?;
    let passed = normal_bad == 0 && tfae_bad == 0 && formula_failures.is_empty() && one_depth.passed();
    if !passed {
        warn!(
            "counterexamples: {normal_bad} normal-equivalence, {tfae_bad} sociability, {} formula, {} one-depth",
            formula_failures.len(),
            one_depth.failures
        );
    }
    let out = VerifyOutput {
        passed,
        report: report.to_record(),
        normal_equivalence_failures: normal_failures,
        tfae_sociable_failures: tfae_failures,
        formula_failures,
        one_depth,
        reference: report.reference.clone(),
    };
    ctx.emit(&json(&out)?)?;
    Ok(passed)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    if cli.threads == Some(0) {
        return Err(invalid("--threads must be at least 1"));
    }
    let ctx = Ctx {
        opts: EnumOptions::with_cap(cli.cap).threads(cli.threads),
        format: cli.format,
        out: cli.out,
        seed_alpha: cli.seed_alpha,
    };
    match &cli.command {
        Command::Factor { q, n } => cmd_factor(&ctx, *q, *n).map(|_| true),
        Command::Classify { q, n, b } => cmd_classify(&ctx, *q, *n, *b).map(|_| true),
        Command::Sweep { q, n, b } => cmd_sweep(&ctx, q, n, b).map(|_| true),
        Command::Verify { q, n, b } => cmd_verify(&ctx, *q, *n, *b),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_COUNTEREXAMPLE),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
