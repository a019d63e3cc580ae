//! The `siggb` command line.
//!
//! Exit status: 0 success, 1 verification failure (oracle mismatch or
//! admissibility violation), 2 usage or input error, 3 iteration cap hit.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use siggb_core::bench::{cyclic, katsura, BenchmarkSystem};
use siggb_core::engine::{Criterion, EngineConfig, ModuleOrderChoice, Run};
use siggb_core::oracle::{buchberger, reduce_gb};
use siggb_core::pairs::Strategy;
use siggb_core::{Error, PrimeField};

use crate::problem::parse_problem;
use crate::stats::StatsRecord;
use crate::suite::{
    katsura_calibration, run_suite, run_timed, two_polynomial_example, ConfigSpec, SuiteOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Field used by the benchmark families.
const BENCH_FIELD: u64 = 32003;

#[derive(Debug, Parser)]
#[command(
    name = "siggb",
    version,
    about = "Signature-based Groebner bases over prime fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the reduced Groebner basis of a problem file.
    Run {
        file: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a benchmark family member.
    Bench {
        family: Family,
        n: usize,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare criteria on benchmark systems, one row per system and criterion.
    Table {
        /// `cyclicN`, `katsuraN`, a calibrated label like `K6`, or `two-poly`.
        #[arg(long = "system", value_delimiter = ',', default_values = ["cyclic5", "K5", "K6"])]
        systems: Vec<String>,
        #[arg(long = "criteria", value_delimiter = ',', default_value = "f5,ratio,gvw", value_parser = parse_criterion)]
        criteria: Vec<Criterion>,
        #[arg(long, default_value = "sig", value_parser = parse_strategy)]
        strategy: Strategy,
        #[arg(long, default_value = "schreyer", value_parser = parse_modorder)]
        modorder: ModuleOrderChoice,
        #[arg(long)]
        signature_only: bool,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = EngineConfig::DEFAULT_CAP)]
        cap: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Katsura,
    Cyclic,
}

#[derive(Debug, Args)]
struct EngineArgs {
    #[arg(long, default_value = "ratio", value_parser = parse_criterion)]
    criterion: Criterion,
    #[arg(long, default_value = "sig", value_parser = parse_strategy)]
    strategy: Strategy,
    #[arg(long, default_value = "schreyer", value_parser = parse_modorder)]
    modorder: ModuleOrderChoice,
    #[arg(long)]
    no_koszul: bool,
    /// Track signatures only, without module vectors.
    #[arg(long)]
    signature_only: bool,
    /// Assert that every new element is smaller than its parent (default).
    #[arg(long, overrides_with = "no_check_admissible")]
    check_admissible: bool,
    #[arg(long, overrides_with = "check_admissible")]
    no_check_admissible: bool,
    /// Compare the result with the Buchberger oracle.
    #[arg(long)]
    oracle: bool,
    #[arg(long, default_value_t = EngineConfig::DEFAULT_CAP)]
    cap: u64,
    /// Recompute `sum u_i f_i` for every inserted element.
    #[arg(long)]
    verify_vectors: bool,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write the stats record(s) as JSON lines to this path.
    #[arg(long)]
    stats_json: Option<PathBuf>,
    /// Report `elapsed_ms` as 0 so identical invocations print identical bytes.
    #[arg(long)]
    no_timing: bool,
}

fn parse_criterion(s: &str) -> Result<Criterion, String> {
    Criterion::from_name(s).ok_or_else(|| format!("unknown criterion `{s}`"))
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    Strategy::from_name(s).ok_or_else(|| format!("unknown strategy `{s}` (sig, deg, fifo)"))
}

fn parse_modorder(s: &str) -> Result<ModuleOrderChoice, String> {
    ModuleOrderChoice::from_name(s)
        .ok_or_else(|| format!("unknown module order `{s}` (pot, schreyer)"))
}

impl EngineArgs {
    fn config(&self) -> EngineConfig {
        let mut cfg = EngineConfig::with_criterion(self.criterion);
        cfg.strategy = self.strategy;
        cfg.module_order = self.modorder;
        cfg.koszul = !self.no_koszul;
        cfg.full_vector = !self.signature_only;
        cfg.check_admissible = !self.no_check_admissible;
        cfg.cap = self.cap;
        cfg.verify_vectors = self.verify_vectors && !self.signature_only;
        cfg
    }

    fn label(&self) -> String {
        ConfigSpec {
            criterion: self.criterion,
            strategy: self.strategy,
            module_order: self.modorder,
            full_vector: !self.signature_only,
        }
        .label()
    }
}

/// Resolves `cyclicN`, `katsuraN`, `K<label>` and `two-poly`.
pub fn system_by_name(name: &str) -> Option<BenchmarkSystem> {
    let field = PrimeField::new(BENCH_FIELD).expect("prime");
    if name == "two-poly" {
        return Some(two_polynomial_example());
    }
    if let Some(n) = name.strip_prefix("cyclic") {
        return cyclic(field, n.parse().ok()?).ok();
    }
    if let Some(k) = name.strip_prefix("katsura") {
        return katsura(field, k.parse().ok()?).ok();
    }
    let k = katsura_calibration().index(name)?;
    let mut sys = katsura(field, k).ok()?;
    sys.name = format!("{name}=katsura{k}");
    Some(sys)
}

fn fail(stderr: &mut dyn Write, code: i32, msg: impl std::fmt::Display) -> i32 {
    let _ = writeln!(stderr, "siggb: {msg}");
    code
}

fn engine_error(stderr: &mut dyn Write, e: &Error) -> i32 {
    match e {
        Error::CapExceeded(_) => fail(stderr, EXIT_CAP, e),
        _ => fail(stderr, EXIT_USAGE, e),
    }
}

fn write_stats(
    path: Option<&Path>,
    records: &[StatsRecord],
    stderr: &mut dyn Write,
) -> Result<(), i32> {
    let Some(path) = path else { return Ok(()) };
    let mut text = String::new();
    for r in records {
        text.push_str(&r.to_json());
        text.push('\n');
    }
    fs::write(path, text)
        .map_err(|e| fail(stderr, EXIT_USAGE, format_args!("{}: {e}", path.display())))
}

/// Entry point with injectable streams; returns the exit status.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match cli.command {
        Command::Run {
            file,
            engine,
            output,
        } => {
            let text = match fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return fail(stderr, EXIT_USAGE, format_args!("{}: {e}", file.display())),
            };
            let problem = match parse_problem(&text) {
                Ok(p) => p,
                Err(e) => return fail(stderr, EXIT_USAGE, format_args!("{}: {e}", file.display())),
            };
            let name = file
                .file_stem()
                .map_or_else(String::new, |s| s.to_string_lossy().into_owned());
            let system = BenchmarkSystem {
                name,
                ring: problem.ring(),
                var_names: problem.vars.clone(),
                polys: problem.polys,
                expected_gb_size: None,
            };
            solve(&system, &engine, &output, stdout, stderr)
        }
        Command::Bench {
            family,
            n,
            engine,
            output,
        } => {
            let field = PrimeField::new(BENCH_FIELD).expect("prime");
            let system = match family {
                Family::Katsura => katsura(field, n),
                Family::Cyclic => cyclic(field, n),
            };
            match system {
                Ok(s) => solve(&s, &engine, &output, stdout, stderr),
                Err(e) => fail(stderr, EXIT_USAGE, e),
            }
        }
        Command::Table {
            systems,
            criteria,
            strategy,
            modorder,
            signature_only,
            oracle,
            cap,
            workers,
            output,
        } => {
            let mut resolved = Vec::with_capacity(systems.len());
            for name in &systems {
                match system_by_name(name) {
                    Some(s) => resolved.push(s),
                    None => {
                        return fail(stderr, EXIT_USAGE, format_args!("unknown system `{name}`"))
                    }
                }
            }
            let configs: Vec<ConfigSpec> = criteria
                .iter()
                .map(|&criterion| ConfigSpec {
                    criterion,
                    strategy,
                    module_order: modorder,
                    full_vector: !signature_only,
                })
                .collect();
            let defaults = SuiteOptions::default();
            let opts = SuiteOptions {
                cap,
                oracle,
                timing: !output.no_timing,
                workers: workers.unwrap_or(defaults.workers),
                ..defaults
            };
            table(&resolved, &configs, &opts, &output, stdout, stderr)
        }
    }
}

fn solve(
    system: &BenchmarkSystem,
    engine: &EngineArgs,
    output: &OutputArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cfg = engine.config();
    let run: Run = match run_timed(system, &cfg, !output.no_timing, None) {
        Ok(r) => r,
        Err(e) => return engine_error(stderr, &e),
    };
    let names: Vec<&str> = system.var_names.iter().map(String::as_str).collect();
    for p in &run.groebner_basis {
        let _ = writeln!(stdout, "{}", system.ring.render(p, &names));
    }
    let mut record = StatsRecord::from_stats(&run.stats)
        .named(system.name.clone())
        .with_config(engine.label());
    let mut code = EXIT_OK;
    if engine.oracle {
        let expected = reduce_gb(&system.ring, &buchberger(&system.ring, &system.polys));
        let matched = expected == run.groebner_basis;
        record.oracle_match = Some(matched);
        if !matched {
            let _ = writeln!(stderr, "siggb: result differs from the Buchberger oracle");
            for p in &expected {
                let _ = writeln!(stderr, "  expected {}", system.ring.render(p, &names));
            }
            code = EXIT_VERIFY;
        }
    }
    for v in &run.violations {
        let _ = writeln!(
            stderr,
            "siggb: admissibility violated: element {} from parent {}",
            v.child, v.parent
        );
    }
    if !run.violations.is_empty() {
        code = EXIT_VERIFY;
    }
    if run.stats.vector_check_failures > 0 {
        let _ = writeln!(
            stderr,
            "siggb: {} module vectors inconsistent",
            run.stats.vector_check_failures
        );
        code = EXIT_VERIFY;
    }
    let _ = writeln!(stdout, "{}", record.to_json());
    if let Err(c) = write_stats(output.stats_json.as_deref(), &[record], stderr) {
        return c;
    }
    code
}

fn table(
    systems: &[BenchmarkSystem],
    configs: &[ConfigSpec],
    opts: &SuiteOptions,
    output: &OutputArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let rows = run_suite(systems, configs, opts);
    let _ = writeln!(
        stdout,
        "{:<18} {:<28} {:>9} {:>9} {:>7} {:>6} {:>6} {:>5} {:>9} {:>6}",
        "system", "config", "#all", "#rej", "#red", "#zero", "#gen", "gb", "ms", "oracle"
    );
    let mut records = Vec::new();
    let mut code = EXIT_OK;
    for row in &rows {
        let stats = match &row.outcome {
            Ok(s) => s,
            Err(e) => {
                let _ = writeln!(stdout, "{:<18} {:<28} {e}", row.system, row.config.label());
                code = code.max(if matches!(e, Error::CapExceeded(_)) {
                    EXIT_CAP
                } else {
                    EXIT_USAGE
                });
                continue;
            }
        };
        let verdict = match row.verdict {
            Some(true) => "ok",
            Some(false) => "DIFF",
            None => "-",
        };
        let _ = writeln!(
            stdout,
            "{:<18} {:<28} {:>9} {:>9} {:>7} {:>6} {:>6} {:>5} {:>9} {:>6}",
            row.system,
            row.config.label(),
            stats.pairs_generated,
            stats.rejected_nonregular + stats.rejected_criterion,
            stats.reduced,
            stats.zero_reductions,
            stats.basis_nonzero,
            stats.reduced_gb_size,
            stats.elapsed_ms,
            verdict
        );
        if !row.ok() && code == EXIT_OK {
            code = EXIT_VERIFY;
        }
        let mut r = StatsRecord::from_stats(stats)
            .named(row.system.clone())
            .with_config(row.config.label());
        r.oracle_match = row.verdict;
        records.push(r);
    }
    if let Err(c) = write_stats(output.stats_json.as_deref(), &records, stderr) {
        return c;
    }
    code
}
