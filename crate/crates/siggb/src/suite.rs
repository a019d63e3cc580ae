//! Benchmark suites: systems, configuration grids, and a runner that checks
//! every row against the Buchberger oracle.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use siggb_core::bench::{cyclic, katsura, BenchmarkSystem};
use siggb_core::engine::{gbgc_until, Criterion, EngineConfig, ModuleOrderChoice, Run, RunStats};
use siggb_core::oracle::{buchberger, reduce_gb, sgb_spotcheck, SpotcheckReport};
use siggb_core::pairs::Strategy;
use siggb_core::{Error, FieldElement, Monomial, Polynomial, PrimeField, Ring, TermOrder};

/// `{x^2 - 1, x*y - 1}` over GF(7), grevlex with `x > y`.
pub fn two_polynomial_example() -> BenchmarkSystem {
    let field = PrimeField::new(7).expect("7 is prime");
    let ring = Ring::new(field, 2, TermOrder::grevlex());
    let minus_one = field.from_i64(-1);
    let mono = |e: &[u32]| Monomial::new(e).expect("small exponents");
    let polys = vec![
        ring.from_terms([(FieldElement::ONE, mono(&[2, 0])), (minus_one, ring.one())]),
        ring.from_terms([(FieldElement::ONE, mono(&[1, 1])), (minus_one, ring.one())]),
    ]
    .into_iter()
    .collect::<Result<Vec<_>, _>>()
    .expect("well-formed terms");
    BenchmarkSystem {
        name: "two-poly".into(),
        ring,
        var_names: vec!["x".into(), "y".into()],
        polys,
        expected_gb_size: Some(2),
    }
}

/// Seed of the random part of the oracle suite.
pub const RANDOM_SUITE_SEED: u64 = 0x5167_6221;

/// `count` random ideals in `x, y, z` over GF(7), grevlex: one to four
/// generators, each with one to four terms of degree at most three.
pub fn random_ideals(seed: u64, count: usize) -> Vec<BenchmarkSystem> {
    let field = PrimeField::new(7).expect("7 is prime");
    let ring = Ring::new(field, 3, TermOrder::grevlex());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let ngens = rng.gen_range(1..=4);
            let mut polys = Vec::with_capacity(ngens);
            while polys.len() < ngens {
                let nterms = rng.gen_range(1..=4);
                let terms: Vec<_> = (0..nterms)
                    .map(|_| {
                        let deg = rng.gen_range(0..=3u32);
                        let mut e = [0u32; 3];
                        for _ in 0..deg {
                            e[rng.gen_range(0..3)] += 1;
                        }
                        let c = field.element(rng.gen_range(1..7));
                        (c, Monomial::new(&e).expect("small exponents"))
                    })
                    .collect();
                let p = ring.from_terms(terms).expect("well-formed terms");
                if !p.is_zero() {
                    polys.push(p);
                }
            }
            BenchmarkSystem {
                name: format!("random{k:02}"),
                ring: ring.clone(),
                var_names: vec!["x".into(), "y".into(), "z".into()],
                polys,
                expected_gb_size: None,
            }
        })
        .collect()
}

/// The systems every engine configuration must agree with the oracle on.
pub fn oracle_suite() -> Vec<BenchmarkSystem> {
    let field = PrimeField::new(32003).expect("32003 is prime");
    let mut out: Vec<_> = (3..=5).map(|n| cyclic(field, n).expect("n >= 2")).collect();
    let k6 = katsura_calibration().index("K6").expect("fixture names K6");
    out.extend((1..=k6).map(|k| katsura(field, k).expect("k >= 1")));
    out.push(two_polynomial_example());
    out.extend(random_ideals(RANDOM_SUITE_SEED, 20));
    out
}

#[derive(Clone, Debug, Deserialize)]
pub struct KatsuraCalibration {
    pub field: u64,
    pub order: String,
    /// Reduced basis sizes of `katsura(k)` computed by the oracle, keyed by `k`.
    pub oracle_sizes: BTreeMap<usize, usize>,
    /// Benchmark label to `katsura` index.
    pub labels: BTreeMap<String, usize>,
}

impl KatsuraCalibration {
    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.get(label).copied()
    }
}

/// The frozen mapping from benchmark labels like `K6` to generator indices.
pub fn katsura_calibration() -> KatsuraCalibration {
    serde_json::from_str(include_str!("../fixtures/katsura_calibration.json"))
        .expect("valid calibration fixture")
}

/// One cell of a configuration grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConfigSpec {
    pub criterion: Criterion,
    pub strategy: Strategy,
    pub module_order: ModuleOrderChoice,
    pub full_vector: bool,
}

impl ConfigSpec {
    pub fn engine_config(&self) -> EngineConfig {
        let mut cfg = EngineConfig::with_criterion(self.criterion);
        cfg.strategy = self.strategy;
        cfg.module_order = self.module_order;
        cfg.full_vector = self.full_vector;
        cfg
    }

    /// `criterion/strategy/modorder/full|sig-only`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ConfigSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{}/{}/{}",
            self.criterion.name(),
            self.strategy.name(),
            self.module_order.name(),
            if self.full_vector { "full" } else { "sig-only" }
        )
    }
}

/// Every combination of the given criteria with all strategies, both module
/// orders, and both vector modes.
pub fn config_grid(criteria: &[Criterion]) -> Vec<ConfigSpec> {
    let mut out = Vec::new();
    for &criterion in criteria {
        for strategy in [
            Strategy::MinimalSignature,
            Strategy::MinimalDegree,
            Strategy::Fifo,
        ] {
            for module_order in [ModuleOrderChoice::Pot, ModuleOrderChoice::Schreyer] {
                for full_vector in [true, false] {
                    out.push(ConfigSpec {
                        criterion,
                        strategy,
                        module_order,
                        full_vector,
                    });
                }
            }
        }
    }
    out
}

/// The 36 sound configurations.
pub fn oracle_grid() -> Vec<ConfigSpec> {
    config_grid(&[Criterion::F5, Criterion::Ratio, Criterion::Gvw])
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub cap: u64,
    pub check_admissible: bool,
    pub verify_vectors: bool,
    /// Compare each row with the reduced Buchberger basis.
    pub oracle: bool,
    /// Run the standard-representation spot check on full-vector rows whose
    /// basis has at most this many nonzero members.
    pub spotcheck_limit: Option<usize>,
    /// Fill in `elapsed_ms`; off for byte-identical output.
    pub timing: bool,
    /// Runs still going at this instant stop with `Error::Interrupted`.
    pub deadline: Option<Instant>,
    pub workers: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            cap: EngineConfig::DEFAULT_CAP,
            check_admissible: true,
            verify_vectors: false,
            oracle: true,
            spotcheck_limit: None,
            timing: true,
            deadline: None,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteRow {
    pub system: String,
    pub config: ConfigSpec,
    pub outcome: Result<RunStats, Error>,
    /// Final counters, or the last ones seen before an error.
    pub progress: RunStats,
    /// Oracle agreement; `None` when the oracle is off or the run failed.
    pub verdict: Option<bool>,
    pub spotcheck: Option<Result<SpotcheckReport, Error>>,
}

impl SuiteRow {
    /// True unless the run failed or a check disagreed.
    pub fn ok(&self) -> bool {
        let stats_ok = match &self.outcome {
            Ok(s) => s.admissibility_violations == 0 && s.vector_check_failures == 0,
            Err(_) => false,
        };
        let spot_ok = match &self.spotcheck {
            None => true,
            Some(Ok(r)) => r.passed(),
            Some(Err(_)) => false,
        };
        stats_ok && self.verdict != Some(false) && spot_ok
    }
}

/// Runs one system under one configuration and times it.
pub fn run_timed(
    system: &BenchmarkSystem,
    cfg: &EngineConfig,
    timing: bool,
    deadline: Option<Instant>,
) -> Result<Run, Error> {
    run_tracked(system, cfg, timing, deadline).0
}

/// Like [`run_timed`], also returning the last counters the engine reported,
/// which survive an interrupted or capped run.
fn run_tracked(
    system: &BenchmarkSystem,
    cfg: &EngineConfig,
    timing: bool,
    deadline: Option<Instant>,
) -> (Result<Run, Error>, RunStats) {
    let start = Instant::now();
    let last = RefCell::new(RunStats::default());
    let stop = |s: &RunStats| {
        last.borrow_mut().clone_from(s);
        deadline.is_some_and(|d| Instant::now() >= d)
    };
    let mut run = gbgc_until(&system.ring, &system.polys, cfg, &stop);
    let elapsed = u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX);
    let mut progress = last.into_inner();
    if let Ok(r) = &mut run {
        if timing {
            r.stats.elapsed_ms = elapsed;
        }
        progress = r.stats.clone();
    } else if timing {
        progress.elapsed_ms = elapsed;
    }
    (run, progress)
}

/// One row per `(system, config)` in system-major order. Rows run on up to
/// `opts.workers` threads; the result does not depend on the thread count.
pub fn run_suite(
    systems: &[BenchmarkSystem],
    configs: &[ConfigSpec],
    opts: &SuiteOptions,
) -> Vec<SuiteRow> {
    let oracles: Vec<Option<Vec<Polynomial>>> = systems
        .iter()
        .map(|s| {
            opts.oracle
                .then(|| reduce_gb(&s.ring, &buchberger(&s.ring, &s.polys)))
        })
        .collect();
    let jobs: Vec<(usize, usize)> = (0..systems.len())
        .flat_map(|s| (0..configs.len()).map(move |c| (s, c)))
        .collect();
    let slots: Mutex<Vec<Option<SuiteRow>>> = Mutex::new(vec![None; jobs.len()]);
    let next = AtomicUsize::new(0);
    let workers = opts.workers.clamp(1, jobs.len().max(1));

    let work = || loop {
        let k = next.fetch_add(1, Ordering::Relaxed);
        let Some(&(s, c)) = jobs.get(k) else { break };
        let row = run_row(&systems[s], &configs[c], oracles[s].as_deref(), opts);
        slots.lock().expect("no worker panicked")[k] = Some(row);
    };
    std::thread::scope(|scope| {
        for _ in 1..workers {
            scope.spawn(work);
        }
        work();
    });
    slots
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .map(|r| r.expect("every job ran"))
        .collect()
}

fn run_row(
    system: &BenchmarkSystem,
    spec: &ConfigSpec,
    oracle: Option<&[Polynomial]>,
    opts: &SuiteOptions,
) -> SuiteRow {
    let mut cfg = spec.engine_config();
    cfg.cap = opts.cap;
    cfg.check_admissible = opts.check_admissible;
    cfg.verify_vectors = opts.verify_vectors && spec.full_vector;
    let (run, progress) = run_tracked(system, &cfg, opts.timing, opts.deadline);
    let verdict = match (&run, oracle) {
        (Ok(r), Some(expected)) => Some(r.groebner_basis == expected),
        _ => None,
    };
    let spotcheck = match (&run, opts.spotcheck_limit) {
        (Ok(r), Some(limit)) if spec.full_vector && r.basis.nonzero().len() <= limit => {
            Some(sgb_spotcheck(&r.context, &r.basis))
        }
        _ => None,
    };
    SuiteRow {
        system: system.name.clone(),
        config: *spec,
        outcome: run.map(|r| r.stats),
        progress,
        verdict,
        spotcheck,
    }
}
