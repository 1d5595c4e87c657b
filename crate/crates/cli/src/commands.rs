use std::fmt::Display;
use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use clap::{Args, Subcommand};
use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use serde_json::Value;

use hateful::angelini::{self, LanguageTable};
use hateful::curling::{self, BestTailOptions, CurlString, DEFAULT_STEP_CAP};
use hateful::digitgames::{self, PersistenceSearch, DEFAULT_LYCHREL_CAP, DEFAULT_POWERTRAIN_DIGITS};
use hateful::duplication::{Closure, SymbolString, DEFAULT_STRING_BUDGET};
use hateful::harness::{self, ANumber, CachePolicy, FetchConfig, HarnessError, Status};
use hateful::lagarias::{self, PrecisionPolicy};
use hateful::{quet, tsp, Natural};

use crate::output::{float, int, ints, Rendered};

pub enum Failure {
    /// Verification ran and disagreed; the report is still printed.
    Mismatch(Rendered, String),
    Usage(String),
    Runtime(String),
}

fn runtime(e: impl Display) -> Failure {
    Failure::Runtime(e.to_string())
}

fn harness_failure(e: HarnessError) -> Failure {
    match e {
        HarnessError::NoGenerator(_) | HarnessError::NoFixture(_) | HarnessError::TooManyTerms { .. } => {
            Failure::Usage(e.to_string())
        }
        e => runtime(e),
    }
}

fn exact<S: Serializer>(n: &Natural, s: S) -> Result<S::Ok, S::Error> {
    int(n).serialize(s)
}

fn display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Rate-limited progress lines on stderr.
struct Progress {
    label: &'static str,
    last: Mutex<Option<Instant>>,
}

impl Progress {
    fn new(label: &'static str) -> Self {
        Progress { label, last: Mutex::new(None) }
    }

    fn report(&self, status: impl Display) {
        let mut last = self.last.lock().unwrap_or_else(|e| e.into_inner());
        let now = Instant::now();
        match *last {
            None => *last = Some(now),
            Some(t) if now.duration_since(t) >= Duration::from_secs(2) => {
                *last = Some(now);
                eprintln!("progress: {} {status}", self.label);
            }
            Some(_) => {}
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Numbers whose decimal digits contain 666.
    Beastly(BeastlyArgs),
    /// Reverse-and-add from N until a palindrome appears.
    Lychrel(LychrelArgs),
    /// The reverse-and-add trajectory of 196.
    Trajectory196(Trajectory196Args),
    /// The self-describing letter-rank difference sequence.
    Angelini(AngeliniArgs),
    /// Multiplicative persistence of N, or the least number of a given persistence.
    Persistence(PersistenceArgs),
    /// The powertrain of N, or its fixed points up to a limit.
    Powertrain(PowertrainArgs),
    /// Count strings reachable from a seed by substring duplication.
    Dup123(Dup123Args),
    /// Gijswijt's sequence.
    Gijswijt(GijswijtArgs),
    /// Curling number of a string, optionally extended until a 1 appears.
    Curling(CurlingArgs),
    /// Longest run before a 1 over all initial strings of N twos and threes.
    BestTail(BestTailArgs),
    /// Quet's prime recurrence.
    Quet(QuetArgs),
    /// Monte Carlo estimate of the optimal tour length through N torus points.
    Tsp(TspArgs),
    /// Certified slack in Lagarias' divisor-sum inequality.
    Lagarias(LagariasArgs),
    /// Compare a generated prefix against a b-file.
    Verify(VerifyArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct BeastlyArgs {
    #[arg(long, value_name = "K")]
    count: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct LychrelArgs {
    #[serde(serialize_with = "exact")]
    n: Natural,
    #[arg(long, value_name = "C", default_value_t = DEFAULT_LYCHREL_CAP)]
    cap: usize,
    /// Also list every iterate.
    #[arg(long)]
    iterates: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct Trajectory196Args {
    #[arg(long, value_name = "K")]
    steps: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct AngeliniArgs {
    #[arg(long, value_name = "S", default_value_t = 1)]
    seed: u32,
    #[arg(long, value_name = "K")]
    count: usize,
    /// Language table (`rank <letter> <n>` and `name <n> <word>` lines).
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
    /// Report the relative frequency of each value instead of the terms.
    #[arg(long)]
    frequencies: bool,
}

#[derive(Debug, Args, Serialize)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["n", "smallest"]))]
pub struct PersistenceArgs {
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(serialize_with = "opt_exact")]
    n: Option<Natural>,
    #[arg(long, value_name = "P")]
    #[serde(skip_serializing_if = "Option::is_none")]
    smallest: Option<u32>,
}

fn opt_exact<S: Serializer>(n: &Option<Natural>, s: S) -> Result<S::Ok, S::Error> {
    n.as_ref().map(int).serialize(s)
}

#[derive(Debug, Args, Serialize)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["n", "fixed_points"]))]
pub struct PowertrainArgs {
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(serialize_with = "opt_exact")]
    n: Option<Natural>,
    #[arg(long, value_name = "LIMIT")]
    #[serde(skip_serializing_if = "Option::is_none")]
    fixed_points: Option<u64>,
    /// Refuse results longer than this many digits.
    #[arg(long, value_name = "D", default_value_t = DEFAULT_POWERTRAIN_DIGITS)]
    max_digits: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct Dup123Args {
    #[arg(long, value_name = "S", default_value = "123")]
    #[serde(serialize_with = "display")]
    seed: SymbolString,
    #[arg(long, value_name = "L")]
    max_len: usize,
    /// Stop once this many strings have been stored.
    #[arg(long, value_name = "B", default_value_t = DEFAULT_STRING_BUDGET)]
    budget: usize,
    /// Write every reachable string of this length to --dump-file.
    #[arg(long, value_name = "LEN", requires = "dump_file")]
    #[serde(skip_serializing_if = "Option::is_none")]
    dump_len: Option<usize>,
    #[arg(long, value_name = "FILE", requires = "dump_len")]
    #[serde(skip_serializing_if = "Option::is_none")]
    dump_file: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct GijswijtArgs {
    #[arg(long, value_name = "K")]
    count: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct CurlingArgs {
    /// Symbols as digits (`222322`) or comma-separated (`2,10,3`).
    #[serde(serialize_with = "display")]
    string: CurlString,
    /// Append curling numbers until a 1 is appended.
    #[arg(long)]
    extend: bool,
    #[arg(long, value_name = "STEPS", default_value_t = DEFAULT_STEP_CAP)]
    step_cap: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct BestTailArgs {
    n: usize,
    /// Resume from, and record finished shards in, this file.
    #[arg(long, value_name = "FILE")]
    #[serde(skip_serializing_if = "Option::is_none")]
    checkpoint: Option<PathBuf>,
    #[arg(long, value_name = "STEPS", default_value_t = DEFAULT_STEP_CAP)]
    step_cap: usize,
}

#[derive(Debug, Args, Serialize)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["count", "small_indices"]))]
pub struct QuetArgs {
    #[arg(long, value_name = "K")]
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<usize>,
    /// Indices n up to LIMIT with a(n) < n.
    #[arg(long, value_name = "LIMIT")]
    #[serde(skip_serializing_if = "Option::is_none")]
    small_indices: Option<u64>,
}

#[derive(Debug, Args, Serialize)]
pub struct TspArgs {
    #[arg(long, value_name = "N")]
    n: usize,
    #[arg(long, value_name = "T")]
    trials: usize,
    #[arg(long, value_name = "R", default_value_t = 0)]
    rng_seed: u64,
}

#[derive(Debug, Args, Serialize)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["count", "check"]))]
pub struct LagariasArgs {
    #[arg(long, value_name = "K")]
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<u64>,
    /// Scan a(1..=LIMIT) for negative terms.
    #[arg(long, value_name = "LIMIT")]
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<u64>,
    #[arg(long, value_name = "BITS", default_value_t = PrecisionPolicy::default().max_bits)]
    max_bits: u32,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    a_number: ANumber,
    #[arg(long, value_name = "K")]
    count: usize,
    /// Compare against the OEIS b-file (cached) instead of the bundled fixture.
    #[arg(long, conflicts_with = "fixture")]
    fetch: bool,
    /// Compare against this b-file.
    #[arg(long, value_name = "FILE")]
    #[serde(skip_serializing_if = "Option::is_none")]
    fixture: Option<PathBuf>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Beastly(_) => "beastly",
            Command::Lychrel(_) => "lychrel",
            Command::Trajectory196(_) => "trajectory196",
            Command::Angelini(_) => "angelini",
            Command::Persistence(_) => "persistence",
            Command::Powertrain(_) => "powertrain",
            Command::Dup123(_) => "dup123",
            Command::Gijswijt(_) => "gijswijt",
            Command::Curling(_) => "curling",
            Command::BestTail(_) => "best-tail",
            Command::Quet(_) => "quet",
            Command::Tsp(_) => "tsp",
            Command::Lagarias(_) => "lagarias",
            Command::Verify(_) => "verify",
        }
    }

    pub fn parameters(&self) -> Value {
        let v = match self {
            Command::Beastly(a) => serde_json::to_value(a),
            Command::Lychrel(a) => serde_json::to_value(a),
            Command::Trajectory196(a) => serde_json::to_value(a),
            Command::Angelini(a) => serde_json::to_value(a),
            Command::Persistence(a) => serde_json::to_value(a),
            Command::Powertrain(a) => serde_json::to_value(a),
            Command::Dup123(a) => serde_json::to_value(a),
            Command::Gijswijt(a) => serde_json::to_value(a),
            Command::Curling(a) => serde_json::to_value(a),
            Command::BestTail(a) => serde_json::to_value(a),
            Command::Quet(a) => serde_json::to_value(a),
            Command::Tsp(a) => serde_json::to_value(a),
            Command::Lagarias(a) => serde_json::to_value(a),
            Command::Verify(a) => serde_json::to_value(a),
        };
        v.expect("arguments serialize")
    }

    pub fn run(self) -> Result<Rendered, Failure> {
        match self {
            Command::Beastly(a) => Ok(Rendered::terms("terms", ints(digitgames::beastly_prefix(a.count)))),
            Command::Lychrel(a) => lychrel(a),
            Command::Trajectory196(a) => {
                let t = digitgames::palindrome_trajectory(&Natural::from(196u32), a.steps);
                Ok(Rendered::terms("terms", ints(t.iterates)))
            }
            Command::Angelini(a) => angelini_cmd(a),
            Command::Persistence(a) => persistence(a),
            Command::Powertrain(a) => powertrain(a),
            Command::Dup123(a) => dup(a),
            Command::Gijswijt(a) => Ok(Rendered::terms("terms", ints(curling::gijswijt_prefix(a.count)))),
            Command::Curling(a) => curling_cmd(a),
            Command::BestTail(a) => best_tail(a),
            Command::Quet(a) => quet_cmd(a),
            Command::Tsp(a) => {
                let e = tsp::estimate_l(a.n, a.trials, a.rng_seed).map_err(runtime)?;
                Ok(Rendered::record(vec![
                    ("n", int(e.n)),
                    ("trials", int(e.trials)),
                    ("seed", int(e.seed)),
                    ("mean_eels", float(e.mean_eels)),
                    ("std_error_eels", float(e.std_error_eels)),
                    ("mean_absolute", float(e.mean_absolute)),
                ]))
            }
            Command::Lagarias(a) => lagarias_cmd(a),
            Command::Verify(a) => verify(a),
        }
    }
}

fn lychrel(a: LychrelArgs) -> Result<Rendered, Failure> {
    let t = digitgames::palindrome_trajectory(&a.n, a.cap);
    let (status, palindrome) = match t.resolved() {
        Some(p) => ("Resolved", int(p)),
        None => ("CapReached", int(-1)),
    };
    let mut fields = vec![
        ("start", int(&t.start)),
        ("status", Value::String(status.into())),
        ("palindrome", palindrome),
        ("steps", int(t.steps())),
    ];
    if a.iterates {
        fields.push(("iterates", Value::Array(ints(&t.iterates))));
    }
    Ok(Rendered::record(fields))
}

fn angelini_cmd(a: AngeliniArgs) -> Result<Rendered, Failure> {
    let table = match &a.table {
        None => LanguageTable::english(),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| runtime(format!("{}: {e}", path.display())))?;
            LanguageTable::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
    };
    let terms = angelini::generate(a.seed, a.count, &table).map_err(runtime)?;
    if !a.frequencies {
        return Ok(Rendered::terms("terms", ints(terms)));
    }
    let freq = angelini::frequencies(&terms).map_err(runtime)?;
    let lines = freq.iter().map(|(v, f)| format!("{v} {f:.6}")).collect();
    let result = serde_json::json!({
        "count": int(terms.len()),
        "distinct": int(freq.len()),
        "frequencies": freq.iter().map(|(v, f)| (v.to_string(), float(*f))).collect::<serde_json::Map<_, _>>(),
    });
    Ok(Rendered { result, lines })
}

fn persistence(a: PersistenceArgs) -> Result<Rendered, Failure> {
    if let Some(n) = a.n {
        return Ok(Rendered::record(vec![("n", int(&n)), ("persistence", int(digitgames::persistence(&n)))]));
    }
    let p = a.smallest.expect("clap requires one mode");
    let search = PersistenceSearch::default();
    if p > search.max_target {
        return Err(Failure::Usage(format!("persistence target {p} exceeds the supported maximum {}", search.max_target)));
    }
    let v = digitgames::smallest_with_persistence(p, search).map_err(runtime)?;
    Ok(Rendered::record(vec![("target", int(p)), ("smallest", int(v))]))
}

fn powertrain(a: PowertrainArgs) -> Result<Rendered, Failure> {
    if let Some(n) = a.n {
        let v = digitgames::powertrain_with_limit(&n, a.max_digits).map_err(runtime)?;
        return Ok(Rendered::record(vec![("n", int(&n)), ("value", int(v))]));
    }
    let limit = a.fixed_points.expect("clap requires one mode");
    let progress = Progress::new("powertrain fixed points");
    let block = 10_000_000u64;
    let mut points = Vec::new();
    let mut lo = 0u64;
    while lo <= limit {
        let hi = lo.saturating_add(block - 1).min(limit);
        points.extend(digitgames::powertrain_fixed_points_in(lo, hi));
        progress.report(format!("{hi}/{limit}"));
        if hi == u64::MAX {
            break;
        }
        lo = hi + 1;
    }
    Ok(Rendered::terms("fixed_points", ints(points)))
}

fn dup(a: Dup123Args) -> Result<Rendered, Failure> {
    let progress = Progress::new("duplication closure length");
    let closure = Closure::build_with_progress(&a.seed, a.max_len, a.budget, |len, count| {
        progress.report(format!("{len}/{} ({count} strings)", a.max_len))
    })
    .map_err(runtime)?;
    if let (Some(len), Some(path)) = (a.dump_len, &a.dump_file) {
        if len < a.seed.len() || len > a.max_len {
            return Err(Failure::Usage(format!("--dump-len must lie in {}..={}", a.seed.len(), a.max_len)));
        }
        let file = File::create(path).map_err(|e| runtime(format!("{}: {e}", path.display())))?;
        closure.write_level(len, BufWriter::new(file)).map_err(|e| runtime(format!("{}: {e}", path.display())))?;
    }
    let base = a.seed.len();
    let counts: Vec<(usize, usize)> = closure.counts().into_iter().enumerate().map(|(i, c)| (base + i, c)).collect();
    let lines = counts.iter().map(|(l, c)| format!("{l} {c}")).collect();
    let result = serde_json::json!({
        "counts": counts.iter().map(|(l, c)| serde_json::json!({"length": l, "count": c})).collect::<Vec<_>>(),
    });
    Ok(Rendered { result, lines })
}

fn curling_cmd(a: CurlingArgs) -> Result<Rendered, Failure> {
    let mut fields = vec![
        ("string", Value::String(a.string.to_string())),
        ("curling_number", int(curling::curling_number(a.string.symbols()))),
    ];
    if a.extend {
        let r = curling::extend_until_one(&a.string, a.step_cap).map_err(runtime)?;
        fields.push(("tail_length", int(r.tail_length)));
        fields.push(("extended", Value::Array(ints(r.extended.symbols()))));
    }
    Ok(Rendered::record(fields))
}

fn best_tail(a: BestTailArgs) -> Result<Rendered, Failure> {
    let opts = BestTailOptions { step_cap: a.step_cap, checkpoint: a.checkpoint.as_deref(), ..Default::default() };
    let progress = Progress::new("best-tail shards");
    let b = curling::best_tail_with(a.n, &opts, |done, total| progress.report(format!("{done}/{total}"))).map_err(runtime)?;
    Ok(Rendered::record(vec![
        ("n", int(b.n)),
        ("tail_length", int(b.tail_length)),
        ("witness", Value::String(b.witness.to_string())),
    ]))
}

fn quet_cmd(a: QuetArgs) -> Result<Rendered, Failure> {
    match (a.count, a.small_indices) {
        (Some(k), _) => Ok(Rendered::terms("terms", ints(quet::quet_prefix(k).map_err(runtime)?))),
        (None, Some(limit)) => Ok(Rendered::terms("indices", ints(quet::small_indices(limit).map_err(runtime)?))),
        (None, None) => unreachable!("clap requires one mode"),
    }
}

fn lagarias_cmd(a: LagariasArgs) -> Result<Rendered, Failure> {
    let start_bits = PrecisionPolicy::default().start_bits.min(a.max_bits);
    let policy = PrecisionPolicy { start_bits, max_bits: a.max_bits };
    if let Some(k) = a.count {
        if k == 0 {
            return Err(Failure::Usage("--count must be at least 1".into()));
        }
        let terms = lagarias::terms_in(1, k, policy).map_err(runtime)?;
        return Ok(Rendered::terms("terms", ints(terms.into_iter().map(|t| t.value))));
    }
    let limit = a.check.expect("clap requires one mode");
    let progress = Progress::new("lagarias check");
    let r = lagarias::check_nonnegative_with_progress(limit, policy, |d, t| progress.report(format!("{d}/{t}"))).map_err(runtime)?;
    Ok(Rendered::record(vec![
        ("limit", int(r.limit)),
        ("first_violation", r.first_violation.map_or(Value::Null, int)),
        ("max_bits", int(r.max_bits)),
        ("min_value", int(r.min_value)),
    ]))
}

fn verify(a: VerifyArgs) -> Result<Rendered, Failure> {
    let (reference, source) = if let Some(path) = &a.fixture {
        let text = std::fs::read_to_string(path).map_err(|e| runtime(format!("{}: {e}", path.display())))?;
        (harness::parse_bfile(&text, a.a_number).map_err(runtime)?, path.display().to_string())
    } else if a.fetch {
        let mut config = FetchConfig::from_env();
        config.network = config.policy != CachePolicy::Offline;
        let url = config.url(a.a_number);
        (harness::fetch_bfile(a.a_number, &config).map_err(harness_failure)?, url)
    } else {
        let f = harness::fixture(a.a_number).ok_or(HarnessError::NoFixture(a.a_number)).map_err(harness_failure)?;
        (f, "bundled".to_string())
    };
    let generated = harness::generate(a.a_number, a.count).map_err(harness_failure)?;
    let report = harness::verify(&generated, &reference).map_err(harness_failure)?;
    let mismatch = report.first_mismatch.as_ref().map_or(Value::Null, |m| {
        serde_json::json!({
            "index": int(m.index),
            "expected": int(m.expected.parse::<BigInt>().expect("decimal")),
            "actual": int(m.actual.parse::<BigInt>().expect("decimal")),
        })
    });
    let status = match report.status {
        Status::Pass => "pass",
        Status::Fail => "fail",
    };
    let mut lines = vec![
        format!("a_number {}", report.a_number),
        format!("source {source}"),
        format!("compared {}", report.compared),
        format!("status {status}"),
    ];
    if let Some(m) = &report.first_mismatch {
        lines.push(format!("first_mismatch {} {} {}", m.index, m.expected, m.actual));
    }
    let result = serde_json::json!({
        "a_number": report.a_number,
        "source": source,
        "compared": int(report.compared),
        "status": status,
        "first_mismatch": mismatch,
    });
    let rendered = Rendered { result, lines };
    match report.status {
        Status::Pass => Ok(rendered),
        Status::Fail => {
            let m = report.first_mismatch.expect("failing reports carry a mismatch");
            let reason = format!("{} index {}: expected {}, generated {}", report.a_number, m.index, m.expected, m.actual);
            Err(Failure::Mismatch(rendered, reason))
        }
    }
}
