//! The command-line surface wired up by the `fano-towers` binary.
//!
//! Subcommands:
//!
//! * `construct` — build one of the named families and print its
//!   description (human text or the JSON exchanged by `--spec`);
//! * `degree` — exact anticanonical degree plus a certified δ enclosure;
//! * `invariants` — dimension, Picard rank, index, degrees, δ;
//! * `oracle` — recompute the degree in the Chow ring and cross-check it
//!   against the recursion;
//! * `verify` — certified checks of the growth statements (per-family
//!   sweeps, the per-level chain, exact thresholds, known upper bounds);
//! * `search` — exhaustive exact searches over the twist grid;
//! * `table` — batch emission as line-delimited JSON or CSV.
//!
//! Exit codes are part of the contract:
//!
//! * `0` — everything requested was computed and every checked statement
//!   holds;
//! * `1` — at least one checked statement is certified **false** (degree
//!   mismatch, failed bound);
//! * `2` — invalid input: malformed or inadmissible tower description,
//!   parameters outside a family's domain, bad flags;
//! * `3` — a comparison hit the precision cap and remained undecided.
//!
//! Output is deterministic byte-for-byte for a fixed command line, except
//! under `--timings`, which appends wall-clock measurements.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read as _, Write as _};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{
    check_chain, check_high_degree, check_high_index, check_high_picard, known_upper_bounds,
    threshold, BoundFlags, BoundValue, BoundsError, CaseBranch, CheckResult, ThresholdKind,
};
use crate::chow::{cross_check, ChowError};
use crate::numerics::{EvalError, Verdict, DEFAULT_PRECISION_CAP};
use crate::report::{
    bound_record, chain_records, check_record, invariants_record, ratio_csv, search_record,
    ExactValue, IntervalValue, ReportRecord,
};
use crate::search::{best_r, best_ra, ratio_table};
use crate::tower::{BuildMode, TowerError, TowerSpec};

pub const EXIT_OK: i32 = 0;
/// At least one checked statement is certified false.
pub const EXIT_FALSE: i32 = 1;
/// Invalid input: bad description, bad parameters, bad flags.
pub const EXIT_INVALID: i32 = 2;
/// A comparison stayed undecided at the precision cap.
pub const EXIT_PRECISION: i32 = 3;

/// Default precision (bits) for *display* enclosures (δ, ratios). The
/// certification cap is a separate, much larger knob (`--precision-cap`).
const DISPLAY_PRECISION: u32 = 192;

/// Parses `args` (the full argv, program name first), runs the requested
/// command, prints its output, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INVALID,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(out) => {
            // a closed pipe (`… | head`) ends the output, not the process:
            // stop writing and keep the computed exit code
            let stdout = io::stdout();
            let mut handle = stdout.lock();
            for line in &out.lines {
                if writeln!(handle, "{line}").is_err() {
                    break;
                }
            }
            out.code
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

#[derive(Parser)]
#[command(
    name = "fano-towers",
    version,
    about = "Exact invariants and certified growth checks for towers of projectivized split bundles"
)]
struct Cli {
    /// Precision ceiling, in bits, for certified comparisons.
    #[arg(
        long,
        global = true,
        value_name = "BITS",
        default_value_t = DEFAULT_PRECISION_CAP
    )]
    precision_cap: u32,
    /// Record wall-clock timings. Output is byte-reproducible only without
    /// this flag.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family and print its tower description.
    Construct {
        #[command(flatten)]
        input: SpecInput,
        /// Print the JSON description instead of the human summary.
        #[arg(long)]
        json: bool,
    },
    /// Exact anticanonical degree, with a certified δ enclosure.
    Degree {
        #[command(flatten)]
        input: SpecInput,
        #[arg(long)]
        json: bool,
        /// Display precision (bits) for the δ enclosure.
        #[arg(long, value_name = "BITS", default_value_t = DISPLAY_PRECISION)]
        precision: u32,
    },
    /// Full exact invariant readout: dimension, Picard rank, index, degrees, δ.
    Invariants {
        #[command(flatten)]
        input: SpecInput,
        #[arg(long)]
        json: bool,
        /// Display precision (bits) for the δ enclosure.
        #[arg(long, value_name = "BITS", default_value_t = DISPLAY_PRECISION)]
        precision: u32,
    },
    /// Recompute the degree in the Chow ring and cross-check the recursion.
    Oracle {
        #[command(flatten)]
        input: SpecInput,
        #[arg(long)]
        json: bool,
    },
    /// Certified verification of the growth statements.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Exhaustive exact searches over the twist grid.
    Search {
        #[command(subcommand)]
        target: SearchTarget,
    },
    /// Batch table emission (line-delimited JSON, or CSV where noted).
    Table {
        #[command(subcommand)]
        target: TableTarget,
    },
}

/// Built-in families, by the quantity they are tuned to maximize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Projective space itself (the empty tower).
    Projective,
    /// The classical one-level family `P(O ⊕ O((n−1)H))` over `P^{n−1}`.
    Batyrev,
    /// One level, fiber rank `⌊n/ln n⌋`, maximal twist.
    HighDegree,
    /// One level tuned for index `⌊n/ln n⌋ + 1`.
    HighIndex,
    /// `k − 1` nested levels with Picard rank `k`.
    HighPicard,
}

impl Family {
    fn label(self) -> &'static str {
        match self {
            Family::Projective => "projective",
            Family::Batyrev => "batyrev",
            Family::HighDegree => "high-degree",
            Family::HighIndex => "high-index",
            Family::HighPicard => "high-picard",
        }
    }
}

/// How a subcommand receives its tower: either a named family with
/// parameters, or a JSON description.
#[derive(Args)]
struct SpecInput {
    /// Named family to construct.
    #[arg(value_enum, value_name = "FAMILY")]
    family: Option<Family>,
    /// Dimension parameter for the named families.
    #[arg(short = 'n', long, value_name = "N")]
    n: Option<u32>,
    /// Picard-rank parameter (high-picard only).
    #[arg(short = 'k', long, value_name = "K")]
    k: Option<u32>,
    /// Clamp an out-of-range fiber dimension instead of refusing it
    /// (high-index and high-picard).
    #[arg(long)]
    clamp: bool,
    /// Read the tower description from a JSON file (`-` for stdin).
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    spec: Option<String>,
}

impl SpecInput {
    fn resolve(&self) -> Result<TowerSpec, Failure> {
        if let Some(path) = &self.spec {
            if self.n.is_some() || self.k.is_some() || self.clamp {
                return Err(Failure::invalid(
                    "family parameters (-n, -k, --clamp) do not apply to --spec",
                ));
            }
            return load_spec(path);
        }
        let family = self.family.ok_or_else(|| {
            Failure::invalid("provide a family (projective|batyrev|high-degree|high-index|high-picard) or --spec FILE")
        })?;
        let n = self
            .n
            .ok_or_else(|| Failure::invalid("the named families need a dimension: -n N"))?;
        if self.k.is_some() && family != Family::HighPicard {
            return Err(Failure::invalid(
                "-k only applies to the high-picard family",
            ));
        }
        if self.clamp && !matches!(family, Family::HighIndex | Family::HighPicard) {
            return Err(Failure::invalid(
                "--clamp only applies to the high-index and high-picard families",
            ));
        }
        let mode = if self.clamp {
            BuildMode::Clamp
        } else {
            BuildMode::Strict
        };
        let spec = match family {
            Family::Projective => TowerSpec::projective_space(n)?,
            Family::Batyrev => TowerSpec::batyrev(n)?,
            Family::HighDegree => TowerSpec::high_degree(n)?,
            Family::HighIndex => TowerSpec::high_index(n, mode)?,
            Family::HighPicard => {
                let k = self.k.ok_or_else(|| {
                    Failure::invalid("the high-picard family needs a Picard rank: -k K")
                })?;
                TowerSpec::high_picard(n, k, mode)?
            }
        };
        Ok(spec)
    }
}

/// Reads and validates a JSON tower description.
fn load_spec(path: &str) -> Result<TowerSpec, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::invalid(&format!("reading stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::invalid(&format!("reading {path}: {e}")))?
    };
    let spec: TowerSpec = serde_json::from_str(&text)
        .map_err(|e| Failure::invalid(&format!("invalid tower description: {e}")))?;
    let report = spec.validate();
    if !report.valid {
        let mut reasons = report.problems;
        reasons.extend(report.levels.iter().filter_map(|lv| {
            lv.reason
                .as_ref()
                .map(|r| format!("level {}: {r}", lv.level))
        }));
        return Err(Failure::invalid(&format!(
            "inadmissible tower description: {}",
            reasons.join("; ")
        )));
    }
    Ok(spec)
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// δ ≥ 3n²/(10 ln n) for the high-degree family, over a dimension range.
    HighDegree {
        #[arg(long, value_name = "N", default_value_t = 3)]
        from: u32,
        #[arg(long, value_name = "N", default_value_t = 60)]
        to: u32,
        /// Emit one JSON record per dimension instead of human text.
        #[arg(long)]
        json: bool,
    },
    /// δ ≥ n²/(7 ln n) for the (clamped) high-index family, over a range.
    HighIndex {
        #[arg(long, value_name = "N", default_value_t = 4)]
        from: u32,
        #[arg(long, value_name = "N", default_value_t = 60)]
        to: u32,
        #[arg(long)]
        json: bool,
    },
    /// Dimension, Picard rank, and index identities plus the k-step degree
    /// bound, over a dimension range at fixed k. Dimensions where the strict
    /// construction is undefined are reported and skipped.
    HighPicard {
        #[arg(short = 'k', long, value_name = "K")]
        k: u32,
        #[arg(long, value_name = "N", default_value_t = 4)]
        from: u32,
        #[arg(long, value_name = "N", default_value_t = 40)]
        to: u32,
        #[arg(long)]
        json: bool,
    },
    /// The per-level descent inequalities behind the multi-level family at
    /// one `(n, k)`.
    Chain {
        #[arg(short = 'n', long, value_name = "N")]
        n: u32,
        #[arg(short = 'k', long, value_name = "K")]
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// The exact least dimensions at which the two fiber conditions hold.
    Thresholds {
        #[arg(long)]
        json: bool,
    },
    /// Known upper bounds on δ at one dimension, for context.
    UpperBounds {
        #[arg(short = 'n', long, value_name = "N")]
        n: u32,
        /// Fano index to use in the Picard-rank-one bound.
        #[arg(long, value_name = "IOTA", default_value_t = 1)]
        iota: u64,
        /// Include the Picard-rank-one bound.
        #[arg(long)]
        picard_one: bool,
        /// Include the semistable-tangent-bundle bound.
        #[arg(long)]
        semistable: bool,
        /// Include the Kähler–Einstein bound.
        #[arg(long)]
        kahler_einstein: bool,
        /// Display precision (bits) for enclosed values.
        #[arg(long, value_name = "BITS", default_value_t = DISPLAY_PRECISION)]
        precision: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum SearchTarget {
    /// Best fiber rank for the maximal-twist one-level family at one
    /// dimension (exhaustive, exact).
    BestR {
        #[arg(short = 'n', long, value_name = "N")]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Best (rank, twist) pair over the full two-parameter grid.
    BestRa {
        #[arg(short = 'n', long, value_name = "N")]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Optimal degree, δ, and the ratio δ·ln n/n² over a list of
    /// dimensions, with a certificate that the ratio exceeds 3/10.
    RatioTable {
        #[arg(long = "n-list", value_name = "N,N,...", value_delimiter = ',', num_args = 1..)]
        n_list: Vec<u32>,
        /// Display precision (bits) for the enclosures.
        #[arg(long, value_name = "BITS", default_value_t = DISPLAY_PRECISION)]
        precision: u32,
        /// Emit CSV (fixed columns) instead of human text.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum TableTarget {
    /// Invariants of every applicable named family across a dimension
    /// range, as line-delimited JSON.
    Families {
        #[arg(long, value_name = "N", default_value_t = 3)]
        from: u32,
        #[arg(long, value_name = "N", default_value_t = 12)]
        to: u32,
        /// Display precision (bits) for the δ enclosures.
        #[arg(long, value_name = "BITS", default_value_t = DISPLAY_PRECISION)]
        precision: u32,
    },
    /// The search ratio table, as CSV (default) or line-delimited JSON.
    Ratio {
        #[arg(long = "n-list", value_name = "N,N,...", value_delimiter = ',', num_args = 1..)]
        n_list: Vec<u32>,
        #[arg(long, value_name = "BITS", default_value_t = DISPLAY_PRECISION)]
        precision: u32,
        /// Emit line-delimited JSON instead of CSV.
        #[arg(long)]
        json: bool,
    },
    /// Known upper bounds across a list of dimensions, as line-delimited
    /// JSON.
    UpperBounds {
        #[arg(long = "n-list", value_name = "N,N,...", value_delimiter = ',', num_args = 1..)]
        n_list: Vec<u32>,
        /// Fano index to use in the Picard-rank-one bound.
        #[arg(long, value_name = "IOTA", default_value_t = 1)]
        iota: u64,
        #[arg(long, value_name = "BITS", default_value_t = DISPLAY_PRECISION)]
        precision: u32,
    },
}

/// A command's collected output plus its exit code.
struct Output {
    lines: Vec<String>,
    code: i32,
}

impl Output {
    fn ok(lines: Vec<String>) -> Self {
        Output {
            lines,
            code: EXIT_OK,
        }
    }
}

/// A failure that aborts the command (printed to stderr).
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: &str) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.to_owned(),
        }
    }
}

fn eval_code(e: &EvalError) -> i32 {
    match e {
        EvalError::PrecisionCap { .. } | EvalError::Indeterminate(_) => EXIT_PRECISION,
        _ => EXIT_INVALID,
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        Failure {
            code: eval_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<TowerError> for Failure {
    fn from(e: TowerError) -> Self {
        let code = match &e {
            TowerError::Numeric(inner) => eval_code(inner),
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        let code = match &e {
            BoundsError::Eval(inner) => eval_code(inner),
            BoundsError::Tower(TowerError::Numeric(inner)) => eval_code(inner),
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ChowError> for Failure {
    fn from(e: ChowError) -> Self {
        let code = match &e {
            // a disagreement between the two computations is a *finding*,
            // not a usage error
            ChowError::DegreeMismatch { .. } => EXIT_FALSE,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "holds",
        Verdict::False => "FAILS",
        Verdict::Undecided { .. } => "undecided",
    }
}

fn timing_since(enabled: bool, t0: Instant) -> Option<u128> {
    enabled.then(|| t0.elapsed().as_millis())
}

/// Human-readable line for one family check.
fn check_line(res: &CheckResult) -> String {
    let e = ExactValue::new(&res.degree);
    let mut line = format!("n={}", res.n);
    if let Some(k) = res.k {
        line.push_str(&format!(" k={k}"));
    }
    line.push_str(&format!(
        " [{}] degree ≈ {} ({} digits) vs {}",
        verdict_word(res.verdict),
        e.scientific,
        e.digits,
        res.bound_text
    ));
    for note in &res.notes {
        line.push_str(&format!("; {note}"));
    }
    line
}

/// Tracks verdicts across a sweep and produces the summary + exit code.
#[derive(Default)]
struct Tally {
    checked: usize,
    holds: usize,
    fails: usize,
    undecided: usize,
    skipped: usize,
}

impl Tally {
    fn record(&mut self, v: Verdict) {
        self.checked += 1;
        match v {
            Verdict::True => self.holds += 1,
            Verdict::False => self.fails += 1,
            Verdict::Undecided { .. } => self.undecided += 1,
        }
    }

    fn summary(&self) -> String {
        let mut s = format!(
            "summary: {} checked, {} hold, {} fail, {} undecided",
            self.checked, self.holds, self.fails, self.undecided
        );
        if self.skipped > 0 {
            s.push_str(&format!(", {} skipped", self.skipped));
        }
        s
    }

    fn code(&self) -> i32 {
        if self.fails > 0 {
            EXIT_FALSE
        } else if self.undecided > 0 {
            EXIT_PRECISION
        } else {
            EXIT_OK
        }
    }
}

fn dispatch(cli: Cli) -> Result<Output, Failure> {
    let cap = cli.precision_cap;
    let timings = cli.timings;
    match cli.command {
        Command::Construct { input, json } => construct(input, json),
        Command::Degree {
            input,
            json,
            precision,
        } => degree(input, json, precision, timings),
        Command::Invariants {
            input,
            json,
            precision,
        } => invariants(input, json, precision, timings),
        Command::Oracle { input, json } => oracle(input, json, timings),
        Command::Verify { target } => verify(target, cap, timings),
        Command::Search { target } => search(target, cap, timings),
        Command::Table { target } => table(target, cap, timings),
    }
}

fn construct(input: SpecInput, json: bool) -> Result<Output, Failure> {
    let spec = input.resolve()?;
    let lines = if json {
        vec![serde_json::to_string(&spec).expect("tower descriptions always serialize")]
    } else {
        vec![
            format!("{spec}"),
            format!(
                "dimension {} ({} base + {} levels)",
                spec.dim(),
                spec.base_dim,
                spec.levels.len()
            ),
        ]
    };
    Ok(Output::ok(lines))
}

fn degree(input: SpecInput, json: bool, precision: u32, timings: bool) -> Result<Output, Failure> {
    let t0 = Instant::now();
    let spec = input.resolve()?;
    let inv = spec.invariants()?;
    let delta = inv.delta(precision)?;
    let lines = if json {
        let rec = ReportRecord::new("degree", serde_json::json!({ "dim": inv.dim }))
            .with_spec(&spec)
            .with_exact("degree", &inv.degree)
            .with_interval("delta", &delta)
            .with_timing(timing_since(timings, t0));
        vec![rec.to_json_line()]
    } else {
        let e = ExactValue::new(&inv.degree);
        let iv = IntervalValue::new(&delta);
        let mut lines = vec![inv.degree.to_string()];
        lines.push(format!("≈ {} ({} digits)", e.scientific, e.digits));
        lines.push(format!(
            "delta in [{}, {}] ({} bits)",
            iv.lo, iv.hi, iv.precision_bits
        ));
        if let Some(ms) = timing_since(timings, t0) {
            lines.push(format!("({ms} ms)"));
        }
        lines
    };
    Ok(Output::ok(lines))
}

fn invariants(
    input: SpecInput,
    json: bool,
    precision: u32,
    timings: bool,
) -> Result<Output, Failure> {
    let t0 = Instant::now();
    let spec = input.resolve()?;
    let inv = spec.invariants()?;
    let delta = inv.delta(precision)?;
    let lines = if json {
        let rec = invariants_record(&spec, &inv, &delta).with_timing(timing_since(timings, t0));
        vec![rec.to_json_line()]
    } else {
        let deg = ExactValue::new(&inv.degree);
        let gen = ExactValue::new(&inv.gen_degree);
        let iv = IntervalValue::new(&delta);
        let mut lines = vec![
            format!("tower: {spec}"),
            format!(
                "dimension {}, Picard rank {}, index {}",
                inv.dim, inv.picard, inv.index
            ),
            format!("degree = {} ({} digits)", deg.decimal, deg.digits),
            format!("generator degree = {} ({} digits)", gen.decimal, gen.digits),
            format!(
                "delta in [{}, {}] ({} bits)",
                iv.lo, iv.hi, iv.precision_bits
            ),
        ];
        if let Some(ms) = timing_since(timings, t0) {
            lines.push(format!("({ms} ms)"));
        }
        lines
    };
    Ok(Output::ok(lines))
}

fn oracle(input: SpecInput, json: bool, timings: bool) -> Result<Output, Failure> {
    let t0 = Instant::now();
    let spec = input.resolve()?;
    match cross_check(&spec) {
        Ok(value) => {
            let lines = if json {
                let rec = ReportRecord::new("oracle", serde_json::json!({ "agrees": true }))
                    .with_spec(&spec)
                    .with_exact("degree", &value)
                    .with_timing(timing_since(timings, t0));
                vec![rec.to_json_line()]
            } else {
                let mut lines = vec![
                    format!("chow ring: {value}"),
                    format!("recursion: {value}"),
                    "the two computations agree".to_owned(),
                ];
                if let Some(ms) = timing_since(timings, t0) {
                    lines.push(format!("({ms} ms)"));
                }
                lines
            };
            Ok(Output::ok(lines))
        }
        Err(ChowError::DegreeMismatch {
            symbolic,
            recursion,
        }) => {
            let lines = if json {
                let rec = ReportRecord::new("oracle", serde_json::json!({ "agrees": false }))
                    .with_spec(&spec)
                    .with_exact("chow_degree", &symbolic)
                    .with_exact("recursion_degree", &recursion)
                    .with_timing(timing_since(timings, t0));
                vec![rec.to_json_line()]
            } else {
                vec![
                    format!("chow ring: {symbolic}"),
                    format!("recursion: {recursion}"),
                    "MISMATCH: the two computations disagree".to_owned(),
                ]
            };
            Ok(Output {
                lines,
                code: EXIT_FALSE,
            })
        }
        Err(other) => Err(other.into()),
    }
}

fn verify(target: VerifyTarget, cap: u32, timings: bool) -> Result<Output, Failure> {
    match target {
        VerifyTarget::HighDegree { from, to, json } => {
            sweep(from, to, json, timings, "check.high-degree", |n| {
                check_high_degree(n, cap)
            })
        }
        VerifyTarget::HighIndex { from, to, json } => {
            sweep(from, to, json, timings, "check.high-index", |n| {
                check_high_index(n, cap)
            })
        }
        VerifyTarget::HighPicard { k, from, to, json } => {
            sweep(from, to, json, timings, "check.high-picard", |n| {
                check_high_picard(n, k, cap)
            })
        }
        VerifyTarget::Chain { n, k, json } => chain(n, k, cap, json, timings),
        VerifyTarget::Thresholds { json } => thresholds(cap, json, timings),
        VerifyTarget::UpperBounds {
            n,
            iota,
            picard_one,
            semistable,
            kahler_einstein,
            precision,
            json,
        } => {
            let flags = resolve_flags(picard_one, semistable, kahler_einstein);
            upper_bounds_output(n, iota, flags, precision, json)
        }
    }
}

/// Runs `check` over `from..=to`, reporting one line/record per dimension.
/// A dimension where the construction itself is undefined is reported as
/// skipped; it neither holds nor fails.
fn sweep(
    from: u32,
    to: u32,
    json: bool,
    timings: bool,
    kind: &str,
    check: impl Fn(u32) -> Result<CheckResult, BoundsError>,
) -> Result<Output, Failure> {
    if from > to {
        return Err(Failure::invalid(&format!(
            "empty dimension range: --from {from} exceeds --to {to}"
        )));
    }
    let mut lines = Vec::new();
    let mut tally = Tally::default();
    for n in from..=to {
        let t0 = Instant::now();
        match check(n) {
            Ok(res) => {
                tally.record(res.verdict);
                if json {
                    lines.push(
                        check_record(kind, &res, timing_since(timings, t0)).to_json_line(),
                    );
                } else {
                    let mut line = check_line(&res);
                    if let Some(ms) = timing_since(timings, t0) {
                        line.push_str(&format!(" ({ms} ms)"));
                    }
                    lines.push(line);
                }
            }
            Err(BoundsError::Tower(TowerError::InvalidConstruction(msg))) => {
                tally.skipped += 1;
                if json {
                    let rec = ReportRecord::new(kind, serde_json::json!({ "n": n }))
                        .with_notes(&[format!("construction undefined: {msg}")]);
                    lines.push(rec.to_json_line());
                } else {
                    lines.push(format!("n={n} [skipped] construction undefined: {msg}"));
                }
            }
            Err(other) => return Err(other.into()),
        }
    }
    if json {
        let rec = ReportRecord::new(
            "summary",
            serde_json::json!({
                "checked": tally.checked,
                "holds": tally.holds,
                "fails": tally.fails,
                "undecided": tally.undecided,
                "skipped": tally.skipped,
            }),
        );
        lines.push(rec.to_json_line());
    } else {
        lines.push(tally.summary());
    }
    Ok(Output {
        lines,
        code: tally.code(),
    })
}

fn chain(n: u32, k: u32, cap: u32, json: bool, timings: bool) -> Result<Output, Failure> {
    let t0 = Instant::now();
    let report = check_chain(n, k, cap)?;
    let mut tally = Tally::default();
    for lv in &report.levels {
        for row in &lv.rows {
            tally.record(row.verdict);
        }
    }
    let mut lines = Vec::new();
    if json {
        let ms = timing_since(timings, t0);
        for rec in chain_records(&report) {
            lines.push(rec.with_timing(ms).to_json_line());
        }
    } else {
        lines.push(format!("tower: {}", report.tower));
        for lv in &report.levels {
            let branch = match lv.branch {
                CaseBranch::Large => "large index",
                CaseBranch::Small => "small index",
                CaseBranch::Undecided => "undecided (both evaluated)",
            };
            lines.push(format!(
                "level -> Picard rank {}: dim={} r={} s={} iota_Y={} c={} [{branch}]",
                lv.picard_target, lv.dim, lv.r, lv.s, lv.iota_y, lv.twist
            ));
            for row in &lv.rows {
                lines.push(format!(
                    "  [{}] {} ({}): {}",
                    verdict_word(row.verdict),
                    row.name,
                    if row.exact { "exact" } else { "interval" },
                    row.statement
                ));
            }
        }
        if let Some(ms) = timing_since(timings, t0) {
            lines.push(format!("({ms} ms)"));
        }
    }
    if !json {
        lines.push(tally.summary());
    }
    Ok(Output {
        lines,
        code: tally.code(),
    })
}

fn thresholds(cap: u32, json: bool, timings: bool) -> Result<Output, Failure> {
    let mut lines = Vec::new();
    for (kind, name, condition) in [
        (
            ThresholdKind::HighDegree,
            "high-degree",
            "ln n ≥ 10/(10 − 3e)",
        ),
        (ThresholdKind::HighIndex, "high-index", "ln n ≥ 14/(7 − e)"),
    ] {
        let t0 = Instant::now();
        let value = threshold(kind, cap)?;
        if json {
            let rec = ReportRecord::new(
                "threshold",
                serde_json::json!({ "family": name, "condition": condition }),
            )
            .with_exact("least_n", &value)
            .with_timing(timing_since(timings, t0));
            lines.push(rec.to_json_line());
        } else {
            let mut line =
                format!("{name}: the fiber condition {condition} first holds at n = {value}");
            if let Some(ms) = timing_since(timings, t0) {
                line.push_str(&format!(" ({ms} ms)"));
            }
            lines.push(line);
        }
    }
    Ok(Output::ok(lines))
}

/// With no selector flags the full table is printed; otherwise exactly the
/// selected bounds (the unconditional one is always included).
fn resolve_flags(picard_one: bool, semistable: bool, kahler_einstein: bool) -> BoundFlags {
    if !picard_one && !semistable && !kahler_einstein {
        BoundFlags {
            picard_one: true,
            semistable: true,
            kahler_einstein: true,
        }
    } else {
        BoundFlags {
            picard_one,
            semistable,
            kahler_einstein,
        }
    }
}

fn bound_value_text(value: &BoundValue) -> String {
    match value {
        BoundValue::Exact(v) => {
            let e = ExactValue::new(v);
            if e.digits <= 6 {
                e.decimal
            } else {
                format!("{} ({} digits)", e.scientific, e.digits)
            }
        }
        BoundValue::Enclosure(iv) => {
            let v = IntervalValue::new(iv);
            format!("in [{}, {}]", v.lo, v.hi)
        }
        BoundValue::Log10(iv) => {
            let v = IntervalValue::new(iv);
            format!("with log10 in [{}, {}]", v.lo, v.hi)
        }
    }
}

fn upper_bounds_output(
    n: u32,
    iota: u64,
    flags: BoundFlags,
    precision: u32,
    json: bool,
) -> Result<Output, Failure> {
    let bounds = known_upper_bounds(n, iota, flags, precision)?;
    let mut lines = Vec::new();
    if json {
        for b in &bounds {
            lines.push(bound_record(n, iota, b).to_json_line());
        }
    } else {
        lines.push(format!("upper bounds on delta at n = {n} (iota = {iota}):"));
        for b in &bounds {
            lines.push(format!(
                "  {}: {} — {}",
                b.name,
                bound_value_text(&b.value),
                b.description
            ));
        }
    }
    Ok(Output::ok(lines))
}

fn search(target: SearchTarget, cap: u32, timings: bool) -> Result<Output, Failure> {
    match target {
        SearchTarget::BestR { n, json } => {
            let t0 = Instant::now();
            let (r_star, degree) = best_r(n)?;
            let e = ExactValue::new(&degree);
            let lines = if json {
                let rec = ReportRecord::new(
                    "search.best-r",
                    serde_json::json!({ "n": n, "r_star": r_star }),
                )
                .with_exact("degree", &degree)
                .with_timing(timing_since(timings, t0));
                vec![rec.to_json_line()]
            } else {
                vec![format!(
                    "n={n}: r* = {r_star}, degree = {} ({} digits, ≈ {})",
                    e.decimal, e.digits, e.scientific
                )]
            };
            Ok(Output::ok(lines))
        }
        SearchTarget::BestRa { n, json } => {
            let t0 = Instant::now();
            let (r_star, a_star, degree) = best_ra(n)?;
            let e = ExactValue::new(&degree);
            let lines = if json {
                let rec = ReportRecord::new(
                    "search.best-ra",
                    serde_json::json!({ "n": n, "r_star": r_star, "a_star": a_star }),
                )
                .with_exact("degree", &degree)
                .with_timing(timing_since(timings, t0));
                vec![rec.to_json_line()]
            } else {
                vec![format!(
                    "n={n}: r* = {r_star}, a* = {a_star}, degree = {} ({} digits, ≈ {})",
                    e.decimal, e.digits, e.scientific
                )]
            };
            Ok(Output::ok(lines))
        }
        SearchTarget::RatioTable {
            n_list,
            precision,
            csv,
            json,
        } => ratio_output(&n_list, precision, cap, csv, json, timings),
    }
}

fn ratio_output(
    n_list: &[u32],
    precision: u32,
    cap: u32,
    csv: bool,
    json: bool,
    timings: bool,
) -> Result<Output, Failure> {
    let t0 = Instant::now();
    let rows = ratio_table(n_list, precision, cap)?;
    let mut tally = Tally::default();
    for row in &rows {
        tally.record(row.ratio_certified);
    }
    let mut lines = Vec::new();
    if csv {
        lines.extend(ratio_csv(&rows).lines().map(str::to_owned));
    } else if json {
        let ms = timing_since(timings, t0);
        for row in &rows {
            lines.push(search_record(row).with_timing(ms).to_json_line());
        }
    } else {
        for row in &rows {
            let e = ExactValue::new(&row.degree);
            let delta = IntervalValue::new(&row.delta);
            let ratio = IntervalValue::new(&row.ratio);
            lines.push(format!(
                "n={} r*={} a*={} degree ≈ {} ({} digits) delta in [{}, {}] ratio in [{}, {}] [{}]",
                row.n,
                row.r_star,
                row.a_star,
                e.scientific,
                e.digits,
                delta.lo,
                delta.hi,
                ratio.lo,
                ratio.hi,
                verdict_word(row.ratio_certified)
            ));
        }
        lines.push(tally.summary());
        if let Some(ms) = timing_since(timings, t0) {
            lines.push(format!("({ms} ms)"));
        }
    }
    Ok(Output {
        lines,
        code: tally.code(),
    })
}

fn table(target: TableTarget, cap: u32, timings: bool) -> Result<Output, Failure> {
    match target {
        TableTarget::Families {
            from,
            to,
            precision,
        } => families_table(from, to, precision, timings),
        TableTarget::Ratio {
            n_list,
            precision,
            json,
        } => ratio_output(&n_list, precision, cap, !json, json, timings),
        TableTarget::UpperBounds {
            n_list,
            iota,
            precision,
        } => {
            let flags = resolve_flags(false, false, false);
            let mut lines = Vec::new();
            for &n in &n_list {
                let bounds = known_upper_bounds(n, iota, flags, precision)?;
                for b in &bounds {
                    lines.push(bound_record(n, iota, b).to_json_line());
                }
            }
            Ok(Output::ok(lines))
        }
    }
}

/// Emits one invariants record per `(family, n)` over the range, skipping
/// dimensions where a family is undefined.
fn families_table(from: u32, to: u32, precision: u32, timings: bool) -> Result<Output, Failure> {
    if from > to {
        return Err(Failure::invalid(&format!(
            "empty dimension range: --from {from} exceeds --to {to}"
        )));
    }
    let mut lines = Vec::new();
    for n in from..=to {
        for family in [
            Family::Projective,
            Family::Batyrev,
            Family::HighDegree,
            Family::HighIndex,
        ] {
            let t0 = Instant::now();
            let built = match family {
                Family::Projective => TowerSpec::projective_space(n),
                Family::Batyrev => TowerSpec::batyrev(n),
                Family::HighDegree => TowerSpec::high_degree(n),
                Family::HighIndex => TowerSpec::high_index(n, BuildMode::Clamp),
                Family::HighPicard => unreachable!("not part of the families table"),
            };
            let spec = match built {
                Ok(spec) => spec,
                Err(TowerError::InvalidConstruction(_)) => continue,
                Err(other) => return Err(other.into()),
            };
            let inv = spec.invariants()?;
            let delta = inv.delta(precision)?;
            let mut rec =
                invariants_record(&spec, &inv, &delta).with_timing(timing_since(timings, t0));
            if let serde_json::Value::Object(params) = &mut rec.params {
                params.insert("family".to_owned(), family.label().into());
            }
            lines.push(rec.to_json_line());
        }
    }
    Ok(Output::ok(lines))
}
