use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use cyclic_subwords::constructive::{
    distinguish, length_bound, lower_bound_pair_for, verify_lower_bound, ConstructiveError, Mode,
    Residue,
};
use cyclic_subwords::parallel::default_jobs;
use cyclic_subwords::survey::{
    recover_parameters, recovery_threshold_with, SurveyError, ThresholdOptions, ThresholdRow,
};
use cyclic_subwords::{
    classify_special, derived_words, overlays, subwords_exact, subwords_upto, BlockProfile,
    CyclicWord, Signature, SpecialKind, MAX_LEN,
};

static CANCEL: AtomicBool = AtomicBool::new(false);

#[derive(Parser)]
#[command(
    name = "cycsub",
    version,
    about = "Cyclic binary words and their scattered cyclic subwords"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Least subword length separating all necklaces, one row per length.
    Table {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Worker threads; defaults to the available cores.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        out: Format,
        /// Directory for per-length progress files, reused on the next run.
        #[arg(long, env = "CYCSUB_CHECKPOINT_DIR")]
        checkpoint: Option<PathBuf>,
    },
    /// A word that is a subword of exactly one of two words.
    Distinguish {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Constructive)]
        mode: ModeArg,
    },
    /// Distinct subwords of one length, or of every length up to it.
    Subwords {
        #[arg(long)]
        w: String,
        #[arg(long)]
        k: usize,
        /// Emit one record per length from 1 to k.
        #[arg(long)]
        upto: bool,
    },
    /// Block structure of a word.
    Analyze {
        #[arg(long)]
        w: String,
        /// Also list every 1-overlay of the word on --v.
        #[arg(long, requires = "v")]
        overlays: bool,
        #[arg(long)]
        v: Option<String>,
    },
    /// Checks the lower-bound pairs for one parameter against exact computation.
    VerifyLowerBound {
        #[arg(long)]
        m: usize,
        /// Length class offset r in n = 4m + r, one of 3, 4, 5, 6; all when omitted.
        #[arg(long)]
        residue: Option<usize>,
    },
    /// Letter counts and block count of a word from its short subwords.
    Recover {
        #[arg(long)]
        n: usize,
        /// JSON array of words or of subword records, or one record per line.
        #[arg(long)]
        subwords: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Constructive,
    Brute,
}

/// Invalid input; reported with exit status 2.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn parse_word(flag: &str, text: &str) -> Result<CyclicWord> {
    text.parse::<CyclicWord>()
        .map_err(|e| usage(format!("--{flag} {text:?}: {e}")))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn table(
    n_min: usize,
    n_max: usize,
    jobs: Option<usize>,
    out: Format,
    checkpoint: Option<PathBuf>,
) -> Result<()> {
    if n_min < 1 || n_max > MAX_LEN || n_min > n_max {
        return Err(usage(format!("need 1 <= n-min <= n-max <= {MAX_LEN}")));
    }
    let jobs = jobs.unwrap_or_else(default_jobs);
    if jobs < 1 {
        return Err(usage("--jobs must be at least 1"));
    }
    ctrlc::set_handler(|| CANCEL.store(true, Ordering::Relaxed))
        .context("installing the interrupt handler")?;
    let opts = ThresholdOptions {
        jobs,
        checkpoint_dir: checkpoint,
        cancel: Some(&CANCEL),
    };
    let mut rows: Vec<ThresholdRow> = Vec::new();
    let mut csv_out =
        matches!(out, Format::Csv).then(|| csv::Writer::from_writer(std::io::stdout()));
    for n in n_min..=n_max {
        let row = recovery_threshold_with(n, &opts)?;
        if let Some(w) = csv_out.as_mut() {
            w.serialize(&row)?;
            w.flush()?;
        }
        rows.push(row);
    }
    if matches!(out, Format::Json) {
        print_json(&rows)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct SubwordRecord<'a> {
    word: CyclicWord,
    k: usize,
    exact: &'a [CyclicWord],
    count: usize,
}

fn record(word: CyclicWord, s: &Signature) -> SubwordRecord<'_> {
    SubwordRecord {
        word,
        k: s.k,
        exact: &s.words,
        count: s.len(),
    }
}

fn subwords(w: &str, k: usize, upto: bool) -> Result<()> {
    let w = parse_word("w", w)?;
    if k < 1 || k > w.len() {
        return Err(usage(format!("--k must lie in 1..={}", w.len())));
    }
    if upto {
        let mut out = std::io::stdout().lock();
        for s in subwords_upto(&w, k)? {
            serde_json::to_writer(&mut out, &record(w, &s))?;
            writeln!(out)?;
        }
        Ok(())
    } else {
        print_json(&record(w, &subwords_exact(&w, k)?))
    }
}

#[derive(Serialize)]
struct OverlayRecord {
    shift: usize,
    pairs: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct Analysis {
    word: CyclicWord,
    n: usize,
    n0: usize,
    n1: usize,
    l: usize,
    x: usize,
    y: usize,
    a: usize,
    special: SpecialKind,
    dist: Option<usize>,
    periodic: bool,
    long_blocks: Option<CyclicWord>,
    short_blocks: Option<CyclicWord>,
    one_zero_per_block: Option<CyclicWord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    other: Option<CyclicWord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    overlays: Option<Vec<OverlayRecord>>,
}

fn analyze(w: &str, with_overlays: bool, v: Option<&str>) -> Result<()> {
    let w = parse_word("w", w)?;
    let p = BlockProfile::of(&w);
    let derived = derived_words(&w).ok();
    let class = classify_special(&w);
    let mut analysis = Analysis {
        word: w,
        n: p.n,
        n0: p.n0,
        n1: p.n1,
        l: p.l,
        x: p.x,
        y: p.y,
        a: p.a,
        special: class.kind,
        dist: class.is_special().then_some(class.dist),
        periodic: w.is_periodic().0,
        long_blocks: derived.as_ref().map(|d| d.w_long),
        short_blocks: derived.as_ref().map(|d| d.w_short),
        one_zero_per_block: derived.as_ref().map(|d| d.w_zeros),
        other: None,
        overlays: None,
    };
    if let Some(v) = v {
        let v = parse_word("v", v)?;
        analysis.other = Some(v);
        if with_overlays {
            let all = overlays(&w, &v).map_err(|e| usage(e.to_string()))?;
            analysis.overlays = Some(
                all.iter()
                    .map(|o| OverlayRecord {
                        shift: o.shift,
                        pairs: o.pairs(),
                    })
                    .collect(),
            );
        }
    }
    print_json(&analysis)
}

fn verify(m: usize, residue: Option<usize>) -> Result<()> {
    let residues = match residue {
        None => Residue::ALL.to_vec(),
        Some(r) => vec![Residue::from_offset(r)
            .ok_or_else(|| usage(format!("--residue must be one of 3, 4, 5, 6, got {r}")))?],
    };
    let mut reports = Vec::new();
    for r in residues {
        let pair = lower_bound_pair_for(m, r).map_err(|e| usage(e.to_string()))?;
        reports.push(verify_lower_bound(&pair)?);
    }
    print_json(&reports)
}

/// Every word string in a JSON value: strings, arrays, and the `exact` or
/// `words` field of objects.
fn collect_words(value: &Value, out: &mut Vec<String>) -> Result<()> {
    match value {
        Value::String(s) => out.push(s.clone()),
        Value::Array(items) => {
            for item in items {
                collect_words(item, out)?;
            }
        }
        Value::Object(map) => {
            let field = map
                .get("exact")
                .or_else(|| map.get("words"))
                .ok_or_else(|| usage("subword record without an `exact` or `words` field"))?;
            collect_words(field, out)?;
        }
        _ => return Err(usage(format!("unexpected JSON value {value}"))),
    }
    Ok(())
}

fn read_subwords(path: &Path) -> Result<Vec<Signature>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let mut strings = Vec::new();
    match serde_json::from_str::<Value>(&text) {
        Ok(value) => collect_words(&value, &mut strings)?,
        Err(_) => {
            for (i, line) in text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
            {
                let value: Value = serde_json::from_str(line)
                    .map_err(|e| usage(format!("{} line {}: {e}", path.display(), i + 1)))?;
                collect_words(&value, &mut strings)?;
            }
        }
    }
    let mut by_len: BTreeMap<usize, Vec<CyclicWord>> = BTreeMap::new();
    for s in &strings {
        let w = parse_word("subwords", s)?;
        by_len.entry(w.len()).or_default().push(w);
    }
    by_len
        .into_iter()
        .map(|(k, words)| Ok(Signature::from_words(k, words)?))
        .collect()
}

#[derive(Serialize)]
struct Recovered {
    n: usize,
    n0: usize,
    n1: usize,
    l: usize,
}

fn recover(n: usize, path: &Path) -> Result<()> {
    if !(1..=MAX_LEN).contains(&n) {
        return Err(usage(format!("--n must lie in 1..={MAX_LEN}")));
    }
    let sets = read_subwords(path)?;
    let p = recover_parameters(&sets, n)?;
    print_json(&Recovered {
        n,
        n0: p.n0,
        n1: p.n1,
        l: p.l,
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Table {
            n_min,
            n_max,
            jobs,
            out,
            checkpoint,
        } => table(n_min, n_max, jobs, out, checkpoint),
        Command::Distinguish { u, v, mode } => {
            let (u, v) = (parse_word("u", &u)?, parse_word("v", &v)?);
            let mode = match mode {
                ModeArg::Constructive => Mode::Constructive,
                ModeArg::Brute => Mode::Brute,
            };
            let r = distinguish(&u, &v, mode)?;
            debug_assert!(r.bound == length_bound(u.len()));
            print_json(&r)
        }
        Command::Subwords { w, k, upto } => subwords(&w, k, upto),
        Command::Analyze { w, overlays, v } => analyze(&w, overlays, v.as_deref()),
        Command::VerifyLowerBound { m, residue } => verify(m, residue),
        Command::Recover { n, subwords } => recover(n, &subwords),
    }
}

/// Exit status and error kind: 2 for bad input, 1 when a checked claim
/// fails, 130 on interrupt.
fn classify(e: &anyhow::Error) -> (u8, &'static str) {
    if e.downcast_ref::<Usage>().is_some() {
        return (2, "usage");
    }
    if let Some(c) = e.downcast_ref::<ConstructiveError>() {
        return match c {
            ConstructiveError::ClaimViolated(_) => (1, "claim_violated"),
            ConstructiveError::BoundExceeded { .. } => (1, "bound_exceeded"),
            ConstructiveError::EqualWords | ConstructiveError::LengthMismatch(..) => (2, "usage"),
            _ => (1, "constructive"),
        };
    }
    if let Some(s) = e.downcast_ref::<SurveyError>() {
        return match s {
            SurveyError::Interrupted { .. } => (130, "interrupted"),
            SurveyError::InconsistentSet { .. } => (2, "inconsistent_set"),
            SurveyError::Checkpoint(_) => (1, "checkpoint"),
            _ => (2, "usage"),
        };
    }
    (1, "runtime")
}

/// A closed stdout (as under `head`) ends the run quietly.
fn broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<std::io::Error>()
            .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
            || c.downcast_ref::<serde_json::Error>()
                .and_then(|j| j.io_error_kind())
                .is_some_and(|k| k == std::io::ErrorKind::BrokenPipe)
    })
}

fn report(code: u8, kind: &str, message: String) -> ExitCode {
    let body = serde_json::json!({ "error": kind, "message": message });
    eprintln!("{body}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report(2, "usage", e.render().to_string().trim_end().to_string()),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            let (code, kind) = classify(&e);
            report(code, kind, format!("{e:#}"))
        }
    }
}
