//! The `subcx` command line.
//!
//! [`run`] takes the arguments and two sinks so the whole front end can be
//! driven in process; the binary only forwards `std::env::args` and the
//! standard streams.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::automata::{
    cover_nfa, decide_bounded, factor_closure, factor_dfa, verify_triple_cover, CoverMode, CoverOutcome, GapCertificate,
};
use crate::complexity::{classify, profile, special_counts};
use crate::error::Error;
use crate::langspec::{json as spec_json, Builtin, LanguageSource};
use crate::verifier::{self, run_suite, CheckReport, Instance, Outcome, Suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "subcx", version, about = "Subword complexity of regular languages and infinite words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print n, p(n), s(n) and an exactness flag for n = 0..=N.
    Profile {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short = 'n', long = "max-length", default_value_t = 10)]
        max_length: usize,
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide bounded versus linear complexity and print the verdict as JSON.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        /// Profile length used for generated words.
        #[arg(short = 'n', long = "max-length", default_value_t = 50)]
        max_length: usize,
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the triple certificate of a bounded regular language and check it.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Mode::Formal)]
        mode: Mode,
        /// Longest word tried in sampled mode.
        #[arg(short = 'n', long = "max-length", default_value_t = 12)]
        max_length: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite, or every check on one language.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        input: OptionalInput,
        #[arg(short = 'n', long = "max-length")]
        max_length: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the builtin languages.
    Catalog {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    #[arg(long)]
    builtin: Option<String>,
    /// Language spec in JSON.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
struct OptionalInput {
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Formal,
    Sampled,
}

/// A failed command: exit code plus the one diagnostic line for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DeterminizationCap(_) | Error::CountOverflow(_) => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

/// What a successful command produced.
struct Done {
    code: i32,
    stdout: String,
    out: Option<(PathBuf, String)>,
}

impl Done {
    fn print(stdout: String) -> Self {
        Done { code: EXIT_OK, stdout, out: None }
    }

    /// Sends `body` to `--out` when given, otherwise to stdout.
    fn routed(body: String, out: Option<PathBuf>) -> Self {
        match out {
            Some(path) => Done { code: EXIT_OK, stdout: String::new(), out: Some((path, body)) },
            None => Done::print(body),
        }
    }
}

fn load(builtin: Option<&str>, input: Option<&PathBuf>) -> Result<(String, LanguageSource), Failure> {
    match (builtin, input) {
        (Some(name), _) => {
            let b: Builtin = name.parse()?;
            Ok((format!("builtin {}", b.name()), LanguageSource::Builtin(b)))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| input_failure(format!("{}: {e}", path.display())))?;
            Ok((path.display().to_string(), spec_json::parse(&text)?))
        }
        (None, None) => Err(input_failure("one of --builtin or --input is required")),
    }
}

fn to_csv<R: Serialize>(header: &[&str], rows: &[R]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for r in rows {
        w.serialize(r).expect("plain rows serialize");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 input")
}

fn check_horizon(n: usize, horizon: Option<usize>) -> Result<(), Failure> {
    match horizon {
        Some(h) if h < n => Err(Error::HorizonTooSmall { horizon: h, n }.into()),
        _ => Ok(()),
    }
}

fn cmd_profile(
    input: &InputArgs,
    n: usize,
    horizon: Option<usize>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<Done, Failure> {
    check_horizon(n, horizon)?;
    let (_, src) = load(input.builtin.as_deref(), input.input.as_ref())?;
    let p = profile(&src, n, horizon)?;
    let (s, s_exact) = special_counts(&src, n, horizon)?;
    let rows: Vec<(usize, u64, u64, bool)> =
        (0..=n).map(|i| (i, p.get(i), s[i], p.is_exact(i) && s_exact[i])).collect();
    let body = match format {
        Format::Csv => to_csv(&["n", "p", "s", "exact"], &rows),
        Format::Json => {
            let v: Vec<Value> = rows.iter().map(|(i, p, s, e)| json!({ "n": i, "p": p, "s": s, "exact": e })).collect();
            format!("{}\n", Value::Array(v))
        }
        Format::Table => {
            let mut text = format!("{:>4} {:>12} {:>12}  exact\n", "n", "p(n)", "s(n)");
            for (i, p, s, e) in &rows {
                text.push_str(&format!("{i:>4} {p:>12} {s:>12}  {}\n", if *e { "yes" } else { "no" }));
            }
            text
        }
    };
    Ok(Done::routed(body, out))
}

fn cmd_classify(input: &InputArgs, n: usize, horizon: Option<usize>, out: Option<PathBuf>) -> Result<Done, Failure> {
    check_horizon(n, horizon)?;
    let (_, src) = load(input.builtin.as_deref(), input.input.as_ref())?;
    let verdict = classify(&src, n, horizon)?;
    Ok(Done::routed(format!("{}\n", verdict.to_json(&src.alphabet())), out))
}

fn cmd_decompose(input: &InputArgs, mode: Mode, n: usize, out: Option<PathBuf>) -> Result<Done, Failure> {
    let (_, src) = load(input.builtin.as_deref(), input.input.as_ref())?;
    let resolved = src.resolved();
    let nfa = match resolved.as_ref() {
        LanguageSource::Finite { .. } | LanguageSource::Regular { .. } => resolved.to_regular().expect("regular"),
        _ => return Err(input_failure("decompose needs a finite or regular language")),
    };
    let alphabet = nfa.alphabet().clone();
    let cert = decide_bounded(&factor_dfa(&nfa)?)?;
    let GapCertificate::Bounded { triples, .. } = &cert else {
        return Err(Failure { code: EXIT_INPUT, message: cert.to_json(&alphabet).to_string() });
    };
    let (cover_mode, sample) = match mode {
        Mode::Formal => (CoverMode::Formal, 0),
        Mode::Sampled => (CoverMode::Sampled, n),
    };
    let outcome = verify_triple_cover(&factor_closure(&nfa), triples, cover_mode, sample);
    let cover_states = cover_nfa(&alphabet, triples).state_count();
    let (code, check) = match &outcome {
        CoverOutcome::Covered => (EXIT_OK, json!({ "covered": true })),
        CoverOutcome::Counterexample(w) => {
            (EXIT_CHECK_FAILED, json!({ "covered": false, "uncovered": alphabet.render(w) }))
        }
        CoverOutcome::CapExceeded => return Err(Error::DeterminizationCap(cover_states).into()),
    };
    let mut doc = cert.to_json(&alphabet);
    doc["cover_check"] = json!({ "mode": format!("{mode:?}").to_lowercase(), "result": check });
    let mut done = Done::routed(format!("{doc}\n"), out);
    done.code = code;
    Ok(done)
}

/// Every applicable check on a single language.
fn instance_reports(inst: &Instance, n: usize) -> Vec<CheckReport> {
    let mut reports = vec![verifier::check_gap_theorem(inst, n)];
    reports.extend(verifier::check_triple_cover(inst, n));
    reports.extend(verifier::check_claims_chain(inst, n.min(8), 8));
    reports.extend(verifier::check_pair_decomposition(inst, n));
    reports.push(verifier::check_special_inequalities(inst, n));
    reports.push(match profile(&inst.source, n, None) {
        Ok(p) => verifier::check_growth_bound(&inst.name, &p),
        Err(e) => {
            CheckReport::new("growth_bound", &inst.name, Outcome::Undetermined, json!({ "reason": e.to_string() }))
        }
    });
    reports
}

fn cmd_verify(
    suite: &str,
    seed: u64,
    input: &OptionalInput,
    n: Option<usize>,
    out: Option<PathBuf>,
) -> Result<Done, Failure> {
    let suite: Suite = suite.parse()?;
    let (label, reports) = if input.builtin.is_some() || input.input.is_some() {
        let (name, src) = load(input.builtin.as_deref(), input.input.as_ref())?;
        let n = n.unwrap_or(if src.is_word_language() { 50 } else { 12 });
        (name.clone(), instance_reports(&Instance::new(name, src), n))
    } else {
        let mut cfg = SuiteConfig::new(seed);
        if let Some(n) = n {
            cfg.n_max = n.max(2);
        }
        (format!("suite={suite} seed={seed}"), run_suite(suite, &cfg))
    };
    let stream: String = reports.iter().map(|r| r.to_json_line() + "\n").collect();
    let summary = summary_table(&label, &reports);
    let code = if reports.iter().any(CheckReport::is_fail) { EXIT_CHECK_FAILED } else { EXIT_OK };
    Ok(match out {
        Some(path) => Done { code, stdout: summary, out: Some((path, stream)) },
        None => Done { code, stdout: stream + &summary, out: None },
    })
}

/// Outcome counts per check, then a totals line.
fn summary_table(label: &str, reports: &[CheckReport]) -> String {
    let mut rows: Vec<(&str, [usize; 3])> = Vec::new();
    for r in reports {
        let i = match rows.iter().position(|(c, _)| *c == r.check) {
            Some(i) => i,
            None => {
                rows.push((&r.check, [0; 3]));
                rows.len() - 1
            }
        };
        rows[i].1[r.outcome as usize] += 1;
    }
    let mut text = format!("{:<28} {:>6} {:>6} {:>12}\n", "check", "pass", "fail", "undetermined");
    let mut total = [0; 3];
    for (check, [p, f, u]) in &rows {
        text.push_str(&format!("{check:<28} {p:>6} {f:>6} {u:>12}\n"));
        total = [total[0] + p, total[1] + f, total[2] + u];
    }
    text.push_str(&format!(
        "{label} checks={} pass={} fail={} undetermined={}\n",
        reports.len(),
        total[0],
        total[1],
        total[2]
    ));
    text
}

fn cmd_catalog(format: Format) -> Done {
    let entries = Builtin::catalog();
    Done::print(match format {
        Format::Json => {
            let v: Vec<Value> = entries.iter().map(|(n, d)| json!({ "name": n, "description": d })).collect();
            format!("{}\n", Value::Array(v))
        }
        Format::Csv => to_csv(&["name", "description"], &entries),
        Format::Table => entries.iter().map(|(n, d)| format!("{n:<10} {d}\n")).collect(),
    })
}

/// Runs the command line; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Profile { input, max_length, horizon, format, out } => {
            cmd_profile(&input, max_length, horizon, format, out)
        }
        Command::Classify { input, max_length, horizon, out } => cmd_classify(&input, max_length, horizon, out),
        Command::Decompose { input, mode, max_length, out } => cmd_decompose(&input, mode, max_length, out),
        Command::Verify { suite, seed, input, max_length, out } => cmd_verify(&suite, seed, &input, max_length, out),
        Command::Catalog { format } => Ok(cmd_catalog(format)),
    };
    match result {
        Ok(done) => {
            if let Some((path, body)) = &done.out {
                if let Err(e) = fs::write(path, body) {
                    let _ = writeln!(stderr, "{}: {e}", path.display());
                    return EXIT_INPUT;
                }
            }
            let _ = stdout.write_all(done.stdout.as_bytes());
            done.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "{}", f.message);
            f.code
        }
    }
}
