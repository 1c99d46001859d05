use std::fs;
use std::io::{Read, Write};

use clap::Parser;
use serde_json::json;
use thiserror::Error;
use treepark_core::enumerate::{
    kreweras_recurrence, simsun_descent_triangle, stanley_yin_recurrence, tally, zigzag_numbers,
};
use treepark_core::{exec, BivariatePolynomial, Budget, CheckReport, DistributionSpec, TStatistic, Verdict, Verifier};

use crate::args::{
    Claim, Command, PfStat, PolyCommand, RecurrenceKind, RunConfig, TableKind, TriangleKind,
};
use crate::serialize::{csv_bytes, polynomial_from_str, polynomial_json_value, serialize_polynomial, serialize_reports, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Error)]
enum RunError {
    #[error(transparent)]
    Core(#[from] treepark_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl RunError {
    fn exit_code(&self) -> i32 {
        match self {
            RunError::Core(treepark_core::Error::Budget { .. }) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }
}

struct Output {
    bytes: Vec<u8>,
    exit: i32,
    diagnostics: String,
}

impl Output {
    fn ok(bytes: Vec<u8>) -> Self {
        Output {
            bytes,
            exit: EXIT_OK,
            diagnostics: String::new(),
        }
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// its output to `stdout` or the `--out` file. Returns the process exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&config, stdin, stderr) {
        Ok(output) => {
            let _ = stderr.write_all(output.diagnostics.as_bytes());
            let written = match &config.out {
                Some(path) => fs::write(path, &output.bytes),
                None => stdout.write_all(&output.bytes),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            output.exit
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn budget(config: &RunConfig) -> Result<Budget, RunError> {
    if config.budget_override {
        Ok(Budget::unlimited())
    } else {
        Ok(Budget::from_env()?)
    }
}

fn execute(config: &RunConfig, stdin: &mut dyn Read, stderr: &mut dyn Write) -> Result<Output, RunError> {
    let threads = config.threads as usize;
    let shards = config.shard_count();
    if shards < threads {
        let _ = writeln!(
            stderr,
            "warning: {shards} shards for {threads} threads leaves workers idle"
        );
    }
    if threads > 1 && !exec::parallel_enabled() {
        let _ = writeln!(stderr, "warning: built without parallel support; running on one thread");
    }
    let budget = budget(config)?;
    let mut raw_input = String::new();
    if let Command::Specialize(args) = &config.command {
        match &args.input {
            Some(path) => raw_input = fs::read_to_string(path)?,
            None => {
                stdin.read_to_string(&mut raw_input)?;
            }
        }
    }
    exec::with_threads(threads, || match &config.command {
        Command::Poly { which } => poly(config, which, shards, &budget),
        Command::Specialize(args) => {
            let raw = &raw_input;
            let p = polynomial_from_str(raw).map_err(|e| RunError::Usage(e.to_string()))?;
            let result = match (args.q, args.t) {
                (Some(v), _) => p.specialize_q(v),
                (None, Some(v)) => p.specialize_t(v),
                (None, None) => unreachable!("clap requires one of --q/--t"),
            };
            Ok(Output::ok(serialize_polynomial(
                &result.to_bivariate(),
                config.format.unwrap_or(Format::Text),
            )))
        }
        Command::Check { claim, n } => check(config, *claim, *n, shards, &budget),
        Command::Table { which: TableKind::MinusOne, max_n } => {
            minus_one_table(config, *max_n, shards, &budget)
        }
        Command::Triangle { which, max_n } => triangle(config, *which, *max_n, &budget),
    })
}

fn poly(config: &RunConfig, which: &PolyCommand, shards: usize, budget: &Budget) -> Result<Output, RunError> {
    let p = match *which {
        PolyCommand::Tree { n } => tally(&DistributionSpec::tree(n)?, shards, budget)?,
        PolyCommand::Pf { n, t_stat } => {
            let stat = match t_stat {
                PfStat::Exced => TStatistic::Excedances,
                PfStat::DesOutcome => TStatistic::OutcomeDescents,
                PfStat::DesOutcomeInverse => TStatistic::InverseOutcomeDescents,
            };
            tally(&DistributionSpec::parking(n, stat)?, shards, budget)?
        }
        PolyCommand::Recurrence { which, n } => match which {
            RecurrenceKind::Kreweras => kreweras_recurrence(n, budget)?,
            RecurrenceKind::StanleyYin => stanley_yin_recurrence(n, budget)?,
        },
    };
    Ok(Output::ok(serialize_polynomial(&p, config.format.unwrap_or(Format::Text))))
}

fn check(
    config: &RunConfig,
    claim: Claim,
    n: usize,
    shards: usize,
    budget: &Budget,
) -> Result<Output, RunError> {
    if n == 0 {
        return Err(RunError::Usage("--n must be at least 1".into()));
    }
    let verifier = Verifier::new(shards, *budget);
    let reports: Vec<CheckReport> = match claim {
        Claim::Theorem1 => verifier.theorem1(n)?.into(),
        Claim::StanleyYin => vec![verifier.stanley_yin(n)?],
        Claim::ConjectureDes => vec![verifier.conjecture_des(n)?],
        Claim::ConjectureMinusOne => verifier.conjecture_minus_one(n)?.into(),
        Claim::Counts => vec![verifier.counts(n)?],
    };
    let (exit, diagnostics) = failure_diagnostics(&reports);
    Ok(Output {
        bytes: serialize_reports(&reports, config.format.unwrap_or(Format::Text), config.timings),
        exit,
        diagnostics,
    })
}

/// Exit code and stderr text for a batch of reports. Failures of open
/// conjectures are announced as discoveries.
fn failure_diagnostics(reports: &[CheckReport]) -> (i32, String) {
    use std::fmt::Write as _;

    let mut exit = EXIT_OK;
    let mut diagnostics = String::new();
    for r in reports.iter().filter(|r| r.verdict == Verdict::Fails) {
        exit = EXIT_CLAIM_FAILED;
        let kind = if r.is_conjecture() {
            "DISCOVERY: counterexample to open conjecture"
        } else {
            "FAILED: established claim does not hold"
        };
        let _ = write!(diagnostics, "{kind} {} at n={}", r.claim_id, r.n);
        if let Some(w) = &r.witness {
            let _ = write!(
                diagnostics,
                "; first difference at q^{} t^{}: {} vs {}",
                w.q_exp, w.t_exp, w.lhs, w.rhs
            );
        }
        diagnostics.push('\n');
    }
    (exit, diagnostics)
}

fn minus_one_table(config: &RunConfig, max_n: usize, shards: usize, budget: &Budget) -> Result<Output, RunError> {
    if max_n == 0 {
        return Err(RunError::Usage("--max-n must be at least 1".into()));
    }
    let mut rows: Vec<(usize, BivariatePolynomial, BivariatePolynomial)> = Vec::new();
    for n in 1..=max_n {
        let tree = tally(&DistributionSpec::tree(n)?, shards, budget)?;
        let pf = tally(&DistributionSpec::parking(n, TStatistic::Excedances)?, shards, budget)?;
        rows.push((n, tree.specialize_q(-1).to_bivariate(), pf.specialize_q(-1).to_bivariate()));
    }
    let bytes = match config.format.unwrap_or(Format::Csv) {
        Format::Csv => csv_bytes(
            &["n", "tree", "parking"],
            rows.iter().map(|(n, a, b)| vec![n.to_string(), a.to_string(), b.to_string()]),
        ),
        Format::Text => rows
            .iter()
            .map(|(n, a, b)| format!("{n} | {a} | {b}\n"))
            .collect::<String>()
            .into_bytes(),
        Format::Json => {
            let arr: Vec<_> = rows
                .iter()
                .map(|(n, a, b)| json!({"n": n, "tree": polynomial_json_value(a), "parking": polynomial_json_value(b)}))
                .collect();
            let mut s = serde_json::to_string_pretty(&arr).expect("plain data serializes");
            s.push('\n');
            s.into_bytes()
        }
    };
    Ok(Output::ok(bytes))
}

fn triangle(config: &RunConfig, which: TriangleKind, max_n: usize, budget: &Budget) -> Result<Output, RunError> {
    let format = config.format.unwrap_or(Format::Csv);
    let bytes = match which {
        TriangleKind::Simsun => {
            if max_n == 0 {
                return Err(RunError::Usage("--max-n must be at least 1".into()));
            }
            let rows = simsun_descent_triangle(max_n, budget)?;
            match format {
                Format::Csv => csv_bytes(
                    &["n", "k", "count"],
                    rows.iter().enumerate().flat_map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(move |(k, c)| vec![(i + 1).to_string(), k.to_string(), c.to_string()])
                    }),
                ),
                Format::Text => rows
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                        format!("{}: {}\n", i + 1, cells.join(" "))
                    })
                    .collect::<String>()
                    .into_bytes(),
                Format::Json => {
                    let arr: Vec<_> = rows
                        .iter()
                        .enumerate()
                        .map(|(i, row)| {
                            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                            json!({"n": i + 1, "row": cells})
                        })
                        .collect();
                    let mut s = serde_json::to_string_pretty(&arr).expect("plain data serializes");
                    s.push('\n');
                    s.into_bytes()
                }
            }
        }
        TriangleKind::Zigzag => {
            let values = zigzag_numbers(max_n);
            match format {
                Format::Csv => csv_bytes(
                    &["n", "value"],
                    values.iter().enumerate().map(|(n, v)| vec![n.to_string(), v.to_string()]),
                ),
                Format::Text => values
                    .iter()
                    .enumerate()
                    .map(|(n, v)| format!("{n}: {v}\n"))
                    .collect::<String>()
                    .into_bytes(),
                Format::Json => {
                    let arr: Vec<_> = values
                        .iter()
                        .enumerate()
                        .map(|(n, v)| json!({"n": n, "value": v.to_string()}))
                        .collect();
                    let mut s = serde_json::to_string_pretty(&arr).expect("plain data serializes");
                    s.push('\n');
                    s.into_bytes()
                }
            }
        }
    };
    Ok(Output::ok(bytes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Instant;

    #[test]
    fn failing_conjecture_is_a_discovery() {
        let lhs: BivariatePolynomial = "q + t + 1".parse().unwrap();
        let rhs: BivariatePolynomial = "q + 2t + 1".parse().unwrap();
        let report = Verifier::conjecture_des_report(2, &lhs, &rhs, Instant::now());
        let (exit, text) = failure_diagnostics(&[report]);
        assert_eq!(exit, EXIT_CLAIM_FAILED);
        assert!(text.starts_with("DISCOVERY"));
        assert!(text.contains("q^0 t^1: 1 vs 2"));
    }

    #[test]
    fn holding_reports_exit_zero() {
        let p: BivariatePolynomial = "q".parse().unwrap();
        let report = Verifier::conjecture_des_report(2, &p, &p, Instant::now());
        assert_eq!(failure_diagnostics(&[report]), (EXIT_OK, String::new()));
    }
}
