//! Command-line front end: `list`, `run`, `check`.
//!
//! Exit status is 0 when every verdict agrees with its expectation, 1 when a
//! computed verdict contradicts one, and 2 for usage or input errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use lieherm::scenarios::{self, Expectation, Report, Scenario};

#[derive(Parser)]
#[command(name = "lieherm", version, about = "Exact checks of invariant complex structures and Hermitian metrics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List scenarios and their parameters.
    List,
    /// Run one or more scenarios (`all` runs the whole catalog with defaults).
    Run {
        #[arg(required = true)]
        scenarios: Vec<String>,
        /// Parameter as key=value; repeatable.
        #[arg(long = "param", short = 'p')]
        params: Vec<String>,
        /// Write the JSON report here (a directory when several scenarios run).
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the entries of an expectation file and compare.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_params(raw: &[String]) -> Result<BTreeMap<String, String>, String> {
    raw.iter()
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| format!("parameter {kv:?} is not key=value"))
        })
        .collect()
}

fn write_atomic(path: &Path, body: &str) -> std::io::Result<()> {
    let tmp = path.with_extension("json.tmp");
    std::fs::write(&tmp, body)?;
    std::fs::rename(&tmp, path)
}

fn run(names: Vec<String>, params: BTreeMap<String, String>, json: Option<PathBuf>, seed: u64, jobs: usize) -> ExitCode {
    let names: Vec<String> = if names == ["all"] {
        scenarios::list_scenarios().iter().map(|s| s.name.to_string()).collect()
    } else {
        names
    };
    let several = names.len() > 1;
    let mut jobs_list = Vec::new();
    for name in &names {
        let mut s = Scenario::new(name);
        for (k, v) in &params {
            let accepted = scenarios::list_scenarios()
                .iter()
                .find(|i| i.name == name.as_str())
                .is_some_and(|i| i.params.iter().any(|(pk, _)| pk == k));
            if accepted || !several {
                s.params.insert(k.clone(), v.clone());
            }
        }
        jobs_list.push(s);
    }
    if several {
        for k in params.keys() {
            let used = jobs_list.iter().any(|s| s.params.contains_key(k));
            if !used {
                eprintln!("error: parameter {k:?} is not accepted by any selected scenario");
                return ExitCode::from(2);
            }
        }
    }

    let results = run_parallel(&jobs_list, seed, jobs.max(1));
    let mut status = 0u8;
    for (s, (res, secs)) in jobs_list.iter().zip(results) {
        let report = match res {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {}: {e}", s.name);
                return ExitCode::from(2);
            }
        };
        print!("{}", report.render_text());
        println!("  elapsed {secs:.3}s");
        if let Some(path) = &json {
            let target = if several { path.join(format!("{}.json", report.scenario)) } else { path.clone() };
            if several {
                if let Err(e) = std::fs::create_dir_all(path) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if let Err(e) = write_atomic(&target, &report.to_json_string()) {
                eprintln!("error: {}: {e}", target.display());
                return ExitCode::from(2);
            }
        }
        if !report.as_expected() {
            status = 1;
        }
    }
    ExitCode::from(status)
}

type Outcome = (lieherm::Result<Report>, f64);

fn run_parallel(list: &[Scenario], seed: u64, jobs: usize) -> Vec<Outcome> {
    let mut out: Vec<Option<Outcome>> = (0..list.len()).map(|_| None).collect();
    let chunk = list.len().div_ceil(jobs).max(1);
    std::thread::scope(|sc| {
        for (slots, items) in out.chunks_mut(chunk).zip(list.chunks(chunk)) {
            sc.spawn(move || {
                for (slot, s) in slots.iter_mut().zip(items) {
                    let t = Instant::now();
                    let r = scenarios::run_scenario(s, seed);
                    *slot = Some((r, t.elapsed().as_secs_f64()));
                }
            });
        }
    });
    out.into_iter().map(|o| o.expect("every slot filled")).collect()
}

fn check(file: &Path, seed: u64) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let entries: Vec<Expectation> = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    match scenarios::check_expectations(&entries, seed) {
        Ok(outcomes) => {
            let mut failed = false;
            for o in outcomes {
                if o.mismatches.is_empty() {
                    println!("PASS {}", o.scenario);
                } else {
                    failed = true;
                    println!("FAIL {}: {}", o.scenario, o.mismatches.join("; "));
                }
            }
            ExitCode::from(u8::from(failed))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for s in scenarios::list_scenarios() {
                let params: Vec<String> = s.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!("{:<20} {}  [{}]", s.name, s.summary, params.join(" "));
            }
            ExitCode::SUCCESS
        }
        Command::Run { scenarios, params, json, seed, jobs } => match parse_params(&params) {
            Ok(p) => run(scenarios, p, json, seed, jobs),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Check { file, seed } => check(&file, seed),
    }
}
