//! `qflab`: runs named scenarios over `qflab-core`, renders reports and
//! keeps golden files.
//!
//! Exit status: 0 all assertions pass, 1 an assertion or golden check
//! failed, 2 usage or configuration error, 3 an enumeration guard tripped.

mod config;
mod goldens;
mod report;
mod scenarios;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};

use config::Params;
use report::{Format, Report};
use scenarios::{Scenario, CATALOG};

#[derive(Parser)]
#[command(
    name = "qflab",
    version,
    about = "Scenario runner for relative quadratic forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run scenarios and report their assertions.
    Run(RunArgs),
    /// List the shipped scenarios.
    List,
    /// Regenerate or verify golden reports.
    Goldens {
        #[command(subcommand)]
        action: GoldenAction,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Scenario names; overrides `scenario` in the config file.
    scenarios: Vec<String>,
    /// Run the whole catalog.
    #[arg(long, conflicts_with = "scenarios")]
    all: bool,
    /// JSON config with keys scenario, params, format, out, workers.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
    /// Characteristic, for scenarios that take it.
    #[arg(long)]
    p: Option<u64>,
    /// Number of variables, for scenarios that take it.
    #[arg(long)]
    n: Option<usize>,
    /// Truncation degree, for scenarios that take it.
    #[arg(long)]
    degree: Option<usize>,
}

#[derive(Args)]
struct GoldenArgs {
    /// Restrict to these scenarios; defaults to the whole catalog.
    scenarios: Vec<String>,
    /// Golden directory; defaults to the one shipped with the crate.
    #[arg(long)]
    dir: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Subcommand)]
enum GoldenAction {
    /// Rewrite every golden from a fresh run.
    Regen(GoldenArgs),
    /// Compare fresh runs byte for byte against the goldens.
    Verify(GoldenArgs),
}

const USAGE: u8 = 2;

fn usage(msg: impl AsRef<str>) -> ExitCode {
    eprintln!("error: {}", msg.as_ref());
    ExitCode::from(USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            print!("{}", list());
            ExitCode::SUCCESS
        }
        Command::Run(args) => run(args),
        Command::Goldens {
            action: GoldenAction::Regen(g),
        } => regen(g),
        Command::Goldens {
            action: GoldenAction::Verify(g),
        } => verify(g),
    }
}

fn list() -> String {
    let width = CATALOG.iter().map(|s| s.name.len()).max().unwrap_or(0);
    CATALOG
        .iter()
        .map(|s| {
            let params = if s.params.is_empty() {
                String::from("-")
            } else {
                s.params.join(",")
            };
            format!("{:width$}  {params:7}  {}\n", s.name, s.description)
        })
        .collect()
}

/// Runs `selected` on up to `workers` threads; the result order follows
/// `selected`, not completion.
fn run_scenarios(selected: &[&'static Scenario], params: &Params, workers: usize) -> Vec<Report> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Report>>> = Mutex::new(vec![None; selected.len()]);
    std::thread::scope(|scope| {
        for _ in 0..workers.clamp(1, selected.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(s) = selected.get(i) else { break };
                let report = s.run(params);
                slots.lock().expect("no worker panicked")[i] = Some(report);
            });
        }
    });
    slots
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}

fn run(args: RunArgs) -> ExitCode {
    let file = match &args.config {
        Some(path) => match config::load(path) {
            Ok(c) => c,
            Err(e) => return usage(e),
        },
        None => config::Config::default(),
    };
    let flags = Params {
        p: args.p,
        n: args.n,
        degree: args.degree,
    };
    let params = file.params.merged(flags);
    let names: Vec<String> = if args.all {
        CATALOG.iter().map(|s| String::from(s.name)).collect()
    } else if !args.scenarios.is_empty() {
        args.scenarios
    } else if let Some(s) = file.scenario {
        s.into_vec()
    } else {
        return usage("no scenario given; pass names, --all, or a config with `scenario`");
    };
    let mut selected = Vec::new();
    for name in &names {
        let Some(s) = scenarios::find(name) else {
            return usage(format!("unknown scenario `{name}`; see `qflab list`"));
        };
        if let Err(e) = s.check_params(&params) {
            return usage(e);
        }
        selected.push(s);
    }
    selected.sort_by_key(|s| s.name);
    selected.dedup_by_key(|s| s.name);
    let workers = args.workers.or(file.workers).unwrap_or(1);
    if workers == 0 {
        return usage("workers must be at least 1");
    }
    let format = args.format.or(file.format).unwrap_or(Format::Text);
    let reports = run_scenarios(&selected, &params, workers);
    let rendered = report::render(&reports, format);
    if let Err(e) = emit(args.out.or(file.out).as_deref(), &rendered) {
        return usage(e);
    }
    ExitCode::from(report::exit_code(&reports))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

/// Default-parameter runs of the named scenarios, or of the catalog.
fn golden_reports(g: &GoldenArgs) -> Result<Vec<Report>, ExitCode> {
    if g.workers == 0 {
        return Err(usage("workers must be at least 1"));
    }
    let mut selected: Vec<&'static Scenario> = if g.scenarios.is_empty() {
        CATALOG.iter().collect()
    } else {
        let mut v = Vec::new();
        for name in &g.scenarios {
            match scenarios::find(name) {
                Some(s) => v.push(s),
                None => {
                    return Err(usage(format!(
                        "unknown scenario `{name}`; see `qflab list`"
                    )))
                }
            }
        }
        v
    };
    selected.sort_by_key(|s| s.name);
    selected.dedup_by_key(|s| s.name);
    Ok(run_scenarios(&selected, &Params::default(), g.workers))
}

fn regen(g: GoldenArgs) -> ExitCode {
    let reports = match golden_reports(&g) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let dir = g.dir.unwrap_or_else(goldens::default_dir);
    match goldens::regen(&dir, &reports) {
        Ok(paths) => {
            for p in paths {
                println!("wrote {}", p.display());
            }
            ExitCode::from(report::exit_code(&reports))
        }
        Err(e) => usage(e),
    }
}

fn verify(g: GoldenArgs) -> ExitCode {
    let reports = match golden_reports(&g) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let dir = g.dir.unwrap_or_else(goldens::default_dir);
    let mut bad = 0;
    for r in &reports {
        match goldens::verify_one(&dir, r) {
            goldens::Check::Match => println!("ok       {}", r.scenario),
            goldens::Check::Missing(p) => {
                bad += 1;
                println!("missing  {}: {}", r.scenario, p.display());
            }
            goldens::Check::Mismatch(lines) => {
                bad += 1;
                println!("mismatch {}", r.scenario);
                for l in lines {
                    println!("  {}", l.replace('\n', "\n  "));
                }
            }
        }
    }
    println!("{} of {} goldens match", reports.len() - bad, reports.len());
    if bad == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
