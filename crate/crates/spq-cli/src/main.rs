use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qclass::classical::{self, ClassSpec};
use qclass::report::{Report, Status};
use qclass::suites::{self, Case, SUITES};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "spq", about = "Exact checks for quantized non-Levi conjugacy classes of SP(2n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one suite, or `all`, on one case (or on the default cases).
    Verify {
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        /// Block structure "n1,…,nl;m,p".
        #[arg(long, allow_hyphen_values = true)]
        blocks: Option<String>,
        /// Module truncation height; 8 for n = 2 and 6 for n = 3 by default.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        symbolic_z: bool,
        #[arg(long)]
        generic_lambda: bool,
        #[arg(long)]
        report_dir: Option<PathBuf>,
    },
    /// Jacobian check of one class given by eigenvalue:multiplicity pairs.
    Class {
        /// `gl` or `sp`.
        group: String,
        /// e.g. "2:2,1/3:1"; for `sp`, "-1:2m,1:2p" plus one entry per pair μ, μ^{-1}.
        pairs: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

const DEFAULT_CASES: [(usize, &str); 4] = [(2, ";1,1"), (3, ";1,2"), (3, ";2,1"), (3, "1;1,1")];

fn exit_for(status: Status) -> ExitCode {
    match status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(1),
        Status::Inconclusive => ExitCode::from(2),
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("spq: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Verify { suite, n, blocks, depth, seed, symbolic_z, generic_lambda, report_dir } => {
            let selected: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else if SUITES.contains(&suite.as_str()) {
                vec![suite.as_str()]
            } else {
                return usage(format!("unknown suite {suite:?}; expected one of all, {}", SUITES.join(", ")));
            };
            let cases: Vec<(usize, String)> = match (n, blocks) {
                (Some(n), Some(b)) => vec![(n, b)],
                (None, None) => DEFAULT_CASES.iter().map(|&(n, b)| (n, b.to_string())).collect(),
                _ => return usage("--n and --blocks go together"),
            };
            let mut cases: Vec<Case> = cases
                .into_iter()
                .map(|(n, b)| {
                    let d = depth.unwrap_or(if n == 2 { 8 } else { 6 });
                    Case { n, blocks: b, depth: d, seed, symbolic_z, generic_lambda }
                })
                .collect();
            for case in &cases {
                if let Err(e) = case.validate(&selected) {
                    return usage(e);
                }
            }
            let mut all = Vec::new();
            for case in cases.drain(..) {
                match suites::run(&selected, &case) {
                    Ok(r) => all.extend(r),
                    Err(e) => return usage(e),
                }
            }
            if let Some(dir) = report_dir {
                if let Err(e) = write_reports(&dir, &all, &selected) {
                    eprintln!("spq: cannot write reports: {e}");
                    return ExitCode::from(1);
                }
            }
            print_summary(&all, &selected);
            exit_for(all.iter().fold(Status::Pass, |acc, r| acc.combine(r.status())))
        }
        Command::Class { group, pairs, seed } => {
            let spec = match ClassSpec::parse(&group, &pairs) {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            let checks = classical::verify_class(&spec, &mut ChaCha8Rng::seed_from_u64(seed));
            for c in &checks {
                println!("{:<12} {}", format!("{:?}", c.status).to_lowercase(), c.check);
            }
            exit_for(checks.iter().fold(Status::Pass, |acc, c| acc.combine(c.status)))
        }
    }
}

fn file_stem(r: &Report) -> String {
    let blocks: String = r.case.blocks.chars().map(|c| if c.is_ascii_digit() { c } else { '_' }).collect();
    format!("{}-n{}-b{}-d{}-{}-s{}", r.suite, r.case.n, blocks, r.case.depth, r.case.mode.replace(',', "+"), r.case.seed)
}

fn write_reports(dir: &PathBuf, reports: &[Report], selected: &[&str]) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    for r in reports {
        fs::write(dir.join(format!("{}.json", file_stem(r))), r.to_json() + "\n")?;
    }
    let coverage: Vec<_> = suites::coverage(reports, selected)
        .into_iter()
        .map(|(suite, anchor, status)| serde_json::json!({ "suite": suite, "anchor": anchor, "status": status }))
        .collect();
    let runs: Vec<_> = reports
        .iter()
        .map(|r| serde_json::json!({ "suite": r.suite, "case": r.case, "status": r.status(), "checks": r.checks.len() }))
        .collect();
    let summary = serde_json::json!({ "runs": runs, "coverage": coverage });
    fs::write(dir.join("summary.json"), serde_json::to_string_pretty(&summary).expect("json") + "\n")
}

fn print_summary(reports: &[Report], selected: &[&str]) {
    for r in reports {
        let c = &r.case;
        println!(
            "{:<12} {:<13} n={} blocks={:<6} depth={} mode={} ({} checks)",
            r.suite,
            format!("{:?}", r.status()).to_lowercase(),
            c.n,
            c.blocks,
            c.depth,
            c.mode,
            r.checks.len()
        );
        for check in r.checks.iter().filter(|x| x.status != Status::Pass) {
            println!("    {:?}: {} [{}]", check.status, check.check, check.witness.as_deref().unwrap_or(""));
        }
    }
    println!("\nanchor coverage:");
    for (suite, anchor, status) in suites::coverage(reports, selected) {
        println!("  {status:<12} {suite:<12} \"{anchor}\"");
    }
}
