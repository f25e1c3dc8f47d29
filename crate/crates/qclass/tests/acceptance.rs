//! One line per acceptance criterion, over the four default cases.

use std::process::ExitCode;
use std::time::Instant;

use qclass::classical::anchors as ca;
use qclass::quantization::anchors as qa;
use qclass::report::{Report, Status};
use qclass::suites::{anchors as sa, run, Case, SUITES};

const CASES: [(usize, &str, usize); 4] = [(2, ";1,1", 8), (3, ";1,2", 6), (3, ";2,1", 6), (3, "1;1,1", 6)];

struct Outcome {
    checks: usize,
    failed: Vec<String>,
}

/// Collects the checks of `suite` (optionally restricted to `anchors`) over `reports`.
fn gather(reports: &[&Report], suite: &str, anchors: Option<&[&str]>) -> Outcome {
    let mut out = Outcome { checks: 0, failed: Vec::new() };
    for r in reports.iter().filter(|r| r.suite == suite) {
        for c in r.checks.iter().filter(|c| anchors.is_none_or(|a| a.contains(&c.anchor.as_str()))) {
            out.checks += 1;
            if c.status != Status::Pass {
                out.failed.push(format!("n={} {} [{}]: {}", r.case.n, r.case.blocks, r.case.mode, c.check));
            }
        }
    }
    out
}

fn merge(parts: Vec<Outcome>) -> Outcome {
    let mut out = Outcome { checks: 0, failed: Vec::new() };
    for p in parts {
        out.checks += p.checks;
        out.failed.extend(p.failed);
    }
    out
}

fn pattern(reports: &[Report]) -> Vec<(String, String, Status)> {
    reports.iter().flat_map(|r| r.checks.iter().map(|c| (r.suite.clone(), c.anchor.clone(), c.status))).collect()
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut kappa = Vec::new();
    let mut generic = Vec::new();
    for (n, blocks, depth) in CASES {
        let t = Instant::now();
        let case = Case::new(n, blocks, depth, 0);
        kappa.extend(run(&SUITES, &case).expect("κ case runs"));
        let g = Case { generic_lambda: true, ..case };
        generic.extend(run(&["verma"], &g).expect("generic case runs"));
        println!("case n={n} blocks={blocks} depth={depth}: {:.1?}", t.elapsed());
    }
    let k: Vec<&Report> = kappa.iter().collect();
    let g: Vec<&Report> = generic.iter().collect();

    let c9 = {
        let mut o = gather(&k, "filtration", None);
        let diagrams = kappa.iter().any(|r| {
            r.suite == "filtration"
                && r.case.n == 3
                && r.case.blocks == ";1,2"
                && r.checks.iter().any(|c| c.anchor == qa::DIAGRAMS && c.status == Status::Pass)
        });
        if !diagrams {
            o.failed.push("no φ_i diagram witness for n=3 ;1,2".into());
        }
        o
    };

    let c11 = {
        let case = Case::new(2, ";1,1", 8, 0);
        let again = run(&SUITES, &case).expect("rerun");
        let first: Vec<&Report> = kappa.iter().filter(|r| r.case.n == 2).collect();
        let mut o = Outcome { checks: 2, failed: Vec::new() };
        let same = first.len() == again.len() && first.iter().zip(&again).all(|(a, b)| a.to_json() == b.to_json());
        if !same {
            o.failed.push("reports differ between identical runs".into());
        }
        let other = run(&SUITES, &Case::new(2, ";1,1", 8, 1234)).expect("second seed");
        if pattern(&again) != pattern(&other) {
            o.failed.push("pass/fail pattern differs between seeds 0 and 1234".into());
        }
        o
    };

    let criteria: Vec<(&str, Outcome)> = vec![
        ("vector representation relations", gather(&k, "rmatrix", Some(&[sa::PI, sa::SERRE, sa::Q_INDEPENDENT]))),
        ("explicit R, Yang-Baxter, κ, classical r-matrix", gather(&k, "rmatrix", Some(&[sa::EXPLICIT_R, sa::STANDARD, sa::KAPPA, sa::IDEMPOTENTS]))),
        ("quasi-R calibration", gather(&k, "rmatrix", Some(&[qa::INVARIANT_Q]))),
        (
            "PBW and slice dimensions against Kostant counts",
            merge(vec![
                gather(&k, "wordalgebra", Some(&[sa::BASIS, sa::SERRE])),
                gather(&k, "verma", Some(&[sa::FREE])),
                gather(&k, "rootdata", Some(&[sa::FREE])),
            ]),
        ),
        ("singular vector, both directions", merge(vec![gather(&k, "verma", None), gather(&g, "verma", None)])),
        ("spectral suite", gather(&k, "minpoly", None)),
        ("q-trace suite", gather(&k, "qtrace", None)),
        ("reflection equation suite", gather(&k, "reflection", None)),
        ("filtration suite", c9),
        ("classical suite", gather(&k, "classical", Some(&[ca::GL_IDEAL, ca::SP_IDEAL, ca::RADICAL, ca::TRACES, ca::BRIDGE, ca::COLLAPSE]))),
        ("determinism", c11),
    ];

    let mut ok = true;
    for (i, (name, o)) in criteria.iter().enumerate() {
        let pass = o.failed.is_empty() && o.checks > 0;
        ok &= pass;
        println!("criterion {:>2} {}: {name} ({} checks)", i + 1, if pass { "PASS" } else { "FAIL" }, o.checks);
        for f in &o.failed {
            println!("    {f}");
        }
    }
    println!("total {:.1?}", start.elapsed());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
