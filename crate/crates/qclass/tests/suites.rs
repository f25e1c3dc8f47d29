use qclass::report::Status;
use qclass::suites::{coverage, registry, run, Case, SUITES};

fn failures(case: &Case) -> Vec<String> {
    let reports = run(&SUITES, case).expect("case runs");
    let mut out = Vec::new();
    for r in &reports {
        for c in &r.checks {
            assert!(registry(&r.suite).contains(&c.anchor.as_str()), "{}: unregistered anchor {:?}", r.suite, c.anchor);
            if c.status != Status::Pass {
                out.push(format!("{} {:?}: {} [{:?}]", r.suite, c.status, c.check, c.witness));
            }
        }
    }
    out
}

#[test]
fn sp4_all_suites_pass() {
    let f = failures(&Case::new(2, ";1,1", 8, 7));
    assert!(f.is_empty(), "{f:#?}");
}

#[test]
fn sp4_generic_lambda_all_suites_pass() {
    let mut case = Case::new(2, ";1,1", 8, 7);
    case.generic_lambda = true;
    let f = failures(&case);
    assert!(f.is_empty(), "{f:#?}");
}

#[test]
fn sp6_gl_block_symbolic_z() {
    let mut case = Case::new(3, "1;1,1", 6, 3);
    case.symbolic_z = true;
    let reports = run(&["scalars", "rootdata", "wordalgebra", "verma"], &case).unwrap();
    let bad: Vec<_> = reports.iter().flat_map(|r| &r.checks).filter(|c| c.status != Status::Pass).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn coverage_marks_unrun_suites() {
    let case = Case::new(2, ";1,1", 6, 1);
    let reports = run(&["scalars"], &case).unwrap();
    let cov = coverage(&reports, &["scalars"]);
    assert!(cov.iter().filter(|(s, _, _)| s == "scalars").all(|(_, _, st)| st == "pass"));
    assert!(cov.iter().filter(|(s, _, _)| s != "scalars").all(|(_, _, st)| st == "not-run"));
}

#[test]
fn invalid_cases_are_refused() {
    assert!(run(&["minpoly"], &Case::new(3, ";1,2", 4, 0)).is_err());
    assert!(run(&["bogus"], &Case::new(2, ";1,1", 6, 0)).is_err());
    assert!(run(&["scalars"], &Case::new(4, ";1,3", 8, 0)).is_err());
    assert!(run(&["scalars"], &Case::new(2, "2;0,0", 8, 0)).is_err());
}

#[test]
fn failure_outranks_inconclusive() {
    assert_eq!(Status::Fail.combine(Status::Inconclusive), Status::Fail);
    assert_eq!(Status::Inconclusive.combine(Status::Fail), Status::Fail);
    assert_eq!(Status::Pass.combine(Status::Inconclusive), Status::Inconclusive);
    assert_eq!(Status::Pass.combine(Status::Pass), Status::Pass);
}
