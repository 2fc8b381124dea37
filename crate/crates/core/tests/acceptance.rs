//! Acceptance criteria, one status line per criterion followed by the
//! individual checks behind it. Exits nonzero if any criterion fails.

use std::process::ExitCode;

use bispinor::verify::Verifier;

const CRITERIA: [(u8, &str); 10] = [
    (1, "unboosted psi1 baseline E_G = 1/2"),
    (2, "psi1 spin-spin separability in every frame"),
    (3, "psi1 parallel-boost invariance"),
    (4, "psi1 high-speed saturation"),
    (5, "psi2 angle independence"),
    (6, "psi2 degradation"),
    (7, "psi3 rest-frame extremum"),
    (8, "chiral exact invariance"),
    (9, "analytic vs numeric transformed Bloch vectors"),
    (10, "algebraic suites"),
];

fn main() -> ExitCode {
    let report = Verifier::new().run();
    let mut failed = 0;
    for (n, title) in CRITERIA {
        let ok = report.criterion_passed(n);
        if !ok {
            failed += 1;
        }
        println!("{} criterion {n:>2}: {title}", if ok { "PASS" } else { "FAIL" });
        for check in report.criterion(n) {
            println!("    {check}");
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
