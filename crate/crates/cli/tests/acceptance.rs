//! One line per acceptance criterion. Every comparison is exact (integer,
//! rational or group equality); no floating tolerance is involved.

use std::process::ExitCode;

use satgenus_cli::verify;

fn main() -> ExitCode {
    let outcomes = verify::run(None);
    let mut failed = 0;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("acceptance criterion {:>2} [{}]: {status} (tolerance: exact) {}", o.id, o.name, o.detail);
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} passed, {failed} failed", outcomes.len() - failed);
    if failed == 0 && outcomes.len() == 10 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
