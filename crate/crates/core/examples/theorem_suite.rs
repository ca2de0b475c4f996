//! Runs the exhaustive suite and prints the failures, if any.
//!
//! cargo run --release --example theorem_suite -- 25 12

use crankmex::verify::{run_theorem_suite, Status};

fn main() -> Result<(), crankmex::Error> {
    let mut args = std::env::args().skip(1);
    let max_n: u32 = args.next().map_or(20, |s| s.parse().expect("max n"));
    let max_j: u32 = args.next().map_or(8, |s| s.parse().expect("max j"));

    let report = run_theorem_suite(max_n, max_j)?;
    for f in report.failures() {
        println!("{} n={} j={:?}: {:?}", f.name, f.n, f.j, f.counterexample);
    }
    println!(
        "{} checks: {} pass, {} skipped, {} fail",
        report.checks.len(),
        report.count(Status::Pass),
        report.count(Status::Skip),
        report.count(Status::Fail) + report.count(Status::Internal)
    );
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
