//! The predicative-only driver gets stuck whichever term goes first.

use epsilon_elim::eliminate::{run_weak_lin, DriverOptions, Judgment, WeakLinOutcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let j = Judgment::parse(include_str!("../fixtures/weak_lin_fork.jdg"))?;
    for first in j.critical_terms() {
        let opts = DriverOptions { first: Some(first.clone()), ..DriverOptions::default() };
        match run_weak_lin(&j, &opts)? {
            WeakLinOutcome::Failure(report) => println!("first {first}: {report}"),
            WeakLinOutcome::Success(trace) => println!("first {first}: {}", trace.result),
        }
    }
    Ok(())
}
