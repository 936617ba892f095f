//! A negated goal needs only weak excluded middle.

use epsilon_elim::eliminate::{run_jankov, DriverOptions, Judgment, VerifyLevel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let j = Judgment::parse(include_str!("../fixtures/jankov.jdg"))?;
    let opts = DriverOptions { verify: VerifyLevel::Full, ..DriverOptions::default() };
    let trace = run_jankov(&j, &opts)?;
    for i in trace.axiom_instances() {
        println!("instance {i}");
    }
    println!("{}", trace.last);
    Ok(())
}
