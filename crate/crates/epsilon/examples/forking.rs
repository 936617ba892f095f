//! Classical elimination of the forking proof, and the `Bm` instance
//! hidden in its Herbrand disjunction.

use epsilon_elim::eliminate::{bm_extract, run_elimination, DriverOptions, Judgment, VerifyLevel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let j = Judgment::parse(include_str!("../fixtures/forking.jdg"))?;
    let opts = DriverOptions { verify: VerifyLevel::Full, ..DriverOptions::default() };
    let trace = run_elimination(&j, &opts)?;
    print!("{}", trace.render_text());
    let bm = bm_extract(&trace.result, "f", "P")?;
    println!("B{}: {}", bm.m, bm.instance);
    Ok(())
}
