//! Elimination in three-valued Gödel logic: impredicative critical
//! formulas go first with `B3`, the rest with `Lin`.

use epsilon_elim::eliminate::{eliminate_complete_gm, run_elimination, DriverOptions, Judgment, VerifyLevel};
use epsilon_elim::semantics::{verify_judgment, Budget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let j = Judgment::parse(include_str!("../fixtures/lc3_words.jdg"))?;
    let e = j.critical_terms().remove(0);
    for step in eliminate_complete_gm(&j, &e, 3)? {
        println!(
            "[{}] {} terms, {} instances, {} goal disjuncts",
            step.rule,
            step.elimination_set.len(),
            step.axiom_instances.len(),
            step.after.goal.len()
        );
    }
    let opts = DriverOptions { verify: VerifyLevel::Steps, ..DriverOptions::default() };
    let trace = run_elimination(&j, &opts)?;
    println!("result has {} disjuncts", trace.result.disjuncts().len());
    println!("final judgment valid: {}", verify_judgment(&trace.last, Budget::default())?.is_valid());
    Ok(())
}
