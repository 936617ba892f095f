//! Rebuild an ε-proof from a Herbrand disjunction and eliminate it again.

use epsilon_elim::eliminate::{reconstruct_from_herbrand, LogicTag};
use epsilon_elim::syntax::parse_formula;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let herbrand = parse_formula("D(a, b) | D(a, c) | D(f(a), b)")?;
    let skeleton = parse_formula("D(x, y)")?;
    let holes = vec!["x".to_string(), "y".to_string()];
    let (j, trace) = reconstruct_from_herbrand(&herbrand, &skeleton, &holes, LogicTag::Lc)?;
    print!("{}", j.to_text());
    println!("replayed: {}", trace.result);
    Ok(())
}
