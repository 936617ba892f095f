//! Recognize critical formulas and measure their critical terms.

use epsilon_elim::critical::{classify, degree, rank, recognize_critical, select_max};
use epsilon_elim::syntax::{parse_formula, parse_term};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs = [
        "P(a) -> P(eps x. P(x))",
        "P(f(eps x. P(x))) -> P(eps x. P(x))",
        "Q(tau y. Q(y)) -> Q(b)",
        "R(a, eps y. Q(a, y)) -> R(eps x. R(x, eps y. Q(x, y)), eps y. Q(eps x. R(x, eps y. Q(x, y)), y))",
    ];
    let mut terms = Vec::new();
    for src in inputs {
        let phi = parse_formula(src)?;
        for c in recognize_critical(&phi) {
            let info = classify(&c, std::slice::from_ref(&c.critical_term));
            println!(
                "{phi}\n  term {} witness {} predicative {} rank {} degree {}",
                info.critical_term, info.witness, info.predicative, info.rank, info.degree
            );
            terms.push(c.critical_term);
        }
    }
    let nested = parse_term("eps x. P(x, eps y. Q(y))")?;
    println!("eps x. P(x, eps y. Q(y)): rank {} degree {}", rank(&nested), degree(&nested));
    println!("eliminated first: {}", select_max(&terms)?);
    Ok(())
}
