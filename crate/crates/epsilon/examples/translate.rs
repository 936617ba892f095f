//! Translate a formula into the ε/τ-calculus, take its shadow and its
//! Herbrand form, and certify the quantifier-shift rows.

use epsilon_elim::semantics::{abstract_one, prove_h};
use epsilon_elim::syntax::{parse_formula, Formula, Term};
use epsilon_elim::translate::{et_translate, herbrand_form, quantifier_shift_instance, shadow, QuantifierShiftKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let drinker = parse_formula("ex z. all u. (P(u) -> P(z))")?;
    println!("formula   {drinker}");
    println!("ετ        {}", et_translate(&drinker)?);
    println!("shadow    {}", shadow(&drinker));
    let (h, fresh) = herbrand_form(&drinker)?;
    println!("herbrand  {h}   (fresh: {})", fresh.join(", "));

    let a = Formula::atom("A", vec![Term::var("x")]);
    let b = Formula::prop("B");
    for kind in QuantifierShiftKind::ALL {
        let row = quantifier_shift_instance(kind, &a, "x", &b)?;
        let (p, _) = abstract_one(&shadow(&row.shift))?;
        let provable = prove_h(&[], &p).is_some();
        println!("{:<22} {}  shadow provable: {provable}", kind.name(), row.translation);
    }
    Ok(())
}
