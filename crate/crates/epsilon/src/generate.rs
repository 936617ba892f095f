//! Seeded generators for critical formulas and small judgments, shared
//! by the property tests and the `generate` subcommand.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::critical::{make_critical, recognize_critical, CriticalFormula};
use crate::eliminate::{Judgment, LogicTag};
use crate::syntax::{Choice, Formula, Term};

/// A ground term over `a`, `b` and unary `f`, `g`, of height at most `depth`.
pub fn ground_term<R: Rng>(rng: &mut R, depth: usize) -> Term {
    if depth == 0 || rng.gen_bool(0.5) {
        return Term::constant(["a", "b"].choose(rng).expect("non-empty"));
    }
    let f = ["f", "g"].choose(rng).expect("non-empty");
    Term::app(f, vec![ground_term(rng, depth - 1)])
}

/// A quantifier-free formula in which `x` occurs, of depth at most `depth`.
pub fn matrix<R: Rng>(rng: &mut R, x: &str, depth: usize) -> Formula {
    let body = random_formula(rng, x, depth);
    if body.free_vars().contains(x) {
        body
    } else {
        Formula::and(body, Formula::atom("P", vec![Term::var(x)]))
    }
}

fn random_formula<R: Rng>(rng: &mut R, x: &str, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        let arg = |rng: &mut R| if rng.gen_bool(0.6) { Term::var(x) } else { ground_term(rng, 1) };
        return match rng.gen_range(0..4) {
            0 => Formula::atom("P", vec![arg(rng)]),
            1 => Formula::atom("Q", vec![arg(rng), arg(rng)]),
            2 => Formula::atom("R", vec![Term::app("f", vec![arg(rng)])]),
            _ => Formula::prop("S"),
        };
    }
    let a = random_formula(rng, x, depth - 1);
    match rng.gen_range(0..4) {
        0 => Formula::not(a),
        1 => Formula::and(a, random_formula(rng, x, depth - 1)),
        2 => Formula::or(a, random_formula(rng, x, depth - 1)),
        _ => Formula::imp(a, random_formula(rng, x, depth - 1)),
    }
}

/// An ε or τ critical formula with a matrix of depth at most `depth`;
/// the witness is ground or mentions the critical term itself.
pub fn critical_formula<R: Rng>(rng: &mut R, depth: usize) -> CriticalFormula {
    let kind = if rng.gen_bool(0.5) { Choice::Epsilon } else { Choice::Tau };
    let a = matrix(rng, "x", depth);
    let e = Term::choice(kind, "x", a.clone());
    let witness = match rng.gen_range(0..3) {
        0 => Term::app("f", vec![e]),
        _ => ground_term(rng, 2),
    };
    make_critical(&a, "x", kind, &witness).expect("quantifier-free matrix")
}

/// Terms of rank one and two over the matrices `P(x)`, `Q(x, y)`.
fn choice_menu() -> Vec<Term> {
    let p = Term::eps("x", Formula::atom("P", vec![Term::var("x")]));
    let q = Term::eps("x", Formula::atom("Q", vec![Term::var("x"), Term::constant("a")]));
    // εx R(x, εy Q(x, y)): the inner term is subordinate
    let inner = Term::eps("y", Formula::atom("Q", vec![Term::var("x"), Term::var("y")]));
    let r = Term::eps("x", Formula::atom("R", vec![Term::var("x"), inner]));
    vec![p, q, r]
}

/// The closed ε-terms a critical formula of `e` mentions besides `e`,
/// such as `εy Q(e, y)` for `e = εx R(x, εy Q(x, y))`.
fn inner_terms(e: &Term) -> Vec<Term> {
    let Some((_, b)) = e.as_choice() else { return Vec::new() };
    b.open(e).choice_terms().into_iter().filter(|t| t != e).collect()
}

fn critical_for<R: Rng>(rng: &mut R, e: &Term, pool: &[Term]) -> Formula {
    let witness = match rng.gen_range(0..4) {
        0 => Term::app("f", vec![e.clone()]),
        1 if !pool.is_empty() => pool.choose(rng).expect("non-empty").clone(),
        _ => ground_term(rng, 1),
    };
    CriticalFormula::of_term(e, &witness).expect("menu terms are quantifier-free").rendered
}

/// A valid judgment over at most `max_terms` critical ε-terms of rank at
/// most two; its goal is the conjunction of its criticals.
pub fn judgment<R: Rng>(rng: &mut R, logic: LogicTag, max_terms: usize) -> Judgment {
    let menu = choice_menu();
    let count = rng.gen_range(1..=max_terms.clamp(1, menu.len()));
    let chosen: Vec<Term> = menu.choose_multiple(rng, count).cloned().collect();
    let mut criticals = Vec::new();
    let mut used = chosen.len();
    for e in &chosen {
        for _ in 0..rng.gen_range(1..=2) {
            criticals.push(critical_for(rng, e, &chosen));
        }
        for inner in inner_terms(e) {
            if used < max_terms && rng.gen_bool(0.7) {
                criticals.push(critical_for(rng, &inner, &[]));
                used += 1;
            }
        }
    }
    criticals.retain(|c| !recognize_critical(c).is_empty());
    let goal = Formula::conj(criticals.iter().cloned());
    Judgment::new(logic, criticals, goal)
}

/// Rows of ground terms for a Herbrand disjunction with `holes` holes.
pub fn herbrand_rows<R: Rng>(rng: &mut R, holes: usize, rows: usize) -> Vec<Vec<Term>> {
    (0..rows).map(|_| (0..holes).map(|_| ground_term(rng, 1)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_criticals_are_recognized() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let c = critical_formula(&mut rng, 3);
            assert!(recognize_critical(&c.rendered).contains(&c), "{}", c.rendered);
        }
    }

    #[test]
    fn judgments_are_seed_deterministic() {
        let a = judgment(&mut ChaCha8Rng::seed_from_u64(9), LogicTag::Classical, 3);
        let b = judgment(&mut ChaCha8Rng::seed_from_u64(9), LogicTag::Classical, 3);
        assert_eq!(a, b);
        assert!(!a.criticals.is_empty());
    }

    #[test]
    fn menu_ranks() {
        let ranks: Vec<usize> = choice_menu().iter().map(crate::critical::rank).collect();
        assert_eq!(ranks, vec![1, 1, 2]);
    }
}
