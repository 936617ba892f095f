mod common;

use common::{critical, formula, plain_first_order, plain_formula};
use epsilon_elim::semantics::{abstract_one, prove_h};
use epsilon_elim::syntax::{Formula, Term};
use epsilon_elim::translate::{et_translate, herbrand_form, quantifier_shift_instance, shadow, QuantifierShiftKind};
use proptest::prelude::*;

fn is_propositional(phi: &Formula) -> bool {
    match phi {
        Formula::Top | Formula::Bot => true,
        Formula::Atom(_, args) => args.is_empty(),
        Formula::Not(a) => is_propositional(a),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => is_propositional(a) && is_propositional(b),
        Formula::All(_) | Formula::Ex(_) => false,
    }
}

fn provable(phi: &Formula) -> bool {
    let (p, _) = abstract_one(phi).unwrap();
    prove_h(&[], &p).is_some()
}

fn prenex() -> impl Strategy<Value = (Formula, usize)> {
    let prefix = prop::collection::vec((any::<bool>(), prop::sample::select(vec!["x", "y", "z"])), 0..4);
    (prefix, plain_formula(&["x", "y", "z"])).prop_map(|(prefix, body)| {
        let universals = prefix.iter().filter(|(all, _)| *all).count();
        let phi = prefix
            .iter()
            .rev()
            .fold(body, |acc, (all, v)| if *all { Formula::all(v, acc) } else { Formula::ex(v, acc) });
        (phi, universals)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn translation_is_quantifier_free(phi in plain_first_order()) {
        prop_assert!(et_translate(&phi).unwrap().is_quantifier_free());
    }

    #[test]
    fn translation_fixes_quantifier_free(phi in plain_formula(&["x", "y"])) {
        prop_assert_eq!(et_translate(&phi).unwrap(), phi);
    }

    #[test]
    fn shadow_is_propositional(phi in formula()) {
        prop_assert!(is_propositional(&shadow(&phi)));
    }

    #[test]
    fn shadow_of_critical_is_provable(c in critical(3)) {
        prop_assert!(provable(&shadow(&c.rendered)), "{}", c.rendered);
    }

    #[test]
    fn herbrand_adds_one_symbol_per_universal((phi, universals) in prenex()) {
        let (h, fresh) = herbrand_form(&phi).unwrap();
        prop_assert_eq!(fresh.len(), universals);
        prop_assert!(!h.to_string().contains("all "));
    }

    #[test]
    fn critical_row_shadows_are_b_implies_b(a in plain_formula(&["x", "y"]), b in plain_formula(&["y"])) {
        let a = Formula::and(a, Formula::atom("A", vec![Term::var("x")]));
        for kind in QuantifierShiftKind::ALL.into_iter().filter(|k| k.is_critical_row()) {
            let row = quantifier_shift_instance(kind, &a, "x", &b).unwrap();
            let Formula::Imp(l, r) = shadow(&row.shift) else { panic!("{}", row.shift) };
            prop_assert_eq!(l, r, "{}", kind.name());
        }
    }
}
