mod common;

use common::{closed_term, critical, ground_term, judgment, term};
use epsilon_elim::critical::{degree, is_predicative, is_weak, make_critical, rank, recognize_critical};
use epsilon_elim::eliminate::LogicTag;
use epsilon_elim::syntax::{Choice, Formula, Term};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn make_then_recognize(arg in term(), w in closed_term(), tau in any::<bool>()) {
        let kind = if tau { Choice::Tau } else { Choice::Epsilon };
        let matrix = Formula::imp(Formula::atom("P", vec![Term::var("x")]), Formula::atom("Q", vec![Term::var("x"), arg]));
        prop_assume!(matrix.free_vars().iter().all(|v| v == "x"));
        let c = make_critical(&matrix, "x", kind, &w).unwrap();
        prop_assert!(recognize_critical(&c.rendered).contains(&c));
    }

    #[test]
    fn critical_terms_have_positive_measures(c in critical(3)) {
        prop_assert!(rank(&c.critical_term) >= 1);
        prop_assert!(degree(&c.critical_term) >= 1);
    }

    #[test]
    fn instances_keep_rank(s in closed_term(), inner in any::<bool>()) {
        // e mentions the free variable y, possibly inside a subordinate term
        let body = if inner {
            Formula::atom("R", vec![Term::var("x"), Term::var("y"), Term::eps("z", Formula::atom("Q", vec![Term::var("z"), Term::var("x")]))])
        } else {
            Formula::atom("R", vec![Term::var("x"), Term::var("y")])
        };
        let e = Term::eps("x", body);
        let inst = Formula::atom("S", vec![e.clone()]).subst_var("y", &s);
        let Formula::Atom(_, args) = inst else { unreachable!() };
        prop_assert_eq!(rank(&args[0]), rank(&e));
    }

    #[test]
    fn replacing_a_term_keeps_criticality(j in judgment(LogicTag::Classical, 3), s in ground_term()) {
        let terms = j.critical_terms();
        for c in j.criticals.iter().flat_map(recognize_critical) {
            for e in terms.iter().filter(|&e| *e != c.critical_term && rank(&c.critical_term) <= rank(e)) {
                let replaced = c.rendered.subst_term(e, &s);
                let readings = recognize_critical(&replaced);
                prop_assert!(!readings.is_empty(), "{} with {} := {}", c.rendered, e, s);
                let key = |t: &Term| (rank(t), degree(t));
                if key(&c.critical_term) <= key(e) {
                    let moved = c.critical_term.subst_term(e, &s);
                    prop_assert!(readings.iter().any(|r| r.critical_term == moved && key(&moved) <= key(e)));
                }
            }
        }
    }

    #[test]
    fn weak_implies_predicative(j in judgment(LogicTag::Classical, 3)) {
        let terms = j.critical_terms();
        for c in j.criticals.iter().flat_map(recognize_critical) {
            if terms.contains(&c.critical_term) && is_weak(&c, &terms) {
                prop_assert!(is_predicative(&c));
            }
        }
    }
}
