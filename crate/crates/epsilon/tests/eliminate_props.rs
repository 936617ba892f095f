mod common;

use common::{is_schema_instance, judgment, rng, tautology};
use epsilon_elim::eliminate::{
    eliminate_complete_classical, reconstruct_from_herbrand, run_elimination, DriverOptions, EliminationTrace, LogicTag,
};
use epsilon_elim::generate::herbrand_rows;
use epsilon_elim::semantics::{verify_judgment, Budget};
use epsilon_elim::syntax::{Formula, Term};
use proptest::prelude::*;

fn valid(j: &epsilon_elim::eliminate::Judgment) -> bool {
    verify_judgment(j, Budget::default()).unwrap().is_valid()
}

fn check_trace(trace: &EliminationTrace) -> Result<(), TestCaseError> {
    let logic = trace.logic();
    prop_assert!(trace.measures.windows(2).all(|w| w[1] < w[0]), "{:?}", trace.measures);
    for s in &trace.steps {
        if valid(&s.before) {
            prop_assert!(valid(&s.after), "{} ~> {}", s.before, s.after);
        }
        for i in &s.axiom_instances {
            prop_assert!(is_schema_instance(logic, i), "{} is not a {} instance", i, logic);
        }
    }
    prop_assert!(trace.result.is_choice_free() && trace.result.is_quantifier_free());
    prop_assert!(valid(&trace.last));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classical_runs(j in judgment(LogicTag::Classical, 3)) {
        let trace = run_elimination(&j, &DriverOptions::default()).unwrap();
        check_trace(&trace)?;
        prop_assert!(tautology(&trace.result), "{}", trace.result);
    }

    #[test]
    fn two_valued_goedel_runs(j in judgment(LogicTag::Lcm(2), 2)) {
        check_trace(&run_elimination(&j, &DriverOptions::default()).unwrap())?;
    }

    #[test]
    fn complete_classical_disjunct_bound(j in judgment(LogicTag::Classical, 3)) {
        let e = j.critical_terms().remove(0);
        let step = eliminate_complete_classical(&j, &e).unwrap();
        let k = step.eliminated.len();
        prop_assert!(step.after.goal.len() <= (k + 1) * j.goal.len());
    }

    #[test]
    fn reconstruction_round_trip(seed in any::<u64>(), holes in 1usize..=2, rows in 1usize..=3) {
        let names: Vec<String> = ["x", "y"][..holes].iter().map(|s| s.to_string()).collect();
        let skeleton = Formula::atom("D", names.iter().map(|n| Term::var(n)).collect());
        let table = herbrand_rows(&mut rng(seed), holes, rows);
        let disjuncts: Vec<Formula> = table.iter().map(|r| Formula::atom("D", r.clone())).collect();
        let herbrand = Formula::disj(disjuncts.clone());
        let (j, trace) = reconstruct_from_herbrand(&herbrand, &skeleton, &names, LogicTag::Lc).unwrap();
        let mut expected: Vec<String> = disjuncts.iter().map(ToString::to_string).collect();
        let mut got: Vec<String> = trace.result.disjuncts().iter().map(ToString::to_string).collect();
        expected.sort();
        expected.dedup();
        got.sort();
        got.dedup();
        prop_assert_eq!(got, expected);
        for c in &j.criticals {
            prop_assert!(epsilon_elim::critical::recognize_critical(c).iter().all(|r| r.is_predicative()));
        }
    }
}
