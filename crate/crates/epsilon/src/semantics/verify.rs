//! Semantic check of a judgment in its logic.

use crate::eliminate::{Judgment, LogicTag};

use super::godel::{decide_lc, decide_lcm, Budget, Verdict};
use super::prop::{Abstraction, Connectives, Prop};
use super::prover::prove_h;
use super::SemanticsError;

/// Outcome of [`verify_judgment`], with the atom names needed to read a
/// countervaluation.
#[derive(Clone, Debug)]
pub struct Verification {
    pub verdict: Verdict,
    pub atoms: Vec<String>,
    /// Chain the verdict refers to, for chain semantics.
    pub chain: Option<u32>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.verdict.is_valid()
    }

    pub fn countervaluation(&self) -> Option<String> {
        match &self.verdict {
            Verdict::Invalid(Some(v)) => Some(v.render(&self.atoms)),
            _ => None,
        }
    }
}

/// Chain logics check `premises -> goal` on their chain (LC on the chain
/// of size `#atoms + 2`); KC and H ask the intuitionistic prover, with
/// the recorded schema instances as hypotheses.
pub fn verify_judgment(j: &Judgment, budget: Budget) -> Result<Verification, SemanticsError> {
    let mut abs = Abstraction::new();
    let premises = j.premises().map(|p| abs.abstract_formula(p)).collect::<Result<Vec<Prop>, _>>()?;
    let goal = abs.abstract_formula(&j.goal_formula())?;
    let claim = || Prop::imp(Prop::big_and(premises.clone()), goal.clone());
    let (verdict, chain) = match j.logic {
        LogicTag::Classical | LogicTag::Lcm(_) => {
            let m = j.logic.chain().unwrap_or(2);
            (decide_lcm(&claim(), m, budget)?, Some(m))
        }
        LogicTag::Lc => {
            let phi = claim();
            let m = super::lc_chain_size(&phi);
            (decide_lc(&phi, budget)?, Some(m))
        }
        LogicTag::Kc | LogicTag::H => {
            let verdict = if prove_h(&premises, &goal).is_some() { Verdict::Valid } else { Verdict::Invalid(None) };
            (verdict, None)
        }
    };
    Ok(Verification { verdict, atoms: abs.names(), chain })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, Formula};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn forking_start_is_classically_valid() {
        let u = "P(f(eps x. P(x))) -> P(eps x. P(x))";
        let v = "P(f(eps z. (P(f(z)) -> P(z)))) -> P(eps z. (P(f(z)) -> P(z)))";
        let j = Judgment::new(LogicTag::Classical, vec![f(u), f(&format!("({u}) -> ({v})"))], f(v));
        assert!(verify_judgment(&j, Budget::default()).unwrap().is_valid());
    }

    #[test]
    fn empty_premises_top() {
        for logic in [LogicTag::Classical, LogicTag::Lcm(3), LogicTag::Lc, LogicTag::Kc, LogicTag::H] {
            let j = Judgment::new(logic, vec![], Formula::Top);
            assert!(verify_judgment(&j, Budget::default()).unwrap().is_valid());
        }
    }

    #[test]
    fn logics_differ_on_excluded_middle() {
        let em = f("A | ~A");
        let check = |logic| verify_judgment(&Judgment::new(logic, vec![], em.clone()), Budget::default()).unwrap();
        assert!(check(LogicTag::Classical).is_valid());
        let lc3 = check(LogicTag::Lcm(3));
        assert!(!lc3.is_valid());
        assert_eq!(lc3.countervaluation().unwrap(), "A=1");
        assert!(!check(LogicTag::Lc).is_valid());
        assert!(!check(LogicTag::Kc).is_valid());
        let with_instance = Judgment::new(LogicTag::H, vec![], em.clone()).with_instances(vec![em.clone()]);
        assert!(verify_judgment(&with_instance, Budget::default()).unwrap().is_valid());
    }
}
