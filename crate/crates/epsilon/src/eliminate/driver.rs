//! Elimination sequences: repeatedly pick the critical term of maximal
//! rank and degree and remove all of its critical formulas, then ground
//! whatever ε/τ-terms are left in the goal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::critical::{measure, reading_for, select_max, Measure};
use crate::semantics::{verify_judgment, Budget};
use crate::syntax::{Formula, Term};

use super::judgment::{Judgment, LogicTag};
use super::step::{
    eliminate_complete_classical, eliminate_complete_gm, eliminate_negated_jankov, eliminate_predicative_lin,
    EliminationError, EliminationStep,
};

pub const TRACE_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub enum VerifyLevel {
    #[default]
    None,
    /// Every after-judgment.
    Steps,
    /// The input judgment and every after-judgment.
    Full,
}

#[derive(Clone, Debug, Default)]
pub struct DriverOptions {
    pub verify: VerifyLevel,
    pub budget: Budget,
    /// Eliminate this term first instead of the maximal one.
    pub first: Option<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationTrace {
    pub initial: Judgment,
    pub steps: Vec<EliminationStep>,
    /// Measure of the critical terms before each round, then the final one.
    pub measures: Vec<Measure>,
    /// The last judgment after grounding: no critical formulas remain.
    pub last: Judgment,
    pub result: Formula,
    pub grounding: Vec<(Term, String)>,
}

/// The selected term had an impredicative critical formula, so the
/// predicative-only driver cannot continue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureReport {
    /// Zero-based index of the step that could not be taken.
    pub step: usize,
    pub target: Term,
    pub formula: Formula,
    pub judgment: Judgment,
    pub steps: Vec<EliminationStep>,
}

impl fmt::Display for FailureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: critical formula {} of {} is impredicative", self.step, self.formula, self.target)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeakLinOutcome {
    Success(EliminationTrace),
    Failure(FailureReport),
}

enum Round {
    Steps(Vec<EliminationStep>),
    Stuck(Term, Formula),
}

fn check(j: &Judgment, step: usize, opts: &DriverOptions) -> Result<(), EliminationError> {
    let v = verify_judgment(j, opts.budget)?;
    if v.is_valid() {
        Ok(())
    } else {
        Err(EliminationError::Verification { step, judgment: j.to_string(), countervaluation: v.countervaluation() })
    }
}

fn drive(
    j: &Judgment,
    opts: &DriverOptions,
    mut round: impl FnMut(&Judgment, &Term) -> Result<Round, EliminationError>,
) -> Result<WeakLinOutcome, EliminationError> {
    if opts.verify >= VerifyLevel::Full {
        check(j, 0, opts)?;
    }
    let mut cur = j.clone();
    let mut steps: Vec<EliminationStep> = Vec::new();
    let mut measures: Vec<Measure> = Vec::new();
    loop {
        let terms = cur.critical_terms();
        let now = measure(&terms);
        if let Some(&prev) = measures.last() {
            if now >= prev {
                return Err(EliminationError::MeasureIncrease { step: steps.len(), before: prev, after: now });
            }
        }
        measures.push(now);
        if terms.is_empty() {
            break;
        }
        let e = match (&opts.first, steps.is_empty()) {
            (Some(first), true) => {
                if !terms.contains(first) {
                    return Err(EliminationError::NotCritical(first.to_string()));
                }
                first.clone()
            }
            _ => select_max(&terms).expect("non-empty"),
        };
        match round(&cur, &e)? {
            Round::Steps(new) => {
                for s in new {
                    if opts.verify >= VerifyLevel::Steps {
                        check(&s.after, steps.len() + 1, opts)?;
                    }
                    cur = s.after.clone();
                    steps.push(s);
                }
            }
            Round::Stuck(target, formula) => {
                return Ok(WeakLinOutcome::Failure(FailureReport {
                    step: steps.len(),
                    target,
                    formula,
                    judgment: cur,
                    steps,
                }));
            }
        }
    }
    let (last, grounding) = ground(&cur);
    if opts.verify >= VerifyLevel::Steps {
        check(&last, steps.len() + 1, opts)?;
    }
    Ok(WeakLinOutcome::Success(EliminationTrace {
        initial: j.clone(),
        steps,
        measures,
        result: last.goal_formula(),
        last,
        grounding,
    }))
}

fn success(outcome: WeakLinOutcome) -> EliminationTrace {
    match outcome {
        WeakLinOutcome::Success(t) => t,
        WeakLinOutcome::Failure(_) => unreachable!("only the predicative driver gets stuck"),
    }
}

/// The Hilbert–Bernays procedure: excluded middle for classical logic,
/// `Bm` followed by `Lin` for the m-valued Gödel logics.
pub fn run_elimination(j: &Judgment, opts: &DriverOptions) -> Result<EliminationTrace, EliminationError> {
    let outcome = match j.logic {
        LogicTag::Classical => drive(j, opts, |cur, e| Ok(Round::Steps(vec![eliminate_complete_classical(cur, e)?])))?,
        LogicTag::Lcm(m) => drive(j, opts, |cur, e| Ok(Round::Steps(eliminate_complete_gm(cur, e, m as usize)?)))?,
        logic => return Err(EliminationError::UnsupportedLogic { driver: "hb", logic }),
    };
    Ok(success(outcome))
}

/// The procedure restricted to predicative critical formulas, which
/// needs only `Lin`. Reports the first impredicative formula it meets.
pub fn run_weak_lin(j: &Judgment, opts: &DriverOptions) -> Result<WeakLinOutcome, EliminationError> {
    if !j.logic.proves_lin() {
        return Err(EliminationError::UnsupportedLogic { driver: "weak-lin", logic: j.logic });
    }
    drive(j, opts, |cur, e| {
        let offending = cur.criticals.iter().filter_map(|c| reading_for(c, e)).find(|r| !r.is_predicative());
        match offending {
            Some(r) => Ok(Round::Stuck(e.clone(), r.rendered)),
            None => Ok(Round::Steps(vec![eliminate_predicative_lin(cur, e)?])),
        }
    })
}

/// Elimination for negated goals with weak excluded middle only.
pub fn run_jankov(j: &Judgment, opts: &DriverOptions) -> Result<EliminationTrace, EliminationError> {
    if !j.logic.proves_j() {
        return Err(EliminationError::UnsupportedLogic { driver: "jankov", logic: j.logic });
    }
    Ok(success(drive(j, opts, |cur, e| Ok(Round::Steps(vec![eliminate_negated_jankov(cur, e)?])))?))
}

/// Replace each maximal ε/τ-term by a fresh constant `c0`, `c1`, ...,
/// in order of first occurrence in the goal, then the premises.
pub fn ground(j: &Judgment) -> (Judgment, Vec<(Term, String)>) {
    let formulas: Vec<&Formula> = j.goal.iter().chain(j.premises()).collect();
    let taken: BTreeSet<String> = formulas.iter().flat_map(|f| f.names()).collect();
    let mut residual: Vec<Term> = Vec::new();
    for f in &formulas {
        for e in f.maximal_choice_terms() {
            if !residual.contains(&e) {
                residual.push(e);
            }
        }
    }
    let mut fresh = (0..).map(|i| format!("c{i}")).filter(|n| !taken.contains(n));
    let grounding: Vec<(Term, String)> = residual.into_iter().map(|e| (e, fresh.next().expect("infinite"))).collect();
    let mut order: Vec<&(Term, String)> = grounding.iter().collect();
    order.sort_by_key(|(e, _)| std::cmp::Reverse(e.size()));
    let grounded = j.map(|f| order.iter().fold(f.clone(), |acc, (e, c)| acc.subst_term(e, &Term::constant(c))));
    (grounded, grounding)
}

#[derive(Serialize)]
struct StepDoc {
    target: String,
    eliminated: Vec<String>,
    elimination_set: Vec<String>,
    axiom_instances: Vec<String>,
    goal_after: String,
}

#[derive(Serialize)]
struct TraceDoc {
    version: u32,
    logic: LogicTag,
    steps: Vec<StepDoc>,
    result: String,
    grounding: BTreeMap<String, String>,
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

impl EliminationTrace {
    pub fn logic(&self) -> LogicTag {
        self.initial.logic
    }

    /// Every recorded schema instance, in step order.
    pub fn axiom_instances(&self) -> impl Iterator<Item = &Formula> {
        self.steps.iter().flat_map(|s| &s.axiom_instances)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = TraceDoc {
            version: TRACE_VERSION,
            logic: self.logic(),
            steps: self
                .steps
                .iter()
                .map(|s| StepDoc {
                    target: s.target.to_string(),
                    eliminated: strings(&s.eliminated),
                    elimination_set: strings(&s.elimination_set),
                    axiom_instances: strings(&s.axiom_instances),
                    goal_after: s.after.goal_formula().to_string(),
                })
                .collect(),
            result: self.result.to_string(),
            grounding: self.grounding.iter().map(|(e, c)| (e.to_string(), c.clone())).collect(),
        };
        serde_json::to_value(doc).expect("plain data")
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("logic: {}\n", self.logic());
        for (i, s) in self.steps.iter().enumerate() {
            out.push_str(&format!("step {} [{}] target {}\n", i + 1, s.rule, s.target));
            for c in &s.eliminated {
                out.push_str(&format!("  eliminated {c}\n"));
            }
            out.push_str(&format!("  set {{{}}}\n", strings(&s.elimination_set).join(", ")));
            for a in &s.axiom_instances {
                out.push_str(&format!("  instance {a}\n"));
            }
            for d in &s.derived {
                out.push_str(&format!("  derived {d}\n"));
            }
            out.push_str(&format!("  goal {}\n", s.after.goal_formula()));
        }
        for (e, c) in &self.grounding {
            out.push_str(&format!("ground {e} := {c}\n"));
        }
        out.push_str(&format!("result {}\n", self.result));
        out
    }
}

impl FailureReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "version": TRACE_VERSION,
            "logic": self.judgment.logic,
            "failure": {
                "step": self.step,
                "target": self.target.to_string(),
                "formula": self.formula.to_string(),
                "criticals": strings(&self.judgment.criticals),
                "goal": self.judgment.goal_formula().to_string(),
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_term};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn full() -> DriverOptions {
        DriverOptions { verify: VerifyLevel::Full, ..DriverOptions::default() }
    }

    #[test]
    fn zero_criticals_is_zero_steps() {
        let j = Judgment::new(LogicTag::Classical, vec![], f("P(eps x. Q(x)) | ~P(eps x. Q(x))"));
        let trace = run_elimination(&j, &full()).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(trace.result, f("P(c0) | ~P(c0)"));
        assert_eq!(trace.grounding.len(), 1);
    }

    #[test]
    fn forking_pipeline_classical() {
        let u = "P(f(eps x. P(x))) -> P(eps x. P(x))";
        let v = "P(f(eps z. (P(f(z)) -> P(z)))) -> P(eps z. (P(f(z)) -> P(z)))";
        let j = Judgment::new(LogicTag::Classical, vec![f(u), f(&format!("({u}) -> ({v})"))], f(v));
        let trace = run_elimination(&j, &full()).unwrap();
        assert!(trace.result.is_choice_free());
        assert!(trace.measures.windows(2).all(|w| w[1] < w[0]));
        for d in trace.result.disjuncts() {
            let Formula::Imp(l, r) = d else { panic!("{d}") };
            let Formula::Atom(_, args) = &**r else { panic!("{d}") };
            assert_eq!(**l, f(&format!("P(f({}))", args[0])));
        }
    }

    #[test]
    fn lc3_driver() {
        let e = "eps x. P(x)";
        let j = Judgment::new(
            LogicTag::Lcm(3),
            vec![f(&format!("P(s({e})) -> P({e})")), f(&format!("P(u) -> P({e})"))],
            f(&format!("(P(s({e})) -> P({e})) & (P(u) -> P({e}))")),
        );
        let trace = run_elimination(&j, &full()).unwrap();
        assert_eq!(trace.steps.len(), 2);
        assert!(trace.result.is_choice_free());
    }

    #[test]
    fn unsupported_logics() {
        let j = Judgment::new(LogicTag::Lc, vec![], f("A"));
        assert!(matches!(
            run_elimination(&j, &DriverOptions::default()),
            Err(EliminationError::UnsupportedLogic { .. })
        ));
        let j = Judgment::new(LogicTag::H, vec![], f("A"));
        assert!(run_weak_lin(&j, &DriverOptions::default()).is_err());
        assert!(run_jankov(&j, &DriverOptions::default()).is_err());
    }

    #[test]
    fn weak_lin_both_orders_fail() {
        let ea = "eps x. A(x)";
        let eb = "eps y. B(y)";
        let c1 = f(&format!("A(f({eb})) -> A({ea})"));
        let c2 = f(&format!("B(g({ea})) -> B({eb})"));
        let goal = Formula::and(c1.clone(), c2.clone());
        let j = Judgment::new(LogicTag::Lc, vec![c1, c2], goal);
        for first in [ea, eb] {
            let opts = DriverOptions { first: Some(parse_term(first).unwrap()), ..full() };
            match run_weak_lin(&j, &opts).unwrap() {
                WeakLinOutcome::Failure(r) => {
                    assert_eq!(r.step, 1);
                    assert_ne!(r.target, parse_term(first).unwrap());
                }
                WeakLinOutcome::Success(_) => panic!("expected failure"),
            }
        }
    }

    #[test]
    fn jankov_driver_two_terms() {
        let e = "eps x. P(x)";
        let d = "eps y. Q(y)";
        let j = Judgment::new(
            LogicTag::Kc,
            vec![f(&format!("P(a) -> P({e})")), f(&format!("Q(b) -> Q({d})"))],
            f(&format!("~~(P({e}) & Q({d}))")),
        )
        .with_residues(vec![f("P(a)"), f("Q(b)")]);
        let trace = run_jankov(&j, &full()).unwrap();
        assert_eq!(trace.steps.len(), 2);
        assert!(trace.result.is_choice_free());
    }

    #[test]
    fn json_shape() {
        let j = Judgment::new(LogicTag::Classical, vec![f("P(a) -> P(eps x. P(x))")], f("P(eps x. P(x))"));
        let trace = run_elimination(&j, &DriverOptions::default()).unwrap();
        let v = trace.to_json();
        assert_eq!(v["version"], 1);
        assert_eq!(v["logic"], "classical");
        let step = &v["steps"][0];
        for key in ["target", "eliminated", "elimination_set", "axiom_instances", "goal_after"] {
            assert!(step.get(key).is_some(), "{key}");
        }
        assert!(v["grounding"].is_object());
        assert_eq!(v["result"], "P(c0) | P(a)");
    }
}
