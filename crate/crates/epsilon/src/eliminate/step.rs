//! Elimination-set constructions. Each one removes the critical formulas
//! of a term `e` from a judgment `Γ, Λ(e) ⊢ D(e)` and returns the step
//! leading to `Γ[T] ⊢ ⋁_{t ∈ T} D(t)`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::critical::{reading_for, recognize_critical, CriticalFormula, Measure};
use crate::semantics::{schema, verify_judgment, Budget, SchemaKind, SemanticsError};
use crate::syntax::{Choice, Formula, Term};

use super::judgment::{dedup, push_unique, Judgment, LogicTag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EliminationError {
    #[error("{0} is not a critical term of the judgment")]
    NotCritical(String),
    #[error("critical formula {0} is not a premise of the judgment")]
    NotInJudgment(String),
    #[error("{rule} is not available in {logic}")]
    Logic { rule: &'static str, logic: LogicTag },
    #[error("goal must be a negation, got {0}")]
    GoalNotNegated(String),
    #[error("{0} has no impredicative critical formulas")]
    NoImpredicative(String),
    #[error("critical formula {0} is impredicative")]
    Impredicative(String),
    #[error("B{m} elimination is not sound in {logic}")]
    Chain { m: usize, logic: LogicTag },
    #[error("logics differ: {0} and {1}")]
    LogicMismatch(LogicTag, LogicTag),
    #[error("{0} is not a premise of the judgment")]
    MissingPremise(String),
    #[error("{b} does not entail {a} in {logic}")]
    NotEntailed { a: String, b: String, logic: LogicTag },
    #[error("the {driver} driver does not handle {logic}")]
    UnsupportedLogic { driver: &'static str, logic: LogicTag },
    #[error("termination measure did not decrease at step {step}: {before:?} then {after:?}")]
    MeasureIncrease { step: usize, before: Measure, after: Measure },
    #[error("judgment after step {step} does not verify: {judgment}")]
    Verification { step: usize, judgment: String, countervaluation: Option<String> },
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// Which construction produced a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub enum Rule {
    SingleClassical,
    CompleteClassical,
    NegatedJankov,
    ImpredicativeBm(usize),
    PredicativeLin,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::SingleClassical => write!(f, "em-single"),
            Rule::CompleteClassical => write!(f, "em"),
            Rule::NegatedJankov => write!(f, "jankov"),
            Rule::ImpredicativeBm(m) => write!(f, "impred-b{m}"),
            Rule::PredicativeLin => write!(f, "pred-lin"),
        }
    }
}

impl From<Rule> for String {
    fn from(r: Rule) -> String {
        r.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationStep {
    pub rule: Rule,
    pub target: Term,
    pub eliminated: Vec<Formula>,
    pub elimination_set: Vec<Term>,
    /// Substitution instances of the logic's schemas, added as premises.
    pub axiom_instances: Vec<Formula>,
    /// The case split the construction reasons with, derivable from the
    /// instances (for example `⋁A(s_i) ∨ ⋀¬A(s_i)` from excluded middle).
    pub derived: Vec<Formula>,
    /// Goal disjuncts before deduplication.
    pub raw_disjuncts: usize,
    pub before: Judgment,
    pub after: Judgment,
}

/// `Λ(e)` split off from the rest of a judgment.
struct Split {
    e: Term,
    kind: Choice,
    readings: Vec<CriticalFormula>,
    rest: Judgment,
}

impl Split {
    fn of(j: &Judgment, e: &Term) -> Result<Split, EliminationError> {
        let (kind, _) = e.as_choice().ok_or_else(|| EliminationError::NotCritical(e.to_string()))?;
        let mut rest = j.clone();
        rest.criticals.clear();
        let mut readings = Vec::new();
        for c in &j.criticals {
            match reading_for(c, e) {
                Some(r) => readings.push(r),
                None => rest.criticals.push(c.clone()),
            }
        }
        if readings.is_empty() {
            return Err(EliminationError::NotCritical(e.to_string()));
        }
        Ok(Split { e: e.clone(), kind, readings, rest })
    }

    /// `A(t)`.
    fn at(&self, t: &Term) -> Formula {
        self.readings[0].matrix_at(t)
    }

    fn witnesses(&self) -> Vec<Term> {
        dedup_terms(self.readings.iter().map(|r| r.witness.clone()))
    }

    fn rendered(&self) -> Vec<Formula> {
        self.readings.iter().map(|r| r.rendered.clone()).collect()
    }
}

pub(crate) fn dedup_terms(items: impl IntoIterator<Item = Term>) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::new();
    for t in items {
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// `Γ[T] ⊢ ⋁_{t ∈ T} D(t)`. Substituted criticals that are no longer
/// critical become residues.
fn expand(rest: &Judgment, e: &Term, set: &[Term]) -> (Judgment, usize) {
    let over = |fs: &[Formula]| dedup(set.iter().flat_map(|t| fs.iter().map(move |f| f.subst_term(e, t))));
    let mut criticals = Vec::new();
    let mut residues = over(&rest.residues);
    for f in over(&rest.criticals) {
        if recognize_critical(&f).is_empty() {
            push_unique(&mut residues, f);
        } else {
            push_unique(&mut criticals, f);
        }
    }
    let after = Judgment {
        logic: rest.logic,
        criticals,
        residues,
        axiom_instances: over(&rest.axiom_instances),
        goal: over(&rest.goal),
    };
    (after, set.len() * rest.goal.len())
}

struct Parts {
    rule: Rule,
    set: Vec<Term>,
    eliminated: Vec<Formula>,
    kept: Vec<Formula>,
    instances: Vec<Formula>,
    derived: Vec<Formula>,
}

fn finish(before: &Judgment, split: &Split, parts: Parts) -> EliminationStep {
    let (mut after, raw_disjuncts) = expand(&split.rest, &split.e, &parts.set);
    for k in parts.kept {
        push_unique(&mut after.criticals, k);
    }
    for i in &parts.instances {
        push_unique(&mut after.axiom_instances, i.clone());
    }
    EliminationStep {
        rule: parts.rule,
        target: split.e.clone(),
        eliminated: parts.eliminated,
        elimination_set: parts.set,
        axiom_instances: parts.instances,
        derived: parts.derived,
        raw_disjuncts,
        before: before.clone(),
        after,
    }
}

fn instance(kind: SchemaKind, atoms: &[Formula]) -> Formula {
    schema(kind, atoms).expect("schema arity is fixed by construction")
}

fn require(rule: &'static str, logic: LogicTag, ok: bool) -> Result<(), EliminationError> {
    if ok {
        Ok(())
    } else {
        Err(EliminationError::Logic { rule, logic })
    }
}

/// Eliminate one critical formula `c` of `e` with `A(s) ∨ ¬A(s)`; the
/// set is `{e, s}`. The other critical formulas of `e` stay on the `e`
/// branch and are implied by `A(s)` (resp. `¬A(s)`) on the `s` branch.
pub fn eliminate_single_classical(j: &Judgment, c: &CriticalFormula) -> Result<EliminationStep, EliminationError> {
    require("excluded middle", j.logic, j.logic == LogicTag::Classical)?;
    if !j.criticals.contains(&c.rendered) {
        return Err(EliminationError::NotInJudgment(c.rendered.to_string()));
    }
    let split = Split::of(j, &c.critical_term)?;
    let kept = split.rendered().into_iter().filter(|f| *f != c.rendered).collect();
    let s = c.witness.clone();
    let parts = Parts {
        rule: Rule::SingleClassical,
        set: dedup_terms([split.e.clone(), s.clone()]),
        eliminated: vec![c.rendered.clone()],
        kept,
        instances: vec![instance(SchemaKind::Em, &[split.at(&s)])],
        derived: Vec::new(),
    };
    Ok(finish(j, &split, parts))
}

/// All critical formulas of `e` at once, with the set `{e, s_1, ..., s_k}`.
pub fn eliminate_complete_classical(j: &Judgment, e: &Term) -> Result<EliminationStep, EliminationError> {
    require("excluded middle", j.logic, j.logic == LogicTag::Classical)?;
    let split = Split::of(j, e)?;
    let s = split.witnesses();
    let pos: Vec<Formula> = s.iter().map(|t| split.at(t)).collect();
    let neg: Vec<Formula> = pos.iter().cloned().map(Formula::not).collect();
    let (y, derived) = match split.kind {
        Choice::Epsilon => (Formula::disj(pos.clone()), Formula::or(Formula::disj(pos), Formula::conj(neg))),
        Choice::Tau => (Formula::conj(pos.clone()), Formula::or(Formula::conj(pos), Formula::disj(neg))),
    };
    let mut set = vec![e.clone()];
    set.extend(s);
    let parts = Parts {
        rule: Rule::CompleteClassical,
        set: dedup_terms(set),
        eliminated: split.rendered(),
        kept: Vec::new(),
        instances: vec![instance(SchemaKind::Em, &[y])],
        derived: vec![derived],
    };
    Ok(finish(j, &split, parts))
}

/// The negated body of a goal that is a negation or a disjunction of
/// negations: `¬G_1 ∨ ... ∨ ¬G_n` is read as `¬(G_1 ∧ ... ∧ G_n)`.
fn negated_goal(goal: &[Formula]) -> Option<Formula> {
    let bodies = goal
        .iter()
        .map(|g| match g {
            Formula::Not(b) => Some((**b).clone()),
            _ => None,
        })
        .collect::<Option<Vec<_>>>()?;
    Some(Formula::not(Formula::conj(bodies)))
}

/// Complete elimination for a negated goal, using `¬A ∨ ¬¬A` only.
pub fn eliminate_negated_jankov(j: &Judgment, e: &Term) -> Result<EliminationStep, EliminationError> {
    require("weak excluded middle", j.logic, j.logic.proves_j())?;
    let goal = negated_goal(&j.goal).ok_or_else(|| EliminationError::GoalNotNegated(j.goal_formula().to_string()))?;
    let mut split = Split::of(j, e)?;
    split.rest.goal = vec![goal];
    let s = split.witnesses();
    let neg: Vec<Formula> = s.iter().map(|t| Formula::not(split.at(t))).collect();
    let negneg: Vec<Formula> = neg.iter().cloned().map(Formula::not).collect();
    let derived = match split.kind {
        Choice::Epsilon => Formula::or(Formula::conj(neg), Formula::disj(negneg)),
        Choice::Tau => Formula::or(Formula::disj(neg), Formula::conj(negneg)),
    };
    let instances = s.iter().map(|t| instance(SchemaKind::J, &[split.at(t)])).collect();
    let mut set = vec![e.clone()];
    set.extend(s);
    let parts = Parts {
        rule: Rule::NegatedJankov,
        set: dedup_terms(set),
        eliminated: split.rendered(),
        kept: Vec::new(),
        instances,
        derived: vec![derived],
    };
    Ok(finish(j, &split, parts))
}

fn bm_allowed(logic: LogicTag, m: usize) -> bool {
    m >= 2 && logic.bm().is_some_and(|c| c <= m)
}

/// All words of length `k` over `r` letters, as letter indices.
fn words(r: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out.into_iter().flat_map(|w| (0..r).map(move |i| [w.clone(), vec![i]].concat())).collect();
    }
    out
}

/// `[w_1(e), ..., w_k(e), e]` where `w_j(e) = s_{i_j}(w_{j+1}(e))`.
fn word_terms(word: &[usize], s: &[Term], e: &Term) -> Vec<Term> {
    let mut out = vec![e.clone()];
    for &i in word.iter().rev() {
        let next = s[i].subst_term(e, out.last().expect("non-empty"));
        out.push(next);
    }
    out.reverse();
    out
}

/// Chain atoms for a word, oriented so the instance is literally `Bm`:
/// `A(w_1(e)) -> ... -> A(e)` for ε, reversed for τ.
fn chain_atoms(split: &Split, terms: &[Term]) -> Vec<Formula> {
    let mut atoms: Vec<Formula> = terms.iter().map(|t| split.at(t)).collect();
    if split.kind == Choice::Tau {
        atoms.reverse();
    }
    atoms
}

/// Remove the impredicative critical formulas `A(s_i(e)) -> A(e)` using
/// `Bm`. The set is `T_0 ∪ ... ∪ T_{m-1}` with `T_0 = {e}` and
/// `T_{i+1} = {s_j(t) : t ∈ T_i}`; the predicative ones are kept.
pub fn eliminate_impredicative_bm(j: &Judgment, e: &Term, m: usize) -> Result<EliminationStep, EliminationError> {
    if !bm_allowed(j.logic, m) {
        return Err(EliminationError::Chain { m, logic: j.logic });
    }
    let split = Split::of(j, e)?;
    let (delta, pi): (Vec<&CriticalFormula>, Vec<&CriticalFormula>) =
        split.readings.iter().partition(|r| !r.is_predicative());
    if delta.is_empty() {
        return Err(EliminationError::NoImpredicative(e.to_string()));
    }
    let s = dedup_terms(delta.iter().map(|r| r.witness.clone()));
    let u = dedup_terms(pi.iter().map(|r| r.witness.clone()));

    let mut level = vec![e.clone()];
    let mut set = level.clone();
    for _ in 1..m {
        level = dedup_terms(level.iter().flat_map(|t| s.iter().map(|sj| sj.subst_term(e, t))));
        set.extend(level.iter().cloned());
    }

    let mut instances = Vec::new();
    for w in words(s.len(), m) {
        push_unique(&mut instances, instance(SchemaKind::Bm(m), &chain_atoms(&split, &word_terms(&w, &s, e))));
    }
    for k in 1..m {
        for v in words(s.len(), k) {
            let tail = word_terms(&v, &s, e);
            for ui in &u {
                let mut terms = vec![ui.clone()];
                terms.extend(tail.iter().cloned());
                push_unique(&mut instances, instance(SchemaKind::IteratedLin(k + 1), &chain_atoms(&split, &terms)));
            }
        }
    }

    let parts = Parts {
        rule: Rule::ImpredicativeBm(m),
        set: dedup_terms(set),
        eliminated: delta.iter().map(|r| r.rendered.clone()).collect(),
        kept: pi.iter().map(|r| r.rendered.clone()).collect(),
        instances,
        derived: Vec::new(),
    };
    Ok(finish(j, &split, parts))
}

/// Remove predicative critical formulas `A(u_i) -> A(e)` with the set
/// `{u_1, ..., u_p}` and one big-disjunction instance from `Lin`.
pub fn eliminate_predicative_lin(j: &Judgment, e: &Term) -> Result<EliminationStep, EliminationError> {
    require("linearity", j.logic, j.logic.proves_lin())?;
    let split = Split::of(j, e)?;
    if let Some(r) = split.readings.iter().find(|r| !r.is_predicative()) {
        return Err(EliminationError::Impredicative(r.rendered.to_string()));
    }
    let u = split.witnesses();
    let atoms: Vec<Formula> = u.iter().map(|t| split.at(t)).collect();
    let kind = match split.kind {
        Choice::Epsilon => SchemaKind::BigDisjEps(u.len()),
        Choice::Tau => SchemaKind::BigDisjTau(u.len()),
    };
    let parts = Parts {
        rule: Rule::PredicativeLin,
        set: u,
        eliminated: split.rendered(),
        kept: Vec::new(),
        instances: vec![instance(kind, &atoms)],
        derived: Vec::new(),
    };
    Ok(finish(j, &split, parts))
}

/// The impredicative phase with `Bm`, then the predicative phase with
/// `Lin`. When the first phase leaves no critical formulas for `e`, the
/// second is the identity step with set `{e}`.
pub fn eliminate_complete_gm(j: &Judgment, e: &Term, m: usize) -> Result<Vec<EliminationStep>, EliminationError> {
    if !bm_allowed(j.logic, m) {
        return Err(EliminationError::Chain { m, logic: j.logic });
    }
    let split = Split::of(j, e)?;
    let mut steps = Vec::new();
    let mut cur = j.clone();
    if split.readings.iter().any(|r| !r.is_predicative()) {
        let step = eliminate_impredicative_bm(j, e, m)?;
        cur = step.after.clone();
        steps.push(step);
    }
    if cur.criticals.iter().any(|c| reading_for(c, e).is_some()) {
        steps.push(eliminate_predicative_lin(&cur, e)?);
    } else {
        steps.push(EliminationStep {
            rule: Rule::PredicativeLin,
            target: e.clone(),
            eliminated: Vec::new(),
            elimination_set: vec![e.clone()],
            axiom_instances: Vec::new(),
            derived: Vec::new(),
            raw_disjuncts: cur.goal.len(),
            before: cur.clone(),
            after: cur,
        });
    }
    Ok(steps)
}

fn take_premise(j: &mut Judgment, a: &Formula) -> Option<bool> {
    if let Some(i) = j.criticals.iter().position(|f| f == a) {
        j.criticals.remove(i);
        return Some(true);
    }
    for list in [&mut j.residues, &mut j.axiom_instances] {
        if let Some(i) = list.iter().position(|f| f == a) {
            list.remove(i);
            return Some(false);
        }
    }
    None
}

/// From `Γ, A ⊢ C` and `Γ', B ⊢ D` conclude `Γ, Γ', A ∨ B ⊢ C ∨ D`.
pub fn combine_disjunction(
    j1: &Judgment,
    a: &Formula,
    j2: &Judgment,
    b: &Formula,
) -> Result<Judgment, EliminationError> {
    if j1.logic != j2.logic {
        return Err(EliminationError::LogicMismatch(j1.logic, j2.logic));
    }
    let mut l = j1.clone();
    let mut r = j2.clone();
    let a_critical = take_premise(&mut l, a).ok_or_else(|| EliminationError::MissingPremise(a.to_string()))?;
    take_premise(&mut r, b).ok_or_else(|| EliminationError::MissingPremise(b.to_string()))?;
    let mut out = Judgment {
        logic: l.logic,
        criticals: dedup(l.criticals.into_iter().chain(r.criticals)),
        residues: dedup(l.residues.into_iter().chain(r.residues)),
        axiom_instances: dedup(l.axiom_instances.into_iter().chain(r.axiom_instances)),
        goal: dedup(l.goal.into_iter().chain(r.goal)),
    };
    if a == b && a_critical {
        push_unique(&mut out.criticals, a.clone());
    } else if a == b {
        push_unique(&mut out.residues, a.clone());
    } else {
        push_unique(&mut out.residues, Formula::or(a.clone(), b.clone()));
    }
    Ok(out)
}

/// From `Γ, A ⊢ C` and `B ⊢ A` conclude `Γ, B ⊢ C`. With a budget, the
/// entailment `B ⊢ A` is checked in the judgment's logic first.
pub fn strengthen_premise(
    j: &Judgment,
    a: &Formula,
    b: &Formula,
    check: Option<Budget>,
) -> Result<Judgment, EliminationError> {
    if let (Some(budget), true) = (check, a != b) {
        let claim = Judgment::new(j.logic, Vec::new(), a.clone()).with_residues(vec![b.clone()]);
        if !verify_judgment(&claim, budget)?.is_valid() {
            return Err(EliminationError::NotEntailed { a: a.to_string(), b: b.to_string(), logic: j.logic });
        }
    }
    let mut out = j.clone();
    let was_critical = take_premise(&mut out, a).ok_or_else(|| EliminationError::MissingPremise(a.to_string()))?;
    if was_critical && !recognize_critical(b).is_empty() {
        push_unique(&mut out.criticals, b.clone());
    } else {
        push_unique(&mut out.residues, b.clone());
    }
    Ok(out)
}
