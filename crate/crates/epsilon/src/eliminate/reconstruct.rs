//! Going back and forth between Herbrand disjunctions and elimination
//! sequences, plus the post-processing of the forking construction.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::critical::CriticalFormula;
use crate::semantics::{schema, SchemaKind};
use crate::syntax::{Formula, Term};

use super::driver::{run_elimination, run_weak_lin, DriverOptions, EliminationTrace, WeakLinOutcome};
use super::judgment::{dedup, Judgment, LogicTag};
use super::step::EliminationError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("disjunct {0} does not match the skeleton")]
    NoMatch(String),
    #[error("hole {0} does not occur in the skeleton")]
    UnusedHole(String),
    #[error("instance term {0} must be free of ε/τ-terms and holes")]
    BadTerm(String),
    #[error("{0} is not an instance of P(f(z)) -> P(z)")]
    NotForkingInstance(String),
    #[error("expected {expected}, got {got}")]
    Shape { expected: &'static str, got: String },
    #[error("elimination replay failed: {0}")]
    Replay(String),
    #[error(transparent)]
    Elimination(#[from] EliminationError),
}

fn match_term(p: &Term, t: &Term, holes: &[String], out: &mut [Option<Term>]) -> bool {
    match (p, t) {
        (Term::Free(x), _) if holes.contains(x) => {
            let i = holes.iter().position(|h| h == x).expect("present");
            match &out[i] {
                Some(bound) => bound == t,
                None => {
                    out[i] = Some(t.clone());
                    true
                }
            }
        }
        (Term::App(f, ps), Term::App(g, ts)) => {
            f == g && ps.len() == ts.len() && ps.iter().zip(ts).all(|(p, t)| match_term(p, t, holes, out))
        }
        _ => p == t,
    }
}

fn match_formula(p: &Formula, f: &Formula, holes: &[String], out: &mut [Option<Term>]) -> bool {
    match (p, f) {
        (Formula::Atom(a, ps), Formula::Atom(b, ts)) => {
            a == b && ps.len() == ts.len() && ps.iter().zip(ts).all(|(p, t)| match_term(p, t, holes, out))
        }
        (Formula::Not(p), Formula::Not(f)) => match_formula(p, f, holes, out),
        (Formula::And(p1, p2), Formula::And(f1, f2))
        | (Formula::Or(p1, p2), Formula::Or(f1, f2))
        | (Formula::Imp(p1, p2), Formula::Imp(f1, f2)) => {
            match_formula(p1, f1, holes, out) && match_formula(p2, f2, holes, out)
        }
        _ => p == f,
    }
}

/// Instance rows `t_{1i}, ..., t_{ni}` of the skeleton in a disjunction.
fn rows(disjunction: &Formula, skeleton: &Formula, holes: &[String]) -> Result<Vec<Vec<Term>>, ReconstructError> {
    let width = skeleton.disjuncts().len();
    let items: Vec<Formula> = disjunction.disjuncts().into_iter().cloned().collect();
    if !items.len().is_multiple_of(width) {
        return Err(ReconstructError::NoMatch(disjunction.to_string()));
    }
    let mut out = Vec::new();
    for chunk in items.chunks(width) {
        let d = Formula::disj(chunk.iter().cloned());
        let mut binding = vec![None; holes.len()];
        if !match_formula(skeleton, &d, holes, &mut binding) {
            return Err(ReconstructError::NoMatch(d.to_string()));
        }
        let row = binding
            .into_iter()
            .zip(holes)
            .map(|(b, h)| b.ok_or_else(|| ReconstructError::UnusedHole(h.clone())))
            .collect::<Result<Vec<Term>, _>>()?;
        for t in &row {
            if !t.choice_terms().is_empty() || holes.iter().any(|h| t.free_vars().contains(h)) {
                return Err(ReconstructError::BadTerm(t.to_string()));
            }
        }
        out.push(row);
    }
    Ok(out)
}

/// A judgment with only predicative critical formulas whose elimination
/// by `Lin` reproduces `disjunction`, together with that elimination.
///
/// With holes `x_1, ..., x_n` in `skeleton = D(x_1, ..., x_n)`, the
/// ε-terms are built innermost first: `E_n = εx_n D(x_1, ..., x_n)`,
/// then `E_{n-1} = εx_{n-1} D(x_1, ..., x_{n-1}, E_n)`, and so on. Each
/// disjunct contributes one critical formula per hole.
pub fn reconstruct_from_herbrand(
    disjunction: &Formula,
    skeleton: &Formula,
    holes: &[String],
    logic: LogicTag,
) -> Result<(Judgment, EliminationTrace), ReconstructError> {
    let table = rows(disjunction, skeleton, holes)?;
    let n = holes.len();
    // levels[l] = D with holes l+1.. filled by their ε-terms, as a
    // formula in x_1..x_{l+1}; eps[l] = the ε-term binding x_{l+1}.
    let mut eps: Vec<Term> = vec![Term::constant("_"); n];
    let mut body = skeleton.clone();
    for l in (0..n).rev() {
        let e = Term::eps(&holes[l], body.clone());
        body = body.subst_var(&holes[l], &e);
        eps[l] = e;
    }
    let goal = body;

    let mut criticals = Vec::new();
    for l in 0..n {
        for row in &table {
            let e = (0..l).fold(eps[l].clone(), |acc, i| acc.subst_var(&holes[i], &row[i]));
            let c = CriticalFormula::of_term(&e, &row[l]).map_err(|err| ReconstructError::Replay(err.to_string()))?;
            criticals.push(c.rendered);
        }
    }
    let j = Judgment::new(logic, criticals, goal);
    match run_weak_lin(&j, &DriverOptions::default())? {
        WeakLinOutcome::Success(trace) => Ok((j, trace)),
        WeakLinOutcome::Failure(r) => Err(ReconstructError::Replay(r.to_string())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmExtraction {
    pub m: usize,
    /// `Bm` over atoms `A_{m+1}, ..., A_1`, where `A_{i+1}` stands for
    /// `P(f^i(s))` for every base term `s`.
    pub instance: Formula,
    /// Highest tower index per base term.
    pub towers: BTreeMap<String, usize>,
}

/// Reduce a disjunction of instances of `P(f(z)) -> P(z)` to a `Bm`
/// instance: group disjuncts by base term, pad each group to a full tower
/// `P(f^{j+1}(s)) -> P(f^j(s))`, `j < m`, and name `P(f^i(s))` as `A_{i+1}`.
pub fn bm_extract(herbrand: &Formula, f: &str, p: &str) -> Result<BmExtraction, ReconstructError> {
    let bad = |d: &Formula| ReconstructError::NotForkingInstance(d.to_string());
    let mut towers: BTreeMap<String, usize> = BTreeMap::new();
    for d in herbrand.disjuncts() {
        let Formula::Imp(l, r) = d else { return Err(bad(d)) };
        let (Formula::Atom(pl, la), Formula::Atom(pr, ra)) = (&**l, &**r) else { return Err(bad(d)) };
        if pl != p || pr != p || la.len() != 1 || ra.len() != 1 || la[0] != Term::app(f, vec![ra[0].clone()]) {
            return Err(bad(d));
        }
        let mut base = &ra[0];
        let mut height = 0;
        while let Term::App(g, args) = base {
            if g != f || args.len() != 1 {
                break;
            }
            base = &args[0];
            height += 1;
        }
        let top = towers.entry(base.to_string()).or_insert(0);
        *top = (*top).max(height);
    }
    let m = towers.values().map(|h| h + 1).max().unwrap_or(1);
    let atoms: Vec<Formula> = (1..=m + 1).rev().map(|i| Formula::prop(&format!("A{i}"))).collect();
    let instance = schema(SchemaKind::Bm(m), &atoms).expect("m + 1 atoms");
    Ok(BmExtraction { m, instance, towers })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvertDirection {
    /// `B(e') ⊢ C(e)` to `⋀B(s_i) ⊢ ⋁C(t_i)`, through `⊢ B(e') -> C(e)`.
    OneToThree,
    /// `⊢ A(e)` to `⊢ ⋁A(s_i)`, through `A(e) -> X ⊢ X`.
    TwoToOne,
}

fn fresh_atom(j: &Judgment) -> String {
    let names: Vec<String> =
        j.premises().chain(&j.goal).flat_map(|f| f.predicates().into_iter().map(|(p, _)| p)).collect();
    (0..)
        .map(|i| if i == 0 { "X".to_string() } else { format!("X{i}") })
        .find(|x| !names.contains(x))
        .expect("infinite")
}

/// The equivalences between the forms of the ε-theorem, carried out on
/// judgments. Elimination runs with the judgment's own logic driver.
pub fn theorem_form_convert(direction: ConvertDirection, input: &Judgment) -> Result<Judgment, ReconstructError> {
    match direction {
        ConvertDirection::OneToThree => {
            if input.residues.is_empty() {
                return Err(ReconstructError::Shape {
                    expected: "hypotheses B(e') as residue premises",
                    got: input.to_string(),
                });
            }
            let b = Formula::conj(input.residues.iter().cloned());
            let packaged =
                Judgment { residues: Vec::new(), goal: vec![Formula::imp(b, input.goal_formula())], ..input.clone() };
            let trace = run_elimination(&packaged, &DriverOptions::default())?;
            let mut hyps = Vec::new();
            let mut concl = Vec::new();
            for d in &trace.last.goal {
                let Formula::Imp(b, c) = d else {
                    return Err(ReconstructError::Shape { expected: "B -> C disjuncts", got: d.to_string() });
                };
                hyps.push((**b).clone());
                concl.extend(c.disjuncts().into_iter().cloned());
            }
            Ok(Judgment {
                logic: input.logic,
                criticals: Vec::new(),
                residues: dedup(hyps),
                axiom_instances: trace.last.axiom_instances.clone(),
                goal: dedup(concl),
            })
        }
        ConvertDirection::TwoToOne => {
            if !input.residues.is_empty() || input.goal.len() != 1 {
                return Err(ReconstructError::Shape { expected: "a judgment ⊢ A(e)", got: input.to_string() });
            }
            let x = Formula::prop(&fresh_atom(input));
            let a = input.goal[0].clone();
            let hypothetical =
                Judgment { residues: vec![Formula::imp(a, x.clone())], goal: vec![x.clone()], ..input.clone() };
            let trace = run_elimination(&hypothetical, &DriverOptions::default())?;
            let instances: Vec<Formula> = trace
                .last
                .residues
                .iter()
                .filter_map(|r| match r {
                    Formula::Imp(a, rhs) if **rhs == x => Some((**a).clone()),
                    _ => None,
                })
                .collect();
            let big = Formula::disj(instances.iter().cloned());
            Ok(Judgment {
                logic: input.logic,
                criticals: Vec::new(),
                residues: dedup(instances.iter().map(|a| Formula::imp(a.clone(), big.clone()))),
                axiom_instances: trace.last.axiom_instances.clone(),
                goal: instances,
            })
        }
    }
}
