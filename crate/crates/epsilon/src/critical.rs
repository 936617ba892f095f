//! Critical formulas: construction, recognition, classification, and the
//! rank/degree order used to pick the next term to eliminate.
//!
//! A critical formula for `e = εx A(x)` is `A(t) -> A(e)`; for
//! `e = τx A(x)` it is `A(e) -> A(t)`. The matrix is kept as a binder, so
//! `A(t)` is simply the binder opened at `t`.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::syntax::{match_binder, Binder, Choice, Formula, MatrixMatch, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalError {
    #[error("critical formulas need a quantifier-free matrix, got {0}")]
    Quantified(String),
    #[error("not an ε- or τ-term: {0}")]
    NotChoice(String),
    #[error("no critical terms to choose from")]
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CriticalFormula {
    pub kind: Choice,
    /// `A(x)`, with the hole as the bound variable.
    pub matrix: Binder,
    pub witness: Term,
    pub critical_term: Term,
    pub rendered: Formula,
}

impl CriticalFormula {
    fn build(kind: Choice, matrix: Binder, witness: Term) -> CriticalFormula {
        let critical_term = match kind {
            Choice::Epsilon => Term::Eps(matrix.clone()),
            Choice::Tau => Term::Tau(matrix.clone()),
        };
        let at_t = matrix.open(&witness);
        let at_e = matrix.open(&critical_term);
        let rendered = match kind {
            Choice::Epsilon => Formula::imp(at_t, at_e),
            Choice::Tau => Formula::imp(at_e, at_t),
        };
        CriticalFormula { kind, matrix, witness, critical_term, rendered }
    }

    /// The critical formula of `e` with witness `t`.
    pub fn of_term(e: &Term, witness: &Term) -> Result<CriticalFormula, CriticalError> {
        let (kind, b) = e.as_choice().ok_or_else(|| CriticalError::NotChoice(e.to_string()))?;
        if !b.body.is_quantifier_free() {
            return Err(CriticalError::Quantified(b.body.to_string()));
        }
        Ok(Self::build(kind, b.clone(), witness.clone()))
    }

    /// `A(t)` for any term `t`.
    pub fn matrix_at(&self, t: &Term) -> Formula {
        self.matrix.open(t)
    }

    pub fn is_predicative(&self) -> bool {
        is_predicative(self)
    }
}

/// `A(t) -> A(εx A(x))` or `A(τx A(x)) -> A(t)`, where `matrix` mentions
/// the hole as the free variable `x`.
pub fn make_critical(
    matrix: &Formula,
    x: &str,
    kind: Choice,
    witness: &Term,
) -> Result<CriticalFormula, CriticalError> {
    if !matrix.is_quantifier_free() {
        return Err(CriticalError::Quantified(matrix.to_string()));
    }
    Ok(CriticalFormula::build(kind, Binder::close(x, matrix), witness.clone()))
}

/// Every reading of `phi` as a critical formula. A formula can be
/// critical for several terms, or in unexpected ways, so callers pick the
/// reading they need.
pub fn recognize_critical(phi: &Formula) -> Vec<CriticalFormula> {
    let Formula::Imp(lhs, rhs) = phi else { return Vec::new() };
    let mut out: Vec<CriticalFormula> = Vec::new();
    for e in phi.choice_terms() {
        let Some((kind, b)) = e.as_choice() else { continue };
        if !b.body.is_quantifier_free() {
            continue;
        }
        let (conclusion, premise) = match kind {
            Choice::Epsilon => (rhs, lhs),
            Choice::Tau => (lhs, rhs),
        };
        if **conclusion != b.open(&e) {
            continue;
        }
        let witness = match match_binder(b, premise) {
            MatrixMatch::None => continue,
            MatrixMatch::Term(t) => t,
            // vacuous binder: the formula is `B -> B`
            MatrixMatch::Any => e.clone(),
        };
        let c = CriticalFormula::build(kind, b.clone(), witness);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// The reading of `phi` whose critical term is `e`, if any.
pub fn reading_for(phi: &Formula, e: &Term) -> Option<CriticalFormula> {
    recognize_critical(phi).into_iter().find(|c| &c.critical_term == e)
}

pub fn is_predicative(c: &CriticalFormula) -> bool {
    !c.witness.occurs(&c.critical_term)
}

/// No critical term of the ambient proof occurs in the witness.
pub fn is_weak(c: &CriticalFormula, critical_terms: &[Term]) -> bool {
    critical_terms.iter().all(|e| !c.witness.occurs(e))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifiedCritical {
    #[serde(serialize_with = "display")]
    pub formula: Formula,
    #[serde(serialize_with = "display")]
    pub critical_term: Term,
    #[serde(serialize_with = "display")]
    pub witness: Term,
    pub kind: &'static str,
    pub predicative: bool,
    pub weak: bool,
    pub rank: usize,
    pub degree: usize,
}

fn display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn classify(c: &CriticalFormula, critical_terms: &[Term]) -> ClassifiedCritical {
    ClassifiedCritical {
        formula: c.rendered.clone(),
        critical_term: c.critical_term.clone(),
        witness: c.witness.clone(),
        kind: match c.kind {
            Choice::Epsilon => "epsilon",
            Choice::Tau => "tau",
        },
        predicative: is_predicative(c),
        weak: is_weak(c, critical_terms),
        rank: rank(&c.critical_term),
        degree: degree(&c.critical_term),
    }
}

/// ε/τ-subterms of the choice term `e`, each with the relation it bears to
/// `e`: `(t, nested, subordinate)`. A subterm is nested when it mentions
/// no variable bound inside `e`, and subordinate when it mentions the
/// variable bound by `e` itself.
fn related_subterms(e: &Term) -> Vec<(Term, bool, bool)> {
    let Some((_, b)) = e.as_choice() else { return Vec::new() };
    let mut out = Vec::new();
    // at depth d inside the body, index d is e's own variable and smaller
    // indices belong to binders inside e
    b.body.visit(0, &mut |t, d| {
        if t.is_choice() {
            let loose = t.loose_indices();
            let nested = loose.iter().all(|&i| i > d);
            let subordinate = loose.contains(&d);
            if nested || subordinate {
                out.push((t.clone(), nested, subordinate));
            }
        }
        true
    });
    out
}

/// 1 plus the largest degree of a nested ε/τ-term; 0 for other terms.
pub fn degree(e: &Term) -> usize {
    if !e.is_choice() {
        return 0;
    }
    1 + related_subterms(e).iter().filter(|(_, n, _)| *n).map(|(t, _, _)| degree(t)).max().unwrap_or(0)
}

/// 1 plus the largest rank of a subordinate ε/τ-term; 0 for other terms.
pub fn rank(e: &Term) -> usize {
    if !e.is_choice() {
        return 0;
    }
    1 + related_subterms(e).iter().filter(|(_, _, s)| *s).map(|(t, _, _)| rank(t)).max().unwrap_or(0)
}

/// Higher rank first, then higher degree; ties go to the smaller
/// canonical form so the choice is reproducible.
fn priority(a: &Term, b: &Term) -> Ordering {
    (rank(a), degree(a)).cmp(&(rank(b), degree(b))).then_with(|| b.canonical_key().cmp(&a.canonical_key()))
}

/// A term of maximal degree among those of maximal rank.
pub fn select_max(terms: &[Term]) -> Result<Term, CriticalError> {
    terms.iter().max_by(|a, b| priority(a, b)).cloned().ok_or(CriticalError::Empty)
}

/// Termination measure of a set of critical terms: the maximal rank, the
/// maximal degree at that rank, and how many terms attain both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Measure {
    pub rank: usize,
    pub degree: usize,
    pub count: usize,
}

pub fn measure(terms: &[Term]) -> Measure {
    let scored: Vec<(usize, usize)> = terms.iter().map(|t| (rank(t), degree(t))).collect();
    let Some(&(r, d)) = scored.iter().max() else { return Measure::default() };
    Measure { rank: r, degree: d, count: scored.iter().filter(|&&s| s == (r, d)).count() }
}
