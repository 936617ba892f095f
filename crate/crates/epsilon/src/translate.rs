//! From quantifiers to choice terms: the ετ-translation, the shadow,
//! Herbrand forms, and the quantifier-shift instances.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::syntax::{Binder, Formula, Signature, SignatureError, Term, IDENTITY};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("input already contains an ε/τ-term: {0}")]
    AlreadyTranslated(String),
    #[error("not in prenex form: {0}")]
    NotPrenex(String),
    #[error("variable {x} is free in {b}")]
    FreeInSide { x: String, b: String },
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("unknown quantifier shift {0:?}")]
    UnknownShift(String),
}

/// Replace `∃x A` by `A(εx A)` and `∀x A` by `A(τx A)`, innermost first.
pub fn et_translate(phi: &Formula) -> Result<Formula, TranslateError> {
    if !phi.is_choice_free() {
        return Err(TranslateError::AlreadyTranslated(phi.to_string()));
    }
    Ok(translate(phi))
}

fn translate(phi: &Formula) -> Formula {
    match phi {
        Formula::Top | Formula::Bot | Formula::Atom(..) => phi.clone(),
        Formula::Not(a) => Formula::not(translate(a)),
        Formula::And(a, b) => Formula::and(translate(a), translate(b)),
        Formula::Or(a, b) => Formula::or(translate(a), translate(b)),
        Formula::Imp(a, b) => Formula::imp(translate(a), translate(b)),
        Formula::All(b) => witness_instance(b, Term::Tau),
        Formula::Ex(b) => witness_instance(b, Term::Eps),
    }
}

fn witness_instance(b: &Binder, op: fn(Binder) -> Term) -> Formula {
    let (v, body) = b.open_fresh();
    let inner = translate(&body);
    let e = op(Binder::close_as(&v, &b.hint, &inner));
    inner.subst_var(&v, &e)
}

/// Name of the propositional atom standing for predicate `p`.
pub fn shadow_atom(p: &str) -> String {
    format!("X_{p}")
}

/// Erase terms and quantifiers: `P(t..)` becomes `X_P`, identities `top`.
pub fn shadow(phi: &Formula) -> Formula {
    match phi {
        Formula::Top | Formula::Bot => phi.clone(),
        Formula::Atom(p, _) if p == IDENTITY => Formula::Top,
        Formula::Atom(p, _) => Formula::prop(&shadow_atom(p)),
        Formula::Not(a) => Formula::not(shadow(a)),
        Formula::And(a, b) => Formula::and(shadow(a), shadow(b)),
        Formula::Or(a, b) => Formula::or(shadow(a), shadow(b)),
        Formula::Imp(a, b) => Formula::imp(shadow(a), shadow(b)),
        Formula::All(b) | Formula::Ex(b) => shadow(&b.body),
    }
}

/// Herbrand form of a prenex formula: each universal variable becomes a
/// fresh function (`f_x`) of the existential variables to its left, or a
/// fresh constant (`c_x`) when there are none. Also returns the fresh
/// symbols.
pub fn herbrand_form(phi: &Formula) -> Result<(Formula, Vec<String>), TranslateError> {
    if !phi.is_choice_free() {
        return Err(TranslateError::AlreadyTranslated(phi.to_string()));
    }
    let mut sig = Signature::of([phi])?;
    let mut prefix: Vec<(String, Binder)> = Vec::new();
    let mut fresh = Vec::new();
    let mut cur = phi.clone();
    loop {
        match &cur {
            Formula::Ex(b) => {
                let (v, body) = b.open_fresh();
                prefix.push((v, b.clone()));
                cur = body;
            }
            Formula::All(b) => {
                let args: Vec<Term> = prefix.iter().map(|(v, _)| Term::Free(v.clone())).collect();
                let base = if args.is_empty() { format!("c_{}", b.hint.0) } else { format!("f_{}", b.hint.0) };
                let name = sig.fresh_function(&base, args.len());
                fresh.push(name.clone());
                cur = b.open(&Term::App(name, args));
            }
            _ => break,
        }
    }
    if !cur.is_quantifier_free() {
        return Err(TranslateError::NotPrenex(phi.to_string()));
    }
    let out = prefix.into_iter().rev().fold(cur, |body, (v, b)| Formula::Ex(Binder::close_as(&v, &b.hint, &body)));
    Ok((out, fresh))
}

/// Rows of the two quantifier-shift tables. The first nine have critical
/// formulas as translations; the last eight follow from one critical
/// formula and an intuitionistic principle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuantifierShiftKind {
    /// `∀x(A ∨ B) -> (∀x A ∨ B)`
    Cd,
    /// `(∃x A ∨ B) -> ∃x(A ∨ B)`
    ExistsOr,
    /// `∀x(A ∧ B) -> (∀x A ∧ B)`
    ForallAnd,
    /// `(∃x A ∧ B) -> ∃x(A ∧ B)`
    ExistsAnd,
    /// `(B -> ∃x A) -> ∃x(B -> A)`
    QExists,
    /// `∀x(B -> A) -> (B -> ∀x A)`
    ForallImp,
    /// `(∀x A -> B) -> ∃x(A -> B)`
    QForall,
    /// `∀x(A -> B) -> (∃x A -> B)`
    ForallImpExists,
    /// `∀x ¬¬A -> ¬¬∀x A`
    K,
    /// `(∀x A ∨ B) -> ∀x(A ∨ B)`
    ForallOr,
    /// `∃x(A ∨ B) -> (∃x A ∨ B)`
    ExistsOrOut,
    /// `(∀x A ∧ B) -> ∀x(A ∧ B)`
    ForallAndIn,
    /// `∃x(A ∧ B) -> (∃x A ∧ B)`
    ExistsAndOut,
    /// `∃x(B -> A) -> (B -> ∃x A)`
    ExistsImpOut,
    /// `(B -> ∀x A) -> ∀x(B -> A)`
    ForallImpIn,
    /// `∃x(A -> B) -> (∀x A -> B)`
    ExistsAntecedent,
    /// `(∃x A -> B) -> ∀x(A -> B)`
    ForallAntecedent,
}

use QuantifierShiftKind as Q;

impl QuantifierShiftKind {
    pub const ALL: [QuantifierShiftKind; 17] = [
        Q::Cd,
        Q::ExistsOr,
        Q::ForallAnd,
        Q::ExistsAnd,
        Q::QExists,
        Q::ForallImp,
        Q::QForall,
        Q::ForallImpExists,
        Q::K,
        Q::ForallOr,
        Q::ExistsOrOut,
        Q::ForallAndIn,
        Q::ExistsAndOut,
        Q::ExistsImpOut,
        Q::ForallImpIn,
        Q::ExistsAntecedent,
        Q::ForallAntecedent,
    ];

    /// True for rows whose translation is itself a critical formula.
    pub fn is_critical_row(self) -> bool {
        Self::ALL[..9].contains(&self)
    }

    pub fn name(self) -> &'static str {
        match self {
            Q::Cd => "cd",
            Q::ExistsOr => "exists-or",
            Q::ForallAnd => "forall-and",
            Q::ExistsAnd => "exists-and",
            Q::QExists => "q-exists",
            Q::ForallImp => "forall-imp",
            Q::QForall => "q-forall",
            Q::ForallImpExists => "forall-imp-exists",
            Q::K => "k",
            Q::ForallOr => "forall-or",
            Q::ExistsOrOut => "exists-or-out",
            Q::ForallAndIn => "forall-and-in",
            Q::ExistsAndOut => "exists-and-out",
            Q::ExistsImpOut => "exists-imp-out",
            Q::ForallImpIn => "forall-imp-in",
            Q::ExistsAntecedent => "exists-antecedent",
            Q::ForallAntecedent => "forall-antecedent",
        }
    }
}

impl fmt::Display for QuantifierShiftKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QuantifierShiftKind {
    type Err = TranslateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| TranslateError::UnknownShift(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftCertificate {
    /// The translation is `C(t1) -> C(t2)`.
    Critical { matrix: Binder, t1: Term, t2: Term },
    /// `critical` is `A1 -> A2`; the translation follows from it and the
    /// intuitionistic `principle` by modus ponens.
    ModusPonens { critical: Formula, principle: Formula },
}

/// The intuitionistic principles `(A1 -> A2) -> (X(A1) -> X(A2))` used by
/// the modus-ponens rows.
#[derive(Clone, Copy)]
enum Principle {
    Disjunct,
    Conjunct,
    Consequent,
    /// contravariant: `(A1 -> A2) -> ((A2 -> B) -> (A1 -> B))`
    Antecedent,
}

impl Principle {
    fn instance(self, a1: Formula, a2: Formula, b: Formula) -> Formula {
        let link = Formula::imp(a1.clone(), a2.clone());
        let (from, to) = match self {
            Principle::Disjunct => (Formula::or(a1, b.clone()), Formula::or(a2, b)),
            Principle::Conjunct => (Formula::and(a1, b.clone()), Formula::and(a2, b)),
            Principle::Consequent => (Formula::imp(b.clone(), a1), Formula::imp(b, a2)),
            Principle::Antecedent => (Formula::imp(a2, b.clone()), Formula::imp(a1, b)),
        };
        Formula::imp(link, Formula::imp(from, to))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantifierShift {
    pub kind: QuantifierShiftKind,
    pub shift: Formula,
    pub translation: Formula,
    pub certificate: ShiftCertificate,
}

/// Instantiate a quantifier-shift row with `a` (mentioning the hole `x`)
/// and `b` (not mentioning `x`). Both must be free of ε/τ-terms.
pub fn quantifier_shift_instance(
    kind: QuantifierShiftKind,
    a: &Formula,
    x: &str,
    b: &Formula,
) -> Result<QuantifierShift, TranslateError> {
    if b.free_vars().contains(x) {
        return Err(TranslateError::FreeInSide { x: x.to_string(), b: b.to_string() });
    }
    let (at, bt) = (et_translate(a)?, et_translate(b)?);
    let all = |f: Formula| Formula::all(x, f);
    let ex = |f: Formula| Formula::ex(x, f);
    let (or, and, imp, not) = (Formula::or, Formula::and, Formula::imp, Formula::not);
    let (a, b) = (a.clone(), b.clone());

    let shift = match kind {
        Q::Cd => imp(all(or(a.clone(), b.clone())), or(all(a), b)),
        Q::ExistsOr => imp(or(ex(a.clone()), b.clone()), ex(or(a, b))),
        Q::ForallAnd => imp(all(and(a.clone(), b.clone())), and(all(a), b)),
        Q::ExistsAnd => imp(and(ex(a.clone()), b.clone()), ex(and(a, b))),
        Q::QExists => imp(imp(b.clone(), ex(a.clone())), ex(imp(b, a))),
        Q::ForallImp => imp(all(imp(b.clone(), a.clone())), imp(b, all(a))),
        Q::QForall => imp(imp(all(a.clone()), b.clone()), ex(imp(a, b))),
        Q::ForallImpExists => imp(all(imp(a.clone(), b.clone())), imp(ex(a), b)),
        Q::K => imp(all(not(not(a.clone()))), not(not(all(a)))),
        Q::ForallOr => imp(or(all(a.clone()), b.clone()), all(or(a, b))),
        Q::ExistsOrOut => imp(ex(or(a.clone(), b.clone())), or(ex(a), b)),
        Q::ForallAndIn => imp(and(all(a.clone()), b.clone()), all(and(a, b))),
        Q::ExistsAndOut => imp(ex(and(a.clone(), b.clone())), and(ex(a), b)),
        Q::ExistsImpOut => imp(ex(imp(b.clone(), a.clone())), imp(b, ex(a))),
        Q::ForallImpIn => imp(imp(b.clone(), all(a.clone())), all(imp(b, a))),
        Q::ExistsAntecedent => imp(ex(imp(a.clone(), b.clone())), imp(all(a), b)),
        Q::ForallAntecedent => imp(imp(ex(a.clone()), b.clone()), all(imp(a, b))),
    };
    let translation = translate(&shift);

    let eps = |m: &Formula| Term::eps(x, m.clone());
    let tau = |m: &Formula| Term::tau(x, m.clone());
    let a_at = |t: &Term| at.subst_var(x, t);
    let c_or = or(at.clone(), bt.clone());
    let c_and = and(at.clone(), bt.clone());
    let c_bimp = imp(bt.clone(), at.clone());
    let c_impb = imp(at.clone(), bt.clone());

    let critical = |c: &Formula, t1: Term, t2: Term| ShiftCertificate::Critical { matrix: Binder::close(x, c), t1, t2 };
    // A1 -> A2 together with the principle relating it to the translation
    let mp = |a1: Formula, a2: Formula, principle: Principle| ShiftCertificate::ModusPonens {
        critical: imp(a1.clone(), a2.clone()),
        principle: principle.instance(a1, a2, bt.clone()),
    };
    use Principle::{Antecedent, Conjunct, Consequent, Disjunct};

    let certificate = match kind {
        Q::Cd => critical(&c_or, tau(&c_or), tau(&at)),
        Q::ExistsOr => critical(&c_or, eps(&at), eps(&c_or)),
        Q::ForallAnd => critical(&c_and, tau(&c_and), tau(&at)),
        Q::ExistsAnd => critical(&c_and, eps(&at), eps(&c_and)),
        Q::QExists => critical(&c_bimp, eps(&at), eps(&c_bimp)),
        Q::ForallImp => critical(&c_bimp, tau(&c_bimp), tau(&at)),
        Q::QForall => critical(&c_impb, tau(&at), eps(&c_impb)),
        Q::ForallImpExists => critical(&c_impb, tau(&c_impb), eps(&at)),
        Q::K => {
            let nn = not(not(at.clone()));
            critical(&nn, tau(&nn), tau(&at))
        }
        Q::ForallOr => mp(a_at(&tau(&at)), a_at(&tau(&c_or)), Disjunct),
        Q::ExistsOrOut => mp(a_at(&eps(&c_or)), a_at(&eps(&at)), Disjunct),
        Q::ForallAndIn => mp(a_at(&tau(&at)), a_at(&tau(&c_and)), Conjunct),
        Q::ExistsAndOut => mp(a_at(&eps(&c_and)), a_at(&eps(&at)), Conjunct),
        Q::ExistsImpOut => mp(a_at(&eps(&c_bimp)), a_at(&eps(&at)), Consequent),
        Q::ForallImpIn => mp(a_at(&tau(&at)), a_at(&tau(&c_bimp)), Consequent),
        Q::ExistsAntecedent => mp(a_at(&tau(&at)), a_at(&eps(&c_impb)), Antecedent),
        Q::ForallAntecedent => mp(a_at(&tau(&c_impb)), a_at(&eps(&at)), Antecedent),
    };
    Ok(QuantifierShift { kind, shift, translation, certificate })
}
