//! First-order terms and formulas with ε- and τ-binders.
//!
//! Bound variables are de Bruijn indices, so alpha-equivalence is plain
//! structural equality. Each binder keeps the surface name it was written
//! with; that name takes no part in equality or hashing and is only used
//! by the printer. Free names are either variables (`Term::Free`) or
//! constants (`Term::App` with no arguments).
//!
//! Every public value is locally closed: no `Bound` index escapes its
//! binder. Operations that go under a binder open it with a fresh internal
//! variable and close it again afterwards.

mod ops;
mod parse;
mod print;
mod signature;

use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicUsize, Ordering};

pub(crate) use ops::match_binder;
pub use ops::{match_matrix, MatrixMatch};
pub use parse::{parse_formula, parse_term, ParseError};
pub use signature::{Signature, SignatureError, SymbolKind};

/// Surface name of a bound variable. Ignored by `==` and `Hash`.
#[derive(Clone, Debug, Default)]
pub struct Hint(pub String);

impl PartialEq for Hint {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Hint {}

impl Hash for Hint {
    fn hash<H: Hasher>(&self, _: &mut H) {}
}

impl From<&str> for Hint {
    fn from(s: &str) -> Self {
        Hint(s.to_string())
    }
}

/// A binder body: one de Bruijn level, with index 0 (at this depth)
/// referring to the bound variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binder {
    pub hint: Hint,
    pub body: Box<Formula>,
}

/// Which choice operator an ε/τ-term uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Choice {
    Epsilon,
    Tau,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Free(String),
    Bound(usize),
    App(String, Vec<Term>),
    Eps(Binder),
    Tau(Binder),
}

/// Predicate name used for identity atoms `t1 = t2`.
pub const IDENTITY: &str = "=";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Bot,
    Atom(String, Vec<Term>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    All(Binder),
    Ex(Binder),
}

static FRESH: AtomicUsize = AtomicUsize::new(0);

/// A variable name that can never be written in the surface syntax.
pub(crate) fn internal_var() -> String {
    format!("?{}", FRESH.fetch_add(1, Ordering::Relaxed))
}

impl Binder {
    /// Abstract the free variable `x` of `body`.
    pub fn close(x: &str, body: &Formula) -> Binder {
        Binder { hint: Hint(x.to_string()), body: Box::new(body.close_at(x, 0)) }
    }

    /// Like [`Binder::close`], but printing the bound variable as `hint`.
    pub fn close_as(x: &str, hint: &Hint, body: &Formula) -> Binder {
        Binder { hint: hint.clone(), body: Box::new(body.close_at(x, 0)) }
    }

    /// Instantiate the bound variable with a locally closed term.
    pub fn open(&self, t: &Term) -> Formula {
        self.body.open_at(t, 0)
    }

    /// Open with a fresh internal variable; returns the variable name too.
    pub fn open_fresh(&self) -> (String, Formula) {
        let v = internal_var();
        let f = self.open(&Term::Free(v.clone()));
        (v, f)
    }
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Free(name.to_string())
    }

    pub fn constant(name: &str) -> Term {
        Term::App(name.to_string(), Vec::new())
    }

    pub fn app(f: &str, args: Vec<Term>) -> Term {
        Term::App(f.to_string(), args)
    }

    /// `εx body`, binding the free variable `x` of `body`.
    pub fn eps(x: &str, body: Formula) -> Term {
        Term::Eps(Binder::close(x, &body))
    }

    /// `τx body`, binding the free variable `x` of `body`.
    pub fn tau(x: &str, body: Formula) -> Term {
        Term::Tau(Binder::close(x, &body))
    }

    pub fn choice(kind: Choice, x: &str, body: Formula) -> Term {
        match kind {
            Choice::Epsilon => Term::eps(x, body),
            Choice::Tau => Term::tau(x, body),
        }
    }

    /// The operator and binder of an ε/τ-term.
    pub fn as_choice(&self) -> Option<(Choice, &Binder)> {
        match self {
            Term::Eps(b) => Some((Choice::Epsilon, b)),
            Term::Tau(b) => Some((Choice::Tau, b)),
            _ => None,
        }
    }

    pub fn is_choice(&self) -> bool {
        self.as_choice().is_some()
    }
}

impl Formula {
    pub fn atom(p: &str, args: Vec<Term>) -> Formula {
        Formula::Atom(p.to_string(), args)
    }

    pub fn prop(p: &str) -> Formula {
        Formula::Atom(p.to_string(), Vec::new())
    }

    pub fn identity(a: Term, b: Term) -> Formula {
        Formula::Atom(IDENTITY.to_string(), vec![a, b])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn all(x: &str, body: Formula) -> Formula {
        Formula::All(Binder::close(x, &body))
    }

    pub fn ex(x: &str, body: Formula) -> Formula {
        Formula::Ex(Binder::close(x, &body))
    }

    /// Left-nested disjunction; `bot` when empty.
    pub fn disj<I: IntoIterator<Item = Formula>>(items: I) -> Formula {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Bot)
    }

    /// Left-nested conjunction; `top` when empty.
    pub fn conj<I: IntoIterator<Item = Formula>>(items: I) -> Formula {
        items.into_iter().reduce(Formula::and).unwrap_or(Formula::Top)
    }

    /// The disjuncts of a (possibly nested) disjunction.
    pub fn disjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        fn go<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
            match f {
                Formula::Or(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                _ => out.push(f),
            }
        }
        go(self, &mut out);
        out
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Top | Formula::Bot => true,
            Formula::Atom(_, args) => args.iter().all(Term::is_quantifier_free),
            Formula::Not(a) => a.is_quantifier_free(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::All(_) | Formula::Ex(_) => false,
        }
    }

    /// True when no ε- or τ-term occurs.
    pub fn is_choice_free(&self) -> bool {
        self.choice_terms().is_empty()
    }

    /// The atomic subformulas, left to right, with repetitions.
    pub fn atoms(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        fn go<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
            match f {
                Formula::Atom(..) => out.push(f),
                Formula::Top | Formula::Bot => {}
                Formula::Not(a) => go(a, out),
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                Formula::All(b) | Formula::Ex(b) => go(&b.body, out),
            }
        }
        go(self, &mut out);
        out
    }
}

impl Term {
    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Term::Free(_) | Term::Bound(_) => true,
            Term::App(_, args) => args.iter().all(Term::is_quantifier_free),
            Term::Eps(b) | Term::Tau(b) => b.body.is_quantifier_free(),
        }
    }
}

/// Alpha-equivalence. With de Bruijn indices this is structural equality.
pub fn alpha_eq<T: PartialEq>(a: &T, b: &T) -> bool {
    a == b
}
