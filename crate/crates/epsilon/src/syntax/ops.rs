//! Traversal, substitution, occurrence and matching.

use std::collections::BTreeSet;

use super::{Binder, Formula, Term};

type Rewriter<'a> = dyn FnMut(&Term, usize) -> Option<Term> + 'a;
type Visitor<'a> = dyn FnMut(&Term, usize) -> bool + 'a;

impl Term {
    /// Outermost-first rewrite: `f` sees each subterm with its binder
    /// depth; a `Some` result replaces the subterm without descending.
    pub(crate) fn rewrite(&self, depth: usize, f: &mut Rewriter<'_>) -> Term {
        if let Some(r) = f(self, depth) {
            return r;
        }
        match self {
            Term::Free(_) | Term::Bound(_) => self.clone(),
            Term::App(g, args) => Term::App(g.clone(), args.iter().map(|a| a.rewrite(depth, f)).collect()),
            Term::Eps(b) => Term::Eps(b.rewrite(depth, f)),
            Term::Tau(b) => Term::Tau(b.rewrite(depth, f)),
        }
    }

    /// Pre-order visit; returning `false` skips the subterm's children.
    pub(crate) fn visit(&self, depth: usize, f: &mut Visitor<'_>) {
        if !f(self, depth) {
            return;
        }
        match self {
            Term::Free(_) | Term::Bound(_) => {}
            Term::App(_, args) => args.iter().for_each(|a| a.visit(depth, f)),
            Term::Eps(b) | Term::Tau(b) => b.body.visit(depth + 1, f),
        }
    }

    /// Replace every free occurrence of the variable `x` by `t`.
    pub fn subst_var(&self, x: &str, t: &Term) -> Term {
        self.rewrite(0, &mut |s, _| match s {
            Term::Free(y) if y == x => Some(t.clone()),
            _ => None,
        })
    }

    /// Replace occurrences of `e` by `s`, outermost first, never looking
    /// inside `s`. Occurrences that mention an enclosing bound variable
    /// are different terms and stay.
    pub fn subst_term(&self, e: &Term, s: &Term) -> Term {
        self.rewrite(0, &mut |t, _| (t == e).then(|| s.clone()))
    }

    /// True when some subterm equals `e` (the term itself included).
    pub fn occurs(&self, e: &Term) -> bool {
        let mut found = false;
        self.visit(0, &mut |t, _| {
            found |= t == e;
            !found
        });
        found
    }

    /// De Bruijn indices pointing outside this term, relative to its root.
    pub fn loose_indices(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.visit(0, &mut |t, d| {
            if let Term::Bound(i) = t {
                if *i >= d {
                    out.insert(i - d);
                }
            }
            true
        });
        out
    }

    pub fn is_locally_closed(&self) -> bool {
        self.loose_indices().is_empty()
    }

    /// Closed ε/τ-subterms in pre-order, including the term itself.
    pub fn choice_terms(&self) -> Vec<Term> {
        let mut out = Vec::new();
        self.visit(0, &mut |t, _| {
            if t.is_choice() && t.is_locally_closed() && !out.contains(t) {
                out.push(t.clone());
            }
            true
        });
        out
    }

    /// Names of free variables, constants and function symbols.
    pub fn names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(0, &mut |t, _| {
            if let Term::Free(x) | Term::App(x, _) = t {
                out.insert(x.clone());
            }
            true
        });
        out
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(0, &mut |t, _| {
            if let Term::Free(x) = t {
                out.insert(x.clone());
            }
            true
        });
        out
    }

    /// Number of nodes; used for generator bounds and ordering.
    pub fn size(&self) -> usize {
        let mut n = 0;
        self.visit(0, &mut |_, _| {
            n += 1;
            true
        });
        n
    }
}

impl Binder {
    fn rewrite(&self, depth: usize, f: &mut Rewriter<'_>) -> Binder {
        Binder { hint: self.hint.clone(), body: Box::new(self.body.rewrite(depth + 1, f)) }
    }
}

impl Formula {
    pub(crate) fn rewrite(&self, depth: usize, f: &mut Rewriter<'_>) -> Formula {
        match self {
            Formula::Top | Formula::Bot => self.clone(),
            Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(|a| a.rewrite(depth, f)).collect()),
            Formula::Not(a) => Formula::Not(Box::new(a.rewrite(depth, f))),
            Formula::And(a, b) => Formula::And(Box::new(a.rewrite(depth, f)), Box::new(b.rewrite(depth, f))),
            Formula::Or(a, b) => Formula::Or(Box::new(a.rewrite(depth, f)), Box::new(b.rewrite(depth, f))),
            Formula::Imp(a, b) => Formula::Imp(Box::new(a.rewrite(depth, f)), Box::new(b.rewrite(depth, f))),
            Formula::All(b) => Formula::All(b.rewrite(depth, f)),
            Formula::Ex(b) => Formula::Ex(b.rewrite(depth, f)),
        }
    }

    pub(crate) fn visit(&self, depth: usize, f: &mut Visitor<'_>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Atom(_, args) => args.iter().for_each(|a| a.visit(depth, f)),
            Formula::Not(a) => a.visit(depth, f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.visit(depth, f);
                b.visit(depth, f);
            }
            Formula::All(b) | Formula::Ex(b) => b.body.visit(depth + 1, f),
        }
    }

    pub(crate) fn open_at(&self, u: &Term, depth: usize) -> Formula {
        self.rewrite(depth, &mut |t, d| match t {
            Term::Bound(i) if *i == d => Some(u.clone()),
            _ => None,
        })
    }

    pub(crate) fn close_at(&self, x: &str, depth: usize) -> Formula {
        self.rewrite(depth, &mut |t, d| match t {
            Term::Free(y) if y == x => Some(Term::Bound(d)),
            _ => None,
        })
    }

    /// Replace every free occurrence of the variable `x` by `t`. Binders
    /// cannot capture anything: bound variables are indices.
    pub fn subst_var(&self, x: &str, t: &Term) -> Formula {
        self.rewrite(0, &mut |s, _| match s {
            Term::Free(y) if y == x => Some(t.clone()),
            _ => None,
        })
    }

    /// `self[s/e]`: see [`Term::subst_term`].
    pub fn subst_term(&self, e: &Term, s: &Term) -> Formula {
        self.rewrite(0, &mut |t, _| (t == e).then(|| s.clone()))
    }

    pub fn occurs(&self, e: &Term) -> bool {
        let mut found = false;
        self.visit(0, &mut |t, _| {
            found |= t == e;
            !found
        });
        found
    }

    /// Closed ε/τ-subterms in pre-order, without repetition.
    pub fn choice_terms(&self) -> Vec<Term> {
        let mut out: Vec<Term> = Vec::new();
        self.visit(0, &mut |t, _| {
            if t.is_choice() && t.is_locally_closed() && !out.contains(t) {
                out.push(t.clone());
            }
            true
        });
        out
    }

    /// Closed ε/τ-subterms not contained in another ε/τ-term.
    pub fn maximal_choice_terms(&self) -> Vec<Term> {
        let mut out: Vec<Term> = Vec::new();
        self.visit(0, &mut |t, _| {
            if t.is_choice() && t.is_locally_closed() {
                if !out.contains(t) {
                    out.push(t.clone());
                }
                return false;
            }
            true
        });
        out
    }

    /// Names of free variables, constants and function symbols.
    pub fn names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(0, &mut |t, _| {
            match t {
                Term::Free(x) | Term::App(x, _) => {
                    out.insert(x.clone());
                }
                _ => {}
            }
            true
        });
        out
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(0, &mut |t, _| {
            if let Term::Free(x) = t {
                out.insert(x.clone());
            }
            true
        });
        out
    }

    /// Predicate names with their argument counts, in first-seen order.
    pub fn predicates(&self) -> Vec<(String, usize)> {
        let mut out: Vec<(String, usize)> = Vec::new();
        fn go(f: &Formula, out: &mut Vec<(String, usize)>) {
            match f {
                Formula::Atom(p, args) => {
                    let key = (p.clone(), args.len());
                    if !out.contains(&key) {
                        out.push(key);
                    }
                    for a in args {
                        a.visit(0, &mut |t, _| {
                            if let Term::Eps(b) | Term::Tau(b) = t {
                                go(&b.body, out);
                                return false;
                            }
                            true
                        });
                    }
                }
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

/// Outcome of solving `pattern[x := t] == target` for `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixMatch {
    /// No term works.
    None,
    /// Exactly this term works.
    Term(Term),
    /// The hole does not occur and the pattern equals the target: any
    /// term works.
    Any,
}

impl MatrixMatch {
    pub fn is_none(&self) -> bool {
        matches!(self, MatrixMatch::None)
    }

    pub fn accepts(&self, t: &Term) -> bool {
        match self {
            MatrixMatch::None => false,
            MatrixMatch::Term(u) => u == t,
            MatrixMatch::Any => true,
        }
    }
}

/// All `t` with `pattern[x := t]` alpha-equal to `target`. First-order
/// matching against a single hole has at most one solution unless the
/// hole is absent.
pub fn match_matrix(pattern: &Formula, x: &str, target: &Formula) -> MatrixMatch {
    match_binder(&Binder::close(x, pattern), target)
}

/// Match a binder body, whose bound variable is the hole, against a
/// locally closed formula.
pub(crate) fn match_binder(body: &Binder, target: &Formula) -> MatrixMatch {
    let mut found: Option<Term> = None;
    if match_formula(&body.body, target, 0, &mut found) {
        match found {
            Some(t) => MatrixMatch::Term(t),
            None => MatrixMatch::Any,
        }
    } else {
        MatrixMatch::None
    }
}

fn match_formula(p: &Formula, t: &Formula, depth: usize, found: &mut Option<Term>) -> bool {
    match (p, t) {
        (Formula::Top, Formula::Top) | (Formula::Bot, Formula::Bot) => true,
        (Formula::Atom(a, xs), Formula::Atom(b, ys)) => {
            a == b && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| match_term(x, y, depth, found))
        }
        (Formula::Not(a), Formula::Not(b)) => match_formula(a, b, depth, found),
        (Formula::And(a1, a2), Formula::And(b1, b2))
        | (Formula::Or(a1, a2), Formula::Or(b1, b2))
        | (Formula::Imp(a1, a2), Formula::Imp(b1, b2)) => {
            match_formula(a1, b1, depth, found) && match_formula(a2, b2, depth, found)
        }
        (Formula::All(a), Formula::All(b)) | (Formula::Ex(a), Formula::Ex(b)) => {
            match_formula(&a.body, &b.body, depth + 1, found)
        }
        _ => false,
    }
}

fn match_term(p: &Term, t: &Term, depth: usize, found: &mut Option<Term>) -> bool {
    match (p, t) {
        (Term::Bound(i), _) if *i == depth => {
            // The hole: the target subterm must not mention binders
            // crossed on the way down.
            if !t.is_locally_closed() {
                return false;
            }
            match found {
                Some(prev) => prev == t,
                None => {
                    *found = Some(t.clone());
                    true
                }
            }
        }
        (Term::Bound(i), Term::Bound(j)) => i == j,
        (Term::Free(a), Term::Free(b)) => a == b,
        (Term::App(f, xs), Term::App(g, ys)) => {
            f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| match_term(x, y, depth, found))
        }
        (Term::Eps(a), Term::Eps(b)) | (Term::Tau(a), Term::Tau(b)) => {
            match_formula(&a.body, &b.body, depth + 1, found)
        }
        _ => false,
    }
}
