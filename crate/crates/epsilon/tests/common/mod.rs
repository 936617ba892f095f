//! Strategies and oracles shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use epsilon_elim::critical::CriticalFormula;
use epsilon_elim::eliminate::{Judgment, LogicTag};
use epsilon_elim::generate;
use epsilon_elim::semantics::{match_schema, Prop, SchemaKind};
use epsilon_elim::syntax::{Binder, Formula, Hint, Term};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn f(s: &str) -> Formula {
    epsilon_elim::syntax::parse_formula(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn t(s: &str) -> Term {
    epsilon_elim::syntax::parse_term(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn fixture(name: &str) -> Judgment {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    let src = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    Judgment::parse(&src).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub const FIXTURES: [&str; 5] = ["forking.jdg", "weak_lin_fork.jdg", "lc3_words.jdg", "jankov.jdg", "empty.jdg"];

/// Closed ε/τ-terms that generated formulas draw from.
pub fn pool() -> Vec<Term> {
    vec![t("eps x. P(x)"), t("eps y. Q(y, a)"), t("tau x. R(x, b)"), t("eps x. R(x, eps y. Q(x, y))")]
}

/// Terms over `a`, `b`, the variables `x`, `y`, unary `f`, binary `g`,
/// pooled choice terms, and fresh ε/τ-terms binding `x` or `y`.
pub fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::constant("a")),
        Just(Term::constant("b")),
        Just(Term::var("x")),
        Just(Term::var("y")),
        prop::sample::select(pool()),
    ];
    leaf.prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Term::app("f", vec![a])),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::app("g", vec![a, b])),
            (inner.clone(), prop::sample::select(vec!["x", "y"]))
                .prop_map(|(a, v)| Term::eps(v, Formula::atom("K", vec![Term::var(v), a]))),
            (inner, prop::sample::select(vec!["x", "y"]))
                .prop_map(|(a, v)| Term::tau(v, Formula::atom("Q", vec![a, Term::var(v)]))),
        ]
    })
}

/// Terms without free variables.
pub fn closed_term() -> impl Strategy<Value = Term> {
    term().prop_filter("closed", |t| t.free_vars().is_empty())
}

/// Choice-free terms over `a`, `b`, `f`, `g` and the given variables.
pub fn plain_term(vars: &'static [&'static str]) -> impl Strategy<Value = Term> + Clone {
    let leaf = prop_oneof![
        Just(Term::constant("a")),
        Just(Term::constant("b")),
        prop::sample::select(vars).prop_map(Term::var),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Term::app("f", vec![a])),
            (inner.clone(), inner).prop_map(|(a, b)| Term::app("g", vec![a, b])),
        ]
    })
}

fn qf_over<S: Strategy<Value = Term> + Clone + 'static>(term: S) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        term.clone().prop_map(|a| Formula::atom("P", vec![a])),
        (term.clone(), term).prop_map(|(a, b)| Formula::atom("Q", vec![a, b])),
        Just(Formula::prop("S")),
        Just(Formula::Top),
        Just(Formula::Bot),
    ];
    leaf.prop_recursive(3, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

/// Quantifier-free formulas over [`term`] of depth at most 3.
pub fn qf_formula() -> impl Strategy<Value = Formula> {
    qf_over(term().boxed())
}

/// Quantifier-free, choice-free formulas whose variables are among `vars`.
pub fn plain_formula(vars: &'static [&'static str]) -> impl Strategy<Value = Formula> {
    qf_over(plain_term(vars))
}

fn quantified<S: Strategy<Value = Formula> + 'static>(qf: S) -> impl Strategy<Value = Formula> {
    qf.prop_recursive(2, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), prop::sample::select(vec!["x", "y"])).prop_map(|(a, v)| Formula::all(v, a)),
            (inner.clone(), prop::sample::select(vec!["x", "y"])).prop_map(|(a, v)| Formula::ex(v, a)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::or(a, b)),
        ]
    })
}

/// First-order formulas with quantifiers over `x`, `y`.
pub fn formula() -> impl Strategy<Value = Formula> {
    quantified(qf_formula())
}

/// First-order formulas without choice terms.
pub fn plain_first_order() -> impl Strategy<Value = Formula> {
    quantified(plain_formula(&["x", "y"]))
}

/// Propositional formulas over `atoms` atoms, of depth at most `depth`.
pub fn prop_formula(atoms: usize, depth: u32) -> impl Strategy<Value = Prop> {
    let leaf = prop_oneof![
        4 => (0..atoms).prop_map(Prop::Atom),
        1 => Just(Prop::Top),
        1 => Just(Prop::Bot),
    ];
    leaf.prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Prop::Not(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Prop::And(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Prop::Or(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Prop::Imp(Box::new(a), Box::new(b))),
        ]
    })
}

/// Ground terms over `a`, `b`, `f`, `g` without choice terms.
pub fn ground_term() -> impl Strategy<Value = Term> {
    any::<u64>().prop_map(|s| generate::ground_term(&mut rng(s), 3))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn critical(max_depth: usize) -> impl Strategy<Value = CriticalFormula> {
    any::<u64>().prop_map(move |s| generate::critical_formula(&mut rng(s), max_depth))
}

pub fn judgment(logic: LogicTag, max_terms: usize) -> impl Strategy<Value = Judgment> {
    any::<u64>().prop_map(move |s| generate::judgment(&mut rng(s), logic, max_terms))
}

/// Same term, every bound-variable name replaced.
pub fn rehint_term(t: &Term) -> Term {
    let binder = |b: &Binder| Binder { hint: Hint("w".into()), body: Box::new(rehint(&b.body)) };
    match t {
        Term::Free(_) | Term::Bound(_) => t.clone(),
        Term::App(g, args) => Term::App(g.clone(), args.iter().map(rehint_term).collect()),
        Term::Eps(b) => Term::Eps(binder(b)),
        Term::Tau(b) => Term::Tau(binder(b)),
    }
}

pub fn rehint(phi: &Formula) -> Formula {
    let binder = |b: &Binder| Binder { hint: Hint("w".into()), body: Box::new(rehint(&b.body)) };
    match phi {
        Formula::Top | Formula::Bot => phi.clone(),
        Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(rehint_term).collect()),
        Formula::Not(a) => Formula::not(rehint(a)),
        Formula::And(a, b) => Formula::and(rehint(a), rehint(b)),
        Formula::Or(a, b) => Formula::or(rehint(a), rehint(b)),
        Formula::Imp(a, b) => Formula::imp(rehint(a), rehint(b)),
        Formula::All(b) => Formula::All(binder(b)),
        Formula::Ex(b) => Formula::Ex(binder(b)),
    }
}

/// Whether `f` instantiates one of the schemas the logic is allowed to
/// use in elimination.
pub fn is_schema_instance(logic: LogicTag, f: &Formula) -> bool {
    let kinds: Vec<SchemaKind> = match logic {
        LogicTag::Classical => vec![SchemaKind::Em],
        LogicTag::Kc | LogicTag::H => vec![SchemaKind::J],
        LogicTag::Lc => (1..=32).flat_map(|p| [SchemaKind::BigDisjEps(p), SchemaKind::BigDisjTau(p)]).collect(),
        LogicTag::Lcm(m) => {
            let m = m as usize;
            let mut kinds = vec![SchemaKind::Bm(m)];
            kinds.extend((1..=m).map(SchemaKind::IteratedLin));
            kinds.extend((1..=32).flat_map(|p| [SchemaKind::BigDisjEps(p), SchemaKind::BigDisjTau(p)]));
            kinds
        }
    };
    kinds.into_iter().any(|k| match_schema(k, f).is_some())
}

/// Classical truth value by direct recursion, independent of the chain
/// evaluator.
pub fn truth(p: &Prop, v: &[bool]) -> bool {
    match p {
        Prop::Atom(i) => v[*i],
        Prop::Top => true,
        Prop::Bot => false,
        Prop::Not(a) => !truth(a, v),
        Prop::And(a, b) => truth(a, v) && truth(b, v),
        Prop::Or(a, b) => truth(a, v) || truth(b, v),
        Prop::Imp(a, b) => !truth(a, v) || truth(b, v),
    }
}

/// Kleene value under a partial assignment.
fn partial(p: &Prop, v: &[Option<bool>]) -> Option<bool> {
    match p {
        Prop::Atom(i) => v[*i],
        Prop::Top => Some(true),
        Prop::Bot => Some(false),
        Prop::Not(a) => partial(a, v).map(|b| !b),
        Prop::And(a, b) => match (partial(a, v), partial(b, v)) {
            (Some(false), _) | (_, Some(false)) => Some(false),
            (Some(true), Some(true)) => Some(true),
            _ => None,
        },
        Prop::Or(a, b) => match (partial(a, v), partial(b, v)) {
            (Some(true), _) | (_, Some(true)) => Some(true),
            (Some(false), Some(false)) => Some(false),
            _ => None,
        },
        Prop::Imp(a, b) => match (partial(a, v), partial(b, v)) {
            (Some(false), _) | (_, Some(true)) => Some(true),
            (Some(true), Some(false)) => Some(false),
            _ => None,
        },
    }
}

fn holds_everywhere(p: &Prop, v: &mut Vec<Option<bool>>, next: usize) -> bool {
    match partial(p, v) {
        Some(b) => b,
        None => [true, false].into_iter().all(|b| {
            v[next] = Some(b);
            let ok = holds_everywhere(p, v, next + 1);
            v[next] = None;
            ok
        }),
    }
}

/// Classical tautology check of a quantifier-free formula by case
/// splitting on atoms, independent of the chain backends.
pub fn tautology(phi: &Formula) -> bool {
    let (p, abs) = epsilon_elim::semantics::abstract_one(phi).expect("quantifier-free");
    holds_everywhere(&p, &mut vec![None; abs.len()], 0)
}
