//! Intuitionistic propositional provability by contraction-free sequent
//! search (Dyckhoff's G4ip). Every rule shrinks the sequent in a
//! well-founded order, so the search terminates without loop checks.

use std::collections::HashSet;
use std::fmt;

use super::prop::Prop;

/// Formulas inside the prover: negation is `a -> bot`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum F {
    Atom(usize),
    Top,
    Bot,
    And(Box<F>, Box<F>),
    Or(Box<F>, Box<F>),
    Imp(Box<F>, Box<F>),
}

fn lower(p: &Prop) -> F {
    match p {
        Prop::Atom(i) => F::Atom(*i),
        Prop::Top => F::Top,
        Prop::Bot => F::Bot,
        Prop::Not(a) => F::Imp(Box::new(lower(a)), Box::new(F::Bot)),
        Prop::And(a, b) => F::And(Box::new(lower(a)), Box::new(lower(b))),
        Prop::Or(a, b) => F::Or(Box::new(lower(a)), Box::new(lower(b))),
        Prop::Imp(a, b) => F::Imp(Box::new(lower(a)), Box::new(lower(b))),
    }
}

fn raise(f: &F) -> Prop {
    match f {
        F::Atom(i) => Prop::Atom(*i),
        F::Top => Prop::Top,
        F::Bot => Prop::Bot,
        F::And(a, b) => Prop::And(Box::new(raise(a)), Box::new(raise(b))),
        F::Or(a, b) => Prop::Or(Box::new(raise(a)), Box::new(raise(b))),
        F::Imp(a, b) => Prop::Imp(Box::new(raise(a)), Box::new(raise(b))),
    }
}

/// A derivation: the rule applied to the sequent, and sub-derivations.
#[derive(Clone, Debug)]
pub struct Proof {
    pub rule: &'static str,
    pub context: Vec<Prop>,
    pub goal: Prop,
    pub premises: Vec<Proof>,
}

impl Proof {
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Proof::size).sum::<usize>()
    }

    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        self.render_into(names, 0, &mut out);
        out
    }

    fn render_into(&self, names: &[String], indent: usize, out: &mut String) {
        let ctx: Vec<String> = self.context.iter().map(|p| p.render(names)).collect();
        out.push_str(&format!(
            "{:indent$}{}  [{}]\n",
            "",
            format_args!("{} => {}", ctx.join(", "), self.goal.render(names)),
            self.rule,
            indent = indent
        ));
        for p in &self.premises {
            p.render_into(names, indent + 2, out);
        }
    }
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

struct Search {
    failed: HashSet<(Vec<F>, F)>,
}

fn node(rule: &'static str, ctx: &[F], goal: &F, premises: Vec<Proof>) -> Proof {
    Proof { rule, context: ctx.iter().map(raise).collect(), goal: raise(goal), premises }
}

fn normalize(mut ctx: Vec<F>) -> Vec<F> {
    ctx.sort();
    ctx.dedup();
    ctx
}

fn without(ctx: &[F], k: usize, extra: impl IntoIterator<Item = F>) -> Vec<F> {
    let mut out: Vec<F> = ctx.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, f)| f.clone()).collect();
    out.extend(extra);
    normalize(out)
}

impl Search {
    fn prove(&mut self, ctx: Vec<F>, goal: F) -> Option<Proof> {
        let ctx = normalize(ctx);
        if ctx.contains(&F::Bot) {
            return Some(node("bot-L", &ctx, &goal, vec![]));
        }
        if ctx.contains(&goal) {
            return Some(node("axiom", &ctx, &goal, vec![]));
        }
        if goal == F::Top {
            return Some(node("top-R", &ctx, &goal, vec![]));
        }
        // invertible left rules
        for (k, h) in ctx.iter().enumerate() {
            let step: Option<(&'static str, Vec<Vec<F>>)> = match h {
                F::Top => Some(("top-L", vec![without(&ctx, k, [])])),
                F::And(a, b) => Some(("and-L", vec![without(&ctx, k, [(**a).clone(), (**b).clone()])])),
                F::Or(a, b) => {
                    Some(("or-L", vec![without(&ctx, k, [(**a).clone()]), without(&ctx, k, [(**b).clone()])]))
                }
                F::Imp(a, b) => match &**a {
                    F::Atom(_) if ctx.contains(a) => Some(("atom-imp-L", vec![without(&ctx, k, [(**b).clone()])])),
                    F::Bot => Some(("bot-imp-L", vec![without(&ctx, k, [])])),
                    F::Top => Some(("top-imp-L", vec![without(&ctx, k, [(**b).clone()])])),
                    F::And(c, d) => Some((
                        "and-imp-L",
                        vec![without(&ctx, k, [F::Imp(c.clone(), Box::new(F::Imp(d.clone(), b.clone())))])],
                    )),
                    F::Or(c, d) => Some((
                        "or-imp-L",
                        vec![without(&ctx, k, [F::Imp(c.clone(), b.clone()), F::Imp(d.clone(), b.clone())])],
                    )),
                    _ => None,
                },
                _ => None,
            };
            if let Some((rule, branches)) = step {
                let mut subs = Vec::new();
                for c in branches {
                    subs.push(self.prove(c, goal.clone())?);
                }
                return Some(node(rule, &ctx, &goal, subs));
            }
        }
        // invertible right rules
        match &goal {
            F::And(a, b) => {
                let l = self.prove(ctx.clone(), (**a).clone())?;
                let r = self.prove(ctx.clone(), (**b).clone())?;
                return Some(node("and-R", &ctx, &goal, vec![l, r]));
            }
            F::Imp(a, b) => {
                let mut c = ctx.clone();
                c.push((**a).clone());
                let p = self.prove(c, (**b).clone())?;
                return Some(node("imp-R", &ctx, &goal, vec![p]));
            }
            _ => {}
        }
        let key = (ctx.clone(), goal.clone());
        if self.failed.contains(&key) {
            return None;
        }
        // non-invertible choices
        if let F::Or(a, b) = &goal {
            for (rule, side) in [("or-R1", a), ("or-R2", b)] {
                if let Some(p) = self.prove(ctx.clone(), (**side).clone()) {
                    return Some(node(rule, &ctx, &goal, vec![p]));
                }
            }
        }
        for (k, h) in ctx.iter().enumerate() {
            if let F::Imp(a, b) = h {
                if let F::Imp(_, d) = &**a {
                    let left_ctx = without(&ctx, k, [F::Imp(d.clone(), b.clone())]);
                    let Some(l) = self.prove(left_ctx, (**a).clone()) else { continue };
                    let Some(r) = self.prove(without(&ctx, k, [(**b).clone()]), goal.clone()) else {
                        continue;
                    };
                    return Some(node("imp-imp-L", &ctx, &goal, vec![l, r]));
                }
            }
        }
        self.failed.insert(key);
        None
    }
}

/// Decide `premises ⊢_H goal`; on success returns a derivation.
pub fn prove_h(premises: &[Prop], goal: &Prop) -> Option<Proof> {
    let mut s = Search { failed: HashSet::new() };
    s.prove(premises.iter().map(lower).collect(), lower(goal))
}
