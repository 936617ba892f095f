//! Propositional formulas and the abstraction of quantifier-free
//! first-order formulas into them.

use std::collections::HashMap;
use std::fmt;

use crate::syntax::Formula;

use super::SemanticsError;

/// A propositional formula over atoms numbered from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prop {
    Atom(usize),
    Top,
    Bot,
    Not(Box<Prop>),
    And(Box<Prop>, Box<Prop>),
    Or(Box<Prop>, Box<Prop>),
    Imp(Box<Prop>, Box<Prop>),
}

/// Builders shared by [`Formula`] and [`Prop`], so schemas can be
/// instantiated over either.
pub trait Connectives: Clone + PartialEq {
    fn top() -> Self;
    fn bot() -> Self;
    fn not(a: Self) -> Self;
    fn and(a: Self, b: Self) -> Self;
    fn or(a: Self, b: Self) -> Self;
    fn imp(a: Self, b: Self) -> Self;

    /// Left-nested disjunction; `bot` when empty.
    fn big_or(items: Vec<Self>) -> Self {
        items.into_iter().reduce(Self::or).unwrap_or_else(Self::bot)
    }

    /// Left-nested conjunction; `top` when empty.
    fn big_and(items: Vec<Self>) -> Self {
        items.into_iter().reduce(Self::and).unwrap_or_else(Self::top)
    }
}

impl Connectives for Prop {
    fn top() -> Self {
        Prop::Top
    }
    fn bot() -> Self {
        Prop::Bot
    }
    fn not(a: Self) -> Self {
        Prop::Not(Box::new(a))
    }
    fn and(a: Self, b: Self) -> Self {
        Prop::And(Box::new(a), Box::new(b))
    }
    fn or(a: Self, b: Self) -> Self {
        Prop::Or(Box::new(a), Box::new(b))
    }
    fn imp(a: Self, b: Self) -> Self {
        Prop::Imp(Box::new(a), Box::new(b))
    }
}

impl Connectives for Formula {
    fn top() -> Self {
        Formula::Top
    }
    fn bot() -> Self {
        Formula::Bot
    }
    fn not(a: Self) -> Self {
        Formula::not(a)
    }
    fn and(a: Self, b: Self) -> Self {
        Formula::and(a, b)
    }
    fn or(a: Self, b: Self) -> Self {
        Formula::or(a, b)
    }
    fn imp(a: Self, b: Self) -> Self {
        Formula::imp(a, b)
    }
}

impl Prop {
    pub fn atom_count(&self) -> usize {
        match self {
            Prop::Atom(i) => i + 1,
            Prop::Top | Prop::Bot => 0,
            Prop::Not(a) => a.atom_count(),
            Prop::And(a, b) | Prop::Or(a, b) | Prop::Imp(a, b) => a.atom_count().max(b.atom_count()),
        }
    }

    /// Render with the given atom names (`p<i>` for missing ones).
    pub fn render(&self, names: &[String]) -> String {
        let f = self.to_formula(names);
        f.to_string()
    }

    fn to_formula(&self, names: &[String]) -> Formula {
        match self {
            Prop::Atom(i) => Formula::prop(names.get(*i).map_or(&format!("P{i}"), |s| s)),
            Prop::Top => Formula::Top,
            Prop::Bot => Formula::Bot,
            Prop::Not(a) => Formula::not(a.to_formula(names)),
            Prop::And(a, b) => Formula::and(a.to_formula(names), b.to_formula(names)),
            Prop::Or(a, b) => Formula::or(a.to_formula(names), b.to_formula(names)),
            Prop::Imp(a, b) => Formula::imp(a.to_formula(names), b.to_formula(names)),
        }
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// Maps alpha-classes of atomic formulas to propositional atoms. Distinct
/// atoms stay distinct, which is sound for pure logics without identity.
#[derive(Clone, Debug, Default)]
pub struct Abstraction {
    atoms: Vec<Formula>,
    index: HashMap<Formula, usize>,
}

impl Abstraction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn atoms(&self) -> &[Formula] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Printed names of the atoms, for rendering valuations.
    pub fn names(&self) -> Vec<String> {
        self.atoms.iter().map(|a| a.to_string()).collect()
    }

    pub fn atom(&mut self, a: &Formula) -> usize {
        if let Some(&i) = self.index.get(a) {
            return i;
        }
        let i = self.atoms.len();
        self.atoms.push(a.clone());
        self.index.insert(a.clone(), i);
        i
    }

    pub fn abstract_formula(&mut self, f: &Formula) -> Result<Prop, SemanticsError> {
        Ok(match f {
            Formula::Top => Prop::Top,
            Formula::Bot => Prop::Bot,
            Formula::Atom(..) => Prop::Atom(self.atom(f)),
            Formula::Not(a) => Prop::not(self.abstract_formula(a)?),
            Formula::And(a, b) => Prop::and(self.abstract_formula(a)?, self.abstract_formula(b)?),
            Formula::Or(a, b) => Prop::or(self.abstract_formula(a)?, self.abstract_formula(b)?),
            Formula::Imp(a, b) => Prop::imp(self.abstract_formula(a)?, self.abstract_formula(b)?),
            Formula::All(_) | Formula::Ex(_) => return Err(SemanticsError::Quantified(f.to_string())),
        })
    }
}

/// Abstract a single formula with a fresh table.
pub fn abstract_one(f: &Formula) -> Result<(Prop, Abstraction), SemanticsError> {
    let mut abs = Abstraction::new();
    let p = abs.abstract_formula(f)?;
    Ok((p, abs))
}
