//! Symbol tables and fresh-name generation.

use std::collections::BTreeMap;

use thiserror::Error;

use super::{Formula, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolKind {
    Function,
    Predicate,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("{kind:?} symbol {name} used with arities {first} and {second}")]
    ArityClash { kind: SymbolKind, name: String, first: usize, second: usize },
}

/// Declared symbols plus a counter for fresh names. Fresh names never
/// collide with declared ones or with each other.
#[derive(Clone, Debug, Default)]
pub struct Signature {
    symbols: BTreeMap<(SymbolKind, String), usize>,
    taken: std::collections::BTreeSet<String>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    /// Collect every symbol of the given formulas, checking arities.
    pub fn of<'a, I: IntoIterator<Item = &'a Formula>>(formulas: I) -> Result<Self, SignatureError> {
        let mut sig = Signature::new();
        for f in formulas {
            sig.absorb(f)?;
        }
        Ok(sig)
    }

    pub fn absorb(&mut self, f: &Formula) -> Result<(), SignatureError> {
        for (p, n) in f.predicates() {
            self.declare(SymbolKind::Predicate, &p, n)?;
        }
        let mut err = None;
        f.visit(0, &mut |t, _| {
            match t {
                Term::App(g, args) => {
                    if let Err(e) = self.declare(SymbolKind::Function, g, args.len()) {
                        err.get_or_insert(e);
                    }
                }
                Term::Free(x) => {
                    self.taken.insert(x.clone());
                }
                _ => {}
            }
            true
        });
        err.map_or(Ok(()), Err)
    }

    pub fn declare(&mut self, kind: SymbolKind, name: &str, arity: usize) -> Result<(), SignatureError> {
        match self.symbols.get(&(kind, name.to_string())) {
            Some(&a) if a != arity => {
                Err(SignatureError::ArityClash { kind, name: name.to_string(), first: a, second: arity })
            }
            _ => {
                self.symbols.insert((kind, name.to_string()), arity);
                self.taken.insert(name.to_string());
                Ok(())
            }
        }
    }

    pub fn arity(&self, kind: SymbolKind, name: &str) -> Option<usize> {
        self.symbols.get(&(kind, name.to_string())).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.taken.contains(name)
    }

    /// A new name starting with `base`, reserved as a function symbol of
    /// the given arity.
    pub fn fresh_function(&mut self, base: &str, arity: usize) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.taken.contains(&name) {
            k += 1;
            name = format!("{base}{k}");
        }
        self.symbols.insert((SymbolKind::Function, name.clone()), arity);
        self.taken.insert(name.clone());
        name
    }

    /// A new predicate name starting with `base` (upper-case).
    pub fn fresh_predicate(&mut self, base: &str, arity: usize) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.taken.contains(&name) {
            k += 1;
            name = format!("{base}{k}");
        }
        self.symbols.insert((SymbolKind::Predicate, name.clone()), arity);
        self.taken.insert(name.clone());
        name
    }
}
