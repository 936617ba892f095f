//! Pretty-printing in the ASCII surface syntax; output re-parses to an
//! alpha-equal value.

use std::collections::BTreeSet;
use std::fmt;

use super::{Binder, Formula, Term, IDENTITY};

// Binding strength of a printed formula; an operand printed in a context
// demanding more gets parentheses.
const OPEN: u8 = 0; // ends in a binder body that would swallow what follows
const IMP: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;

struct Printer {
    scope: Vec<String>,
}

impl Printer {
    fn bind(&mut self, b: &Binder) -> String {
        let base = if b.hint.0.is_empty() { "x" } else { b.hint.0.as_str() };
        let taken: BTreeSet<String> = b.body.names();
        let mut name = base.to_string();
        while taken.contains(&name) || self.scope.contains(&name) {
            name.push('\'');
        }
        name
    }

    fn binder(&mut self, kw: &str, b: &Binder, out: &mut String) {
        let name = self.bind(b);
        out.push_str(kw);
        out.push(' ');
        out.push_str(&name);
        out.push_str(". ");
        self.scope.push(name);
        self.formula(&b.body, OPEN, out);
        self.scope.pop();
    }

    fn term(&mut self, t: &Term, out: &mut String) {
        match t {
            Term::Free(x) => out.push_str(x),
            Term::Bound(i) => match self.scope.len().checked_sub(i + 1) {
                Some(k) => out.push_str(&self.scope[k]),
                None => out.push_str(&format!("#{i}")),
            },
            Term::App(f, args) => {
                out.push_str(f);
                if !args.is_empty() {
                    out.push('(');
                    for (k, a) in args.iter().enumerate() {
                        if k > 0 {
                            out.push_str(", ");
                        }
                        self.term(a, out);
                    }
                    out.push(')');
                }
            }
            Term::Eps(b) => self.binder("eps", b, out),
            Term::Tau(b) => self.binder("tau", b, out),
        }
    }

    fn strength(f: &Formula) -> u8 {
        match f {
            Formula::Imp(..) => IMP,
            Formula::Or(..) => OR,
            Formula::And(..) => AND,
            Formula::All(_) | Formula::Ex(_) => OPEN,
            Formula::Atom(p, args) if p == IDENTITY && args.len() == 2 && args[1].is_choice() => OPEN,
            _ => UNARY,
        }
    }

    fn formula(&mut self, f: &Formula, need: u8, out: &mut String) {
        let paren = Self::strength(f) < need;
        if paren {
            out.push('(');
        }
        match f {
            Formula::Top => out.push_str("top"),
            Formula::Bot => out.push_str("bot"),
            Formula::Atom(p, args) if p == IDENTITY && args.len() == 2 => {
                self.term(&args[0], out);
                out.push_str(" = ");
                self.term(&args[1], out);
            }
            Formula::Atom(p, args) => {
                out.push_str(p);
                if !args.is_empty() {
                    out.push('(');
                    for (k, a) in args.iter().enumerate() {
                        if k > 0 {
                            out.push_str(", ");
                        }
                        self.term(a, out);
                    }
                    out.push(')');
                }
            }
            Formula::Not(a) => {
                out.push('~');
                self.formula(a, UNARY, out);
            }
            Formula::And(a, b) => self.infix(a, " & ", b, AND, AND + 1, out),
            Formula::Or(a, b) => self.infix(a, " | ", b, OR, OR + 1, out),
            Formula::Imp(a, b) => self.infix(a, " -> ", b, IMP + 1, IMP, out),
            Formula::All(b) => self.binder("all", b, out),
            Formula::Ex(b) => self.binder("ex", b, out),
        }
        if paren {
            out.push(')');
        }
    }

    fn infix(&mut self, a: &Formula, op: &str, b: &Formula, left: u8, right: u8, out: &mut String) {
        // operands that end in an open binder always need parentheses
        self.formula(a, left.max(IMP), out);
        out.push_str(op);
        self.formula(b, right.max(IMP), out);
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        Printer { scope: Vec::new() }.term(self, &mut out);
        f.write_str(&out)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        Printer { scope: Vec::new() }.formula(self, OPEN, &mut out);
        f.write_str(&out)
    }
}

impl Term {
    /// A hint-independent rendering: bound variables print as their
    /// de Bruijn index. Alpha-equal terms get the same key.
    pub fn canonical_key(&self) -> String {
        format!("{:?}", Canon(self))
    }
}

struct Canon<'a>(&'a Term);

impl fmt::Debug for Canon<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        canon_term(self.0, &mut out);
        f.write_str(&out)
    }
}

fn canon_term(t: &Term, out: &mut String) {
    match t {
        Term::Free(x) => out.push_str(x),
        Term::Bound(i) => out.push_str(&format!("#{i}")),
        Term::App(g, args) => {
            out.push_str(g);
            out.push('(');
            for a in args {
                canon_term(a, out);
                out.push(',');
            }
            out.push(')');
        }
        Term::Eps(b) | Term::Tau(b) => {
            out.push_str(if matches!(t, Term::Eps(_)) { "eps." } else { "tau." });
            canon_formula(&b.body, out);
        }
    }
}

fn canon_formula(f: &Formula, out: &mut String) {
    match f {
        Formula::Top => out.push('T'),
        Formula::Bot => out.push('F'),
        Formula::Atom(p, args) => {
            out.push_str(p);
            out.push('(');
            for a in args {
                canon_term(a, out);
                out.push(',');
            }
            out.push(')');
        }
        Formula::Not(a) => {
            out.push('~');
            canon_formula(a, out);
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            let op = match f {
                Formula::And(..) => '&',
                Formula::Or(..) => '|',
                _ => '>',
            };
            out.push('(');
            canon_formula(a, out);
            out.push(op);
            canon_formula(b, out);
            out.push(')');
        }
        Formula::All(b) | Formula::Ex(b) => {
            out.push_str(if matches!(f, Formula::All(_)) { "A." } else { "E." });
            canon_formula(&b.body, out);
        }
    }
}
