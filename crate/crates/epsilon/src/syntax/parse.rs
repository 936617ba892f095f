//! Recursive-descent parser for the surface syntax.
//!
//! ```text
//! formula := or ("->" formula)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | primary
//! primary := "top" | "bot" | "(" formula ")"
//!          | ("all" | "ex") var "."? formula
//!          | Pred ("(" term ("," term)* ")")?
//!          | term "=" term
//! term    := var | const | fun "(" term ("," term)* ")"
//!          | ("eps" | "tau") var "."? formula
//! ```
//!
//! Predicates start with an upper-case letter. An unbound lower-case name
//! is a variable when it starts with one of `u..z` and a constant
//! otherwise. Unicode spellings (`ε τ ∀ ∃ ¬ ∧ ∨ → ⊤ ⊥`) are accepted.

use thiserror::Error;

use super::{Binder, Formula, Hint, Term, IDENTITY};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Not,
    And,
    Or,
    Arrow,
    Eq,
    Eof,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '.' => Some(Tok::Dot),
            '~' | '¬' => Some(Tok::Not),
            '&' | '∧' => Some(Tok::And),
            '|' | '∨' => Some(Tok::Or),
            '→' => Some(Tok::Arrow),
            '=' => Some(Tok::Eq),
            'ε' => Some(Tok::Ident("eps".into())),
            'τ' => Some(Tok::Ident("tau".into())),
            '∀' => Some(Tok::Ident("all".into())),
            '∃' => Some(Tok::Ident("ex".into())),
            '⊤' => Some(Tok::Ident("top".into())),
            '⊥' => Some(Tok::Ident("bot".into())),
            _ => None,
        };
        if let Some(tok) = single {
            it.next();
            out.push((pos, tok));
            continue;
        }
        if c == '-' {
            it.next();
            match it.next() {
                Some((_, '>')) => out.push((pos, Tok::Arrow)),
                _ => return Err(ParseError { pos, msg: "expected '->'".into() }),
            }
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&(_, c)) = it.peek() {
                if c.is_alphanumeric() || c == '_' || c == '\'' {
                    name.push(c);
                    it.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Ident(name)));
            continue;
        }
        return Err(ParseError { pos, msg: format!("unexpected character {c:?}") });
    }
    out.push((src.len(), Tok::Eof));
    Ok(out)
}

const KEYWORDS: [&str; 6] = ["eps", "tau", "all", "ex", "top", "bot"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    scope: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.formula()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Tok::Not {
            self.bump();
            return Ok(Formula::not(self.unary()?));
        }
        self.primary()
    }

    fn binder(&mut self) -> Result<Binder, ParseError> {
        let name = match self.bump() {
            Tok::Ident(n) if !KEYWORDS.contains(&n.as_str()) && n.starts_with(|c: char| !c.is_uppercase()) => n,
            _ => return self.err("expected a variable name after binder"),
        };
        if *self.peek() == Tok::Dot {
            self.bump();
        }
        self.scope.push(name.clone());
        let body = self.formula();
        self.scope.pop();
        Ok(Binder { hint: Hint(name), body: Box::new(body?) })
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            Tok::Ident(w) if w == "top" => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Ident(w) if w == "bot" => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Ident(w) if w == "all" => {
                self.bump();
                Ok(Formula::All(self.binder()?))
            }
            Tok::Ident(w) if w == "ex" => {
                self.bump();
                Ok(Formula::Ex(self.binder()?))
            }
            Tok::Ident(w) if w.starts_with(char::is_uppercase) => {
                self.bump();
                let args = if *self.peek() == Tok::LParen { self.args()? } else { Vec::new() };
                Ok(Formula::Atom(w, args))
            }
            Tok::Ident(_) => {
                let lhs = self.term()?;
                self.expect(Tok::Eq, "'=' after a term")?;
                let rhs = self.term()?;
                Ok(Formula::Atom(IDENTITY.to_string(), vec![lhs, rhs]))
            }
            _ => self.err("expected a formula"),
        }
    }

    fn args(&mut self) -> Result<Vec<Term>, ParseError> {
        self.expect(Tok::LParen, "'('")?;
        let mut args = vec![self.term()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            args.push(self.term()?);
        }
        self.expect(Tok::RParen, "')'")?;
        Ok(args)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let name = match self.peek().clone() {
            Tok::Ident(n) => n,
            _ => return self.err("expected a term"),
        };
        if name == "eps" || name == "tau" {
            self.bump();
            let b = self.binder()?;
            return Ok(if name == "eps" { Term::Eps(b) } else { Term::Tau(b) });
        }
        if KEYWORDS.contains(&name.as_str()) || name.starts_with(char::is_uppercase) {
            return self.err(format!("expected a term, found {name:?}"));
        }
        self.bump();
        if *self.peek() == Tok::LParen && !matches!(self.peek2(), Tok::RParen) {
            return Ok(Term::App(name, self.args()?));
        }
        if let Some(k) = self.scope.iter().rev().position(|n| *n == name) {
            return Ok(Term::Bound(k));
        }
        if name.starts_with(|c: char| ('u'..='z').contains(&c)) {
            Ok(Term::Free(name))
        } else {
            Ok(Term::App(name, Vec::new()))
        }
    }
}

fn run<T>(src: &str, f: impl FnOnce(&mut Parser) -> Result<T, ParseError>) -> Result<T, ParseError> {
    let mut p = Parser { toks: tokenize(src)?, at: 0, scope: Vec::new() };
    let v = f(&mut p)?;
    if *p.peek() != Tok::Eof {
        return p.err("unexpected trailing input");
    }
    Ok(v)
}

pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    run(src, Parser::formula)
}

pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    run(src, Parser::term)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variables_and_constants() {
        assert_eq!(parse_term("x").unwrap(), Term::var("x"));
        assert_eq!(parse_term("c").unwrap(), Term::constant("c"));
        assert_eq!(parse_term("f(x, c)").unwrap(), Term::app("f", vec![Term::var("x"), Term::constant("c")]));
        // binding wins over the naming convention
        assert_eq!(parse_term("eps c. P(c)").unwrap(), parse_term("eps x. P(x)").unwrap());
    }

    #[test]
    fn structure() {
        let f = parse_formula("A -> B -> C").unwrap();
        assert_eq!(f, Formula::imp(Formula::prop("A"), Formula::imp(Formula::prop("B"), Formula::prop("C"))));
        let g = parse_formula("A | B | C").unwrap();
        assert_eq!(g, Formula::or(Formula::or(Formula::prop("A"), Formula::prop("B")), Formula::prop("C")));
        let h = parse_formula("~A & B | C -> D").unwrap();
        assert!(matches!(h, Formula::Imp(..)));
        let q = parse_formula("all x. P(x) -> Q").unwrap();
        assert!(matches!(q, Formula::All(_)));
    }

    #[test]
    fn unicode_spellings() {
        let a = parse_formula("∀x (P(x) ∨ ¬P(x)) → ⊤").unwrap();
        let b = parse_formula("all x. (P(x) | ~P(x)) -> top").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_term("εx P(x)").unwrap(), parse_term("eps y. P(y)").unwrap());
    }

    #[test]
    fn identity_atoms() {
        let f = parse_formula("x = a | ~x = a").unwrap();
        assert_eq!(f.atoms().len(), 2);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_formula("P(x) & ").unwrap_err();
        assert_eq!(e.pos, 7);
        assert!(parse_formula("P(x) Q").is_err());
        assert!(parse_formula("P(x -> Q").is_err());
        assert!(parse_formula("x").is_err());
    }
}
