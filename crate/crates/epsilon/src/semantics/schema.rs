//! Characteristic schemas of the intermediate logics, a matcher that
//! recognizes their instances, and the relations between them.

use std::fmt;

use serde::Serialize;

use super::godel::{GodelChain, Valuation};
use super::prop::{Connectives, Prop};
use super::prover::prove_h;
use super::SemanticsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SchemaKind {
    /// `(A -> B) | (B -> A)`
    Lin,
    /// `~A | ~~A`
    J,
    /// `(A1 -> A2) | ... | (Am -> Am+1)`: m implications over m+1 atoms.
    Bm(usize),
    /// `A1 | (A1 -> A2) | ... | (An-1 -> An) | ~An`
    Rn(usize),
    /// `A | ~A`
    Em,
    /// `OR_j AND_i (Ai -> Aj)`
    BigDisjEps(usize),
    /// `OR_j AND_i (Aj -> Ai)`
    BigDisjTau(usize),
    /// `(A1 -> Am+1) -> (A1 -> A2) | ... | (Am -> Am+1)`
    IteratedLin(usize),
}

impl SchemaKind {
    pub fn arity(self) -> usize {
        match self {
            SchemaKind::Lin => 2,
            SchemaKind::J | SchemaKind::Em => 1,
            SchemaKind::Bm(m) | SchemaKind::IteratedLin(m) => m + 1,
            SchemaKind::Rn(n) | SchemaKind::BigDisjEps(n) | SchemaKind::BigDisjTau(n) => n,
        }
    }

    fn min_parameter(self) -> usize {
        match self {
            SchemaKind::Bm(_) | SchemaKind::IteratedLin(_) | SchemaKind::Rn(_) => 1,
            SchemaKind::BigDisjEps(_) | SchemaKind::BigDisjTau(_) => 1,
            _ => 0,
        }
    }

    fn parameter(self) -> usize {
        match self {
            SchemaKind::Bm(m) | SchemaKind::IteratedLin(m) | SchemaKind::Rn(m) => m,
            SchemaKind::BigDisjEps(p) | SchemaKind::BigDisjTau(p) => p,
            _ => 0,
        }
    }
}

impl fmt::Display for SchemaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemaKind::Lin => write!(f, "Lin"),
            SchemaKind::J => write!(f, "J"),
            SchemaKind::Bm(m) => write!(f, "B{m}"),
            SchemaKind::Rn(n) => write!(f, "R{n}"),
            SchemaKind::Em => write!(f, "EM"),
            SchemaKind::BigDisjEps(p) => write!(f, "bigdisj-eps({p})"),
            SchemaKind::BigDisjTau(p) => write!(f, "bigdisj-tau({p})"),
            SchemaKind::IteratedLin(m) => write!(f, "iterated-lin({m})"),
        }
    }
}

fn chain<F: Connectives>(atoms: &[F]) -> Vec<F> {
    atoms.windows(2).map(|w| F::imp(w[0].clone(), w[1].clone())).collect()
}

/// The schema instance over `atoms`.
pub fn schema<F: Connectives>(kind: SchemaKind, atoms: &[F]) -> Result<F, SemanticsError> {
    if atoms.len() != kind.arity() || kind.parameter() < kind.min_parameter() {
        return Err(SemanticsError::SchemaArity { kind: kind.to_string(), got: atoms.len() });
    }
    let a = |i: usize| atoms[i].clone();
    Ok(match kind {
        SchemaKind::Lin => F::or(F::imp(a(0), a(1)), F::imp(a(1), a(0))),
        SchemaKind::J => F::or(F::not(a(0)), F::not(F::not(a(0)))),
        SchemaKind::Em => F::or(a(0), F::not(a(0))),
        SchemaKind::Bm(_) => F::big_or(chain(atoms)),
        SchemaKind::Rn(n) => {
            let mut items = vec![a(0)];
            items.extend(chain(atoms));
            items.push(F::not(a(n - 1)));
            F::big_or(items)
        }
        SchemaKind::BigDisjEps(p) => {
            F::big_or((0..p).map(|j| F::big_and((0..p).map(|i| F::imp(a(i), a(j))).collect())).collect())
        }
        SchemaKind::BigDisjTau(p) => {
            F::big_or((0..p).map(|j| F::big_and((0..p).map(|i| F::imp(a(j), a(i))).collect())).collect())
        }
        SchemaKind::IteratedLin(m) => F::imp(F::imp(a(0), a(m)), F::big_or(chain(atoms))),
    })
}

/// Structural access needed by the matcher.
pub trait Shape: Connectives {
    fn as_or(&self) -> Option<(&Self, &Self)>;
    fn as_and(&self) -> Option<(&Self, &Self)>;
    fn as_imp(&self) -> Option<(&Self, &Self)>;
    fn as_not(&self) -> Option<&Self>;
}

impl Shape for Prop {
    fn as_or(&self) -> Option<(&Self, &Self)> {
        match self {
            Prop::Or(a, b) => Some((a, b)),
            _ => None,
        }
    }
    fn as_and(&self) -> Option<(&Self, &Self)> {
        match self {
            Prop::And(a, b) => Some((a, b)),
            _ => None,
        }
    }
    fn as_imp(&self) -> Option<(&Self, &Self)> {
        match self {
            Prop::Imp(a, b) => Some((a, b)),
            _ => None,
        }
    }
    fn as_not(&self) -> Option<&Self> {
        match self {
            Prop::Not(a) => Some(a),
            _ => None,
        }
    }
}

impl Shape for crate::syntax::Formula {
    fn as_or(&self) -> Option<(&Self, &Self)> {
        match self {
            Self::Or(a, b) => Some((a, b)),
            _ => None,
        }
    }
    fn as_and(&self) -> Option<(&Self, &Self)> {
        match self {
            Self::And(a, b) => Some((a, b)),
            _ => None,
        }
    }
    fn as_imp(&self) -> Option<(&Self, &Self)> {
        match self {
            Self::Imp(a, b) => Some((a, b)),
            _ => None,
        }
    }
    fn as_not(&self) -> Option<&Self> {
        match self {
            Self::Not(a) => Some(a),
            _ => None,
        }
    }
}

/// Split a left-nested chain of `n` items built by `big_or`/`big_and`.
fn unfold<F: Shape>(f: &F, n: usize, split: fn(&F) -> Option<(&F, &F)>) -> Option<Vec<&F>> {
    let mut items = Vec::with_capacity(n);
    let mut cur = f;
    for _ in 1..n {
        let (rest, last) = split(cur)?;
        items.push(last);
        cur = rest;
    }
    items.push(cur);
    items.reverse();
    Some(items)
}

/// The atoms instantiating `kind` in `f`, if `f` is an instance.
pub fn match_schema<F: Shape>(kind: SchemaKind, f: &F) -> Option<Vec<F>> {
    let atoms: Vec<F> = match kind {
        SchemaKind::Lin => {
            let (l, _) = f.as_or()?;
            let (a, b) = l.as_imp()?;
            vec![a.clone(), b.clone()]
        }
        SchemaKind::J => vec![f.as_or()?.0.as_not()?.clone()],
        SchemaKind::Em => vec![f.as_or()?.0.clone()],
        SchemaKind::Bm(m) => chain_atoms(&unfold(f, m, F::as_or)?)?,
        SchemaKind::IteratedLin(m) => {
            let (_, rhs) = f.as_imp()?;
            chain_atoms(&unfold(rhs, m, F::as_or)?)?
        }
        SchemaKind::Rn(n) => {
            let items = unfold(f, n + 1, F::as_or)?;
            let mut atoms = vec![items[0].clone()];
            for it in &items[1..n] {
                atoms.push(it.as_imp()?.1.clone());
            }
            atoms
        }
        SchemaKind::BigDisjEps(p) | SchemaKind::BigDisjTau(p) => {
            let first = unfold(f, p, F::as_or)?[0];
            let conj = unfold(first, p, F::as_and)?;
            conj.iter()
                .map(|c| {
                    let (a, b) = c.as_imp()?;
                    Some(if matches!(kind, SchemaKind::BigDisjEps(_)) { a.clone() } else { b.clone() })
                })
                .collect::<Option<Vec<F>>>()?
        }
    };
    (schema(kind, &atoms).ok()? == *f).then_some(atoms)
}

fn chain_atoms<F: Shape>(links: &[&F]) -> Option<Vec<F>> {
    let mut atoms = Vec::new();
    for (k, l) in links.iter().enumerate() {
        let (a, b) = l.as_imp()?;
        if k == 0 {
            atoms.push(a.clone());
        }
        atoms.push(b.clone());
    }
    Some(atoms)
}

/// The smallest `m` for which `f` is a Bm instance, trying up to `max`.
pub fn match_bm_any<F: Shape>(f: &F, max: usize) -> Option<usize> {
    (1..=max).find(|&m| match_schema(SchemaKind::Bm(m), f).is_some())
}

/// Descending values on the chain of size m+1: A1 gets the top value and
/// A(m+1) gets 0, so every link of Bm(m) evaluates below top.
pub fn counterexample_bm(m: usize) -> Result<(GodelChain, Valuation), SemanticsError> {
    if m < 2 {
        return Err(SemanticsError::SchemaArity { kind: format!("B{m}"), got: m + 1 });
    }
    let chain = GodelChain::new(m as u32 + 1)?;
    let values = (0..=m).map(|i| (m - i) as u32).collect();
    Ok((chain, Valuation(values)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationRow {
    pub m: usize,
    /// Bm with A at odd and B at even positions entails Lin in H.
    pub entails_lin: bool,
    /// Bm with top first, bot last, and A(i-1) for Ai between entails
    /// R(m-1) in H.
    pub entails_r: bool,
}

/// Check, for each `m`, the two schema relations by intuitionistic proof.
pub fn schema_relations_check(ms: std::ops::RangeInclusive<usize>) -> Result<Vec<RelationRow>, SemanticsError> {
    let mut rows = Vec::new();
    for m in ms {
        if m < 2 {
            return Err(SemanticsError::SchemaArity { kind: format!("B{m}"), got: m + 1 });
        }
        let (a, b) = (Prop::Atom(0), Prop::Atom(1));
        let alternating: Vec<Prop> = (1..=m + 1).map(|i| if i % 2 == 1 { a.clone() } else { b.clone() }).collect();
        let inst = schema(SchemaKind::Bm(m), &alternating)?;
        let lin = schema(SchemaKind::Lin, &[a, b])?;
        let entails_lin = prove_h(&[inst], &lin).is_some();

        let mut squeezed = vec![Prop::Top];
        squeezed.extend((0..m - 1).map(Prop::Atom));
        squeezed.push(Prop::Bot);
        let inst = schema(SchemaKind::Bm(m), &squeezed)?;
        let r = schema(SchemaKind::Rn(m - 1), &(0..m - 1).map(Prop::Atom).collect::<Vec<_>>())?;
        let entails_r = prove_h(&[inst], &r).is_some();
        rows.push(RelationRow { m, entails_lin, entails_r });
    }
    Ok(rows)
}
