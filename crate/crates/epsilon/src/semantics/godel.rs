//! Gödel truth functions on finite chains, and validity on them.
//!
//! Values are `0..size`, with `size - 1` designated. Validity is decided
//! either by enumerating every valuation (bounded by a [`Budget`]) or by
//! an order encoding into SAT. Both are complete; the SAT route is what
//! makes judgments with dozens of atoms checkable.

use std::collections::HashMap;

use serde::Serialize;
use varisat::{ExtendFormula, Lit, Solver};

use super::prop::Prop;
use super::SemanticsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GodelChain {
    size: u32,
}

impl GodelChain {
    pub fn new(size: u32) -> Result<Self, SemanticsError> {
        if size < 2 {
            return Err(SemanticsError::ChainTooSmall(size));
        }
        Ok(GodelChain { size })
    }

    pub fn size(self) -> u32 {
        self.size
    }

    pub fn top(self) -> u32 {
        self.size - 1
    }
}

/// Chain values indexed by propositional atom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Valuation(pub Vec<u32>);

impl Valuation {
    pub fn render(&self, names: &[String]) -> String {
        self.0
            .iter()
            .enumerate()
            .map(|(i, v)| match names.get(i) {
                Some(n) => format!("{n}={v}"),
                None => format!("P{i}={v}"),
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Upper bound on the number of valuations one exhaustive check may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(20_000_000)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// Refuted; carries a valuation below the designated value when the
    /// backend produces one.
    Invalid(Option<Valuation>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

pub fn eval_godel(phi: &Prop, v: &Valuation, chain: GodelChain) -> Result<u32, SemanticsError> {
    let top = chain.top();
    Ok(match phi {
        Prop::Atom(i) => {
            let x = *v.0.get(*i).ok_or(SemanticsError::UnmappedAtom(*i))?;
            if x > top {
                return Err(SemanticsError::OutOfRange(x));
            }
            x
        }
        Prop::Top => top,
        Prop::Bot => 0,
        Prop::Not(a) => {
            if eval_godel(a, v, chain)? == 0 {
                top
            } else {
                0
            }
        }
        Prop::And(a, b) => eval_godel(a, v, chain)?.min(eval_godel(b, v, chain)?),
        Prop::Or(a, b) => eval_godel(a, v, chain)?.max(eval_godel(b, v, chain)?),
        Prop::Imp(a, b) => {
            let (x, y) = (eval_godel(a, v, chain)?, eval_godel(b, v, chain)?);
            if x <= y {
                top
            } else {
                y
            }
        }
    })
}

/// Exhaustive validity on the chain of size `m`.
pub fn valid_in_lcm(phi: &Prop, m: u32, budget: Budget) -> Result<Verdict, SemanticsError> {
    let chain = GodelChain::new(m)?;
    let n = phi.atom_count();
    let needed = (m as u64).checked_pow(n as u32).filter(|&k| k <= budget.0);
    if needed.is_none() {
        return Err(SemanticsError::BudgetExceeded { atoms: n, chain: m, budget: budget.0 });
    }
    let mut v = Valuation(vec![0; n]);
    loop {
        if eval_godel(phi, &v, chain)? != chain.top() {
            return Ok(Verdict::Invalid(Some(v)));
        }
        // odometer step
        let mut k = 0;
        loop {
            if k == n {
                return Ok(Verdict::Valid);
            }
            v.0[k] += 1;
            if v.0[k] < m {
                break;
            }
            v.0[k] = 0;
            k += 1;
        }
    }
}

/// Chain size used for LC: `n` atoms occupy at most `n` positions
/// strictly between bottom and top.
pub fn lc_chain_size(phi: &Prop) -> u32 {
    phi.atom_count() as u32 + 2
}

/// Exhaustive LC validity on the chain of size `#atoms + 2`.
pub fn valid_in_lc(phi: &Prop, budget: Budget) -> Result<Verdict, SemanticsError> {
    valid_in_lcm(phi, lc_chain_size(phi), budget)
}

/// Past this many valuations the SAT encoding is faster than enumeration.
const ENUMERATION_CUTOFF: u64 = 1 << 16;

/// Validity on the chain of size `m` by whichever complete method fits:
/// enumeration for small `m^n` within budget, SAT otherwise.
pub fn decide_lcm(phi: &Prop, m: u32, budget: Budget) -> Result<Verdict, SemanticsError> {
    match valid_in_lcm(phi, m, Budget(budget.0.min(ENUMERATION_CUTOFF))) {
        Err(SemanticsError::BudgetExceeded { .. }) => sat_valid_in_lcm(phi, m),
        other => other,
    }
}

pub fn decide_lc(phi: &Prop, budget: Budget) -> Result<Verdict, SemanticsError> {
    decide_lcm(phi, lc_chain_size(phi), budget)
}

/// Order encoding: literal `k - 1` of a node's ladder says "value >= k".
struct Encoder {
    solver: Solver<'static>,
    steps: usize,
    truth: Lit,
    memo: HashMap<Prop, Vec<Lit>>,
    atoms: HashMap<usize, Vec<Lit>>,
}

impl Encoder {
    fn new(size: u32) -> Self {
        let mut solver = Solver::new();
        let truth = solver.new_lit();
        solver.add_clause(&[truth]);
        Encoder { solver, steps: size as usize - 1, truth, memo: HashMap::new(), atoms: HashMap::new() }
    }

    fn constant(&self, on: bool) -> Vec<Lit> {
        vec![if on { self.truth } else { !self.truth }; self.steps]
    }

    fn define(&mut self, f: impl Fn(&mut Solver<'static>, Lit, usize)) -> Vec<Lit> {
        (0..self.steps)
            .map(|k| {
                let g = self.solver.new_lit();
                f(&mut self.solver, g, k);
                g
            })
            .collect()
    }

    /// `d <-> (a_1 & ... & a_n)`
    fn conj(&mut self, lits: &[Lit]) -> Lit {
        let d = self.solver.new_lit();
        let mut long = vec![d];
        for &l in lits {
            self.solver.add_clause(&[!d, l]);
            long.push(!l);
        }
        self.solver.add_clause(&long);
        d
    }

    fn encode(&mut self, p: &Prop) -> Vec<Lit> {
        if let Some(l) = self.memo.get(p) {
            return l.clone();
        }
        let out = match p {
            Prop::Atom(i) => {
                let ladder: Vec<Lit> = (0..self.steps).map(|_| self.solver.new_lit()).collect();
                for w in ladder.windows(2) {
                    self.solver.add_clause(&[!w[1], w[0]]);
                }
                self.atoms.insert(*i, ladder.clone());
                ladder
            }
            Prop::Top => self.constant(true),
            Prop::Bot => self.constant(false),
            Prop::And(a, b) => {
                let (x, y) = (self.encode(a), self.encode(b));
                self.define(|s, g, k| {
                    s.add_clause(&[!g, x[k]]);
                    s.add_clause(&[!g, y[k]]);
                    s.add_clause(&[g, !x[k], !y[k]]);
                })
            }
            Prop::Or(a, b) => {
                let (x, y) = (self.encode(a), self.encode(b));
                self.define(|s, g, k| {
                    s.add_clause(&[g, !x[k]]);
                    s.add_clause(&[g, !y[k]]);
                    s.add_clause(&[!g, x[k], y[k]]);
                })
            }
            Prop::Not(a) => {
                let x = self.encode(a);
                let zero: Vec<Lit> = x.iter().map(|&l| !l).collect();
                let le = self.conj(&zero);
                vec![le; self.steps]
            }
            Prop::Imp(a, b) => {
                let (x, y) = (self.encode(a), self.encode(b));
                // d_k <-> (x_k -> y_k); le <-> all d_k
                let ds: Vec<Lit> = (0..self.steps)
                    .map(|k| {
                        let d = self.solver.new_lit();
                        self.solver.add_clause(&[!d, !x[k], y[k]]);
                        self.solver.add_clause(&[d, x[k]]);
                        self.solver.add_clause(&[d, !y[k]]);
                        d
                    })
                    .collect();
                let le = self.conj(&ds);
                self.define(|s, g, k| {
                    s.add_clause(&[g, !le]);
                    s.add_clause(&[g, !y[k]]);
                    s.add_clause(&[!g, le, y[k]]);
                })
            }
        };
        self.memo.insert(p.clone(), out.clone());
        out
    }
}

/// Validity on the chain of size `m` via SAT.
pub fn sat_valid_in_lcm(phi: &Prop, m: u32) -> Result<Verdict, SemanticsError> {
    GodelChain::new(m)?;
    let mut enc = Encoder::new(m);
    let root = enc.encode(phi);
    let designated = *root.last().expect("chain has at least two values");
    enc.solver.add_clause(&[!designated]);
    let sat = enc.solver.solve().map_err(|e| SemanticsError::Solver(e.to_string()))?;
    if !sat {
        return Ok(Verdict::Valid);
    }
    let model = enc.solver.model().unwrap_or_default();
    let truth: std::collections::HashSet<Lit> = model.into_iter().collect();
    let mut v = Valuation(vec![0; phi.atom_count()]);
    for (i, ladder) in &enc.atoms {
        v.0[*i] = ladder.iter().filter(|l| truth.contains(l)).count() as u32;
    }
    Ok(Verdict::Invalid(Some(v)))
}
