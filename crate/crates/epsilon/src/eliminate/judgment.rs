//! Derivability claims `premises ⊢_L goal` and their text format.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::critical::recognize_critical;
use crate::syntax::{parse_formula, Formula, ParseError, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LogicTag {
    /// Classical propositional logic, the two-valued chain.
    Classical,
    /// Gödel logic on `m >= 2` values.
    Lcm(u32),
    /// Gödel-Dummett logic.
    Lc,
    /// Logic of weak excluded middle.
    Kc,
    /// Intuitionistic logic.
    H,
}

impl LogicTag {
    /// Chain size of the semantics, when the logic is a finite chain.
    pub fn chain(self) -> Option<u32> {
        match self {
            LogicTag::Classical => Some(2),
            LogicTag::Lcm(m) => Some(m),
            _ => None,
        }
    }

    /// The m for which the logic proves Bm, if any.
    pub fn bm(self) -> Option<usize> {
        self.chain().map(|m| m as usize)
    }

    pub fn proves_lin(self) -> bool {
        matches!(self, LogicTag::Classical | LogicTag::Lcm(_) | LogicTag::Lc)
    }

    pub fn proves_j(self) -> bool {
        !matches!(self, LogicTag::H)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown logic {0:?} (expected classical, lcN with N >= 2, lc, kc or h)")]
pub struct LogicParseError(pub String);

impl FromStr for LogicTag {
    type Err = LogicParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let low = s.trim().to_ascii_lowercase();
        match low.as_str() {
            "classical" | "c" => Ok(LogicTag::Classical),
            "lc" => Ok(LogicTag::Lc),
            "kc" => Ok(LogicTag::Kc),
            "h" | "int" => Ok(LogicTag::H),
            _ => match low.strip_prefix("lc").and_then(|n| n.parse::<u32>().ok()) {
                Some(m) if m >= 2 => Ok(LogicTag::Lcm(m)),
                _ => Err(LogicParseError(s.to_string())),
            },
        }
    }
}

impl fmt::Display for LogicTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicTag::Classical => write!(f, "classical"),
            LogicTag::Lcm(m) => write!(f, "lc{m}"),
            LogicTag::Lc => write!(f, "lc"),
            LogicTag::Kc => write!(f, "kc"),
            LogicTag::H => write!(f, "h"),
        }
    }
}

impl Serialize for LogicTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `criticals, residues, axiom_instances ⊢_logic goal[0] ∨ goal[1] ∨ ...`
///
/// Residues are premises that are not critical formulas: substitution
/// leftovers and hypotheses. The goal is kept as its list of disjuncts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Judgment {
    pub logic: LogicTag,
    pub criticals: Vec<Formula>,
    pub residues: Vec<Formula>,
    pub axiom_instances: Vec<Formula>,
    pub goal: Vec<Formula>,
}

pub(crate) fn push_unique(v: &mut Vec<Formula>, f: Formula) {
    if !v.contains(&f) {
        v.push(f);
    }
}

pub(crate) fn dedup(items: impl IntoIterator<Item = Formula>) -> Vec<Formula> {
    let mut out = Vec::new();
    for f in items {
        push_unique(&mut out, f);
    }
    out
}

impl Judgment {
    pub fn new(logic: LogicTag, criticals: Vec<Formula>, goal: Formula) -> Self {
        Judgment {
            logic,
            criticals: dedup(criticals),
            residues: Vec::new(),
            axiom_instances: Vec::new(),
            goal: vec![goal],
        }
    }

    pub fn with_residues(mut self, residues: Vec<Formula>) -> Self {
        self.residues = dedup(residues);
        self
    }

    pub fn with_instances(mut self, instances: Vec<Formula>) -> Self {
        self.axiom_instances = dedup(instances);
        self
    }

    pub fn goal_formula(&self) -> Formula {
        Formula::disj(self.goal.iter().cloned())
    }

    /// Every premise: criticals, then residues, then axiom instances.
    pub fn premises(&self) -> impl Iterator<Item = &Formula> {
        self.criticals.iter().chain(&self.residues).chain(&self.axiom_instances)
    }

    /// Critical terms of all readings of the critical premises, in
    /// first-seen order.
    pub fn critical_terms(&self) -> Vec<Term> {
        let mut out: Vec<Term> = Vec::new();
        for c in &self.criticals {
            for r in recognize_critical(c) {
                if !out.contains(&r.critical_term) {
                    out.push(r.critical_term);
                }
            }
        }
        out
    }

    /// Apply a formula map to every premise and goal disjunct, keeping
    /// order and removing duplicates.
    pub fn map(&self, f: impl Fn(&Formula) -> Formula) -> Judgment {
        Judgment {
            logic: self.logic,
            criticals: dedup(self.criticals.iter().map(&f)),
            residues: dedup(self.residues.iter().map(&f)),
            axiom_instances: dedup(self.axiom_instances.iter().map(&f)),
            goal: dedup(self.goal.iter().map(&f)),
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        self.premises().chain(&self.goal).all(Formula::is_quantifier_free)
    }

    /// The judgment file format: one `key: formula` per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("logic: {}\n", self.logic);
        for c in &self.criticals {
            out.push_str(&format!("critical: {c}\n"));
        }
        for r in &self.residues {
            out.push_str(&format!("residue: {r}\n"));
        }
        for i in &self.axiom_instances {
            out.push_str(&format!("instance: {i}\n"));
        }
        for g in &self.goal {
            out.push_str(&format!("goal: {g}\n"));
        }
        out
    }

    pub fn parse(src: &str) -> Result<Judgment, JudgmentParseError> {
        let mut logic = None;
        let mut j = Judgment {
            logic: LogicTag::Classical,
            criticals: Vec::new(),
            residues: Vec::new(),
            axiom_instances: Vec::new(),
            goal: Vec::new(),
        };
        for (n, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let line_no = n + 1;
            let (key, value) = line
                .split_once(':')
                .ok_or(JudgmentParseError::Line { line: line_no, msg: "expected `key: value`".into() })?;
            let value = value.trim();
            let formula =
                || parse_formula(value).map_err(|source| JudgmentParseError::Formula { line: line_no, source });
            match key.trim() {
                "logic" => {
                    logic =
                        Some(value.parse().map_err(|e: LogicParseError| JudgmentParseError::Line {
                            line: line_no,
                            msg: e.to_string(),
                        })?)
                }
                "critical" => push_unique(&mut j.criticals, formula()?),
                "residue" | "premise" => push_unique(&mut j.residues, formula()?),
                "instance" => push_unique(&mut j.axiom_instances, formula()?),
                "goal" => push_unique(&mut j.goal, formula()?),
                other => return Err(JudgmentParseError::Line { line: line_no, msg: format!("unknown key {other:?}") }),
            }
        }
        j.logic = logic.ok_or(JudgmentParseError::Missing("logic"))?;
        if j.goal.is_empty() {
            return Err(JudgmentParseError::Missing("goal"));
        }
        if !j.is_quantifier_free() {
            return Err(JudgmentParseError::Quantified);
        }
        Ok(j)
    }
}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let premises: Vec<String> = self.premises().map(|p| p.to_string()).collect();
        write!(f, "{} |-_{} {}", premises.join(", "), self.logic, self.goal_formula())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JudgmentParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Formula { line: usize, source: ParseError },
    #[error("missing `{0}:` line")]
    Missing(&'static str),
    #[error("judgment formulas must be quantifier-free")]
    Quantified,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logic_tags() {
        assert_eq!("classical".parse::<LogicTag>().unwrap(), LogicTag::Classical);
        assert_eq!("LC3".parse::<LogicTag>().unwrap(), LogicTag::Lcm(3));
        assert_eq!("lc".parse::<LogicTag>().unwrap(), LogicTag::Lc);
        assert!("lc1".parse::<LogicTag>().is_err());
        assert!("s4".parse::<LogicTag>().is_err());
        assert_eq!(LogicTag::Lcm(4).to_string(), "lc4");
    }

    #[test]
    fn text_round_trip() {
        let src = "\
# forking
logic: classical
critical: P(f(eps x. P(x))) -> P(eps x. P(x))
instance: A | ~A
goal: P(f(c)) -> P(c)
";
        let j = Judgment::parse(src).unwrap();
        assert_eq!(j.criticals.len(), 1);
        assert_eq!(j.axiom_instances.len(), 1);
        assert_eq!(Judgment::parse(&j.to_text()).unwrap(), j);
        assert_eq!(j.critical_terms().len(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Judgment::parse("goal: A"), Err(JudgmentParseError::Missing("logic"))));
        assert!(matches!(Judgment::parse("logic: h"), Err(JudgmentParseError::Missing("goal"))));
        assert!(matches!(Judgment::parse("logic: h\ngoal: all x. P(x)"), Err(JudgmentParseError::Quantified)));
        assert!(matches!(Judgment::parse("logic: h\ngoal A"), Err(JudgmentParseError::Line { line: 2, .. })));
        assert!(matches!(Judgment::parse("logic: h\ngoal: A &"), Err(JudgmentParseError::Formula { line: 2, .. })));
    }
}
