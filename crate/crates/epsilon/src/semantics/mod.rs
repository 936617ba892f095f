//! Decidable propositional backends: Gödel chains, an intuitionistic
//! prover, schema instances, and the judgment verifier built on them.

mod godel;
mod prop;
mod prover;
mod schema;
mod verify;

use thiserror::Error;

pub use godel::{
    decide_lc, decide_lcm, eval_godel, lc_chain_size, sat_valid_in_lcm, valid_in_lc, valid_in_lcm, Budget, GodelChain,
    Valuation, Verdict,
};
pub use prop::{abstract_one, Abstraction, Connectives, Prop};
pub use prover::{prove_h, Proof};
pub use schema::{
    counterexample_bm, match_bm_any, match_schema, schema, schema_relations_check, RelationRow, SchemaKind, Shape,
};
pub use verify::{verify_judgment, Verification};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("quantified formula has no propositional abstraction: {0}")]
    Quantified(String),
    #[error("a Gödel chain needs at least 2 values, got {0}")]
    ChainTooSmall(u32),
    #[error("valuation does not assign atom {0}")]
    UnmappedAtom(usize),
    #[error("value {0} is outside the chain")]
    OutOfRange(u32),
    #[error("{atoms} atoms on a chain of {chain} values exceed the budget of {budget} valuations")]
    BudgetExceeded { atoms: usize, chain: u32, budget: u64 },
    #[error("SAT backend failed: {0}")]
    Solver(String),
    #[error("schema {kind} does not take {got} atoms")]
    SchemaArity { kind: String, got: usize },
}
