//! Elimination of critical formulas: the per-term constructions, the
//! drivers that sequence them, and conversions around Herbrand
//! disjunctions.

mod driver;
mod judgment;
mod reconstruct;
mod step;

pub use driver::{
    ground, run_elimination, run_jankov, run_weak_lin, DriverOptions, EliminationTrace, FailureReport, VerifyLevel,
    WeakLinOutcome, TRACE_VERSION,
};
pub use judgment::{Judgment, JudgmentParseError, LogicParseError, LogicTag};
pub use reconstruct::{
    bm_extract, reconstruct_from_herbrand, theorem_form_convert, BmExtraction, ConvertDirection, ReconstructError,
};
pub use step::{
    combine_disjunction, eliminate_complete_classical, eliminate_complete_gm, eliminate_impredicative_bm,
    eliminate_negated_jankov, eliminate_predicative_lin, eliminate_single_classical, strengthen_premise,
    EliminationError, EliminationStep, Rule,
};
