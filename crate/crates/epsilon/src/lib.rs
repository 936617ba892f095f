pub mod cli;
pub mod critical;
pub mod eliminate;
pub mod generate;
pub mod semantics;
pub mod syntax;
pub mod translate;
