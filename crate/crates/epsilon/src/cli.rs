//! The `epsilon` command line: parse, translate, eliminate and check.
//!
//! Formula and term arguments are inline unless they name an existing
//! file, in which case the file's contents are used; `-` reads stdin.
//! Every command renders either as text or as one JSON document.

use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::critical::{classify, degree, rank, recognize_critical, ClassifiedCritical};
use crate::eliminate::{
    bm_extract, reconstruct_from_herbrand, run_elimination, run_jankov, run_weak_lin, DriverOptions, EliminationError,
    EliminationTrace, Judgment, LogicTag, ReconstructError, VerifyLevel, WeakLinOutcome,
};
use crate::generate;
use crate::semantics::{
    abstract_one, lc_chain_size, prove_h, sat_valid_in_lcm, schema, schema_relations_check, valid_in_lcm,
    verify_judgment, Budget, Prop, SchemaKind, SemanticsError, Valuation, Verdict,
};
use crate::syntax::{parse_formula, parse_term, Formula, Term};
use crate::translate::{et_translate, herbrand_form, shadow};

#[derive(Parser, Debug)]
#[command(name = "epsilon", version, about = "Epsilon elimination for intermediate logics")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the random generators.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Most valuations one exhaustive validity check may visit.
    #[arg(long, global = true, default_value_t = Budget::default().0, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Driver {
    /// Hilbert–Bernays: classical logic and the finite Gödel logics.
    Hb,
    /// Predicative critical formulas only, with `Lin`.
    WeakLin,
    /// Negated goals, with weak excluded middle.
    Jankov,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verify {
    None,
    Steps,
    Full,
}

impl From<Verify> for VerifyLevel {
    fn from(v: Verify) -> Self {
        match v {
            Verify::None => VerifyLevel::None,
            Verify::Steps => VerifyLevel::Steps,
            Verify::Full => VerifyLevel::Full,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the ε/τ-translation of a formula.
    Translate {
        formula: String,
        /// Print the propositional shadow instead.
        #[arg(long, conflicts_with = "herbrandize")]
        shadow: bool,
        /// Print the Herbrand form of a prenex formula instead.
        #[arg(long)]
        herbrandize: bool,
    },
    /// Eliminate the critical formulas of a judgment file.
    Eliminate {
        judgment: String,
        #[arg(long, value_enum, default_value_t = Driver::Hb)]
        driver: Driver,
        /// Override the file's logic.
        #[arg(long)]
        logic: Option<LogicTag>,
        #[arg(long, value_enum, default_value_t = Verify::None)]
        verify: Verify,
        /// Eliminate this critical term first.
        #[arg(long)]
        first: Option<String>,
    },
    /// Decide a propositional or quantifier-free formula in a logic.
    Check {
        formula: String,
        #[arg(long, default_value = "classical")]
        logic: LogicTag,
        /// Use the SAT encoding instead of enumerating valuations.
        #[arg(long)]
        sat: bool,
    },
    /// Check a judgment file in its logic.
    Verify {
        judgment: String,
        #[arg(long)]
        logic: Option<LogicTag>,
    },
    /// Rank of an ε/τ-term.
    Rank { term: String },
    /// Degree of an ε/τ-term.
    Degree { term: String },
    /// Readings of a critical formula, or of every critical premise of a
    /// judgment file.
    Classify {
        #[arg(required_unless_present = "judgment")]
        formula: Option<String>,
        #[arg(long, conflicts_with = "formula")]
        judgment: Option<String>,
    },
    /// Rebuild a judgment with predicative critical formulas from a
    /// Herbrand disjunction, and replay its elimination.
    Reconstruct {
        disjunction: String,
        /// The matrix whose instances are the disjuncts.
        #[arg(long)]
        skeleton: String,
        /// Comma-separated hole variables of the skeleton.
        #[arg(long, value_delimiter = ',', required = true)]
        holes: Vec<String>,
        #[arg(long, default_value = "lc")]
        logic: LogicTag,
    },
    /// Read a `Bm` instance off a disjunction of `P(f(s)) -> P(s)`.
    Extract {
        disjunction: String,
        #[arg(long, default_value = "f")]
        function: String,
        #[arg(long, default_value = "P")]
        predicate: String,
    },
    /// Validity of the characteristic schemas across logics.
    Schemas {
        /// Largest schema parameter.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(2..=7))]
        max: u64,
    },
    /// Print a random classical judgment for the seed.
    Generate {
        #[arg(long, default_value_t = 3)]
        terms: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

impl From<SemanticsError> for CliError {
    fn from(e: SemanticsError) -> Self {
        match e {
            SemanticsError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => usage(other),
        }
    }
}

impl From<EliminationError> for CliError {
    fn from(e: EliminationError) -> Self {
        match e {
            EliminationError::Semantics(s) => s.into(),
            EliminationError::Verification { .. } => CliError::Failed(e.to_string()),
            other => usage(other),
        }
    }
}

impl From<ReconstructError> for CliError {
    fn from(e: ReconstructError) -> Self {
        match e {
            ReconstructError::Elimination(inner) => inner.into(),
            other => usage(other),
        }
    }
}

/// What a command prints, in both formats, and its exit status.
#[derive(Debug, Clone)]
pub struct Report {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { code: 0, text, json }
    }

    fn verdict(valid: bool, text: String, json: Value) -> Self {
        Report { code: if valid { 0 } else { 1 }, text, json }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text if self.text.ends_with('\n') => self.text.clone(),
            Format::Text => format!("{}\n", self.text),
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("plain data")),
        }
    }
}

fn read_input(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(usage)?;
        return Ok(s);
    }
    if Path::new(arg).is_file() {
        return std::fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn formula_arg(arg: &str) -> Result<Formula, CliError> {
    parse_formula(read_input(arg)?.trim()).map_err(usage)
}

fn term_arg(arg: &str) -> Result<Term, CliError> {
    parse_term(read_input(arg)?.trim()).map_err(usage)
}

fn judgment_file(path: &str, logic: Option<LogicTag>) -> Result<Judgment, CliError> {
    let src = if path == "-" {
        read_input(path)?
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?
    };
    let mut j = Judgment::parse(&src).map_err(|e| usage(format!("{path}: {e}")))?;
    if let Some(l) = logic {
        j.logic = l;
    }
    Ok(j)
}

fn valuation_json(v: &Valuation, names: &[String]) -> Value {
    let map: serde_json::Map<String, Value> = names.iter().zip(&v.0).map(|(n, x)| (n.clone(), json!(x))).collect();
    Value::Object(map)
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let budget = Budget(cli.config.budget);
    match &cli.command {
        Command::Translate { formula, shadow: s, herbrandize } => cmd_translate(formula, *s, *herbrandize),
        Command::Eliminate { judgment, driver, logic, verify, first } => {
            let j = judgment_file(judgment, *logic)?;
            let first = first.as_deref().map(term_arg).transpose()?;
            let opts = DriverOptions { verify: (*verify).into(), budget, first };
            cmd_eliminate(&j, *driver, &opts)
        }
        Command::Check { formula, logic, sat } => cmd_check(&formula_arg(formula)?, *logic, *sat, budget),
        Command::Verify { judgment, logic } => cmd_verify(&judgment_file(judgment, *logic)?, budget),
        Command::Rank { term } => {
            let t = term_arg(term)?;
            let r = rank(&t);
            Ok(Report::ok(r.to_string(), json!({ "term": t.to_string(), "rank": r })))
        }
        Command::Degree { term } => {
            let t = term_arg(term)?;
            let d = degree(&t);
            Ok(Report::ok(d.to_string(), json!({ "term": t.to_string(), "degree": d })))
        }
        Command::Classify { formula, judgment } => match (formula, judgment) {
            (_, Some(path)) => {
                let j = judgment_file(path, None)?;
                cmd_classify(&j.criticals, &j.critical_terms())
            }
            (Some(f), None) => {
                let phi = formula_arg(f)?;
                let terms: Vec<Term> = recognize_critical(&phi).into_iter().map(|c| c.critical_term).collect();
                cmd_classify(&[phi], &terms)
            }
            (None, None) => Err(usage("give a formula or --judgment")),
        },
        Command::Reconstruct { disjunction, skeleton, holes, logic } => {
            let (j, trace) =
                reconstruct_from_herbrand(&formula_arg(disjunction)?, &formula_arg(skeleton)?, holes, *logic)?;
            let text = format!("{}\n{}", j.to_text(), trace.render_text());
            Ok(Report::ok(text, json!({ "judgment": j.to_text(), "trace": trace.to_json() })))
        }
        Command::Extract { disjunction, function, predicate } => {
            let x = bm_extract(&formula_arg(disjunction)?, function, predicate)?;
            let text = format!("B{}: {}", x.m, x.instance);
            Ok(Report::ok(text, json!({ "m": x.m, "instance": x.instance.to_string(), "towers": x.towers })))
        }
        Command::Schemas { max } => cmd_schemas(*max as usize, budget),
        Command::Generate { terms } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.config.seed);
            let j = generate::judgment(&mut rng, LogicTag::Classical, *terms);
            Ok(Report::ok(j.to_text(), json!({ "seed": cli.config.seed, "judgment": j.to_text() })))
        }
    }
}

fn cmd_translate(arg: &str, as_shadow: bool, herbrandize: bool) -> Result<Report, CliError> {
    let phi = formula_arg(arg)?;
    let (mode, out, fresh) = if as_shadow {
        ("shadow", shadow(&phi), Vec::new())
    } else if herbrandize {
        let (h, fresh) = herbrand_form(&phi).map_err(usage)?;
        ("herbrand", h, fresh)
    } else {
        ("et", et_translate(&phi).map_err(usage)?, Vec::new())
    };
    let doc = json!({ "input": phi.to_string(), "mode": mode, "output": out.to_string(), "fresh": fresh });
    Ok(Report::ok(out.to_string(), doc))
}

fn trace_report(trace: &EliminationTrace, verify: VerifyLevel) -> Report {
    let mut doc = trace.to_json();
    let mut text = trace.render_text();
    if verify > VerifyLevel::None {
        // the driver aborts on the first judgment that fails
        let checked = trace.steps.len() + 1 + usize::from(verify == VerifyLevel::Full);
        let level = if verify == VerifyLevel::Full { "full" } else { "steps" };
        doc["verification"] = json!({ "level": level, "checked": checked, "verdict": "valid" });
        let _ = writeln!(text, "verified ({level}): {checked} judgments valid");
    }
    Report::ok(text, doc)
}

fn cmd_eliminate(j: &Judgment, driver: Driver, opts: &DriverOptions) -> Result<Report, CliError> {
    let trace = match driver {
        Driver::Hb => run_elimination(j, opts)?,
        Driver::Jankov => run_jankov(j, opts)?,
        Driver::WeakLin => match run_weak_lin(j, opts)? {
            WeakLinOutcome::Success(t) => t,
            WeakLinOutcome::Failure(report) => {
                let text = format!("failure at {report}\nremaining judgment:\n{}", report.judgment.to_text());
                return Ok(Report { code: 1, text, json: report.to_json() });
            }
        },
    };
    Ok(trace_report(&trace, opts.verify))
}

fn cmd_check(phi: &Formula, logic: LogicTag, sat: bool, budget: Budget) -> Result<Report, CliError> {
    let (p, abs) = abstract_one(phi)?;
    let names = abs.names();
    let mut doc = json!({ "logic": logic, "formula": phi.to_string() });
    let decide = |p: &Prop, m: u32| if sat { sat_valid_in_lcm(p, m) } else { valid_in_lcm(p, m, budget) };
    let (verdict, chain) = match logic {
        LogicTag::Kc => {
            return Err(usage("check decides H, LC and the finite chains; KC has no decision procedure here"))
        }
        LogicTag::H => {
            return Ok(match prove_h(&[], &p) {
                Some(proof) => {
                    doc["verdict"] = json!("valid");
                    doc["proof"] = json!(proof.render(&names));
                    Report::ok(format!("valid\n{}", proof.render(&names)), doc)
                }
                None => {
                    doc["verdict"] = json!("invalid");
                    Report::verdict(false, "invalid: not provable in H".into(), doc)
                }
            });
        }
        LogicTag::Lc => {
            let m = lc_chain_size(&p);
            (decide(&p, m)?, m)
        }
        other => {
            let m = other.chain().expect("chain logic");
            (decide(&p, m)?, m)
        }
    };
    doc["chain"] = json!(chain);
    match verdict {
        Verdict::Valid => {
            doc["verdict"] = json!("valid");
            Ok(Report::ok(format!("valid on the chain of {chain} values"), doc))
        }
        Verdict::Invalid(v) => {
            doc["verdict"] = json!("invalid");
            let mut text = format!("invalid on the chain of {chain} values");
            if let Some(v) = v {
                doc["countervaluation"] = valuation_json(&v, &names);
                let _ = write!(text, ": {} (top = {})", v.render(&names), chain - 1);
            }
            Ok(Report::verdict(false, text, doc))
        }
    }
}

fn cmd_verify(j: &Judgment, budget: Budget) -> Result<Report, CliError> {
    let v = verify_judgment(j, budget)?;
    let verdict = if v.is_valid() { "valid" } else { "invalid" };
    let mut doc = json!({ "logic": j.logic, "judgment": j.to_string(), "verdict": verdict, "chain": v.chain });
    let mut text = verdict.to_string();
    if let Verdict::Invalid(Some(val)) = &v.verdict {
        doc["countervaluation"] = valuation_json(val, &v.atoms);
        let _ = write!(text, ": {}", val.render(&v.atoms));
    }
    Ok(Report::verdict(v.is_valid(), text, doc))
}

fn cmd_classify(formulas: &[Formula], terms: &[Term]) -> Result<Report, CliError> {
    let mut rows: Vec<ClassifiedCritical> = Vec::new();
    for phi in formulas {
        let readings = recognize_critical(phi);
        if readings.is_empty() {
            return Err(CliError::Failed(format!("not a critical formula: {phi}")));
        }
        rows.extend(readings.iter().map(|c| classify(c, terms)));
    }
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(
            text,
            "{}\n  {} term {} witness {}{}{} rank {} degree {}",
            r.formula,
            r.kind,
            r.critical_term,
            r.witness,
            if r.predicative { ", predicative" } else { ", impredicative" },
            if r.weak { ", weak" } else { "" },
            r.rank,
            r.degree
        );
    }
    Ok(Report::ok(text, json!(rows)))
}

fn schema_rows(max: usize) -> Vec<SchemaKind> {
    let mut kinds = vec![SchemaKind::Em, SchemaKind::J, SchemaKind::Lin];
    kinds.extend((2..=max).map(SchemaKind::Bm));
    kinds.extend((2..max).map(SchemaKind::Rn));
    kinds
}

fn cmd_schemas(max: usize, budget: Budget) -> Result<Report, CliError> {
    let chains: Vec<u32> = (2..=max as u32 + 1).collect();
    let mut header = format!("{:<8}", "schema");
    for m in &chains {
        let _ = write!(header, " {:>4}", format!("LC{m}"));
    }
    let _ = write!(header, " {:>4} {:>4}", "LC", "H");
    let mut text = header + "\n";
    let mut rows = Vec::new();
    for kind in schema_rows(max) {
        let atoms: Vec<Formula> = (1..=kind.arity()).map(|i| Formula::prop(&format!("A{i}"))).collect();
        let instance: Formula = schema(kind, &atoms)?;
        let (p, _) = abstract_one(&instance)?;
        let mut valid = serde_json::Map::new();
        let mut line = format!("{:<8}", kind.to_string());
        let mut mark = |key: String, ok: bool, line: &mut String| {
            let _ = write!(line, " {:>4}", if ok { "yes" } else { "no" });
            valid.insert(key, json!(ok));
        };
        for &m in &chains {
            mark(format!("LC{m}"), valid_in_lcm(&p, m, budget)?.is_valid(), &mut line);
        }
        mark("LC".into(), valid_in_lcm(&p, lc_chain_size(&p), budget)?.is_valid(), &mut line);
        mark("H".into(), prove_h(&[], &p).is_some(), &mut line);
        text.push_str(&line);
        text.push('\n');
        rows.push(json!({ "schema": kind.to_string(), "instance": instance.to_string(), "valid": valid }));
    }
    let relations = schema_relations_check(2..=max)?;
    for r in &relations {
        let _ = writeln!(text, "B{} |-_H Lin: {}   B{} |-_H R{}: {}", r.m, r.entails_lin, r.m, r.m - 1, r.entails_r);
    }
    Ok(Report::ok(text, json!({ "rows": rows, "relations": relations })))
}

/// Entry point for the binary: parse, run, print, and map outcomes to
/// exit codes (0 ok, 1 invalid or failure, 2 usage, 3 budget).
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.config.format));
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("epsilon: {e}");
            ExitCode::from(e.code())
        }
    }
}
