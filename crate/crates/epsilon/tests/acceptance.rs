//! Acceptance checks 1-11. Each prints one PASS/FAIL line; the process
//! exits non-zero if any fails. Case counts and bounds are pinned below.

mod common;

use std::process::ExitCode;

use common::{f, fixture, rng, t, tautology};
use epsilon_elim::critical::{measure, rank, recognize_critical, CriticalFormula};
use epsilon_elim::eliminate::{
    bm_extract, eliminate_complete_classical, eliminate_complete_gm, eliminate_negated_jankov,
    eliminate_single_classical, ground, reconstruct_from_herbrand, run_elimination, run_weak_lin, DriverOptions,
    Judgment, LogicTag, VerifyLevel, WeakLinOutcome,
};
use epsilon_elim::generate;
use epsilon_elim::semantics::{
    abstract_one, counterexample_bm, decide_lc, eval_godel, match_schema, prove_h, schema, schema_relations_check,
    valid_in_lcm, verify_judgment, Abstraction, Budget, Prop, SchemaKind,
};
use epsilon_elim::syntax::{match_matrix, Formula};
use epsilon_elim::translate::{quantifier_shift_instance, shadow, QuantifierShiftKind, ShiftCertificate};

/// Largest `m` the forking Herbrand disjunction may need.
const FORKING_MAX_M: usize = 2;
/// Schema parameters checked on chains.
const SCHEMA_MS: std::ops::RangeInclusive<usize> = 2..=5;
const RANDOM_CRITICALS: u64 = 200;
const CRITICAL_DEPTH: usize = 3;
const RANDOM_JUDGMENTS: u64 = 100;
const MAX_TERMS: usize = 3;
const MAX_RANK: usize = 2;
const HERBRAND_SAMPLES: u64 = 50;
const HERBRAND_ROWS: usize = 3;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn h_entails(premises: &[Formula], goal: &Formula) -> Result<bool, String> {
    let mut abs = Abstraction::new();
    let ps = premises.iter().map(|p| abs.abstract_formula(p)).collect::<Result<Vec<Prop>, _>>().map_err(err)?;
    let g = abs.abstract_formula(goal).map_err(err)?;
    Ok(prove_h(&ps, &g).is_some())
}

fn forking_pipeline() -> Outcome {
    let j = fixture("forking.jdg");
    let trace = run_elimination(&j, &DriverOptions::default()).map_err(err)?;
    ensure(trace.result.is_choice_free(), || format!("result keeps choice terms: {}", trace.result))?;
    let matrix = f("P(f(z)) -> P(z)");
    for d in trace.result.disjuncts() {
        ensure(!match_matrix(&matrix, "z", d).is_none(), || format!("{d} is not an instance of {matrix}"))?;
    }
    ensure(tautology(&trace.result), || format!("not a tautology: {}", trace.result))?;
    let bm = bm_extract(&trace.result, "f", "P").map_err(err)?;
    ensure(bm.m <= FORKING_MAX_M, || format!("bm_extract gave m = {}", bm.m))?;
    Ok(format!("{} disjuncts, B{}", trace.result.disjuncts().len(), bm.m))
}

fn schema_table() -> Outcome {
    let budget = Budget::default();
    let atoms = |n: usize| (0..n).map(Prop::Atom).collect::<Vec<_>>();
    for m in SCHEMA_MS {
        let bm = schema(SchemaKind::Bm(m), &atoms(m + 1)).map_err(err)?;
        ensure(valid_in_lcm(&bm, m as u32, budget).map_err(err)?.is_valid(), || format!("B{m} fails on {m} values"))?;
        ensure(!valid_in_lcm(&bm, m as u32 + 1, budget).map_err(err)?.is_valid(), || {
            format!("B{m} holds on {} values", m + 1)
        })?;
        let (chain, v) = counterexample_bm(m).map_err(err)?;
        ensure(chain.size() == m as u32 + 1, || format!("counterexample for B{m} uses {} values", chain.size()))?;
        let value = eval_godel(&bm, &v, chain).map_err(err)?;
        ensure(value < chain.top(), || format!("counterexample for B{m} evaluates to top"))?;
    }
    let lin = schema(SchemaKind::Lin, &atoms(2)).map_err(err)?;
    for m in 2..=*SCHEMA_MS.end() as u32 + 1 {
        ensure(valid_in_lcm(&lin, m, budget).map_err(err)?.is_valid(), || format!("Lin fails on {m} values"))?;
    }
    ensure(decide_lc(&lin, budget).map_err(err)?.is_valid(), || "Lin fails in LC".into())?;
    let j = schema(SchemaKind::J, &atoms(1)).map_err(err)?;
    ensure(decide_lc(&j, budget).map_err(err)?.is_valid(), || "J fails in LC".into())?;
    let em = schema(SchemaKind::Em, &atoms(1)).map_err(err)?;
    ensure(!valid_in_lcm(&em, 3, budget).map_err(err)?.is_valid(), || "A | ~A holds on 3 values".into())?;
    Ok(format!("B{}..B{} separated", SCHEMA_MS.start(), SCHEMA_MS.end()))
}

fn quantifier_shifts() -> Outcome {
    let sides = [(f("A(x)"), f("B")), (f("Q(x, c) | R(f(x))"), f("S(d) & T"))];
    let (mut critical_rows, mut proof_rows) = (0, 0);
    for (a, b) in &sides {
        for kind in QuantifierShiftKind::ALL {
            let row = quantifier_shift_instance(kind, a, "x", b).map_err(err)?;
            match &row.certificate {
                ShiftCertificate::Critical { matrix, t1, t2 } => {
                    let ok = recognize_critical(&row.translation).iter().any(|r| {
                        r.matrix == *matrix
                            && ((r.witness == *t1 && r.critical_term == *t2)
                                || (r.critical_term == *t1 && r.witness == *t2))
                    });
                    ensure(ok, || format!("{}: {} not critical for its witnesses", kind.name(), row.translation))?;
                    critical_rows += 1;
                }
                ShiftCertificate::ModusPonens { critical, principle } => {
                    ensure(!recognize_critical(critical).is_empty(), || {
                        format!("{}: {critical} not critical", kind.name())
                    })?;
                    ensure(h_entails(&[], principle)?, || format!("{}: principle unprovable", kind.name()))?;
                    ensure(h_entails(&[critical.clone(), principle.clone()], &row.translation)?, || {
                        format!("{}: translation does not follow", kind.name())
                    })?;
                    proof_rows += 1;
                }
            }
        }
    }
    ensure(critical_rows == 9 * sides.len(), || format!("{critical_rows} critical rows"))?;
    Ok(format!("{} critical rows, {} modus-ponens rows", critical_rows / sides.len(), proof_rows / sides.len()))
}

fn conservativity() -> Outcome {
    let provable = |phi: &Formula| -> Result<bool, String> { h_entails(&[], &shadow(phi)) };
    for seed in 0..RANDOM_CRITICALS {
        let c = generate::critical_formula(&mut rng(seed), CRITICAL_DEPTH);
        ensure(provable(&c.rendered)?, || format!("shadow of {} unprovable", c.rendered))?;
    }
    let b_implies_b = |phi: &Formula| matches!(shadow(phi), Formula::Imp(l, r) if l == r);
    for matrix in ["A(x)", "Q(x, c) -> R(x)", "~P(f(x)) | S"] {
        let a = f(matrix);
        let inst = a.subst_var("x", &t("g(c)"));
        let axioms =
            [Formula::imp(Formula::all("x", a.clone()), inst.clone()), Formula::imp(inst, Formula::ex("x", a.clone()))];
        for ax in &axioms {
            ensure(b_implies_b(ax), || format!("shadow of {ax} is {}", shadow(ax)))?;
        }
        for kind in QuantifierShiftKind::ALL.into_iter().filter(|k| k.is_critical_row()) {
            let row = quantifier_shift_instance(kind, &a, "x", &f("B")).map_err(err)?;
            ensure(b_implies_b(&row.shift), || {
                format!("{}: shadow of {} is {}", kind.name(), row.shift, shadow(&row.shift))
            })?;
        }
    }
    Ok(format!("{RANDOM_CRITICALS} critical shadows provable"))
}

fn lc3_words() -> Outcome {
    let j = fixture("lc3_words.jdg");
    let e = t("eps x. A(x)");
    let steps = eliminate_complete_gm(&j, &e, 3).map_err(err)?;
    let impred = &steps[0];
    let d = j.goal_formula();
    let mut expected: Vec<Formula> = Vec::new();
    for w in ["e", "s(e)", "t(e)", "s(s(e))", "s(t(e))", "t(s(e))", "t(t(e))"] {
        let term = t(&w.replace('e', "eps x. A(x)"));
        expected.push(d.subst_term(&e, &term));
    }
    let mut got = impred.after.goal.clone();
    ensure(got.len() == 7, || format!("{} goal disjuncts after the B3 step", got.len()))?;
    got.sort_by_key(|g| g.to_string());
    expected.sort_by_key(|g| g.to_string());
    ensure(got == expected, || "goal is not D over the seven words".into())?;
    let bm: Vec<&Formula> =
        impred.axiom_instances.iter().filter(|i| match_schema(SchemaKind::Bm(3), *i).is_some()).collect();
    let rest: Vec<&Formula> =
        impred.axiom_instances.iter().filter(|i| match_schema(SchemaKind::Bm(3), *i).is_none()).collect();
    ensure(bm.len() == 8, || format!("{} B3 instances, want one per word of length 3", bm.len()))?;
    for i in &rest {
        let lin = (1..=3).any(|k| match_schema(SchemaKind::IteratedLin(k), *i).is_some());
        ensure(lin, || format!("instance {i} is neither B3 nor a Lin consequence"))?;
    }
    let opts = DriverOptions { verify: VerifyLevel::Steps, ..DriverOptions::default() };
    let trace = run_elimination(&j, &opts).map_err(err)?;
    let v = verify_judgment(&trace.last, Budget::default()).map_err(err)?;
    ensure(v.is_valid() && v.chain == Some(3), || "final judgment fails on 3 values".into())?;
    Ok(format!("7 words, {} B3 instances, {} Lin consequences", bm.len(), rest.len()))
}

/// `P(a_i) -> P(e)` for `i < k`, with their conjunction as goal.
fn ground_witness_fixture(k: usize) -> Judgment {
    let criticals: Vec<Formula> = (1..=k).map(|i| f(&format!("P(a{i}) -> P(eps x. P(x))"))).collect();
    Judgment::new(LogicTag::Classical, criticals.clone(), Formula::conj(criticals))
}

fn disjunct_counts() -> Outcome {
    let e = t("eps x. P(x)");
    let mut report = Vec::new();
    let mut failures = Vec::new();
    for k in [2usize, 3] {
        let j = ground_witness_fixture(k);
        let complete = eliminate_complete_classical(&j, &e).map_err(err)?;
        let (last, _) = ground(&complete.after);
        ensure(complete.after.goal.len() <= k + 1, || format!("k={k}: complete gives {}", complete.after.goal.len()))?;
        ensure(tautology(&last.goal_formula()), || format!("k={k}: complete result not a tautology"))?;

        let mut cur = j.clone();
        let mut raw = 1;
        for i in 1..=k {
            let c: CriticalFormula = recognize_critical(&f(&format!("P(a{i}) -> P(eps x. P(x))"))).remove(0);
            let step = eliminate_single_classical(&cur, &c).map_err(err)?;
            raw *= step.raw_disjuncts / cur.goal.len().max(1);
            cur = step.after;
        }
        let (last, _) = ground(&cur);
        ensure(tautology(&last.goal_formula()), || format!("k={k}: iterated result not a tautology"))?;
        report.push(format!("k={k}: {} vs {raw}", complete.after.goal.len()));
        if raw != 1 << (k + 1) {
            failures
                .push(format!("k={k}: iterated single elimination gives {raw} disjuncts, expected {}", 1 << (k + 1)));
        }
    }
    if failures.is_empty() {
        Ok(report.join("; "))
    } else {
        Err(failures.join("; "))
    }
}

fn termination_measure() -> Outcome {
    let mut steps = 0;
    for seed in 0..RANDOM_JUDGMENTS {
        let j = generate::judgment(&mut rng(seed), LogicTag::Classical, MAX_TERMS);
        let terms = j.critical_terms();
        ensure(terms.len() <= MAX_TERMS && terms.iter().all(|e| rank(e) <= MAX_RANK), || {
            format!("seed {seed}: generator exceeded its bounds")
        })?;
        let trace = run_elimination(&j, &DriverOptions::default()).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(trace.measures.windows(2).all(|w| w[1] < w[0]), || format!("seed {seed}: {:?}", trace.measures))?;
        ensure(trace.measures.first() == Some(&measure(&terms)), || format!("seed {seed}: first measure"))?;
        ensure(tautology(&trace.result), || format!("seed {seed}: result not a tautology"))?;
        ensure(verify_judgment(&trace.last, Budget::default()).map_err(err)?.is_valid(), || {
            format!("seed {seed}: last judgment invalid")
        })?;
        steps += trace.steps.len();
    }
    Ok(format!("{RANDOM_JUDGMENTS} judgments, {steps} steps"))
}

fn weak_lin_negative() -> Outcome {
    let j = fixture("weak_lin_fork.jdg");
    for first in ["eps x. A(x)", "eps y. B(y)"] {
        let opts = DriverOptions { first: Some(t(first)), ..DriverOptions::default() };
        match run_weak_lin(&j, &opts).map_err(err)? {
            WeakLinOutcome::Success(_) => return Err(format!("eliminating {first} first succeeded")),
            WeakLinOutcome::Failure(r) => {
                let impred =
                    recognize_critical(&r.formula).iter().any(|c| c.critical_term == r.target && !c.is_predicative());
                ensure(impred, || format!("{first} first: {} is not impredicative", r.formula))?;
            }
        }
    }
    Ok("stuck in both orders".into())
}

fn reconstruction() -> Outcome {
    let skeleton = f("D(x, y)");
    let holes = vec!["x".to_string(), "y".to_string()];
    for seed in 0..HERBRAND_SAMPLES {
        let rows = generate::herbrand_rows(&mut rng(seed), 2, 1 + seed as usize % HERBRAND_ROWS);
        let disjuncts: Vec<Formula> = rows.into_iter().map(|r| Formula::atom("D", r)).collect();
        let (j, _) = reconstruct_from_herbrand(&Formula::disj(disjuncts.clone()), &skeleton, &holes, LogicTag::Lc)
            .map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(j.criticals.iter().flat_map(recognize_critical).all(|c| c.is_predicative()), || {
            format!("seed {seed}: impredicative critical formula")
        })?;
        let trace = match run_weak_lin(&j, &DriverOptions::default()).map_err(err)? {
            WeakLinOutcome::Success(t) => t,
            WeakLinOutcome::Failure(r) => return Err(format!("seed {seed}: {r}")),
        };
        let key = |fs: Vec<&Formula>| {
            let mut v: Vec<String> = fs.into_iter().map(ToString::to_string).collect();
            v.sort();
            v.dedup();
            v
        };
        ensure(key(trace.result.disjuncts()) == key(disjuncts.iter().collect()), || {
            format!("seed {seed}: {} vs {}", trace.result, Formula::disj(disjuncts.clone()))
        })?;
    }
    Ok(format!("{HERBRAND_SAMPLES} disjunctions reproduced"))
}

fn schema_relations() -> Outcome {
    let rows = schema_relations_check(SCHEMA_MS).map_err(err)?;
    for r in &rows {
        ensure(r.entails_lin && r.entails_r, || format!("m = {}: {:?}", r.m, r))?;
    }
    Ok(format!("{} rows", rows.len()))
}

fn jankov_negated_goal() -> Outcome {
    let j = fixture("jankov.jdg");
    let step = eliminate_negated_jankov(&j, &t("eps x. A(x)")).map_err(err)?;
    ensure(step.eliminated.len() == 2, || format!("{} criticals eliminated", step.eliminated.len()))?;
    for i in &step.axiom_instances {
        ensure(match_schema(SchemaKind::J, i).is_some(), || format!("{i} is not weak excluded middle"))?;
    }
    ensure(step.after.criticals.is_empty(), || "critical formulas remain".into())?;
    let premises: Vec<Formula> = step.after.premises().cloned().collect();
    ensure(h_entails(&premises, &step.after.goal_formula())?, || format!("{} fails in H", step.after))?;
    ensure(abstract_one(&step.after.goal_formula()).is_ok(), || "goal not propositional".into())?;
    Ok(format!("{} J instances", step.axiom_instances.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("forking pipeline", forking_pipeline),
        ("schema table", schema_table),
        ("quantifier shifts", quantifier_shifts),
        ("conservativity", conservativity),
        ("three-valued words", lc3_words),
        ("disjunct counts", disjunct_counts),
        ("termination measure", termination_measure),
        ("predicative driver stuck", weak_lin_negative),
        ("reconstruction round trip", reconstruction),
        ("schema relations", schema_relations),
        ("negated goal with J", jankov_negated_goal),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", n + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
