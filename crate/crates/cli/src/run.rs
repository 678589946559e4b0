use std::fs;
use std::path::Path;

use ncrw_ars::{analyze_ars, FiniteArs};
use ncrw_aon::{aon_rules, aon_verify, basis_words};
use ncrw_automaton::{Dfa, DfaJson};
use ncrw_core::json::{poly_from_json, poly_to_json, TermJson};
use ncrw_core::{Polynomial, Word};
use ncrw_homology::{ext_dims, hh_dims, k_values, build_d, Block, MatrixJson, Phi3Sign, RationalMatrix};
use ncrw_resolution::{containment_check, stage_kernel, stage_system, stage_system_unchecked, verify_stage, ResolutionStage};
use ncrw_rewrite::json::{report_json, system_from_str, system_to_string, trace_json};
use ncrw_rewrite::modext::graph_system;
use ncrw_rewrite::{knuth_bendix, Completion, RewriteSystem, VerifyReport};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::args::*;
use crate::suite;
use crate::CliError;

/// Outcome of a command that produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// The checked property does not hold; the report carries the witness.
    Failed,
    /// A bound was hit before the property could be decided.
    Limit,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Limit => 3,
        }
    }

    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Ok
        } else {
            Status::Failed
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub status: Status,
    pub value: Value,
    /// Preformatted text, used by `--text` instead of the generic rendering.
    pub text: Option<String>,
}

impl Report {
    fn new(status: Status, value: Value) -> Report {
        Report { status, value, text: None }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_system(path: &Path) -> Result<RewriteSystem, CliError> {
    Ok(system_from_str(&read(path)?)?)
}

fn load_matrix(path: &Path) -> Result<RationalMatrix, CliError> {
    Ok(RationalMatrix::from_json(&read_json::<MatrixJson>(path)?)?)
}

/// Limit failures alone give `Limit`; any genuine failure gives `Failed`.
fn verify_status(r: &VerifyReport) -> Status {
    if r.complete {
        Status::Ok
    } else if r.failures.iter().all(|f| f.is_limit()) {
        Status::Limit
    } else {
        Status::Failed
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let limit = cli.step_limit;
    match &cli.command {
        Command::Ars(ArsCommand::Analyze { input }) => {
            let ars: FiniteArs = read_json(input)?;
            Ok(Report::new(Status::Ok, serde_json::to_value(analyze_ars(&ars)?)?))
        }
        Command::Reduce(a) => reduce(a, limit),
        Command::Verify(a) => {
            let sys = load_system(&a.system)?;
            let r = sys.verify_complete(limit);
            Ok(Report::new(verify_status(&r), report_json(&r, &sys)))
        }
        Command::Complete(a) => complete(a, limit),
        Command::Kernel(a) => kernel(a, limit),
        Command::Aon(c) => aon(c, limit),
        Command::Automaton(c) => automaton(c),
        Command::Resolution(c) => resolution(c, limit),
        Command::Homology(a) => homology(a),
        Command::PaperSuite => {
            let results = suite::run_all(limit);
            let ok = results.iter().all(|r| r.passed);
            let text = results.iter().map(|r| r.line()).collect::<Vec<_>>().join("\n");
            Ok(Report { status: Status::from_bool(ok), value: json!({ "criteria": results, "all_passed": ok }), text: Some(text) })
        }
    }
}

fn reduce(a: &ReduceArgs, limit: u64) -> Result<Report, CliError> {
    let sys = load_system(&a.system)?;
    let alphabet = sys.alphabet();
    let p = match (&a.poly, &a.word) {
        (Some(path), _) => poly_from_json(&read_json::<Vec<TermJson>>(path)?, alphabet)?,
        (None, Some(w)) => Polynomial::monomial(alphabet.parse_word(w)?),
        (None, None) => return Err(CliError::Input("one of --poly or --word is required".into())),
    };
    let (nf, trace) = sys.normal_form_traced(&p, limit)?;
    let mut value = json!({ "normal_form": poly_to_json(&nf, alphabet), "rendered": nf.render(alphabet) });
    if a.trace {
        value["trace"] = trace_json(&trace, alphabet, &sys);
    }
    Ok(Report::new(Status::Ok, value))
}

fn complete(a: &CompleteArgs, limit: u64) -> Result<Report, CliError> {
    let sys = load_system(&a.system)?;
    let c = knuth_bendix(&sys, a.max_rules, limit)?;
    let out = c.system();
    if let Some(path) = &a.out {
        write(path, &system_to_string(out))?;
    }
    let rules: Vec<String> = out.rules().iter().map(|r| format!("{} -> {}", out.alphabet().render_word(&r.lhs), r.rhs.render(out.alphabet()))).collect();
    Ok(match &c {
        Completion::Completed(_) => Report::new(Status::Ok, json!({ "completed": true, "rules": rules })),
        Completion::Exhausted { pending, reason, .. } => Report::new(
            Status::Limit,
            json!({ "completed": false, "reason": reason, "pending": pending.len(), "rules": rules }),
        ),
    })
}

#[derive(Deserialize)]
struct PhiFile {
    images: Vec<PhiImage>,
}

#[derive(Deserialize)]
struct PhiImage {
    generator: String,
    image: Vec<TermJson>,
}

fn kernel(a: &KernelArgs, limit: u64) -> Result<Report, CliError> {
    let r_a = load_system(&a.algebra)?;
    let phi: PhiFile = read_json(&a.phi)?;
    let alphabet = r_a.alphabet();
    let images = phi
        .images
        .iter()
        .map(|i| Ok((alphabet.parse_letter(&i.generator)?, poly_from_json(&i.image, alphabet)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let split = graph_system(&images, &r_a)?;
    let report = split.verify_weak_complete(limit);
    let status = verify_status(&report);
    if status != Status::Ok {
        return Ok(Report::new(status, json!({ "weakly_complete": false, "report": report_json(&report, &split.base) })));
    }
    let gens = split.kernel_generators(&report)?;
    let gens: Vec<_> = gens.iter().map(|g| g.to_json(split.base.alphabet())).collect();
    Ok(Report::new(Status::Ok, json!({ "weakly_complete": true, "generators": gens })))
}

fn aon(c: &AonCommand, limit: u64) -> Result<Report, CliError> {
    match c {
        AonCommand::Gen { n, out } => {
            let text = system_to_string(&aon_rules(*n));
            match out {
                Some(path) => {
                    write(path, &text)?;
                    Ok(Report::new(Status::Ok, json!({ "written": path.display().to_string() })))
                }
                None => Ok(Report::new(Status::Ok, serde_json::from_str(&text)?)),
            }
        }
        AonCommand::Verify { n } => {
            let r = aon_verify(*n, limit);
            let sys = aon_rules(*n);
            let mut value = report_json(&r.verify, &sys);
            value["n"] = json!(n);
            value["rules"] = json!(r.rules);
            value["ideal_failures"] = json!(r.ideal_failures);
            value["complete"] = json!(r.complete());
            let status = if r.complete() { Status::Ok } else if r.ideal_failures.is_empty() { verify_status(&r.verify) } else { Status::Failed };
            Ok(Report::new(status, value))
        }
        AonCommand::Basis { n, max_len, count_only } => {
            let sys = aon_rules(*n);
            let basis = basis_words(&sys, *max_len);
            let counts: Vec<usize> = basis.iter().map(Vec::len).collect();
            let mut value = json!({ "counts": counts });
            if !count_only {
                let words: Vec<Vec<String>> =
                    basis.iter().map(|ws| ws.iter().map(|w| sys.alphabet().render_word(w)).collect()).collect();
                value["words"] = json!(words);
            }
            Ok(Report::new(Status::Ok, value))
        }
    }
}

fn automaton(c: &AutomatonCommand) -> Result<Report, CliError> {
    match c {
        AutomatonCommand::Build { system, out, minimize, dot } => {
            let sys = load_system(system)?;
            let lhs: Vec<Word> = sys.rules().iter().map(|r| r.lhs.clone()).collect();
            let mut dfa = Dfa::build(&lhs, sys.alphabet())?;
            if *minimize {
                dfa = dfa.minimize();
            }
            if let Some(path) = dot {
                write(path, &dfa.to_dot())?;
            }
            let j = serde_json::to_value(dfa.to_json())?;
            match out {
                Some(path) => {
                    write(path, &serde_json::to_string_pretty(&j)?)?;
                    Ok(Report::new(Status::Ok, json!({ "states": dfa.num_states(), "written": path.display().to_string() })))
                }
                None => Ok(Report::new(Status::Ok, j)),
            }
        }
        AutomatonCommand::Count { dfa, length } => {
            let d = Dfa::from_json(&read_json::<DfaJson>(dfa)?)?;
            Ok(Report::new(Status::Ok, json!({ "length": length, "count": d.count_words(*length).to_string() })))
        }
        AutomatonCommand::Check { dfa, word } => {
            let d = Dfa::from_json(&read_json::<DfaJson>(dfa)?)?;
            let w = d.parse_word(word)?;
            Ok(Report::new(Status::Ok, json!({ "word": word, "irreducible": d.is_irreducible(&w)? })))
        }
    }
}

fn build_stage(a: &StageArgs) -> Result<ResolutionStage, CliError> {
    Ok(if a.allow_small_n { stage_system_unchecked(a.n, a.stage)? } else { stage_system(a.n, a.stage)? })
}

fn resolution(c: &ResolutionCommand, limit: u64) -> Result<Report, CliError> {
    match c {
        ResolutionCommand::Gen { stage, out } => {
            let st = build_stage(stage)?;
            let text = system_to_string(st.system());
            match out {
                Some(path) => {
                    write(path, &text)?;
                    Ok(Report::new(Status::Ok, json!({ "rules": st.system().len(), "written": path.display().to_string() })))
                }
                None => Ok(Report::new(Status::Ok, serde_json::from_str(&text)?)),
            }
        }
        ResolutionCommand::Verify { stage } => {
            let st = build_stage(stage)?;
            let r = verify_stage(&st, limit);
            let containment = if r.weakly_complete { containment_check(&st, limit)? } else { Vec::new() };
            let ok = r.weakly_complete && containment.iter().all(|c| c.ok());
            let mut value = serde_json::to_value(&r)?;
            value["complete"] = json!(r.weakly_complete);
            value["overlaps"] = json!(r.report.overlaps_total);
            value["quotient_resolved"] = json!(r.report.quotient_resolved);
            value["failures"] = report_json(&r.report, st.system())["failures"].clone();
            value["containment"] = serde_json::to_value(&containment)?;
            let status = if ok { Status::Ok } else if r.weakly_complete { Status::Failed } else { verify_status(&r.report) };
            Ok(Report::new(status, value))
        }
        ResolutionCommand::Kernel { stage } => {
            let st = build_stage(stage)?;
            let ks = stage_kernel(&st, limit)?;
            let ok = ks.iter().all(|k| k.ok);
            Ok(Report::new(Status::from_bool(ok), json!({ "generators": ks })))
        }
    }
}

fn homology(a: &HomologyArgs) -> Result<Report, CliError> {
    let lambda = load_matrix(&a.lambda)?;
    let omega = load_matrix(&a.omega)?;
    let sign = if a.plus_sign { Phi3Sign::Plus } else { Phi3Sign::Minus };
    let dims = if a.ext { ext_dims(&lambda, &omega, sign)? } else { hh_dims(&lambda, &omega, sign)? };
    let mut value = serde_json::to_value(&dims)?;
    let mut status = Status::Ok;
    if let Some(path) = &a.blocks {
        let blocks: Vec<Block> = read_json(path)?;
        let psi = omega.mul(&lambda.transpose())?;
        let k = k_values(&psi, &blocks)?;
        let n2 = psi.rows() * psi.rows();
        let rank = RationalMatrix::identity(n2).add(&build_d(&psi)?)?.rank();
        let agrees = rank + k.total() == n2;
        value["k_values"] = serde_json::to_value(k)?;
        value["k_rank_identity"] = json!(agrees);
        status = Status::from_bool(agrees);
    }
    Ok(Report::new(status, value))
}

/// Indented `key: value` rendering of a JSON report.
pub fn render_text(v: &Value) -> String {
    fn go(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    if x.is_object() || (x.is_array() && x.as_array().is_some_and(|a| a.iter().any(|y| y.is_object() || y.is_array()))) {
                        out.push_str(&format!("{pad}{k}:\n"));
                        go(x, indent + 1, out);
                    } else {
                        out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
                    }
                }
            }
            Value::Array(a) => {
                for x in a {
                    if x.is_object() || x.is_array() {
                        out.push_str(&format!("{pad}-\n"));
                        go(x, indent + 1, out);
                    } else {
                        out.push_str(&format!("{pad}- {}\n", scalar(x)));
                    }
                }
            }
            x => out.push_str(&format!("{pad}{}\n", scalar(x))),
        }
    }
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
            x => x.to_string(),
        }
    }
    let mut out = String::new();
    go(v, 0, &mut out);
    out
}
