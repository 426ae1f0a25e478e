//! Batch driver behind the `lamech` binary. Each command reads one file and
//! returns a [`RunReport`] per query.

use std::fmt;
use std::path::Path;

use lamech_core::DomainValue;
use lamech_flowchart::{
    declarative_relation, operational_relation, run_program, DataState, FlowError, Limits, ProgramOutcome,
    RenamePolicy,
};
use lamech_frontends::{
    as_flowchart, build_fol, parse_flow, parse_fol, parse_lambda_file, pretty_lambda, pretty_value, FolBuildError,
    FolQuery, ParseError,
};
use lamech_lambda::{normalize, LambdaError, Normalization};
use lamech_logic::{denotation, eval_formula, eval_term, minimal_model, validate_extension, DfpContext, LogicError};
use serde::Serialize;
use serde_json::{json, Value};

pub const DEFAULT_MAX_STEPS: usize = 10_000;
pub const DEFAULT_MAX_DEPTH: usize = 256;
pub const DEFAULT_MAX_ROUNDS: usize = 10_000;
pub const DEFAULT_BOUND: u64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Halted,
    Timeout,
    DepthLimit,
    NormalForm,
    StepLimit,
    Value,
    Model,
    Agree,
    Disagree,
}

impl Verdict {
    /// Whether the verdict means the run did not produce its answer.
    pub fn is_error(self) -> bool {
        matches!(self, Verdict::Timeout | Verdict::DepthLimit | Verdict::StepLimit | Verdict::Disagree)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One answer. `payload` is a term, a value, relation rows, or a data state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub file: String,
    pub verdict: Verdict,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rounds: Option<usize>,
}

impl RunReport {
    fn new(command: &str, file: &str, verdict: Verdict, payload: Value) -> Self {
        RunReport { command: command.into(), file: file.into(), verdict, payload, steps: None, rounds: None }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// One human-readable line.
    pub fn to_text(&self) -> String {
        let mut head = format!("{}: {}", self.file, self.verdict);
        if let Some(s) = self.steps {
            head.push_str(&format!(" after {s} steps"));
        }
        if let Some(r) = self.rounds {
            head.push_str(&format!(" in {r} rounds"));
        }
        match &self.payload {
            Value::Null => head,
            Value::String(s) => format!("{head}: {s}"),
            other => format!("{head}: {other}"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Parse(ParseError, String),
    #[error("{file}: {source}")]
    Fol { file: String, source: FolBuildError },
    #[error("{file}: {source}")]
    Logic { file: String, source: LogicError },
    #[error("{file}: {source}")]
    Lambda { file: String, source: LambdaError },
    #[error("{file}: {source}")]
    Flow { file: String, source: FlowError },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// The message with the offending source line and a caret, for parse
    /// errors.
    pub fn render(&self) -> String {
        match self {
            CliError::Parse(e, text) => {
                let line = text.split('\n').nth(e.span.line - 1).unwrap_or("");
                let width = e.span.col_end.saturating_sub(e.span.col_start).max(1);
                format!("{e}\n  {line}\n  {}{}", " ".repeat(e.span.col_start - 1), "^".repeat(width))
            }
            other => other.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<(String, String), CliError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: name.clone(), source })?;
    Ok((name, text))
}

pub fn lam_normalize(path: &Path, max_steps: usize) -> Result<Vec<RunReport>, CliError> {
    let (file, text) = read(path)?;
    let terms = parse_lambda_file(&text, &file).map_err(|e| CliError::Parse(e, text.clone()))?;
    terms
        .iter()
        .map(|t| {
            let n = normalize(t, max_steps).map_err(|source| CliError::Lambda { file: file.clone(), source })?;
            let verdict = match n {
                Normalization::NormalForm { .. } => Verdict::NormalForm,
                Normalization::StepLimit { .. } => Verdict::StepLimit,
            };
            let mut r = RunReport::new("lam normalize", &file, verdict, json!(pretty_lambda(n.term())));
            r.steps = Some(n.steps());
            Ok(r)
        })
        .collect()
}

fn value_json(v: &DomainValue) -> Value {
    match v {
        DomainValue::Nat(n) => json!(n),
        other => json!(pretty_value(other)),
    }
}

pub fn fol_eval(path: &Path) -> Result<Vec<RunReport>, CliError> {
    let (file, text) = read(path)?;
    let doc = parse_fol(&text, &file).map_err(|e| CliError::Parse(e, text.clone()))?;
    let setup = build_fol(&doc, None).map_err(|source| CliError::Fol { file: file.clone(), source })?;
    let logic = |source| CliError::Logic { file: file.clone(), source };
    setup
        .queries
        .iter()
        .map(|q| {
            let payload = match q {
                FolQuery::Eval { term, with } => value_json(&eval_term(&setup.interp, with, term).map_err(logic)?),
                FolQuery::Holds { formula, with } => json!(eval_formula(&setup.interp, with, formula).map_err(logic)?),
                FolQuery::Denote(f) => {
                    let rel = denotation(&setup.interp, f).map_err(logic)?;
                    let rows: Vec<Value> = rel
                        .rows()
                        .iter()
                        .map(|row| {
                            Value::Object(row.iter().map(|(k, v)| (k.to_string(), value_json(v))).collect())
                        })
                        .collect();
                    json!(rows)
                }
            };
            Ok(RunReport::new("fol eval", &file, Verdict::Value, payload))
        })
        .collect()
}

/// The least model of the file's predicate extension. Rows that mention the
/// sink value `top` are listed apart from the others.
pub fn fol_minmodel(path: &Path, bound: Option<u64>, max_rounds: usize) -> Result<RunReport, CliError> {
    let (file, text) = read(path)?;
    let doc = parse_fol(&text, &file).map_err(|e| CliError::Parse(e, text.clone()))?;
    let setup = build_fol(&doc, bound).map_err(|source| CliError::Fol { file: file.clone(), source })?;
    let logic = |source| CliError::Logic { file: file.clone(), source };
    let ctx = DfpContext::new(setup.interp, &setup.ext).map_err(logic)?;
    validate_extension(&ctx, &setup.ext).map_err(logic)?;
    let model = minimal_model(&ctx, &setup.ext, max_rounds).map_err(logic)?;
    let mut payload = serde_json::Map::new();
    for (name, rel) in &model.relations {
        let (sink, plain): (Vec<_>, Vec<_>) = rel.rows().iter().partition(|row| row.values().iter().any(|v| v.is_top()));
        let rows = |rs: Vec<&lamech_core::OrdTuple>| -> Value {
            json!(rs.iter().map(|r| r.values().iter().map(value_json).collect::<Vec<_>>()).collect::<Vec<_>>())
        };
        payload.insert(name.clone(), json!({ "rows": rows(plain), "sink_rows": rows(sink) }));
    }
    let mut r = RunReport::new("fol minmodel", &file, Verdict::Model, Value::Object(payload));
    r.rounds = Some(model.rounds);
    Ok(r)
}

/// `X=100,Y=161` into a data state.
pub fn parse_inputs(spec: &str) -> Result<DataState, CliError> {
    let mut d = DataState::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected NAME=VALUE, got {part:?}")))?;
        let v: u64 = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{:?} is not a natural number", v.trim())))?;
        d.set(k.trim(), v);
    }
    Ok(d)
}

fn state_json(d: &DataState) -> Value {
    Value::Object(d.iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

pub fn flow_run(path: &Path, inputs: &DataState, limits: Limits) -> Result<RunReport, CliError> {
    let (file, text) = read(path)?;
    let main = parse_flow(&text, &file).map_err(|e| CliError::Parse(e, text.clone()))?;
    let out = run_program(&main, inputs, limits, RenamePolicy::OnClash)
        .map_err(|source| CliError::Flow { file: file.clone(), source })?;
    let mut r = match &out {
        ProgramOutcome::Halted { data, .. } => RunReport::new("flow run", &file, Verdict::Halted, state_json(data)),
        ProgramOutcome::Timeout { depth, .. } => {
            RunReport::new("flow run", &file, Verdict::Timeout, json!({ "depth": depth }))
        }
        ProgramOutcome::DepthLimit { depth, .. } => {
            RunReport::new("flow run", &file, Verdict::DepthLimit, json!({ "depth": depth }))
        }
    };
    r.steps = Some(out.steps());
    Ok(r)
}

/// Compares the two semantics of a procedure-free flowchart; on
/// disagreement the payload carries the least pair found on one side only.
pub fn flow_compare(path: &Path, bound: u64) -> Result<RunReport, CliError> {
    let (file, text) = read(path)?;
    let main = parse_flow(&text, &file).map_err(|e| CliError::Parse(e, text.clone()))?;
    let fc = as_flowchart(&main)
        .ok_or_else(|| CliError::Usage(format!("{file}: compare needs a flowchart without procedures")))?;
    let flow = |source| CliError::Flow { file: file.clone(), source };
    let op = operational_relation(&fc, bound).map_err(flow)?;
    let de = declarative_relation(&fc, bound).map_err(flow)?;
    let witness = op
        .difference(&de)
        .next()
        .map(|p| (p, "operational"))
        .or_else(|| de.difference(&op).next().map(|p| (p, "declarative")));
    Ok(match witness {
        None => RunReport::new("flow compare", &file, Verdict::Agree, json!({ "bound": bound, "pairs": op.len() })),
        Some(((d, d1), only)) => RunReport::new(
            "flow compare",
            &file,
            Verdict::Disagree,
            json!({ "bound": bound, "only_in": only, "input": state_json(d), "output": state_json(d1) }),
        ),
    })
}

/// The exit code for a batch of reports: 1 if any verdict is an error.
pub fn exit_code(reports: &[RunReport]) -> i32 {
    if reports.iter().any(|r| r.verdict.is_error()) {
        1
    } else {
        0
    }
}
