//! Call-by-name procedures: environments, body replacement, and execution.

use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

use lamech_core::FreshNameSupply;

use crate::state::{eval_bool, eval_expr};
use crate::{validate_program, Body, DataState, Expr, FlowError, NodeId, Outgoing, ProcDecl, Procedure, Stmt};

/// Storage cells, allocated and released in stack order.
#[derive(Debug, Clone, Default)]
pub struct Store {
    cells: Vec<u64>,
}

impl Store {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn alloc(&mut self, value: u64) -> usize {
        self.cells.push(value);
        self.cells.len() - 1
    }

    pub fn get(&self, cell: usize) -> u64 {
        self.cells[cell]
    }

    pub fn set(&mut self, cell: usize, value: u64) {
        self.cells[cell] = value;
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn release_to(&mut self, mark: usize) {
        self.cells.truncate(mark);
    }
}

#[derive(Debug, Clone, Default)]
pub struct Environment {
    pub locations: BTreeMap<String, usize>,
    pub procedures: BTreeMap<String, Rc<ProcDecl>>,
}

impl Environment {
    pub fn lookup(&self, store: &Store, name: &str) -> Option<u64> {
        self.locations.get(name).map(|&c| store.get(c))
    }

    fn names(&self) -> impl Iterator<Item = &String> {
        self.locations.keys().chain(self.procedures.keys())
    }

    fn forget(&mut self, name: &str) {
        self.locations.remove(name);
        self.procedures.remove(name);
    }
}

/// Which callee locals get fresh names on a call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenamePolicy {
    /// Only declarations that clash with identifiers inserted by the actuals.
    #[default]
    OnClash,
    /// Every local location and procedure.
    Always,
}

#[derive(Debug, Clone)]
pub struct Expansion {
    pub body: Body,
    pub env: Environment,
}

/// Replaces the formals of `proc` by `actuals` in its body, renaming callee
/// declarations that would capture an inserted identifier, and builds the
/// environment of the call with fresh cells for the callee's locations.
pub fn expand_call(
    env: &Environment,
    proc: &str,
    actuals: &[Expr],
    supply: &mut FreshNameSupply,
    store: &mut Store,
    policy: RenamePolicy,
) -> Result<Expansion, FlowError> {
    let decl = env
        .procedures
        .get(proc)
        .ok_or_else(|| FlowError::UnknownProcedure(proc.to_string()))?;
    if actuals.len() != decl.formals.len() {
        return Err(FlowError::ArityMismatch {
            proc: proc.to_string(),
            expected: decl.formals.len(),
            found: actuals.len(),
        });
    }
    for a in actuals {
        if let Some(x) = a.as_ident() {
            if env.procedures.contains_key(x) && !env.locations.contains_key(x) {
                return Err(FlowError::ProcedureActual { proc: proc.to_string(), name: x.to_string() });
            }
        }
    }
    let callee = &decl.proc;
    let assigned = callee.body.assigned();
    for (formal, actual) in decl.formals.iter().zip(actuals) {
        if assigned.contains(formal) && actual.as_ident().is_none() {
            return Err(FlowError::NonIdentifierActualForAssignedFormal {
                proc: proc.to_string(),
                formal: formal.to_string(),
            });
        }
    }

    let mut inserted = BTreeSet::new();
    actuals.iter().for_each(|a| a.idents(&mut inserted));
    let renames = |name: &String| policy == RenamePolicy::Always || inserted.contains(name);

    supply.reserve_all(env.names().cloned());
    supply.reserve_all(callee.body.idents());
    supply.reserve_all(callee.locations.iter().cloned());
    supply.reserve_all(callee.procs.iter().map(|d| d.name.clone()));
    supply.reserve_all(decl.formals.iter().map(str::to_string));
    supply.reserve_all(inserted.iter().cloned());

    let mut subst: BTreeMap<String, Expr> = decl.formals.iter().map(str::to_string).zip(actuals.iter().cloned()).collect();
    let mut locals = Vec::new();
    for x in &callee.locations {
        let name = if renames(x) { supply.fresh(x) } else { x.clone() };
        if name != *x {
            subst.insert(x.clone(), Expr::Ident(name.clone()));
        }
        locals.push(name);
    }
    let mut proc_renames = BTreeMap::new();
    for d in &callee.procs {
        if renames(&d.name) {
            proc_renames.insert(d.name.clone(), supply.fresh(&d.name));
        }
    }

    let body = callee.body.substitute(&subst).rename_calls(&proc_renames);
    let mut call_env = env.clone();
    for name in &locals {
        call_env.forget(name);
        call_env.locations.insert(name.clone(), store.alloc(0));
    }
    for d in &callee.procs {
        let name = proc_renames.get(&d.name).cloned().unwrap_or_else(|| d.name.clone());
        call_env.forget(&name);
        let renamed = ProcDecl {
            name: name.clone(),
            formals: d.formals.clone(),
            proc: rename_calls_deep(&d.proc, &proc_renames),
        };
        call_env.procedures.insert(name, Rc::new(renamed));
    }
    Ok(Expansion { body, env: call_env })
}

/// Renames calls throughout a procedure, except where a nested declaration
/// shadows the name.
fn rename_calls_deep(p: &Procedure, map: &BTreeMap<String, String>) -> Procedure {
    if map.is_empty() {
        return p.clone();
    }
    let mut inner = map.clone();
    for d in &p.procs {
        inner.remove(&d.name);
    }
    Procedure {
        locations: p.locations.clone(),
        procs: p
            .procs
            .iter()
            .map(|d| ProcDecl {
                name: d.name.clone(),
                formals: d.formals.clone(),
                proc: rename_calls_deep(&d.proc, &inner),
            })
            .collect(),
        body: p.body.rename_calls(&inner),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_steps: usize,
    pub max_depth: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_steps: 10_000, max_depth: 256 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProgramOutcome {
    Halted { data: DataState, steps: usize },
    Timeout { steps: usize, depth: usize },
    DepthLimit { steps: usize, depth: usize },
}

impl ProgramOutcome {
    pub fn halted(&self) -> Option<&DataState> {
        match self {
            ProgramOutcome::Halted { data, .. } => Some(data),
            _ => None,
        }
    }

    pub fn steps(&self) -> usize {
        match self {
            ProgramOutcome::Halted { steps, .. }
            | ProgramOutcome::Timeout { steps, .. }
            | ProgramOutcome::DepthLimit { steps, .. } => *steps,
        }
    }
}

struct Frame {
    body: Rc<Body>,
    env: Environment,
    control: NodeId,
    mark: usize,
}

/// Executes the body of `main`. Locations start at the values in `initial`,
/// or 0. Every box, test and call counts as one step.
pub fn run_program(
    main: &Procedure,
    initial: &DataState,
    limits: Limits,
    policy: RenamePolicy,
) -> Result<ProgramOutcome, FlowError> {
    validate_program(main)?;
    if initial.names().any(|x| !main.locations.contains(x)) {
        return Err(FlowError::DataStateMismatch);
    }
    let mut store = Store::new();
    let mut env = Environment::default();
    for x in &main.locations {
        env.locations.insert(x.clone(), store.alloc(initial.get(x).unwrap_or(0)));
    }
    for d in &main.procs {
        env.procedures.insert(d.name.clone(), Rc::new(d.clone()));
    }
    let main_cells = env.locations.clone();
    let mut supply = FreshNameSupply::new();
    let mut frames = vec![Frame {
        body: Rc::new(main.body.clone()),
        env,
        control: main.body.start.clone(),
        mark: 0,
    }];
    let mut steps = 0;

    while let Some(depth) = frames.len().checked_sub(1) {
        if frames[depth].control == frames[depth].body.halt {
            let done = frames.pop().expect("nonempty");
            if !frames.is_empty() {
                store.release_to(done.mark);
            }
            continue;
        }
        if steps == limits.max_steps {
            return Ok(ProgramOutcome::Timeout { steps, depth });
        }
        let frame = &mut frames[depth];
        let body = Rc::clone(&frame.body);
        match body.outgoing(&frame.control) {
            Some(Outgoing::Box(b)) => match &b.stmt {
                Stmt::Assign { lhs, rhs } => {
                    let v = eval_expr(rhs, &|x| frame.env.lookup(&store, x))?;
                    let cell = *frame
                        .env
                        .locations
                        .get(lhs)
                        .ok_or_else(|| FlowError::UnboundIdentifier(lhs.clone()))?;
                    store.set(cell, v);
                    frame.control = b.exit.clone();
                }
                Stmt::Call { proc, actuals } => {
                    if depth == limits.max_depth {
                        return Ok(ProgramOutcome::DepthLimit { steps, depth });
                    }
                    let mark = store.len();
                    let expansion = expand_call(&frame.env, proc, actuals, &mut supply, &mut store, policy)?;
                    frame.control = b.exit.clone();
                    let start = expansion.body.start.clone();
                    frames.push(Frame { body: Rc::new(expansion.body), env: expansion.env, control: start, mark });
                }
            },
            Some(Outgoing::Test(t)) => {
                let pos = eval_bool(&t.cond, &|x| frame.env.lookup(&store, x))?;
                frame.control = if pos { t.pos_exit.clone() } else { t.neg_exit.clone() };
            }
            None => return Err(FlowError::Stuck(frame.control.clone())),
        }
        steps += 1;
    }
    let data = main_cells.iter().map(|(x, &c)| (x.clone(), store.get(c))).collect();
    Ok(ProgramOutcome::Halted { data, steps })
}
