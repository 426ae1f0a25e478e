//! Transitions and computations of procedure-free flowcharts.

use crate::state::{eval_bool, eval_expr};
use crate::{validate, DataState, FlowError, Flowchart, MachineState, Outgoing, Stmt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunOutcome {
    Halted { data: DataState, steps: usize },
    Timeout { state: MachineState, steps: usize },
}

impl RunOutcome {
    pub fn halted(&self) -> Option<&DataState> {
        match self {
            RunOutcome::Halted { data, .. } => Some(data),
            RunOutcome::Timeout { .. } => None,
        }
    }

    pub fn steps(&self) -> usize {
        match self {
            RunOutcome::Halted { steps, .. } | RunOutcome::Timeout { steps, .. } => *steps,
        }
    }
}

/// The successor of `s`, or `None` at the halt node.
pub fn step(fc: &Flowchart, s: &MachineState) -> Result<Option<MachineState>, FlowError> {
    if s.control == fc.body.halt {
        return Ok(None);
    }
    let lookup = |x: &str| s.data.get(x);
    match fc.body.outgoing(&s.control) {
        Some(Outgoing::Box(b)) => match &b.stmt {
            Stmt::Assign { lhs, rhs } => {
                let v = eval_expr(rhs, &lookup)?;
                let mut data = s.data.clone();
                data.set(lhs.clone(), v);
                Ok(Some(MachineState { control: b.exit.clone(), data }))
            }
            Stmt::Call { proc, .. } => Err(FlowError::CallWithoutProcedures(proc.clone())),
        },
        Some(Outgoing::Test(t)) => {
            let control = if eval_bool(&t.cond, &lookup)? { &t.pos_exit } else { &t.neg_exit };
            Ok(Some(MachineState { control: control.clone(), data: s.data.clone() }))
        }
        None => Err(FlowError::Stuck(s.control.clone())),
    }
}

pub fn run(fc: &Flowchart, d0: &DataState, max_steps: usize) -> Result<RunOutcome, FlowError> {
    validate(fc)?;
    if !d0.names().eq(fc.decls.iter().map(String::as_str)) {
        return Err(FlowError::DataStateMismatch);
    }
    let mut state = MachineState { control: fc.body.start.clone(), data: d0.clone() };
    let mut steps = 0;
    loop {
        if state.control == fc.body.halt {
            return Ok(RunOutcome::Halted { data: state.data, steps });
        }
        if steps == max_steps {
            return Ok(RunOutcome::Timeout { state, steps });
        }
        state = step(fc, &state)?.expect("only the halt node lacks a successor");
        steps += 1;
    }
}
