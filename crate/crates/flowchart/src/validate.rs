use std::collections::BTreeSet;

use crate::{Body, FlowError, Flowchart, NodeId, Procedure, Stmt};

/// Structural checks on a body; `visible` are the identifiers it may use.
pub fn validate_body(body: &Body, visible: &BTreeSet<String>) -> Result<(), FlowError> {
    if let Some(n) = body.mentioned_nodes().into_iter().find(|n| !body.nodes.contains(n)) {
        return Err(FlowError::DanglingNode(n));
    }
    let entries: Vec<&NodeId> = body
        .boxes
        .iter()
        .map(|b| &b.entry)
        .chain(body.tests.iter().map(|t| &t.entry))
        .collect();
    let mut seen = BTreeSet::new();
    for e in &entries {
        if !seen.insert(*e) {
            return Err(FlowError::MultipleEntry((*e).clone()));
        }
    }
    let exits = body
        .boxes
        .iter()
        .map(|b| &b.exit)
        .chain(body.tests.iter().flat_map(|t| [&t.pos_exit, &t.neg_exit]));
    for x in exits {
        if *x == body.start {
            return Err(FlowError::StartIsExit(x.clone()));
        }
    }
    if seen.contains(&body.halt) {
        return Err(FlowError::HaltIsEntry(body.halt.clone()));
    }
    if let Some(x) = body.idents().into_iter().find(|x| !visible.contains(x)) {
        return Err(FlowError::UndeclaredIdentifier(x));
    }
    Ok(())
}

pub fn validate(fc: &Flowchart) -> Result<(), FlowError> {
    validate_body(&fc.body, &fc.decls)?;
    for b in &fc.body.boxes {
        if let Stmt::Call { proc, .. } = &b.stmt {
            return Err(FlowError::CallWithoutProcedures(proc.clone()));
        }
    }
    Ok(())
}

/// Checks a main procedure and, recursively, every declared procedure.
pub fn validate_program(main: &Procedure) -> Result<(), FlowError> {
    validate_procedure(main, &BTreeSet::new())?;
    if let Some(x) = main.free_idents().into_iter().next() {
        return Err(FlowError::UndeclaredIdentifier(x));
    }
    Ok(())
}

fn validate_procedure(p: &Procedure, formals: &BTreeSet<String>) -> Result<(), FlowError> {
    let visible: BTreeSet<String> = p.locations.union(formals).cloned().collect();
    validate_body(&p.body, &visible)?;
    let mut names = BTreeSet::new();
    for decl in &p.procs {
        if !names.insert(decl.name.as_str()) {
            return Err(FlowError::DuplicateProcedure(decl.name.clone()));
        }
        if visible.contains(&decl.name) {
            return Err(FlowError::LocationProcedureClash(decl.name.clone()));
        }
        let free = decl.proc.free_idents();
        let declared = decl.formals.name_set();
        if free != declared {
            return Err(FlowError::FormalsMismatch {
                proc: decl.name.clone(),
                formals: decl.formals.names().join(", "),
                free,
            });
        }
        validate_procedure(&decl.proc, &declared)?;
    }
    Ok(())
}
