//! The input/output relation of a flowchart over a bounded state space,
//! computed by running it and by closing its matrix of relations.

use std::collections::{BTreeMap, BTreeSet};

use crate::state::{eval_bool, eval_expr};
use crate::{step, validate, DataState, FlowError, Flowchart, MachineState, NodeId, Stmt};

pub type StateRelation = BTreeSet<(DataState, DataState)>;

/// Every data state over `decls` with values in `0..bound`, lexicographically.
pub fn all_states(decls: &BTreeSet<String>, bound: u64) -> Vec<DataState> {
    let names: Vec<&String> = decls.iter().collect();
    let mut out = vec![DataState::new()];
    for name in names {
        out = out
            .into_iter()
            .flat_map(|d| (0..bound).map(move |v| d.clone().with(name.clone(), v)))
            .collect();
    }
    out
}

fn in_range(d: &DataState, bound: u64) -> bool {
    d.iter().all(|(_, v)| v < bound)
}

/// Pairs `(d, d')` such that a computation from `d` at the start node
/// reaches the halt node with `d'`, never leaving `0..bound`.
///
/// A computation longer than the number of states revisits one and thus
/// never halts, so that many steps suffice.
pub fn operational_relation(fc: &Flowchart, bound: u64) -> Result<StateRelation, FlowError> {
    validate(fc)?;
    let inputs = all_states(&fc.decls, bound);
    let limit = fc.body.nodes.len() * inputs.len();
    let mut rel = StateRelation::new();
    'inputs: for d0 in inputs {
        let mut s = MachineState { control: fc.body.start.clone(), data: d0.clone() };
        for _ in 0..=limit {
            if s.control == fc.body.halt {
                rel.insert((d0, s.data));
                continue 'inputs;
            }
            s = match step(fc, &s) {
                Ok(Some(next)) => next,
                Err(FlowError::Stuck(_)) => continue 'inputs,
                Ok(None) => unreachable!("halt handled above"),
                Err(e) => return Err(e),
            };
            if !in_range(&s.data, bound) {
                continue 'inputs;
            }
        }
    }
    Ok(rel)
}

/// A nonempty matrix entry: relation from `from` to `to` as a successor map
/// on state indices.
struct Edge {
    from: NodeId,
    to: NodeId,
    succ: BTreeMap<usize, Vec<usize>>,
}

/// The least `R` with `R[start] = id` and `R[n] ⊇ M[n,m] ∘ R[m]`, at `halt`.
///
/// Entries of the matrix without a box or test are empty.
pub fn declarative_relation(fc: &Flowchart, bound: u64) -> Result<StateRelation, FlowError> {
    validate(fc)?;
    let states = all_states(&fc.decls, bound);
    let index: BTreeMap<&DataState, usize> = states.iter().enumerate().map(|(i, d)| (d, i)).collect();

    let mut edges = Vec::new();
    for b in &fc.body.boxes {
        let Stmt::Assign { lhs, rhs } = &b.stmt else {
            unreachable!("validate rejects calls");
        };
        let mut succ = BTreeMap::new();
        for (i, d) in states.iter().enumerate() {
            let v = eval_expr(rhs, &|x| d.get(x))?;
            let next = d.clone().with(lhs.clone(), v);
            if let Some(&j) = index.get(&next) {
                succ.insert(i, vec![j]);
            }
        }
        edges.push(Edge { from: b.entry.clone(), to: b.exit.clone(), succ });
    }
    for t in &fc.body.tests {
        let (mut pos, mut neg) = (BTreeMap::new(), BTreeMap::new());
        for (i, d) in states.iter().enumerate() {
            let side = if eval_bool(&t.cond, &|x| d.get(x))? { &mut pos } else { &mut neg };
            side.insert(i, vec![i]);
        }
        edges.push(Edge { from: t.entry.clone(), to: t.pos_exit.clone(), succ: pos });
        edges.push(Edge { from: t.entry.clone(), to: t.neg_exit.clone(), succ: neg });
    }
    let mut out_edges: BTreeMap<&NodeId, Vec<&Edge>> = BTreeMap::new();
    for e in &edges {
        out_edges.entry(&e.from).or_default().push(e);
    }

    let mut reach: BTreeMap<&NodeId, BTreeSet<(usize, usize)>> = BTreeMap::new();
    let mut work: Vec<(&NodeId, usize, usize)> = Vec::new();
    for i in 0..states.len() {
        if reach.entry(&fc.body.start).or_default().insert((i, i)) {
            work.push((&fc.body.start, i, i));
        }
    }
    while let Some((node, d0, d)) = work.pop() {
        for e in out_edges.get(node).into_iter().flatten() {
            for &d1 in e.succ.get(&d).into_iter().flatten() {
                if reach.entry(&e.to).or_default().insert((d0, d1)) {
                    work.push((&e.to, d0, d1));
                }
            }
        }
    }
    Ok(reach
        .get(&fc.body.halt)
        .into_iter()
        .flatten()
        .map(|&(a, b)| (states[a].clone(), states[b].clone()))
        .collect())
}
