use std::collections::{BTreeMap, BTreeSet};

use lamech_core::{lift_relation, OrdRelation, VarOrder};

use crate::{check_formula, denotation_over, Formula, Interpretation, LogicError, Term};

/// One definition `p := \(x0, .., xn). M^I(F0 | .. | Fm)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateDef {
    pub name: String,
    pub order: VarOrder,
    /// The disjuncts `F0 .. Fm`, each an existentially quantified
    /// conjunction of atoms once validated.
    pub body: Vec<Formula>,
}

impl PredicateDef {
    pub fn new(name: impl Into<String>, order: VarOrder, body: Vec<Formula>) -> Self {
        PredicateDef {
            name: name.into(),
            order,
            body,
        }
    }

    pub fn arity(&self) -> usize {
        self.order.len()
    }

    pub fn body_formula(&self) -> Formula {
        Formula::Or(self.body.clone())
    }
}

/// A set of possibly mutually recursive predicate definitions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PredicateExtension {
    pub defs: Vec<PredicateDef>,
}

impl PredicateExtension {
    pub fn new(defs: Vec<PredicateDef>) -> Self {
        PredicateExtension { defs }
    }

    pub fn defined(&self) -> BTreeSet<String> {
        self.defs.iter().map(|d| d.name.clone()).collect()
    }

    pub fn arity_of(&self, pred: &str) -> Option<usize> {
        self.defs.iter().find(|d| d.name == pred).map(PredicateDef::arity)
    }
}

/// Meanings for the defined predicates, keyed by name.
pub type Candidates = BTreeMap<String, OrdRelation>;

/// The fixed part of a DFP-set: domain, function symbols, and the
/// predicates that occur only in bodies. Interpretations in the set differ
/// only on the defined predicates.
#[derive(Debug, Clone)]
pub struct DfpContext {
    pub base: Interpretation,
    pub defined: BTreeSet<String>,
}

impl DfpContext {
    pub fn new(base: Interpretation, ext: &PredicateExtension) -> Result<Self, LogicError> {
        let defined = ext.defined();
        if let Some(p) = defined.iter().find(|p| base.predicate(p).is_some()) {
            return Err(LogicError::DefinedPredicateInterpreted(p.clone()));
        }
        Ok(DfpContext { base, defined })
    }

    /// The member of the DFP-set that interprets the defined predicates by `cand`.
    pub fn member(&self, cand: &Candidates) -> Interpretation {
        self.base.with_predicates(cand)
    }
}

pub fn validate_extension(ctx: &DfpContext, ext: &PredicateExtension) -> Result<(), LogicError> {
    let mut seen = BTreeSet::new();
    for def in &ext.defs {
        if !seen.insert(def.name.as_str()) {
            return Err(LogicError::DuplicateDefinedPredicate(def.name.clone()));
        }
    }
    for def in &ext.defs {
        if ctx.base.predicate(&def.name).is_some() {
            return Err(LogicError::DefinedPredicateInterpreted(def.name.clone()));
        }
        if def.body.is_empty() {
            return Err(LogicError::EmptyBody(def.name.clone()));
        }
        for disjunct in &def.body {
            check_disjunct_shape(&def.name, disjunct)?;
        }
        let free = def.body_formula().free_vars();
        if def.order.name_set() != free {
            return Err(LogicError::FreeVarEnumerationMismatch {
                pred: def.name.clone(),
                order: def.order.names().to_vec(),
                free,
            });
        }
        check_formula(&ctx.base, &def.body_formula(), &|p| ext.arity_of(p))?;
    }
    Ok(())
}

fn check_disjunct_shape(pred: &str, f: &Formula) -> Result<(), LogicError> {
    let illegal = |connective| {
        Err(LogicError::IllegalBodyConnective {
            pred: pred.to_string(),
            connective,
        })
    };
    let mut core = f;
    while let Formula::Exists(_, inner) = core {
        core = inner;
    }
    let mut stack = vec![core];
    while let Some(g) = stack.pop() {
        match g {
            Formula::Atom(..) => {}
            Formula::And(fs) => stack.extend(fs),
            Formula::Or(_) => return illegal("a nested disjunction"),
            Formula::Not(_) => return illegal("negation"),
            Formula::If(..) => return illegal("implication"),
            Formula::Forall(..) => return illegal("universal quantification"),
            Formula::Exists(..) => return illegal("an existential inside a conjunction"),
        }
    }
    Ok(())
}

fn check_candidates(ext: &PredicateExtension, cand: &Candidates) -> Result<(), LogicError> {
    for def in &ext.defs {
        let rel = cand
            .get(&def.name)
            .ok_or_else(|| LogicError::MissingCandidate(def.name.clone()))?;
        if rel.arity() != def.arity() {
            return Err(LogicError::ArityMismatch {
                symbol: def.name.clone(),
                expected: def.arity(),
                found: rel.arity(),
            });
        }
    }
    Ok(())
}

/// One application of the immediate-consequence operator:
/// `p_j ↦ \(order_j). M^I(body_j)` with `I` the DFP member for `cand`.
fn consequences(ctx: &DfpContext, ext: &PredicateExtension, cand: &Candidates) -> Result<Candidates, LogicError> {
    let interp = ctx.member(cand);
    ext.defs
        .iter()
        .map(|def| {
            let den = denotation_over(&interp, &def.body_formula(), &def.order.name_set())?;
            Ok((def.name.clone(), lift_relation(&def.order, &den)?))
        })
        .collect()
}

/// `cand` is a model iff `\(order_j). M^I(body_j) ⊆ cand(p_j)` for every `j`.
pub fn is_model(ctx: &DfpContext, cand: &Candidates, ext: &PredicateExtension) -> Result<bool, LogicError> {
    check_candidates(ext, cand)?;
    let next = consequences(ctx, ext, cand)?;
    Ok(ext.defs.iter().all(|def| next[&def.name].is_subset(&cand[&def.name])))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalModel {
    pub relations: Candidates,
    /// Operator applications, including the one that confirmed the fixpoint.
    pub rounds: usize,
}

/// The Kleene chain from the all-empty candidate up to and including the
/// least fixpoint. Its length minus one is the number of rounds.
pub fn kleene_chain(
    ctx: &DfpContext,
    ext: &PredicateExtension,
    max_rounds: usize,
) -> Result<Vec<Candidates>, LogicError> {
    validate_extension(ctx, ext)?;
    let bottom: Candidates = ext
        .defs
        .iter()
        .map(|def| (def.name.clone(), OrdRelation::empty(def.arity())))
        .collect();
    let mut chain = vec![bottom];
    if ext.defs.is_empty() {
        return Ok(chain);
    }
    for _ in 0..max_rounds {
        let current = chain.last().expect("chain starts non-empty");
        let next = consequences(ctx, ext, current)?;
        let done = &next == current;
        chain.push(next);
        if done {
            return Ok(chain);
        }
    }
    Err(LogicError::RoundLimit(max_rounds))
}

/// The least model of `ext` in the DFP-set of `ctx`.
pub fn minimal_model(
    ctx: &DfpContext,
    ext: &PredicateExtension,
    max_rounds: usize,
) -> Result<MinimalModel, LogicError> {
    let mut chain = kleene_chain(ctx, ext, max_rounds)?;
    let rounds = chain.len() - 1;
    Ok(MinimalModel {
        relations: chain.pop().expect("chain is non-empty"),
        rounds,
    })
}

/// `H_0 & .. & H_{k-1}` with `H_j = forall order_j. p_j(order_j) if body_j`.
/// The empty extension corresponds to the closed truth `0 = 0`.
pub fn corresponding_formula(ext: &PredicateExtension) -> Formula {
    if ext.defs.is_empty() {
        return Formula::truth();
    }
    Formula::And(
        ext.defs
            .iter()
            .map(|def| {
                let head = Formula::atom(def.name.clone(), def.order.iter().map(Term::var).collect());
                let clause = Formula::implied_by(head, def.body_formula());
                def.order
                    .names()
                    .iter()
                    .rev()
                    .fold(clause, |acc, x| Formula::forall(x.clone(), acc))
            })
            .collect(),
    )
}
