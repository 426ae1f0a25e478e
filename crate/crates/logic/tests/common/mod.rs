//! Random small extensions, candidates, and formulas.

use lamech_logic::{
    Candidates, Domain, DomainValue, Formula, Interpretation, OrdRelation, OrdTuple,
    PredicateDef, PredicateExtension, Term, VarOrder,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub struct Instance {
    pub base: Interpretation,
    pub ext: PredicateExtension,
}

pub fn random_domain(rng: &mut StdRng, max_size: usize) -> Domain {
    if rng.gen_bool(0.5) {
        Domain::bounded_nat(rng.gen_range(0..max_size as u64))
    } else {
        let n = rng.gen_range(1..=max_size);
        Domain::enumerated((0..n).map(|i| format!("a{i}"))).unwrap()
    }
}

pub fn random_relation(rng: &mut StdRng, domain: &Domain, arity: usize, density: f64) -> OrdRelation {
    OrdRelation::from_rows(
        arity,
        domain
            .tuples(arity)
            .filter(|_| rng.gen_bool(density))
            .map(OrdTuple::new),
    )
    .unwrap()
}

/// Base interpretation with `=`, a unary `q` and a binary `r`.
pub fn random_base(rng: &mut StdRng, domain: Domain) -> Interpretation {
    let mut base = Interpretation::new(domain.clone());
    base.define_predicate("q", random_relation(rng, &domain, 1, 0.5)).unwrap();
    base.define_predicate("r", random_relation(rng, &domain, 2, 0.4)).unwrap();
    base
}

fn random_atom(rng: &mut StdRng, preds: &[(String, usize)], scope: &[String]) -> Formula {
    let (p, arity) = preds.choose(rng).unwrap().clone();
    let args = (0..arity)
        .map(|_| Term::var(scope.choose(rng).unwrap().clone()))
        .collect();
    Formula::atom(p, args)
}

pub fn random_extension(
    rng: &mut StdRng,
    max_defs: usize,
    max_arity: usize,
) -> PredicateExtension {
    let k = rng.gen_range(1..=max_defs);
    let defined: Vec<(String, usize)> = (0..k)
        .map(|j| (format!("p{j}"), rng.gen_range(0..=max_arity)))
        .collect();
    let mut preds: Vec<(String, usize)> =
        vec![("q".into(), 1), ("r".into(), 2), ("=".into(), 2)];
    preds.extend(defined.iter().cloned());

    let defs = defined
        .iter()
        .map(|(name, arity)| {
            let vars: Vec<String> = (0..*arity).map(|i| format!("x{i}")).collect();
            let mut body: Vec<Formula> = (0..rng.gen_range(1..=2))
                .map(|_| {
                    let mut scope = vars.clone();
                    let existentials: Vec<String> =
                        (0..rng.gen_range(0..=1)).map(|i| format!("e{i}")).collect();
                    scope.extend(existentials.iter().cloned());
                    let atoms: Vec<Formula> = if scope.is_empty() {
                        // only 0-ary atoms are possible without variables
                        preds
                            .iter()
                            .filter(|(_, a)| *a == 0)
                            .take(1)
                            .map(|(p, _)| Formula::atom(p.clone(), vec![]))
                            .collect()
                    } else {
                        (0..rng.gen_range(1..=3))
                            .map(|_| random_atom(rng, &preds, &scope))
                            .collect()
                    };
                    let atoms = if atoms.is_empty() {
                        vec![Formula::atom(name.clone(), vec![])]
                    } else {
                        atoms
                    };
                    existentials
                        .iter()
                        .rev()
                        .fold(Formula::And(atoms), |acc, e| Formula::exists(e.clone(), acc))
                })
                .collect();
            // every enumerated variable must occur free in the body
            let free = Formula::Or(body.clone()).free_vars();
            let missing: Vec<Formula> = vars
                .iter()
                .filter(|v| !free.contains(*v))
                .map(|v| Formula::eq(Term::var(v.clone()), Term::var(v.clone())))
                .collect();
            if !missing.is_empty() {
                body.push(Formula::And(missing));
            }
            PredicateDef::new(name.clone(), VarOrder::new(vars).unwrap(), body)
        })
        .collect();
    PredicateExtension::new(defs)
}

pub fn random_instance(rng: &mut StdRng, max_size: usize, max_defs: usize, max_arity: usize) -> Instance {
    let domain = random_domain(rng, max_size);
    Instance {
        base: random_base(rng, domain),
        ext: random_extension(rng, max_defs, max_arity),
    }
}

pub fn random_candidates(rng: &mut StdRng, domain: &Domain, ext: &PredicateExtension) -> Candidates {
    let density = rng.gen_range(0.0..=1.0);
    ext.defs
        .iter()
        .map(|d| (d.name.clone(), random_relation(rng, domain, d.arity(), density)))
        .collect()
}

/// Every candidate map, when there are at most `limit` of them.
pub fn all_candidates(domain: &Domain, ext: &PredicateExtension, limit: usize) -> Option<Vec<Candidates>> {
    let slots: Vec<(String, Vec<OrdTuple>)> = ext
        .defs
        .iter()
        .map(|d| (d.name.clone(), domain.tuples(d.arity()).map(OrdTuple::new).collect()))
        .collect();
    let bits: usize = slots.iter().map(|(_, rows)| rows.len()).sum();
    if bits >= usize::BITS as usize || (1usize << bits) > limit {
        return None;
    }
    Some(
        (0..(1usize << bits))
            .map(|mask| {
                let mut offset = 0;
                slots
                    .iter()
                    .map(|(name, rows)| {
                        let chosen = rows
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask >> (offset + i) & 1 == 1)
                            .map(|(_, r)| r.clone());
                        let rel = OrdRelation::from_rows(rows[0].len(), chosen).unwrap();
                        offset += rows.len();
                        (name.clone(), rel)
                    })
                    .collect()
            })
            .collect(),
    )
}

/// A formula using every connective, over variables `v0..v2` and `q`, `r`, `=`.
pub fn random_formula(rng: &mut StdRng, depth: u32) -> Formula {
    let vars = ["v0", "v1", "v2"];
    let var = |rng: &mut StdRng| Term::var(*vars.choose(rng).unwrap());
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..3) {
            0 => Formula::atom("q", vec![var(rng)]),
            1 => Formula::atom("r", vec![var(rng), var(rng)]),
            _ => Formula::eq(var(rng), var(rng)),
        };
    }
    match rng.gen_range(0..6) {
        0 => Formula::And((0..rng.gen_range(1..=3)).map(|_| random_formula(rng, depth - 1)).collect()),
        1 => Formula::Or((0..rng.gen_range(1..=3)).map(|_| random_formula(rng, depth - 1)).collect()),
        2 => Formula::not(random_formula(rng, depth - 1)),
        3 => Formula::implied_by(random_formula(rng, depth - 1), random_formula(rng, depth - 1)),
        4 => Formula::exists(*vars.choose(rng).unwrap(), random_formula(rng, depth - 1)),
        _ => Formula::forall(*vars.choose(rng).unwrap(), random_formula(rng, depth - 1)),
    }
}

#[allow(dead_code)]
pub fn carrier_values(domain: &Domain) -> Vec<DomainValue> {
    domain.carrier().to_vec()
}
