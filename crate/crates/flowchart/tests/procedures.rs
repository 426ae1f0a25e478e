mod common;

use std::time::Instant;

use common::*;
use lamech_flowchart::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn run_main(main: &Procedure) -> ProgramOutcome {
    run_program(main, &DataState::new(), Limits::default(), RenamePolicy::OnClash).unwrap()
}

#[test]
fn gcd_of_100_and_161() {
    let main = gcd_program(100, 161);
    validate_program(&main).unwrap();
    let out = run_main(&main);
    assert_eq!(out.halted().unwrap(), &DataState::new().with("X", 1).with("Y", 1).with("Z", 1));
}

#[test]
fn gcd_sweep_matches_euclid() {
    let began = Instant::now();
    for x in 1..=30 {
        for y in 1..=30 {
            let out = run_main(&gcd_program(x, y));
            assert_eq!(out.halted().and_then(|d| d.get("Z")), Some(euclid(x, y)), "gcd({x},{y})");
        }
    }
    assert!(began.elapsed().as_secs() < 10);
}

#[test]
fn gcd2_expansion_substitutes_actuals() {
    let main = gcd_program(1, 1);
    let mut store = Store::new();
    let mut env = Environment::default();
    for x in ["X", "Y", "Z"] {
        env.locations.insert(x.into(), store.alloc(0));
    }
    for d in &main.procs {
        env.procedures.insert(d.name.clone(), std::rc::Rc::new(d.clone()));
    }
    let mut supply = FreshNameSupply::new();
    let actuals = [id("X"), id("Y"), id("Z")];
    let exp = expand_call(&env, "gcd2", &actuals, &mut supply, &mut store, RenamePolicy::OnClash).unwrap();
    let gcd2 = &main.procs[2].proc.body;
    let expected = gcd2.substitute(
        &[("x", "X"), ("y", "Y"), ("z", "Z")].iter().map(|(a, b)| (a.to_string(), id(b))).collect(),
    );
    assert_eq!(exp.body, expected);
    assert_eq!(exp.body.idents(), ["X", "Y", "Z"].map(String::from).into());
    assert_eq!(exp.env.locations, env.locations);

    let plus = [Expr::add(id("X"), Expr::Num(1)), id("Y"), id("Z")];
    assert!(expand_call(&env, "gcd2", &plus, &mut supply, &mut store, RenamePolicy::OnClash).is_ok());
    let bad = [id("X"), id("Y"), Expr::add(id("Z"), Expr::Num(1))];
    assert_eq!(
        expand_call(&env, "gcd2", &bad, &mut supply, &mut store, RenamePolicy::OnClash).unwrap_err(),
        FlowError::NonIdentifierActualForAssignedFormal { proc: "gcd2".into(), formal: "z".into() }
    );
    assert_eq!(
        expand_call(&env, "gcd2", &actuals[..2], &mut supply, &mut store, RenamePolicy::OnClash).unwrap_err(),
        FlowError::ArityMismatch { proc: "gcd2".into(), expected: 3, found: 2 }
    );
    assert_eq!(
        expand_call(&env, "gcd9", &actuals, &mut supply, &mut store, RenamePolicy::OnClash).unwrap_err(),
        FlowError::UnknownProcedure("gcd9".into())
    );
    let procs = [id("gcd0"), id("Y"), id("Z")];
    assert!(matches!(
        expand_call(&env, "gcd2", &procs, &mut supply, &mut store, RenamePolicy::OnClash),
        Err(FlowError::ProcedureActual { .. })
    ));
}

/// `inc = \(a). { nat X; X := a + 1; a := X }`, called as `inc(X)`.
fn clashing_program() -> Procedure {
    let inc = Procedure::new(
        ["X"],
        vec![],
        Body::new(
            "s",
            "h",
            vec![assign("s", "X", Expr::add(id("a"), Expr::Num(1)), "m"), assign("m", "a", id("X"), "h")],
            vec![],
        ),
    );
    Procedure::new(
        ["X"],
        vec![ProcDecl { name: "inc".into(), formals: VarOrder::new(["a"]).unwrap(), proc: inc }],
        Body::new("s", "h", vec![assign("s", "X", Expr::Num(5), "c"), call("c", "inc", &["X"], "h")], vec![]),
    )
}

#[test]
fn clashing_local_is_renamed() {
    let main = clashing_program();
    let mut store = Store::new();
    let mut env = Environment::default();
    env.locations.insert("X".into(), store.alloc(5));
    env.procedures.insert("inc".into(), std::rc::Rc::new(main.procs[0].clone()));
    let mut supply = FreshNameSupply::new();
    let exp = expand_call(&env, "inc", &[id("X")], &mut supply, &mut store, RenamePolicy::OnClash).unwrap();
    assert_eq!(exp.body.idents(), ["X", "X1"].map(String::from).into());
    assert_eq!(exp.body.assigned(), ["X", "X1"].map(String::from).into());
    assert_eq!(exp.env.locations["X"], env.locations["X"]);
    assert_ne!(exp.env.locations["X1"], env.locations["X"]);

    for policy in [RenamePolicy::OnClash, RenamePolicy::Always] {
        let out = run_program(&main, &DataState::new(), Limits::default(), policy).unwrap();
        assert_eq!(out.halted().unwrap().get("X"), Some(6));
    }
}

#[test]
fn self_call_hits_depth_limit() {
    let p = Procedure::new(Vec::<String>::new(), vec![], Body::new("s", "h", vec![call("s", "p", &[], "h")], vec![]));
    let main = Procedure::new(
        Vec::<String>::new(),
        vec![ProcDecl { name: "p".into(), formals: VarOrder::empty(), proc: p }],
        Body::new("s", "h", vec![call("s", "p", &[], "h")], vec![]),
    );
    let limits = Limits { max_steps: 1_000_000, max_depth: 40 };
    let out = run_program(&main, &DataState::new(), limits, RenamePolicy::OnClash).unwrap();
    assert_eq!(out, ProgramOutcome::DepthLimit { steps: 40, depth: 40 });
}

#[test]
fn divergence_surfaces_as_timeout() {
    let out = run_program(
        &gcd_program(0, 5),
        &DataState::new(),
        Limits { max_steps: 500, max_depth: 10_000 },
        RenamePolicy::OnClash,
    )
    .unwrap();
    assert!(matches!(out, ProgramOutcome::Timeout { steps: 500, .. }));
}

#[test]
fn program_without_procedures_matches_run() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let fc = random_flowchart(&mut rng, 6);
        let d0: DataState = fc.decls.iter().map(|x| (x.clone(), rng.gen_range(0..5))).collect();
        let flat = run(&fc, &d0, 60);
        let main = Procedure::from(fc.clone());
        let limits = Limits { max_steps: 60, max_depth: 0 };
        let prog = run_program(&main, &d0, limits, RenamePolicy::OnClash);
        if let Err(FlowError::Stuck(n)) = &flat {
            assert_eq!(prog, Err(FlowError::Stuck(n.clone())));
            continue;
        }
        let flat = flat.unwrap();
        match prog {
            Ok(ProgramOutcome::Halted { data, steps }) => {
                assert_eq!(flat, RunOutcome::Halted { data, steps })
            }
            Ok(ProgramOutcome::Timeout { steps, .. }) => {
                assert!(matches!(flat, RunOutcome::Timeout { .. }));
                assert_eq!(steps, 60);
            }
            Ok(other) => panic!("{other:?}"),
            Err(e) => panic!("{e}"),
        }
    }
}

/// Main over `X`, `Y` calls `p = \(a,b). { nat X, t; ... }` with random
/// straight-line bodies; renaming every local must not change the result.
#[test]
fn renaming_is_sound() {
    let mut rng = StdRng::seed_from_u64(8);
    let mut clashes = 0;
    for _ in 0..300 {
        let callee_vars = ["a", "b", "X", "t"];
        let a_assignable = rng.gen_bool(0.5);
        let targets: Vec<&str> =
            callee_vars.iter().copied().filter(|v| *v != "b" && (*v != "a" || a_assignable)).collect();
        let n = rng.gen_range(1..=4);
        let mut boxes: Vec<FlowBox> = (0..n)
            .map(|i| {
                let lhs = *targets.choose(&mut rng).unwrap();
                let rhs = random_expr(&mut rng, &callee_vars, 2);
                assign(&format!("n{i}"), lhs, rhs, &format!("n{}", i + 1))
            })
            .collect();
        // every formal must occur
        boxes.push(assign(
            &format!("n{n}"),
            "t",
            Expr::add(Expr::add(id("a"), id("b")), id("t")),
            "h",
        ));
        let p = Procedure::new(["X", "t"], vec![], Body::new("n0", "h", boxes, vec![]));
        let actual_a = if a_assignable {
            id(["X", "Y"].choose(&mut rng).unwrap())
        } else {
            random_expr(&mut rng, &["X", "Y"], 2)
        };
        let actual_b = random_expr(&mut rng, &["X", "Y"], 2);
        let mut inserted = std::collections::BTreeSet::new();
        actual_a.idents(&mut inserted);
        actual_b.idents(&mut inserted);
        clashes += usize::from(inserted.contains("X"));
        let main = Procedure::new(
            ["X", "Y"],
            vec![ProcDecl { name: "p".into(), formals: VarOrder::new(["a", "b"]).unwrap(), proc: p }],
            Body::new(
                "s",
                "h",
                vec![FlowBox::new("s", Stmt::call("p", vec![actual_a, actual_b]), "h")],
                vec![],
            ),
        );
        let d0 = DataState::new().with("X", rng.gen_range(0..6)).with("Y", rng.gen_range(0..6));
        let on_clash = run_program(&main, &d0, Limits::default(), RenamePolicy::OnClash).unwrap();
        let always = run_program(&main, &d0, Limits::default(), RenamePolicy::Always).unwrap();
        assert_eq!(on_clash, always);
        assert!(on_clash.halted().is_some());
    }
    assert!(clashes > 100);
}

#[test]
fn renamed_local_procedures_stay_reachable() {
    // q = \(r). { proc X = \(w). { w := w + 1 }; proc Y = \(w). { X(w) }; Y(r) }
    // called as q(X): the local procedure X clashes with the inserted
    // location X and is renamed, including the call inside Y.
    let bump = Procedure::new(
        Vec::<String>::new(),
        vec![],
        Body::new("s", "h", vec![assign("s", "w", Expr::add(id("w"), Expr::Num(1)), "h")], vec![]),
    );
    let via = Procedure::new(Vec::<String>::new(), vec![], Body::new("s", "h", vec![call("s", "X", &["w"], "h")], vec![]));
    let w = || VarOrder::new(["w"]).unwrap();
    let q = Procedure::new(
        Vec::<String>::new(),
        vec![
            ProcDecl { name: "X".into(), formals: w(), proc: bump },
            ProcDecl { name: "Y".into(), formals: w(), proc: via },
        ],
        Body::new("s", "h", vec![call("s", "Y", &["r"], "h")], vec![]),
    );
    let main = Procedure::new(
        ["X"],
        vec![ProcDecl { name: "q".into(), formals: VarOrder::new(["r"]).unwrap(), proc: q }],
        Body::new("s", "h", vec![call("s", "q", &["X"], "h")], vec![]),
    );
    for policy in [RenamePolicy::OnClash, RenamePolicy::Always] {
        let out = run_program(&main, &DataState::new().with("X", 4), Limits::default(), policy).unwrap();
        assert_eq!(out.halted().unwrap().get("X"), Some(5), "{policy:?}");
    }
}
