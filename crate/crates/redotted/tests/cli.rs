use std::process::Command as Process;

use proptest::prelude::*;
use redotted::cli::{evaluate, parse, print, run, Command, Context, Expr, FieldChoice, Options};
use redotted::exactalg::{Fp, Q};
use redotted::webster::{basis_in_degree, WElem};
use redotted::Error;

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_redotted"))
}

#[test]
fn documented_examples() {
    let ctx = Context::new(2);
    assert_eq!(evaluate::<Q>("e(rbr)", &ctx).unwrap(), WElem::idem(2, 2));
    assert_eq!(
        print(&evaluate::<Q>("psi[2] ; psi[2] ; e_2", &ctx).unwrap()),
        "[2->2] (x1 - x2)"
    );
    assert!(evaluate::<Q>("e(brr)", &ctx).unwrap().is_zero());
}

#[test]
fn juxtaposition_and_separators_agree() {
    let ctx = Context::new(3);
    let a = evaluate::<Q>("psi[2] psi[3] y[4]", &ctx).unwrap();
    let b = evaluate::<Q>("psi[2] ; psi[3] * y[4]", &ctx).unwrap();
    assert_eq!(a, b);
    assert!(!a.is_zero());
}

#[test]
fn thick_generators_need_a_position() {
    assert!(evaluate::<Q>("E1", &Context::new(3)).is_err());
    let e1 = evaluate::<Q>("E1", &Context::with_thick(3, 1)).unwrap();
    let want = evaluate::<Q>("(x1 + x2) (e_3 + e_4)", &Context::new(3)).unwrap();
    assert_eq!(e1, want);
    let e2 = evaluate::<Q>("E2", &Context::with_thick(3, 1)).unwrap();
    assert_eq!(
        e2,
        evaluate::<Q>("x1 x2 (e_3 + e_4)", &Context::new(3)).unwrap()
    );
}

#[test]
fn errors_report_positions_and_tokens() {
    assert!(matches!(
        parse("psi[2] ;"),
        Err(Error::Parse { pos: 8, .. })
    ));
    assert!(matches!(parse("y[2"), Err(Error::Parse { pos: 3, .. })));
    assert!(matches!(
        parse("e_2 & e_3"),
        Err(Error::Parse { pos: 4, .. })
    ));
    assert!(matches!(parse("zeta"), Err(Error::Parse { pos: 0, .. })));
    assert!(matches!(
        parse("e_2 + e(rqr)"),
        Err(Error::Color { token: 6, .. })
    ));
    assert!(matches!(
        evaluate::<Q>("psi[3]", &Context::new(2)),
        Err(Error::Index(_))
    ));
}

#[test]
fn commands_report_checks() {
    let mut o = Options::new(2);
    o.block = Some((3, 3));
    let out = run(Command::Gdim, &o).unwrap();
    assert!(out.passed);
    assert_eq!(out.json["result"]["gdim"], "(1+q^2)/(1-q^2)^2");
    assert!(out.json["paper_check"]["statement"].is_string());

    let out = run(Command::Hh, &Options::new(4)).unwrap();
    assert!(out.passed);
    assert_eq!(out.json["result"]["HH2_0"], 3);

    let mut o = Options::new(3);
    o.word = Some(vec![1, 2, 1]);
    let out = run(Command::Braid, &o).unwrap();
    assert!(out.passed);
    assert_eq!(out.json["result"]["comparison"]["chain_iso_found"], true);
    assert!(out.json["result"]["certification"]
        .as_str()
        .unwrap()
        .contains("degree-truncated"));

    let mut o = Options::new(3);
    o.field = FieldChoice::Fp(32003);
    assert!(run(Command::Verify, &o).unwrap().passed);
    assert!(run(Command::Center, &o).unwrap().passed);
    assert!(run(Command::Burau, &Options::new(4)).unwrap().passed);
    assert!(run(Command::SoergelTable, &Options::new(2)).unwrap().passed);
}

#[test]
fn output_is_deterministic() {
    let mut o = Options::new(3);
    o.word = Some(vec![1, -2]);
    o.compare = Some(vec![1, -2]);
    o.seed = 5;
    let a = run(Command::Braid, &o).unwrap().json;
    let b = run(Command::Braid, &o).unwrap().json;
    assert_eq!(a, b);
}

#[test]
fn binary_emits_json_and_exit_codes() {
    let out = bin()
        .args(["gdim", "--n", "2", "--block", "3,3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["gdim"], "(1+q^2)/(1-q^2)^2");
    assert_eq!(v["paper_check"]["passed"], true);

    let out = bin().args(["verify", "--n", "3"]).output().unwrap();
    assert!(out.status.success());

    // Braid words with different Burau matrices are not equivalent: a failed check.
    let out = bin()
        .args([
            "braid",
            "--n",
            "3",
            "--word",
            "1",
            "--compare",
            "2",
            "--seed",
            "3",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["paper_check"]["passed"], false);

    let out = bin()
        .args(["normal-form", "--n", "2", "--expr", "e(rbb)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("token 2"));

    let out = bin()
        .args(["normal-form", "--n", "2", "--expr", "e_2", "--pretty"])
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS"));
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..5).prop_map(|k| Expr::Num(k.to_string())),
        (1u32..4, 2u32..4).prop_map(|(a, b)| Expr::Num(format!("{a}/{b}"))),
        (1usize..=3).prop_map(Expr::Var),
        (2usize..=4).prop_map(Expr::Idem),
        (1usize..=4).prop_map(Expr::Dot),
        (1usize..=3).prop_map(Expr::Cross),
        Just(Expr::E1),
        Just(Expr::E2),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner, 0u32..3).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn printing_then_parsing_is_the_identity(e in expr_strategy()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e, "{}", text);
    }

    #[test]
    fn canonical_text_evaluates_to_the_element(e in expr_strategy()) {
        let ctx = Context::with_thick(3, 2);
        let w = e.eval::<Q>(&ctx).unwrap();
        prop_assert_eq!(evaluate::<Q>(&print(&w), &ctx).unwrap(), w.clone());
        let wp = e.eval::<Fp<101>>(&ctx).unwrap();
        prop_assert_eq!(evaluate::<Fp<101>>(&print(&wp), &ctx).unwrap(), wp);
    }

    #[test]
    fn basis_elements_round_trip(d in 0i64..4, k in 0usize..1000) {
        let b = basis_in_degree::<Q>(3, d);
        prop_assume!(!b.is_empty());
        let w = &b[k % b.len()];
        prop_assert_eq!(&evaluate::<Q>(&print(w), &Context::new(3)).unwrap(), w);
    }
}
