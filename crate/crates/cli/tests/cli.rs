use std::path::PathBuf;

use mbstar_cli::{run, Outcome};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn mbstar(args: &[&str]) -> Outcome {
    run(std::iter::once("mbstar").chain(args.iter().copied()))
}

fn scratch(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn decide_examples() {
    let o = mbstar(&["decide", "p | ~p | #p"]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "TAUTOLOGY\n"));
    let o = mbstar(&["decide", "p | ~p"]);
    assert_eq!((o.code, o.stdout.as_str()), (1, "COUNTERMODEL p=0 ~p=0\n"));
    let o = mbstar(&["decide", "p | ("]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.starts_with("error: parse: "), "{}", o.stderr);
    assert_eq!(o.stderr.lines().count(), 1);
}

#[test]
fn decide_with_premises() {
    let o = mbstar(&["decide", "-p", "p", "-p", "~p", "q"]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "ENTAILED\n"));
    let o = mbstar(&["decide", "--premise", "#p", "p | ~p"]);
    assert_eq!(o.code, 1);
}

#[test]
fn machine_format() {
    let o = mbstar(&["--format", "machine", "decide", "p | ~p"]);
    assert_eq!(o.stdout, "verdict=countermodel\ncountermodel=p=0 ~p=0\n");
    let o = mbstar(&["decide", "p", "--format", "machine"]);
    assert!(o.stdout.starts_with("verdict=countermodel\n"));
    let o = mbstar(&["--format", "machine", "parse", "(p -> (q -> p))"]);
    assert_eq!(o.stdout, "formula=p -> q -> p\ndepth=2\nsize=5\n");
}

#[test]
fn cap_exceeded_exits_three() {
    let o = mbstar(&["--cap", "4", "decide", "p | q | r"]);
    assert_eq!(o.code, 3);
    assert!(o.stderr.starts_with("error: cap-exceeded: "));
}

#[test]
fn table_rows() {
    let o = mbstar(&["--format", "machine", "table", "~~p"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("columns=p,~p,~~p,~~p\n"), "{}", o.stdout);
    assert!(o.stdout.ends_with("rows=5\n"));
}

#[test]
fn proofs() {
    let o = mbstar(&["prove-check", &data("proofs/explosion.proof")]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "VALID\n"));
    let broken = scratch("broken.proof", "premise p\n1: p ; prem\n2: q ; mp 1 1\n");
    let o = mbstar(&["prove-check", &broken]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("INVALID line 2: "), "{}", o.stdout);
    let o = mbstar(&["prove-check", "/nonexistent/file.proof"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.starts_with("error: io: "));
}

#[test]
fn deduce_round_trips_through_the_checker() {
    let o = mbstar(&["deduce", &data("proofs/modus-ponens.proof"), "p"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let out = scratch("deduced.proof", &o.stdout);
    let o = mbstar(&["--format", "machine", "prove-check", &out]);
    assert_eq!(o.stdout, "valid=true\nconclusion=p -> q\n");
    let o = mbstar(&["deduce", &data("proofs/modus-ponens.proof"), "r"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.starts_with("error: hypothesis-not-premise: "));
}

#[test]
fn probabilities() {
    let dist = data("uniform5.dist");
    assert_eq!(mbstar(&["prob", &dist, "p"]).stdout, "2/5\n");
    assert_eq!(mbstar(&["prob", &dist, "~p"]).stdout, "2/5\n");
    assert_eq!(mbstar(&["prob", &dist, "#p"]).stdout, "3/5\n");
    assert_eq!(mbstar(&["cond", &dist, "p", "p | ~p"]).stdout, "1/2\n");
    let o = mbstar(&["cond", &dist, "p", "p & ~p"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.starts_with("error: zero-condition: "));
    let o = mbstar(&["prob", &dist, "q"]);
    assert!(o.stderr.starts_with("error: closure-mismatch: "));
}

#[test]
fn total_and_bayes() {
    let o = mbstar(&["--format", "machine", "total", &data("uniform5.dist"), "p", "p"]);
    assert_eq!(
        o.stdout,
        "beta=2/5\nbeta_and_alpha=2/5\nbeta_and_not_alpha=0\nbeta_and_undet_alpha=1/5\n\
         beta_and_overlap=1/5\nidentity_holds=true\n"
    );
    let o = mbstar(&["bayes", &data("uniform10.dist"), "a", "b"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("posterior=2/5\n"));
    assert!(o.stdout.contains("K=1/5\n"));
    assert!(o.stdout.contains("denominator=1/2\n"));
    let o = mbstar(&["bayes", &data("uniform5.dist"), "p", "p & ~p"]);
    assert_eq!(o.stderr, "error: hypothesis-violated: bayes hypothesis violated: P(p & ~p) = 0\n");
}

#[test]
fn audit_and_coherence() {
    let o = mbstar(&["audit", &data("comparison.constraints")]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("comparison: "));
    let o = mbstar(&["audit", &data("half.constraints")]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "OK\n"));

    let o = mbstar(&["coherence", &data("half.constraints")]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("FEASIBLE\nclosure: "));
    let witness = scratch("witness.dist", o.stdout.trim_start_matches("FEASIBLE\n"));
    assert_eq!(mbstar(&["prob", &witness, "#p"]).stdout, "1/2\n");

    let o = mbstar(&["coherence", &data("certain.constraints")]);
    assert_eq!((o.code, o.stdout.as_str()), (1, "INFEASIBLE\n"));
    assert_eq!(mbstar(&["coherence", &data("gap.constraints")]).code, 0);
}

#[test]
fn p_entails_command() {
    assert_eq!(mbstar(&["p-entails", "-p", "p", "p | q"]).stdout, "P-ENTAILED\n");
    let o = mbstar(&["p-entails", "-p", "#p", "p | ~p"]);
    assert_eq!((o.code, o.stdout.as_str()), (1, "NOT P-ENTAILED\n"));
}

#[test]
fn spaces() {
    let o = mbstar(&["space-check", &data("example.space")]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "VALID\nsigma-algebra: no\n"));
    let o = mbstar(&["space-check", &data("classical.space")]);
    assert_eq!(o.code, 0);
    let bad = std::fs::read_to_string(data("classical.space"))
        .unwrap()
        .replace("mu O = 1", "mu O = 9/10");
    let o = mbstar(&["space-check", &scratch("bad.space", &bad)]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("normalization: measure of omega is 9/10, not 1"), "{}", o.stdout);
    assert!(o.stdout.contains("additivity: "));
}

#[test]
fn usage_errors() {
    assert_eq!(mbstar(&[]).code, 2);
    assert_eq!(mbstar(&["frobnicate"]).code, 2);
    assert_eq!(mbstar(&["--format", "xml", "parse", "p"]).code, 2);
    let o = mbstar(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("space-check"));
}
