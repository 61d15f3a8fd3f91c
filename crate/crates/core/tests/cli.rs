use liaison::cli::{exit, run};
use liaison::linkage::ChainReport;
use liaison::resolve::BettiTable;

fn cli(args: &[&str]) -> liaison::cli::Outcome {
    run(std::iter::once("liaison").chain(args.iter().copied()))
}

#[test]
fn betti_of_family_matches_and_exits_zero() {
    let out = cli(&["betti", "--family", "I", "--n", "4"]);
    assert_eq!(out.code, exit::OK, "{}", out.stderr);
    assert!(out.stdout.contains("total: 1 5 6 2"));
}

#[test]
fn betti_json_round_trips() {
    let out = cli(&["betti", "--family", "J", "--n", "4", "--json"]);
    assert_eq!(out.code, exit::OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["matches_expected"], true);
    let t = BettiTable::from_json_value(&v).unwrap();
    let golden = format!("{}/tests/golden/J_n4.json", env!("CARGO_MANIFEST_DIR"));
    assert!(t.same_entries(&BettiTable::from_json(&std::fs::read_to_string(golden).unwrap()).unwrap()));
}

#[test]
fn paper_chain_for_jprime() {
    let out = cli(&["chain", "--family", "Jprime", "--n", "4", "--paper-steps", "--json"]);
    assert_eq!(out.code, exit::OK, "{}", out.stderr);
    let rep = ChainReport::from_json(&out.stdout).unwrap();
    assert!(rep.sequentially_bounded && rep.terminal_is_ci);
    assert_eq!(rep.steps.len(), 4);
}

#[test]
fn inhomogeneous_input_is_an_input_error() {
    let out = cli(&["betti", "x + 1"]);
    assert_eq!(out.code, exit::INPUT);
    assert!(out.stderr.contains("homogeneous"));
    assert_eq!(cli(&["betti", "x^2, w"]).code, exit::INPUT);
    assert_eq!(cli(&["link", "--family", "I", "--type", "2,2,12"]).code, exit::INPUT);
    assert_eq!(cli(&["frobnicate"]).code, exit::INPUT);
}

#[test]
fn seeded_output_is_deterministic() {
    let args = ["link", "--family", "J", "--n", "4", "--type", "2,5,12", "--seed", "11", "--json"];
    let a = cli(&args);
    assert_eq!(a.code, exit::OK, "{}", a.stderr);
    assert_eq!(a.stdout, cli(&args).stdout);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["hf_link_identity"], true);
}

#[test]
fn other_subcommands() {
    let out = cli(&["family", "Jprime", "--n", "5"]);
    assert_eq!(out.stdout.trim(), "x^2, y^5*z, x*y^4*z, x*y*z^6, y^11, z^14");
    let out = cli(&["inverse", "--family", "I", "--n", "4"]);
    assert!(out.stdout.starts_with("<Z^11, X^3*Y^6>"), "{}", out.stdout);
    let out = cli(&["colon", "x^2, y^3", "x"]);
    assert_eq!(out.stdout.trim(), "x, y^3");
    let out = cli(&["hf", "x^2, y^3, z^4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["values"], serde_json::json!([1, 3, 5, 6, 5, 3, 1, 0]));
    let out = cli(&["link", "--family", "I", "--ci", "y*z, x^5, y^12 - z^12", "--cone"]);
    assert_eq!(out.code, exit::OK, "{}", out.stderr);
    let out = cli(&["--modulus", "7", "inverse", "--family", "I"]);
    assert_eq!(out.code, exit::INPUT);
    let out = cli(&["inverse", "--family", "Jprime", "--link-ci", "x^2, y^4*z, y^12 - z^12", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["generators"], serde_json::json!(["Z^11", "Y^2*Z^7", "X*Y^6"]));
}

#[test]
fn search_reaches_a_complete_intersection() {
    let out = cli(&["chain", "--family", "I", "--search", "--json"]);
    assert_eq!(out.code, exit::OK);
    let rep = ChainReport::from_json(&out.stdout).unwrap();
    assert!(rep.terminal_is_ci && rep.steps.len() <= 6);
}

#[test]
fn error_kinds_map_to_exit_codes() {
    use liaison::cli::exit_code;
    use liaison::error::Error;
    assert_eq!(exit_code(&Error::Genericity("no luck".into())), exit::GENERICITY);
    assert_eq!(exit_code(&Error::Input("bad".into())), exit::INPUT);
    let wrapped = Error::Step { step: 2, source: Box::new(Error::Genericity("no luck".into())) };
    assert_eq!(exit_code(&wrapped), exit::GENERICITY);
}
