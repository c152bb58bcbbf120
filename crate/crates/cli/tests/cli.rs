use std::path::PathBuf;
use std::process::{Command, Output};

use nfg::format::from_json_str;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn nfg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nfg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = nfg(args);
    assert!(
        out.status.success(),
        "nfg {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn solve_shows_years_not_utilities() {
    let text = stdout(&["solve", &data("prisoners_dilemma.json")]);
    assert!(
        text.contains("pure Nash equilibria:\n  (T, T) -> (5, 5)\n"),
        "{text}"
    );
    assert!(text.contains("  (T, DT) -> (1, 8)\n  (DT, T) -> (8, 1)\n  (DT, DT) -> (2, 2)\n"));
    assert!(!text.contains("-5"));
}

#[test]
fn solve_json_is_valid_and_oriented() {
    let text = stdout(&["--json", "solve", &data("prisoners_dilemma.json")]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["command"], "solve");
    assert_eq!(
        v["results"]["pure_equilibria"][0]["profile"],
        serde_json::json!(["T", "T"])
    );
    assert_eq!(
        v["results"]["pure_equilibria"][0]["payoffs"],
        serde_json::json!([5, 5])
    );
    assert_eq!(v["results"]["pareto_optimal"].as_array().unwrap().len(), 3);
    assert_eq!(v["results"]["interior"], "outside_simplex");
}

#[test]
fn pennies_have_only_a_mixed_equilibrium() {
    let text = stdout(&["solve", &data("matching_pennies.json")]);
    assert!(text.contains("no pure equilibria"));
    assert!(text.contains("row (0.5, 0.5); col (0.5, 0.5)"));
}

#[test]
fn battle_of_the_sexes_interior() {
    let text = stdout(&["--json", "solve", &data("battle_of_the_sexes.json")]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let mixed = v["results"]["mixed_equilibria"].as_array().unwrap();
    assert_eq!(mixed.len(), 3);
    assert_eq!(mixed[2], serde_json::json!([[0.6, 0.4], [0.4, 0.6]]));
}

#[test]
fn pareto_alias_runs_solve() {
    assert_eq!(
        stdout(&["pareto", &data("prisoners_dilemma.json")]),
        stdout(&["solve", &data("prisoners_dilemma.json")])
    );
}

#[test]
fn dominance_lines() {
    let text = stdout(&["dominance", &data("prisoners_dilemma.json")]);
    assert!(text.contains("Jane: T strictly dominates DT"));
    assert!(text.contains("Bob: T strictly dominates DT"));
    let text = stdout(&["dominance", &data("matching_pennies.json")]);
    assert!(text.contains("row: no dominance"));
    assert!(text.contains("col: no dominance"));
}

#[test]
fn iesds_traces() {
    let text = stdout(&["iesds", &data("prisoners_dilemma.json")]);
    assert!(text.contains(
        "  round 1: Jane drops DT (dominated by T)\n  round 1: Bob drops DT (dominated by T)\n"
    ));
    assert!(text.contains("reduced game:\n  Jane: T\n  Bob: T\n  (T, T) -> (5, 5)\n"));

    let v: Value =
        serde_json::from_str(&stdout(&["--json", "iesds", &data("staircase.json")])).unwrap();
    assert_eq!(v["results"]["rounds"], 2);

    let text = stdout(&["iesds", &data("matching_pennies.json"), "--mode", "weak"]);
    assert!(text.contains("nothing eliminated"));
}

#[test]
fn arms_race_reports() {
    let text = stdout(&["arms-race", "--countries", "2", "--payoffs", "3,2,1,0"]);
    assert!(text.contains("pure Nash equilibria:\n  (W, W) -> (1, 1)\n"));
    assert!(text.contains("note: (NW, NW) is Pareto-superior"));

    let v: Value = serde_json::from_str(&stdout(&[
        "--json",
        "arms-race",
        "--countries",
        "3",
        "--payoffs",
        "3,2,1,0",
        "--start",
        "NW,NW,NW",
    ]))
    .unwrap();
    let states = v["results"]["dynamics"]["states"].as_array().unwrap();
    assert_eq!(states.last().unwrap(), &serde_json::json!(["W", "W", "W"]));
    assert_eq!(v["results"]["dynamics"]["converged"], true);
}

#[test]
fn dynamics_from_silence() {
    let text = stdout(&[
        "dynamics",
        &data("prisoners_dilemma.json"),
        "--start",
        "DT,DT",
    ]);
    assert!(text.contains(
        "  0: (DT, DT) -> (2, 2)\n  1: (T, DT) -> (1, 8)\n  2: (T, T) -> (5, 5)\n  converged"
    ));
    let text = stdout(&[
        "dynamics",
        &data("matching_pennies.json"),
        "--start",
        "H,H",
        "--max-steps",
        "20",
    ]);
    assert!(text.contains("not converged after 20 turns"));
}

#[test]
fn exit_codes() {
    let bad = nfg(&["arms-race", "--payoffs", "1,2,3,0"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("t > r > p > s"));

    assert_eq!(
        nfg(&["arms-race", "--countries", "20"]).status.code(),
        Some(3)
    );
    assert_eq!(
        nfg(&["arms-race", "--payoffs", "3,2,x,0"]).status.code(),
        Some(2)
    );
    assert_eq!(nfg(&["solve", "/no/such/file.json"]).status.code(), Some(2));
    let start = nfg(&[
        "dynamics",
        &data("prisoners_dilemma.json"),
        "--start",
        "T,maybe",
    ]);
    assert_eq!(start.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&start.stderr).contains("maybe"));
}

#[test]
fn malformed_file_names_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"players":["a"],"strategies":[["x"]],"orientation":"maximize"}"#,
    )
    .unwrap();
    let out = nfg(&["solve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("payoffs"));
}

#[test]
fn oversized_file_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.json");
    let players: Vec<String> = (0..20).map(|i| format!("\"p{i}\"")).collect();
    let strategies = vec!["[\"a\",\"b\"]"; 20];
    std::fs::write(
        &path,
        format!(
            r#"{{"players":[{}],"strategies":[{}],"orientation":"maximize","payoffs":[]}}"#,
            players.join(","),
            strategies.join(",")
        ),
    )
    .unwrap();
    assert_eq!(
        nfg(&["solve", path.to_str().unwrap()]).status.code(),
        Some(3)
    );
}

#[test]
fn export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args) in [
        ("pd.json", vec!["export", "pd"]),
        (
            "exchange.json",
            vec!["export", "exchange", "--values", "1,2,1,2"],
        ),
        ("arms.json", vec!["export", "arms-race", "--countries", "3"]),
    ] {
        let path = dir.path().join(name);
        let mut args = args.clone();
        let p = path.to_str().unwrap().to_string();
        args.extend(["--out", &p]);
        assert!(nfg(&args).status.success());
        let written = std::fs::read_to_string(&path).unwrap();
        let game = from_json_str(&written).unwrap();
        assert_eq!(nfg::format::to_json_string(&game) + "\n", written);
    }
    let printed = stdout(&["export", "pd"]);
    assert_eq!(
        printed,
        "{\"players\":[\"Bob\",\"Jane\"],\"strategies\":[[\"T\",\"DT\"],[\"T\",\"DT\"]],\"orientation\":\"minimize\",\"payoffs\":[[[5,5],[1,8]],[[8,1],[2,2]]]}\n"
    );
}

#[test]
fn arms_race_export_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("arms.json");
    stdout(&[
        "arms-race",
        "--countries",
        "3",
        "--export",
        path.to_str().unwrap(),
    ]);
    let game = from_json_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(game.num_players(), 3);
    assert_eq!(nfg::analysis::enumerate_pure_nash(&game).len(), 1);
}

#[test]
fn quiet_drops_header_and_notes() {
    let text = stdout(&["--quiet", "solve", &data("prisoners_dilemma.json")]);
    assert!(text.starts_with("pure Nash equilibria:"));
    assert!(!text.contains("note:"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["solve", "PD"],
        vec!["--json", "solve", "PD"],
        vec!["dominance", "PD"],
        vec!["--json", "iesds", "STAIR"],
        vec![
            "--json",
            "arms-race",
            "--countries",
            "4",
            "--start",
            "NW,NW,NW,NW",
        ],
    ];
    let pd = data("prisoners_dilemma.json");
    let stair = data("staircase.json");
    for args in runs {
        let args: Vec<&str> = args
            .into_iter()
            .map(|a| match a {
                "PD" => pd.as_str(),
                "STAIR" => stair.as_str(),
                other => other,
            })
            .collect();
        let first = nfg(&args);
        let second = nfg(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout);
    }
}
