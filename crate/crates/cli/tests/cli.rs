use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubiso"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    (code(&out), serde_json::from_str(&stdout(&out)).unwrap())
}

#[test]
fn schubert_verdicts() {
    assert_eq!(code(&run(&["check-schubert", "3,1", "2,1,1"])), 0);
    assert_eq!(code(&run(&["check-schubert", "2,1", "2,1"])), 0);
    let out = run(&["check-schubert", "2,2", "2,1,1", "--explain"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("size-3 subdiagrams differs: 1 vs 2"));
    let (status, value) = json(&["check-schubert", "2", "1,1"]);
    assert_eq!(status, 0);
    assert_eq!(value["report"]["verdict"], "transposed");
    let (status, value) = json(&["check-schubert", "2,2", "3,1"]);
    assert_eq!(status, 1);
    assert_eq!(value["isomorphic"], false);
}

#[test]
fn richardson_verdicts() {
    let out = run(&["check-richardson", "4,3,1 / 2", "4,4,2 / 3,1"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = run(&["check-richardson", "2", "2,1 / 1", "--explain"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("unknown"));
    assert!(text.contains("conjecture"));
    let (status, value) = json(&["check-richardson", "2", "3"]);
    assert_eq!(status, 1);
    assert_eq!(value["verdict"], "UNKNOWN_CONJECTURED_NOT");
    assert!(value["note"].is_string());
}

#[test]
fn partition_commands() {
    let out = run(&["xi", "4,4,3,3,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "8\n");
    assert_eq!(stdout(&run(&["betti", "2,2"])), "1 1 2 1 1\n");
    let (_, value) = json(&["betti", "0"]);
    assert_eq!(value["counts"], serde_json::json!([1]));
    let (status, value) = json(&["sing", "4,4,3,3,1"]);
    assert_eq!(status, 0);
    assert_eq!(
        value["components"],
        serde_json::json!([[4, 2, 2, 2, 1], [4, 4, 3]])
    );
    assert_eq!(value["lambda0"], serde_json::json!([4, 2, 2]));
    assert_eq!(value["smooth"], false);
    let (_, value) = json(&["sing", "3^2"]);
    assert_eq!(value["smooth"], true);
    assert!(value["lambda0"].is_null());
    let text = stdout(&run(&["sing", "2,1"]));
    assert!(text.contains("lambda^1 = 0"));
    assert!(text.contains("(empty)"));
}

#[test]
fn shapes_and_posets() {
    assert_eq!(stdout(&run(&["render", "2,1"])), "▪▪\n▪\n");
    assert_eq!(stdout(&run(&["render", "2,2 / 1"])), " ▪\n▪▪\n");
    assert_eq!(stdout(&run(&["render", "0"])), "(empty)\n");
    let dot = stdout(&run(&["poset", "2,2 / 1"]));
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("\"0,1\" -> \"1,1\""));
    let (status, value) = json(&["poset", "2,1"]);
    assert_eq!(status, 0);
    assert_eq!(
        value["elements"],
        serde_json::json!([[0, 0], [0, 1], [1, 0]])
    );
    assert_eq!(value["covers"], serde_json::json!([[0, 1], [0, 2]]));
}

#[test]
fn text_output_round_trips() {
    let out = stdout(&run(&["sing", "5,3,3,1"]));
    for line in out.lines().filter_map(|l| l.split_once(" = ")) {
        let again = stdout(&run(&["render", line.1]));
        assert!(!again.is_empty());
        assert_eq!(code(&run(&["xi", line.1])) == 0, line.1 != "0");
    }
}

#[test]
fn verify_and_explore() {
    let (status, value) = json(&["verify", "sing", "--box", "4x4"]);
    assert_eq!(status, 0);
    assert_eq!(value["checked"], 70);
    assert_eq!(value["failures"], serde_json::json!([]));
    assert!(value["elapsedMs"].is_u64());
    for sweep in ["conn", "strongskew", "dagger", "semi"] {
        let out = run(&["verify", sweep, "--max-cells", "4", "--jobs", "2"]);
        assert_eq!(code(&out), 0, "{sweep}");
    }
    let text = stdout(&run(&["verify", "betti", "--box", "3x3"]));
    assert_eq!(text, "20 checked, 0 failure(s)\n");
    let (status, value) = json(&["explore", "collisions", "--max-cells", "4"]);
    assert_eq!(status, 0);
    assert!(value["pairs"].is_array());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "conn", "--max-cells", "5"][..],
        &["explore", "collisions", "--max-cells", "5"],
    ] {
        assert_eq!(stdout(&run(args)), stdout(&run(args)));
    }
    let serial = stdout(&run(&[
        "verify",
        "dagger",
        "--max-cells",
        "5",
        "--jobs",
        "1",
    ]));
    let parallel = stdout(&run(&[
        "verify",
        "dagger",
        "--max-cells",
        "5",
        "--jobs",
        "3",
    ]));
    assert_eq!(serial, parallel);
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(code(&run(&["bogus"])), 2);
    assert_eq!(code(&run(&["xi", "3,4"])), 2);
    assert_eq!(code(&run(&["xi", "0"])), 2);
    assert_eq!(code(&run(&["check-richardson", "2 / 3", "1"])), 2);
    assert_eq!(code(&run(&["verify", "sing", "--box", "3by3"])), 2);
    assert_eq!(code(&run(&["verify", "conn", "--max-cells", "11"])), 3);
    assert_eq!(
        code(&run(&["explore", "collisions", "--max-cells", "40"])),
        3
    );
    let out = run(&["check-schubert", "1"]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());
}
