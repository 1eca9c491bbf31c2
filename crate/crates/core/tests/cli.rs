use almost_special::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("almost-special").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn twist_worked_example() {
    let (code, out, _) = call(&["twist", "--symbol", "0 1 2 3 4 / 2 3 4 5 6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 1 / 5 6\n");
    let (code, out, _) = call(&["twist", "--symbol", "0 1 / 5 6", "--cutoff", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 1 2 3 4 / 2 3 4 5 6\n");
}

#[test]
fn twist_json() {
    let (code, out, _) = call(&["--json", "twist", "--symbol", "2 / 2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["twisted"], "1 2 / 1 2");
    assert_eq!(v["cutoff"], 2);
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(call(&["twist", "--symbol", "3 1 / 2 4"]).0, 2);
    assert_eq!(call(&["twist", "--symbol", "0 1 / 5 6", "--cutoff", "3"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["classify", "--rank", "4", "--bogus"]).0, 2);
    assert_eq!(call(&["table", "--type", "E9"]).0, 2);
    assert_eq!(call(&["table", "--type", "F4"]).0, 2);
    assert_eq!(call(&["group", "quotient", "--ambient", "D8", "--upper", "1", "--lower", "1"]).0, 2);
    assert_eq!(call(&["verify", "theorem12", "--max-rank", "3"]).0, 2);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn classify_json_records() {
    let (code, out, _) = call(&["classify", "--rank", "4", "--json"]);
    assert_eq!(code, 0);
    let records: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 13);
    let degenerate = records.iter().filter(|r| r["degenerate"] == true).count();
    assert_eq!(degenerate, 4);
    for r in &records {
        if r["two_special"] == true {
            assert_eq!(r["almost_special"], true);
        }
        assert_eq!(r["marker"].is_null(), r["degenerate"] == false);
    }
}

#[test]
fn classify_text() {
    let (code, out, _) = call(&["classify", "--rank", "10"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("0 1 / 5 6 ") && l.ends_with("yes             no")));
    assert!(out.lines().last().unwrap().starts_with("D10: "));
}

#[test]
fn verify_subcommands() {
    for args in [
        &["verify", "theorem12", "--max-rank", "12"][..],
        &["verify", "lemma-b", "--max-rank", "8"],
        &["verify", "sign-closure", "--max-rank", "10"],
        &["verify", "twist-algebra", "--max-rank", "8"],
        &["verify", "tables"],
        &["verify", "strata"],
    ] {
        let (code, out, _) = call(args);
        assert_eq!(code, 0, "{args:?}: {out}");
        assert!(out.starts_with("PASS "), "{out}");
    }
}

#[test]
fn verify_is_reproducible_across_thread_counts() {
    let strip = |out: String| {
        let mut v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        v.as_object_mut().unwrap().remove("wall_time_ms");
        v
    };
    let (_, one, _) = call(&["--json", "--threads", "1", "verify", "theorem12", "--max-rank", "14"]);
    let (_, four, _) = call(&["--json", "--threads", "4", "verify", "theorem12", "--max-rank", "14"]);
    assert_eq!(strip(one), strip(four));
}

#[test]
fn table_output() {
    let (code, out, _) = call(&["table", "diff", "--type", "E8"]);
    assert_eq!(code, 0);
    assert_eq!(out, "50_8 700_16\n");
    let (_, out, _) = call(&["table", "diff", "--type", "E6"]);
    assert_eq!(out, "\n");
    let (code, out, _) = call(&["table", "--type", "E7"]);
    assert_eq!(code, 0);
    assert!(out.contains("\n120_4,((15_7))\n"));
    assert_eq!(out.lines().count(), 35);
    let (_, out, _) = call(&["table", "--type", "E8", "--json"]);
    assert_eq!(out.lines().count(), 46);
}

#[test]
fn strata_output() {
    let (code, out, _) = call(&["strata", "--table", "E8_S5"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[0].starts_with("4480_16") && lines[0].contains("S5/1") && lines[0].ends_with("unipotent"));
    assert!(lines[7].starts_with("168_24") && lines[7].ends_with("-"));
    let (code, out, _) = call(&["strata", "--table", "G2_S3", "--json"]);
    assert_eq!(code, 0);
    let last: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(last["rep"], "1_3#2");
    assert_eq!(last["computed"], "S2");
    assert_eq!(call(&["strata", "--table", "E7_S2"]).0, 2);
}

#[test]
fn group_commands() {
    let (code, out, _) = call(&["group", "quotient", "--ambient", "S5", "--upper", "S3S2", "--lower", "S2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "S3\n");
    let (_, out, _) = call(&["group", "quotient", "--ambient", "S4", "--upper", "D8", "--lower", "S2S2"]);
    assert_eq!(out, "S2\n");
    assert_eq!(call(&["group", "quotient", "--ambient", "S3", "--upper", "S3", "--lower", "S2"]).0, 2);
    let (code, out, _) = call(&["group", "catalog"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3 + 6 + 8);
    assert!(out.contains("S5  D8    order 8    <(1 2 3 4), (1 3)>"));
}
