use std::process::{Command, Output};

use fsind_cli::IndicatorTable;

fn fsind(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fsind"))
        .args(args)
        .env_remove("FSIND_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn text_table_for_s4_over_s2() {
    let o = fsind(&["compute", "--group", "S4", "--subgroup", "S2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("G = S4, H = S2, exp(G) = 12"));
    // Seven double cosets, two of them with two characters.
    assert_eq!(out.lines().filter(|l| l.contains("W_")).count(), 9);
    let trivial = out.lines().find(|l| l.starts_with("() ")).unwrap();
    assert!(trivial.split_whitespace().skip(3).all(|v| v == "1"), "{trivial}");
}

#[test]
fn json_round_trips() {
    let o = fsind(&[
        "compute", "--group", "S5", "--subgroup", "S3", "--m", "full", "--format", "json",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let table: IndicatorTable = serde_json::from_str(&text).unwrap();
    assert_eq!(table.exponent, 60);
    assert_eq!(table.ms, (1..=60).collect::<Vec<_>>());
    assert_eq!(table.cosets.len(), 7);
    assert_eq!(serde_json::to_string_pretty(&table).unwrap() + "\n", text);
    for c in &table.cosets {
        for ch in &c.characters {
            // ν₁ is 1 on the unit object and 0 elsewhere.
            let unit = c.rep == "()" && ch.index == 0;
            assert_eq!(ch.values_by_m[&1].to_string(), if unit { "1" } else { "0" });
        }
    }
}

#[test]
fn csv_has_one_row_per_character_and_one_column_per_m() {
    let o = fsind(&[
        "compute", "--group", "S4", "--subgroup", "S2", "--m", "2,4,12", "--format", "csv",
    ]);
    assert!(o.status.success());
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = r.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["rep", "character", "degree", "m=2", "m=4", "m=12"]);
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 9);
    let last = rows.iter().find(|r| &r[0] == "(1 3)(2 4)").unwrap();
    assert_eq!((&last[3], &last[4], &last[5]), ("1", "2", "2"));
}

#[test]
fn coset_override_and_cross_check() {
    let o = fsind(&[
        "compute", "--group", "S5", "--subgroup", "S3", "--coset", "(2 4 3 5)", "--method",
        "cross-check", "--format", "csv",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let row = out.lines().nth(1).unwrap();
    assert!(row.starts_with("(2 4 3 5),W_0,1,0,1,0,2,2,3,3,4,2,4,5,6"), "{row}");
}

#[test]
fn non_real_values_print_in_cyclotomic_form() {
    let o = fsind(&[
        "compute",
        "--group",
        "C9",
        "--subgroup",
        "gens[9]: (1 4 7)(2 5 8)(3 6 9)",
        "--m",
        "3",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("C3{"));
}

#[test]
fn exit_codes() {
    let parse = fsind(&["compute", "--group", "S4", "--subgroup", "S2", "--m", "0"]);
    assert_eq!(parse.status.code(), Some(2));
    let bad_group = fsind(&["compute", "--group", "S4", "--subgroup", "gens[4]: (1 5)"]);
    assert_eq!(bad_group.status.code(), Some(2));
    let cap = fsind(&["compute", "--group", "S8", "--subgroup", "S2", "--cap", "1000"]);
    assert_eq!(cap.status.code(), Some(3));
    let cap_env = Command::new(env!("CARGO_BIN_EXE_fsind"))
        .args(["compute", "--group", "S6", "--subgroup", "S2"])
        .env("FSIND_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(cap_env.status.code(), Some(3));
    let sprime = fsind(&[
        "compute", "--group", "S4", "--subgroup", "S2", "--method", "orbit", "--sprime",
        "gens:(1 2 3 4)",
    ]);
    assert_eq!(sprime.status.code(), Some(2));
}

#[test]
fn sweeps_report_and_exit() {
    let ok = fsind(&["sweep", "--group", "S6", "--subgroup", "S4", "--predicate", "integral"]);
    assert!(ok.status.success());
    assert!(stdout(&ok).starts_with("integral: holds"));
    let bad = fsind(&[
        "sweep",
        "--group",
        "C9",
        "--subgroup",
        "gens[9]: (1 4 7)(2 5 8)(3 6 9)",
        "--predicate",
        "real",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("violated at"));
}

#[test]
fn verify_selected_fixtures() {
    let o = fsind(&["verify", "--only", "s4s2", "--only", "s7s5"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("all fixtures pass"));
    assert!(out.contains("reference 14, computed 15"));
    let unknown = fsind(&["verify", "--only", "s3s1"]);
    assert_eq!(unknown.status.code(), Some(2));
}
