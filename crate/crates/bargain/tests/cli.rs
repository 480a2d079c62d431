use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn bargain(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bargain"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let r = bargain(args, stdin);
    assert_eq!(r.code, 0, "{args:?} failed: {}", r.stderr);
    r.stdout
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn corr_g22_table() {
    let out = ok(&["corr", "--m", "2", "--n", "2"], None);
    let rows: Vec<&str> = out.lines().skip(2).collect();
    assert_eq!(rows.len(), 3);
    let centre: Vec<&str> = rows[1].split('|').map(str::trim).collect();
    assert_eq!(centre, ["12", "11", "11 22", "22"]);
}

#[test]
fn corr_g33_json_is_ten_by_ten() {
    let v = json(&ok(&["corr", "--m", "3", "--n", "3", "--format", "json"], None));
    assert_eq!(v["rows"].as_array().unwrap().len(), 10);
    assert_eq!(v["cols"].as_array().unwrap().len(), 10);
    assert_eq!(v["cells"].as_array().unwrap().len(), 100);
    assert_eq!(v["cells"][0], json("[[1,1]]"));
}

#[test]
fn corr_single_cell() {
    let out = ok(&["corr", "--m", "1", "--n", "1"], None);
    assert_eq!(out.lines().count(), 3);
    assert!(out.ends_with("| 11\n"));
}

#[test]
fn corr_past_bound_exits_2() {
    assert_eq!(bargain(&["corr", "--m", "7", "--n", "7"], None).code, 2);
}

#[test]
fn natural_preferences_solve_to_top_pair() {
    let u = ok(&["gen", "utility", "--m", "3", "--n", "4", "--kind", "natural"], None);
    let eq = json(&ok(&["solve"], Some(&u)));
    assert_eq!(eq["outcome"], json("[3,4]"));
}

#[test]
fn zero_utility_solves() {
    let u = ok(&["gen", "utility", "--m", "2", "--n", "3", "--kind", "zero"], None);
    let eq = json(&ok(&["solve", "--m", "2", "--n", "3"], Some(&u)));
    assert_eq!(eq["x"].as_array().unwrap().len(), 2);
    assert_eq!(eq["y"].as_array().unwrap().len(), 3);
}

#[test]
fn random_solutions_pass_verify() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..8 {
        let seed = seed.to_string();
        let u = ok(&["gen", "utility", "--m", "4", "--n", "4", "--seed", &seed], None);
        let eq = ok(&["solve"], Some(&u));
        let up = write(dir.path(), "u.json", &u);
        let ep = write(dir.path(), "eq.json", &eq);
        let v = json(&ok(
            &[
                "verify",
                "--utility",
                up.to_str().unwrap(),
                "--equilibrium",
                ep.to_str().unwrap(),
            ],
            None,
        ));
        assert_eq!(v["equilibrium"], true, "seed {seed}");
        assert_eq!(v["deviations_checked"], 70);
    }
}

#[test]
fn verify_rejects_an_improvable_profile() {
    let dir = tempfile::tempdir().unwrap();
    let u = ok(&["gen", "utility", "--m", "3", "--n", "4", "--kind", "natural"], None);
    let up = write(dir.path(), "u.json", &u);
    let ep = write(dir.path(), "eq.json", r#"{"x":[1,1,1],"y":[1,1,1,1],"outcome":[1,1]}"#);
    let r = bargain(
        &[
            "verify",
            "--utility",
            up.to_str().unwrap(),
            "--equilibrium",
            ep.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(r.code, 1);
    let v = json(&r.stdout);
    assert_eq!(v["equilibrium"], false);
    assert_eq!(v["improvement"]["player"], "A");
}

#[test]
fn verify_needs_a_single_deal() {
    let dir = tempfile::tempdir().unwrap();
    let u = ok(&["gen", "utility", "--m", "2", "--n", "2", "--kind", "zero"], None);
    let up = write(dir.path(), "u.json", &u);
    let ep = write(dir.path(), "eq.json", r#"{"x":[1,2],"y":[1,2],"outcome":[1,1]}"#);
    let r = bargain(
        &[
            "verify",
            "--utility",
            up.to_str().unwrap(),
            "--equilibrium",
            ep.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(r.code, 4);
}

#[test]
fn malformed_utility_exits_3() {
    assert_eq!(bargain(&["solve"], Some("{\"m\":2}")).code, 3);
    let ragged = r#"{"m":2,"n":2,"uA":[[0,0],[0]],"uB":[[0,0],[0,0]]}"#;
    assert_eq!(bargain(&["solve"], Some(ragged)).code, 3);
    let u = ok(&["gen", "utility", "--m", "2", "--n", "2"], None);
    assert_eq!(bargain(&["solve", "--m", "3"], Some(&u)).code, 3);
}

#[test]
fn wheel_is_self_dual() {
    let w = ok(&["gen", "wheel", "--k", "3"], None);
    let v = json(&ok(&["tight", "--self"], Some(&w)));
    assert_eq!(v["dual"], true);
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn non_dual_pair_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(
        dir.path(),
        "c.json",
        &ok(&["gen", "symmetric", "--k", "2", "--l", "3"], None),
    );
    let d = write(
        dir.path(),
        "d.json",
        &ok(&["gen", "symmetric", "--k", "3", "--l", "2"], None),
    );
    let v = json(&ok(
        &["tight", "--c", c.to_str().unwrap(), "--d", d.to_str().unwrap()],
        None,
    ));
    assert_eq!(v["dual"], true);
    let v = json(&ok(
        &["tight", "--c", c.to_str().unwrap(), "--d", c.to_str().unwrap()],
        None,
    ));
    assert_eq!(v["dual"], false);
    assert!(v["witness"]["kind"].is_string());
    let text = ok(&["tight", "--self", c.to_str().unwrap(), "--format", "table"], None);
    assert!(text.starts_with("not dual\n"));
}

#[test]
fn double_dual_equals_sperner_reduction() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(
        dir.path(),
        "c.json",
        &ok(&["gen", "symmetric", "--k", "2", "--l", "2"], None),
    );
    let seymour = ["gen", "seymour", "--c", c.to_str().unwrap(), "--d", c.to_str().unwrap()];
    let families: [&[&str]; 5] = [
        &["gen", "fano"],
        &["gen", "wheel", "--k", "4"],
        &["gen", "symmetric", "--k", "2", "--l", "3"],
        &["gen", "symmetric", "--k", "3", "--l", "3"],
        &seymour,
    ];
    for args in families {
        let h = ok(args, None);
        let twice = ok(&["dualize"], Some(&ok(&["dualize"], Some(&h))));
        assert_eq!(twice, ok(&["sperner"], Some(&h)), "{args:?}");
    }
    let joined = ok(&seymour, None);
    assert_eq!(json(&ok(&["tight", "--self"], Some(&joined)))["dual"], true);
}

#[test]
fn dualize_singleton_is_identity() {
    let h = "{\"ground\":[\"a\"],\"edges\":[[\"a\"]]}\n";
    assert_eq!(ok(&["dualize"], Some(h)), h);
}

#[test]
fn sperner_drops_supersets() {
    let h = r#"{"ground":["a","b","c"],"edges":[["a","b"],["a"],["b","c"]]}"#;
    let v = json(&ok(&["sperner"], Some(h)));
    assert_eq!(v["edges"], json(r#"[["a"],["b","c"]]"#));
}

#[test]
fn bad_hypergraph_exits_3() {
    assert_eq!(bargain(&["dualize"], Some("not json")).code, 3);
    let unknown = r#"{"ground":["a"],"edges":[["b"]]}"#;
    assert_eq!(bargain(&["dualize"], Some(unknown)).code, 3);
}

#[test]
fn demo3_reports_no_equilibrium() {
    let out = ok(&["demo3"], None);
    assert!(out.contains("not dual"));
    assert!(out.contains("total: 0 equilibria"));
    let v = json(&ok(&["demo3", "--format", "json"], None));
    assert_eq!(v["dual"], false);
    assert_eq!(v["equilibria"], 0);
    assert_eq!(v["forms"].as_array().unwrap().len(), 2);
    assert_eq!(v["forms"][0]["improvers"].as_array().unwrap().len(), 27);
    assert_eq!(v["utilities"]["A"], json("[0,0,1,1,0,2,0,1]"));
}

#[test]
fn demo3_realization_matches_stored_utilities() {
    assert_eq!(ok(&["demo3", "--realize"], None), ok(&["demo3"], None));
}

#[test]
fn jordan_five_area_map() {
    let out = ok(&["jordan"], None);
    assert!(out.ends_with("\ndual\n"));
    let v = json(&ok(&["jordan", "--format", "json"], None));
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert_eq!(v["cols"].as_array().unwrap().len(), 4);
    assert_eq!(v["cells"][10], json(r#"["o1","o4","o5"]"#));
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/five_area_map.json");
    assert_eq!(ok(&["jordan", fixture], None), out);
}

#[test]
fn jordan_degree_four_point() {
    let dir = tempfile::tempdir().unwrap();
    let quadrants = r#"{"areas":["a","b","c","d"],
        "adjacency":[["a","b"],["a","c"],["b","d"],["c","d"]],
        "touches":{"N":["a","b"],"E":["a","c"],"S":["c","d"],"W":["b","d"]}}"#;
    let p = write(dir.path(), "q.json", quadrants);
    let v = json(&ok(&["jordan", p.to_str().unwrap(), "--format", "json"], None));
    assert_eq!(v["dual"], false);
    let crossing = quadrants.replace(r#"["c","d"]]"#, r#"["c","d"],["a","d"],["b","c"]]"#);
    let p = write(dir.path(), "x.json", &crossing);
    assert_eq!(bargain(&["jordan", p.to_str().unwrap()], None).code, 4);
}

#[test]
fn oracle_ne_matching_pennies_and_dominance() {
    let dir = tempfile::tempdir().unwrap();
    let form = write(
        dir.path(),
        "g.json",
        r#"{"outcomes":["h","t"],"cells":[["h","t"],["t","h"]]}"#,
    );
    let pennies = write(dir.path(), "u.json", r#"{"uA":{"h":1,"t":-1},"uB":{"h":-1,"t":1}}"#);
    let args = |u: &Path| {
        vec![
            "oracle-ne".to_string(),
            "--form".into(),
            form.to_str().unwrap().into(),
            "--utility".into(),
            u.to_str().unwrap().into(),
        ]
    };
    let a = args(&pennies);
    let v = json(&ok(&a.iter().map(String::as_str).collect::<Vec<_>>(), None));
    assert_eq!(v["equilibria"], json("[]"));
    let both_h = write(dir.path(), "h.json", r#"{"uA":{"h":1,"t":0},"uB":{"h":1,"t":0}}"#);
    let a = args(&both_h);
    let v = json(&ok(&a.iter().map(String::as_str).collect::<Vec<_>>(), None));
    assert_eq!(v["equilibria"].as_array().unwrap().len(), 2);
    assert_eq!(v["equilibria"][0]["outcome"], "h");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["gen", "utility", "--m", "5", "--n", "3"][..],
        &["demo3", "--format", "json"],
        &["corr", "--m", "3", "--n", "2", "--format", "json"],
    ] {
        assert_eq!(ok(args, None), ok(args, None));
    }
    let a = ok(&["gen", "utility", "--m", "3", "--n", "3", "--seed", "1"], None);
    let b = ok(&["gen", "utility", "--m", "3", "--n", "3", "--seed", "2"], None);
    assert_ne!(a, b);
}

#[test]
fn usage_errors_exit_3_and_help_exits_0() {
    assert_eq!(bargain(&["corr", "--m", "two", "--n", "2"], None).code, 3);
    assert_eq!(bargain(&["frobnicate"], None).code, 3);
    assert_eq!(bargain(&["tight"], None).code, 3);
    assert_eq!(bargain(&["--help"], None).code, 0);
}
