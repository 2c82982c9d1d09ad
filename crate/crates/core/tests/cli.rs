use std::io::Write;
use std::process::{Command, Output};

fn plumbsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plumbsig")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_text_and_json() {
    let o = plumbsig(&["invariants", "J 1-<2-> 2+", "--p", "7", "--b", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "sig = -10, eta = 1\n");
    let o = plumbsig(&["invariants", "J 1-<2-> 2+", "--p", "3", "--b", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["sig"].as_i64(), v["eta"].as_i64()), (Some(-8), Some(1)));
}

#[test]
fn profile_first_line_and_json() {
    let o = plumbsig(&["profile", "J 1-<2-> 2+"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("(0/1, 1/14) --> (-1, 0)"));
    let o = plumbsig(&["profile", "J 1-<2-> 2+", "--json"]);
    let prof: plumbsig::curve::SignatureProfile = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(prof.intervals.len(), 13);
    assert_eq!(prof.points.len(), 12);
}

#[test]
fn check_reports_verdict_with_exit_zero() {
    let o = plumbsig(&["check", "J 1-<12- 15+>", "--degree", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verdict: prohibited"), "{text}");
    assert!(text.contains("witness: p = 3, b = 1"), "{text}");
    let o = plumbsig(&["check", "J 1-<12- 15+>", "--degree", "9", "--json"]);
    let r: plumbsig::prohibit::ProhibitionReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.witness.unwrap().p, 3);
}

#[test]
fn family_subcommand() {
    let o = plumbsig(&["family", "odd_nest", "--k", "4"]);
    assert_eq!(stdout(&o), "J 1-<12- 15+>\n");
    let o = plumbsig(&["family", "double_nest", "--k", "5", "--check"]);
    assert!(stdout(&o).contains("|sig| + eta = 53 > 45"));
    let o = plumbsig(&["family", "double_nest", "--k", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn graph_dumps() {
    let o = plumbsig(&["graph", "J 1-<2-> 2+"]);
    let text = stdout(&o);
    assert!(text.contains("delta = -40"), "{text}");
    assert!(text.contains("c = [-6, 2, 3, 1, -3, 5, 5, 1, 1, 14, -10, -10, -2, -2]"), "{text}");
    let o = plumbsig(&["graph", "J 1-<2-> 2+", "--plus", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tree"]["vertices"].as_array().unwrap().len(), 20);
    assert_eq!(v["c_plus"].as_array().unwrap().len(), 20);
    let o = plumbsig(&["graph", "J", "--dot"]);
    assert!(stdout(&o).starts_with("graph"));
    let o = plumbsig(&["graph", "J", "--hat"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(plumbsig(&["graph", "J", "--plus", "--hat"]).status.code(), Some(2));
}

#[test]
fn cg_from_file() {
    let dir = std::env::temp_dir().join(format!("plumbsig-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tree.json");
    let mut f = std::fs::File::create(&path).unwrap();
    write!(f, r#"{{"weights":[3],"edges":[],"charvec":[1],"p":3}}"#).unwrap();
    drop(f);
    let o = plumbsig(&["cg", "--tree", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "sigma = 1/3, eta = 0\n");
    let o = plumbsig(&["cg", "--tree", path.to_str().unwrap(), "--p", "5"]);
    assert_eq!(o.status.code(), Some(2), "weight 3 is not 5-characteristic");
    let o = plumbsig(&["cg", "--tree", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn linking_matrix() {
    let o = plumbsig(&["linking", "J", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["labels"][1], "u2");
    assert_eq!(v["matrix"][1][2], "1/2");
    assert_eq!(plumbsig(&["linking", "J"]).status.code(), Some(0));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(plumbsig(&[]).status.code(), Some(2));
    assert_eq!(plumbsig(&["profile", "J 1-<"]).status.code(), Some(2));
    assert_eq!(plumbsig(&["invariants", "J", "--p", "4", "--b", "1"]).status.code(), Some(2));
    assert_eq!(plumbsig(&["check", "J", "--degree", "x"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = plumbsig(&["check", "J 1+<1+<24- 19+>>", "--degree", "11", "--json"]);
    let b = plumbsig(&["check", "J 1+<1+<24- 19+>>", "--degree", "11", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}
