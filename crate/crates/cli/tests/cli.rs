use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superkit")).args(args).env_remove("SUPERKIT_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("superkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", stdout(o)))
}

#[test]
fn check_accepts_built_in_families() {
    for family in ["osp1:1", "gl:1:1", "sl:2:1", "product:osp1:1,torus:1"] {
        let o = run(&["check", "--family", family]);
        assert_eq!(o.status.code(), Some(0), "{family}: {}", stdout(&o));
    }
}

#[test]
fn check_reports_parse_errors_and_violations() {
    let bad = scratch_file("bad.alg", "name x\nbasis a odd\nbracket a a q 1\n");
    let o = run(&["check", "--algebra", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let emitted = stdout(&run(&["check", "--family", "gl:1:1", "--emit"]));
    let text: String = emitted.lines().skip_while(|l| !l.starts_with("name ")).collect::<Vec<_>>().join("\n");
    let corrupted = text.replace("bracket E12 E21 E11 1", "bracket E12 E21 E11 2").replace("bracket E21 E12 E11 1", "bracket E21 E12 E11 2");
    assert_ne!(corrupted, text);
    let path = scratch_file("corrupt.alg", &corrupted);
    let o = run(&["check", "--algebra", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("jacobi"), "{}", stdout(&o));

    let good = scratch_file("good.alg", &text);
    assert_eq!(run(&["check", "--algebra", good.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn classify_exit_codes() {
    let o = run(&["classify", "--family", "osp1:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Osp(2)"));

    let o = run(&["classify", "--family", "sl:2:1", "--json"]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    assert_eq!(v["verdict"], "Witness");
    assert_eq!(v["witness"].as_array().unwrap().len(), 8);

    let o = run(&["classify", "--family", "product:osp1:1,osp1:1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("Osp(1)").count(), 2);
}

#[test]
fn seed_is_read_from_the_environment_and_is_deterministic() {
    let with_seed = |s: &str| {
        Command::new(env!("CARGO_BIN_EXE_superkit"))
            .args(["classify", "--family", "gl:2:1", "--json"])
            .env("SUPERKIT_SEED", s)
            .output()
            .unwrap()
    };
    let (a, b) = (with_seed("7"), with_seed("7"));
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(3));
}

#[test]
fn ghost_reports_epsilon() {
    let v = json(&run(&["ghost", "--family", "osp1:1", "--json"]));
    assert_eq!(v["epsilon"], "1");
    assert_eq!(v["verdict"], "Semisimple");
    let v = json(&run(&["ghost", "--family", "gl:1:1", "--json"]));
    assert_eq!(v["epsilon"], "0");
    assert_eq!(v["verdict"], "NotSemisimple");
    let o = run(&["ghost", "--djokovic", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["epsilon"], "15");
    assert_eq!(v["left_invariant"], true);
    assert_eq!(v["right_invariant"], true);
}

#[test]
fn ds_dimensions_and_cone_check() {
    let v = json(&run(&["ds", "--family", "gl:1:1", "--u", "E12=1,E21=1", "--module", "builtin:induced", "--json"]));
    assert_eq!(v["ds"], serde_json::json!([0, 0]));
    let v = json(&run(&["ds", "--family", "gl:1:1", "--u", "0,0,0,0", "--module", "builtin:adjoint", "--json"]));
    assert_eq!(v["ds"], v["module_dims"]);
    let o = run(&["ds", "--family", "osp1:1", "--u", "a1=1", "--module", "builtin:induced"]);
    assert_eq!(o.status.code(), Some(5));

    let module = scratch_file("toy.mod", "parity even odd\naction h 1 0 ; 0 1\naction u 0 1 ; 1 0\n");
    let m = module.to_str().unwrap();
    let o = run(&["ds", "--family", "toy_odd_semisimple", "--u", "u=1", "--tensor", m, "builtin:induced", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["tensor"]["holds"], true);
}

#[test]
fn splitting_witness_and_vanishing_case() {
    let v = json(&run(&["witness-splitting", "--catalog", "quadratic", "--json"]));
    assert_eq!(v["u_of_f_is_unit"], true);
    let o = run(&["witness-splitting", "--catalog", "vanishing"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("vanishing"));
    let file = scratch_file("ext.sc", "name ext\nbasis 1 even\nbasis xi odd\nunit 1\nmul 1 1 1 1\nmul 1 xi xi 1\nmul xi 1 xi 1\nderivation xi 1 1\n");
    let o = run(&["witness-splitting", "--file", file.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["f"], serde_json::json!(["0", "1"]));
}

#[test]
fn modcheck_reports_semisimplicity_and_violations() {
    let v = json(&run(&["modcheck", "--family", "osp1:1", "--module", "builtin:induced", "--json"]));
    assert_eq!(v["semisimple"], true);
    let bad = scratch_file("bad.mod", "parity even odd\naction h 1 0 ; 0 2\naction u 0 1 ; 1 0\n");
    let o = run(&["modcheck", "--family", "toy_odd_semisimple", "--module", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_all_filter_and_corruption() {
    let o = run(&["verify-all", "--filter", "ghost", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let criteria = v["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 1);
    assert_eq!(criteria[0]["tag"], "ghost");

    let o = run(&["verify-all", "--filter", "construction", "--corrupt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("criterion 1"), "{}", stderr(&o));
    assert!(stderr(&o).contains("jacobi"), "{}", stderr(&o));

    assert_eq!(run(&["verify-all", "--filter", "nonsense"]).status.code(), Some(2));
}
