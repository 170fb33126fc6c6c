use disemisimple::cli::main_with;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = main_with(std::iter::once("disemisimple").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, out, err) = run(&a);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}")))
}

#[test]
fn prehom_exit_codes() {
    let (code, out, _) = run(&["prehom", "A1xA2", "L(1)#L(0,1)"]);
    assert_eq!(code, 0);
    assert!(out.contains("witness"));
    assert_eq!(run(&["prehom", "A1xA1", "L(1)#L(1)"]).0, 1);
    let (code, v) = json(&["prehom", "A1", "triv"]);
    assert_eq!(code, 1);
    assert_eq!(v["reason"], "trivial_summand");
    let (code, _, err) = run(&["prehom", "A1", "L(1,0)"]);
    assert_eq!(code, 2);
    assert!(err.contains("byte"));
    assert_eq!(run(&["prehom", "A1"]).0, 2);
    assert_eq!(run(&["prehom", "A1", "nat", "--exact", "--seed", "3"]).0, 2);
}

#[test]
fn identical_seeds_give_identical_output() {
    let args = ["prehom", "C3", "L(1,0,0)", "--seed", "17", "--json"];
    let first = run(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first, run(&args));
    let (_, v) = json(&["prehom", "C3", "L(1,0,0)", "--seed", "17"]);
    assert_eq!(v["seed"], 17);
}

#[test]
fn certify_sl2_natural() {
    let (code, v) = json(&["certify", "A1", "nat"]);
    assert_eq!(code, 0);
    assert_eq!(v["certified"], true);
    assert_eq!(v["certificate"]["intersection_dim"], 1);
    assert_eq!(v["certificate"]["z"].as_array().unwrap().len(), 5);
    let (code, v) = json(&["certify", "A1", "L(2)"]);
    assert_eq!(code, 1);
    assert_eq!(v["refusal"]["refusal"], "radical_not_prehomogeneous");
}

#[test]
fn construct_writes_a_structure_file_for_certify() {
    let path = std::env::temp_dir().join(format!("disemisimple-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, v) = json(&["construct", "type1", "A2", "L(1,0)", "L(0,1)", "--out", p]);
    assert_eq!(code, 1);
    assert_eq!(v["dim"], 14);
    assert_eq!(v["certified"], false);
    let (code, v) = json(&["certify", "--sc", p]);
    assert_eq!(code, 1);
    assert_eq!(v["certified"], false);
    std::fs::remove_file(&path).unwrap();

    let (code, _, err) = run(&["construct", "type2", "A2", "L(1,0)", "L(0,1)", "L(2,0)"]);
    assert_eq!(code, 2);
    assert!(err.contains("not a submodule"), "{err}");
}

#[test]
fn reports() {
    let (code, v) = json(&["crosscheck", "A2"]);
    assert_eq!(code, 0);
    assert_eq!(v["diff"]["missing"].as_array().unwrap().len(), 0);
    assert_eq!(v["diff"]["extra"].as_array().unwrap().len(), 0);
    assert_eq!(v["bound"], 7);
    let (code, out, _) = run(&["search12", "A4", "--jobs", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("no type 1 or type 2 prehomogeneous modules found"));
    let (_, v) = json(&["table", "A2"]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 4);
    let (_, v) = json(&["table", "SK"]);
    assert_eq!(v.as_array().unwrap().len(), 6);
    assert_eq!(run(&["dim", "A4", "wedge2(nat)"]).1.trim(), "10");
    assert_eq!(run(&["decompose", "A1xA2", "L(1)#L(0,1)"]).1.lines().next(), Some("L(1)#L(0,1)"));
}
