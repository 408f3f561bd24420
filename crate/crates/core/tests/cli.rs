use std::process::Command;

use serde_json::{json, Value};

const C2: &str = r#"{"kind":"loop","base":"cyclic","rank":2}"#;

fn uniserial(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_uniserial"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn hom_query() {
    let (code, out, _) = uniserial(&[
        "hom",
        "--site",
        C2,
        "--from",
        r#"{"socle":0,"top":0,"winding":1}"#,
        "--to",
        r#"{"socle":1,"top":0,"winding":0}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out), json!({ "dim": 1, "basis": [0] }));
}

#[test]
fn ext_and_ar() {
    let s0 = r#"{"socle":0,"top":0,"winding":0}"#;
    let s1 = r#"{"socle":1,"top":1,"winding":0}"#;
    let (code, out, _) = uniserial(&["ext", "--site", C2, "--from", s0, "--to", s1]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out), json!({ "dim": 1 }));

    let (code, out, _) = uniserial(&["ar", "--site", C2, "--obj", s0]);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["start"], json!({ "socle": 1, "top": 1, "winding": 0 }));
    assert_eq!(v["middle"], json!([{ "socle": 1, "top": 0, "winding": 0 }]));
}

#[test]
fn projective_has_no_ar_sequence() {
    let line = r#"{"kind":"linear","base":"finite","size":3}"#;
    let (code, out, err) = uniserial(&["ar", "--site", line, "--obj", r#"{"socle":1,"top":2}"#]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("projective"));
}

#[test]
fn subobjects_and_perp() {
    let (code, out, _) = uniserial(&[
        "subobjects",
        "--site",
        C2,
        "--obj",
        r#"{"socle":0,"top":1,"winding":0}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        parse(&out),
        json!({
            "chain": [null, { "socle": 0, "top": 0, "winding": 0 }, { "socle": 0, "top": 1, "winding": 0 }],
            "complete": true,
        })
    );

    let z = r#"{"kind":"loop","base":"int"}"#;
    let (code, out, _) = uniserial(&[
        "perp",
        "--site",
        z,
        "--keep",
        "[0,5]",
        "--obj",
        r#"{"socle":3,"top":8}"#,
    ]);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(
        v["inner"],
        json!({ "kind": "loop", "base": "cyclic", "rank": 2 })
    );
    assert_eq!(
        v["simples"][0],
        json!({ "socle": 0, "top": 4, "winding": 0 })
    );
    assert_eq!(
        v["object"]["reflect"],
        json!({ "socle": 1, "top": 1, "winding": 0 })
    );
}

#[test]
fn checks() {
    let (code, out, _) = uniserial(&[
        "oracle-check",
        "--rank",
        "3",
        "--max-winding",
        "1",
        "--field",
        "Q",
    ]);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["pairs"], 18 * 18);
    assert_eq!(v["mismatches"], json!([]));

    let (code, out, _) = uniserial(&["coalgebra-check", "--rank", "2", "--trunc", "5"]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out)["dual"]["passed"], true);

    let z = r#"{"kind":"loop","base":"int"}"#;
    let (code, out, _) = uniserial(&[
        "inj-matrix",
        "--site",
        z,
        "--keep",
        "[4,-2,7]",
        "--samples",
        "5",
    ]);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["pattern"], json!([[0, 1, 1], [0, 0, 1], [0, 0, 0]]));
    assert_eq!(v["socles"], json!([-2, 4, 7]));

    let c3 = r#"{"kind":"loop","base":"cyclic","rank":3}"#;
    let (code, out, _) = uniserial(&[
        "transport-check",
        "--site",
        c3,
        "--map",
        r#"{"kind":"rotate","by":1}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out)["failures"], json!([]));
    let swap = r#"{"kind":"table","map":[[0,1],[1,0],[2,2]]}"#;
    assert_eq!(
        uniserial(&["transport-check", "--site", c3, "--map", swap]).0,
        2
    );
}

#[test]
fn ar_quiver_dot() {
    let (code, out, _) = uniserial(&[
        "ar-quiver",
        "--site",
        r#"{"kind":"loop","base":"int"}"#,
        "--center",
        r#"{"socle":0,"top":0}"#,
        "--radius",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph ar {"));
    // The simple sits on the boundary: one arrow in, one arrow out.
    assert_eq!(out.matches("\"M(0,0;0)\" -> \"M(0,1;0)\";").count(), 1);
    assert_eq!(out.matches("-> \"M(0,0;0)\";").count(), 1);
    assert!(out.contains("style=dashed"));
}

#[test]
fn invalid_input() {
    assert_eq!(
        uniserial(&["hom", "--site", "not json", "--from", "{}", "--to", "{}"]).0,
        2
    );
    assert_eq!(uniserial(&["oracle-check"]).0, 2);
    let (code, _, err) = uniserial(&[
        "ext",
        "--site",
        C2,
        "--from",
        r#"{"socle":7,"top":0}"#,
        "--to",
        r#"{"socle":0,"top":0}"#,
    ]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}
