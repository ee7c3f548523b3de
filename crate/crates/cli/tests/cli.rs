use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

use ineqcert::certify::{revalidate, Certificate, Status};

fn ineqcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ineqcert"))
        .args(args)
        .env_remove("INEQCERT_MAX_DEPTH")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_writes_a_revalidating_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let o = ineqcert(&["verify", "thm1_upper", "--json", path(&out)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let cert = Certificate::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(cert.schema, "ineqcert.certificate/1");
    assert_eq!(cert.status, Status::Proven);
    revalidate(&cert).unwrap();
}

#[test]
fn falsified_user_statement_is_refuted() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("user.txt");
    std::fs::write(&file, "# sinc stays below 1 away from 0\nbad: sinc(x) > 1 on [0.1, 1]\n").unwrap();
    let o = ineqcert(&["--catalog", path(&file), "verify", "bad"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("counterexample x = "), "{}", stdout(&o));
    let o = ineqcert(&["check", path(&file)]);
    assert_eq!(code(&o), 2);
}

#[test]
fn depth_override_makes_runs_inconclusive() {
    let o = Command::new(env!("CARGO_BIN_EXE_ineqcert"))
        .args(["verify", "lem2b_tanh"])
        .env("INEQCERT_MAX_DEPTH", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("worst cell"));
    assert_eq!(code(&ineqcert(&["verify", "lem2b_tanh", "--depth", "2"])), 3);
}

#[test]
fn usage_and_file_errors() {
    assert_eq!(code(&ineqcert(&["verify", "no_such_record"])), 64);
    assert_eq!(code(&ineqcert(&["verify", "cusa_upper", "--bogus"])), 64);
    assert_eq!(code(&ineqcert(&["frobnicate"])), 64);
    assert_eq!(code(&ineqcert(&["series", "tan", "--terms", "3"])), 64);
    assert_eq!(code(&ineqcert(&["check", "/nonexistent/file.txt"])), 74);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("broken.txt");
    std::fs::write(&file, "ok: x >= 0 on [0, 1]\nsinc(x) >\n").unwrap();
    let o = ineqcert(&["parse", "--check", path(&file)]);
    assert_eq!(code(&o), 74);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn verify_all_is_complete_and_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    let oa = ineqcert(&["verify-all", "--out", path(&a)]);
    let ob = ineqcert(&["verify-all", "--jobs", "3", "--out", path(&b)]);
    assert_eq!(code(&oa), 0, "{}", stdout(&oa));
    assert_eq!(code(&ob), 0);
    assert_eq!(stdout(&oa), stdout(&ob));
    let names: BTreeSet<_> = std::fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    for n in &names {
        assert_eq!(std::fs::read(a.join(n)).unwrap(), std::fs::read(b.join(n)).unwrap(), "{n:?}");
    }
    let report: serde_json::Value = serde_json::from_slice(&std::fs::read(a.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["schema"], "ineqcert.report/1");
    let ids: Vec<&str> = report["records"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    let unique: BTreeSet<_> = ids.iter().collect();
    assert_eq!(unique.len(), ids.len());
    let cat = ineqcert::catalog::load_builtin();
    assert_eq!(ids.len(), cat.inequalities.len() + cat.monotone.len());
}

#[test]
fn constants_table() {
    let o = ineqcert(&["constants"]);
    let text = stdout(&o);
    let row = text.lines().find(|l| l.starts_with("const_alpha ")).unwrap();
    assert!(row.contains("2.75194") && row.ends_with("yes"), "{row}");
    // alpha2 misses the printed decimal by 1.6e-5
    assert!(text.lines().find(|l| l.starts_with("const_alpha2 ")).unwrap().ends_with("no"));
    assert_eq!(code(&o), 1);
}

#[test]
fn roots_and_gaps() {
    let o = ineqcert(&["roots"]);
    assert_eq!(code(&o), 0);
    for id in ["x0", "x1", "f_x1"] {
        assert!(stdout(&o).lines().any(|l| l.starts_with(id) && l.ends_with("yes")), "{id}");
    }
    let o = ineqcert(&["gaps"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("claim,kind,ref_lo,ref_hi,grid_max,argmax,max_lo,max_hi,pass"));
    for l in lines {
        assert_eq!(l.split(',').count(), 9, "{l}");
        assert!(l.ends_with(",yes"), "{l}");
    }
}

#[test]
fn series_dump() {
    let o = ineqcert(&["series", "xcot", "--terms", "3"]);
    assert_eq!(stdout(&o), "n,numerator,denominator\n0,1,1\n1,-1,3\n2,-1,45\n3,-2,945\n");
    let o = ineqcert(&["series", "xcsc", "--terms", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coefficients"][2]["numerator"], "7");
    assert_eq!(v["coefficients"][2]["denominator"], "360");
}

#[test]
fn list_and_show() {
    let o = ineqcert(&["list", "--filter", "sec3"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(!text.is_empty() && text.lines().all(|l| l.contains(" sec3 ")), "{text}");
    let o = ineqcert(&["show", "thm0"]);
    assert!(stdout(&o).contains("sharp:     {-pi/2, 0, pi/2}"));
    assert_eq!(code(&ineqcert(&["show", "f1"])), 0);
}
