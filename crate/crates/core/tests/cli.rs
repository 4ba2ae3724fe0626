use std::process::{Command, Output};

fn orbimap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbimap"))
        .args(args)
        .env_remove("ORBIMAP_MAX_SYLLABLE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn braid_relation_is_trivial() {
    let o = orbimap(&[
        "trivial",
        "-n",
        "3",
        "-L",
        "1",
        "-N",
        "2",
        "-m",
        "2,3",
        "H1 H2 H1 H2^-1 H1^-1 H2^-1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "trivial");
    let o = orbimap(&[
        "oracle",
        "trivial",
        "-n",
        "3",
        "-L",
        "1",
        "-N",
        "2",
        "H1 H2 H1 H2^-1 H1^-1 H2^-1",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn nontrivial_exits_one() {
    let o = orbimap(&["trivial", "-n", "2", "H1^2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "nontrivial");
}

#[test]
fn empty_word_has_trivial_normal_form() {
    let o = orbimap(&["nf", "-n", "2", "-L", "0", "-N", "0", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[k=2: ] [k=1: ] | coset: ()");
}

#[test]
fn errors_are_machine_readable() {
    let o = orbimap(&["nf", "-n", "2", "H3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error\trange\t"));
    let o = orbimap(&["nf", "-N", "2", "-m", "2", ""]);
    assert_eq!(o.status.code(), Some(2));
    let o = orbimap(&["present", "--group", "braid"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error\tusage\t"));
}

#[test]
fn blowup_exits_three() {
    let o = orbimap(&[
        "nf",
        "-n",
        "4",
        "-L",
        "1",
        "-N",
        "1",
        "--cap",
        "3",
        "H1 H2 H3 T1 H3 H2 H1 U1 H1 H2 H3^-1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error\tblowup\t"));
    let o = Command::new(env!("CARGO_BIN_EXE_orbimap"))
        .args([
            "nf",
            "-n",
            "4",
            "-L",
            "1",
            "-N",
            "1",
            "H1 H2 H3 T1 H3 H2 H1 U1 H1 H2 H3^-1",
        ])
        .env("ORBIMAP_MAX_SYLLABLE", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn present_json_and_gamma() {
    let o = orbimap(&[
        "present", "-n", "2", "-L", "1", "-N", "1", "--group", "full", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["relators"].as_array().unwrap().len(), 3);
    let o = orbimap(&["gamma", "nf", "-N", "2", "-m", "2,3", "g1^3*g2^4*g2^2"]);
    assert_eq!(stdout(&o).trim(), "g1");
    let o = orbimap(&[
        "gpath",
        "normalize",
        "-N",
        "2",
        "-m",
        "2,3",
        "(g1, [g2]s1, g2)",
    ]);
    assert_eq!(stdout(&o).trim(), "(g1*g2; [e]s1)");
}

#[test]
fn verify_small_grid() {
    let o = orbimap(&[
        "verify",
        "--grid",
        "n=0..3,L=0..1,N=0..1",
        "--samples",
        "50",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summary: 16 tuples, 0 failed"));
}
