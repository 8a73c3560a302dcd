use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greedy-galois"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn shots_for_two_thirds() {
    let out = run(&["shots", "--q", "2/3", "--length", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "A B B A B A B\n+1 -1 -1 +1 -1 +1 -1\n");
}

#[test]
fn shots_accept_hit_probability() {
    let by_q = run(&["shots", "--q", "0.75", "--length", "12"]);
    let by_p = run(&["shots", "--p", "1/4", "--length", "12"]);
    assert_eq!(by_q.stdout, by_p.stdout);
}

#[test]
fn lq_both_methods_match() {
    let out = run(&["lq", "--q", "2/3", "--mode", "both"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "closed=6 sim=6 MATCH\n");

    let out = run(&["lq", "--p", "1/10", "--mode", "closed"]);
    assert_eq!(stdout(&out), "20\n");
}

#[test]
fn classify_prints_branch_and_length() {
    let out = run(&["classify", "--p", "1/10"]);
    assert_eq!(stdout(&out), "five:2 L=20\n");
    let out = run(&["classify", "--q", "1/2"]);
    assert_eq!(stdout(&out), "small L=3\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["lq", "--q", "3/2"]).status.code(), Some(2));
    assert_eq!(run(&["lq", "--q", "0"]).status.code(), Some(2));
    assert_eq!(run(&["lq", "--q", "abc"]).status.code(), Some(2));
    assert_eq!(run(&["lq", "--q", "1/2", "--p", "1/2"]).status.code(), Some(2));
    let capped = run(&["lq", "--q", "99/100", "--mode", "sim", "--cap", "10"]);
    assert_eq!(capped.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&capped.stderr).starts_with("error:"));
    let ncap = run(&["classify", "--q", "99/100", "--ncap", "1"]);
    assert_eq!(ncap.status.code(), Some(3));
}

#[test]
fn boundaries_bracket_constants() {
    let out = run(&["boundaries", "--bits", "20"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("alpha in [0.618033409, 0.618034363] width 2^-20"));
    assert!(text.contains("exact bracket: [648055/1048576, 81007/131072]"));
    assert!(text.contains("beta in [0.660991669, 0.660992622]"));
}

#[test]
fn sweep_csv_is_deterministic() {
    let args = ["sweep", "--inv-p-min", "2", "--inv-p-max", "20", "--steps", "60"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,q,inv_p,L_closed,L_sim,class,tie"));
    assert_eq!(lines.next(), Some("1/2,1/2,2.00000000000000,3,3,small,0"));
    assert_eq!(lines.count(), 59);
}

#[test]
fn sweep_without_simulation_leaves_column_empty() {
    let out = run(&["sweep", "--q-min", "4/5", "--q-max", "9/10", "--steps", "2", "--no-sim"]);
    assert_eq!(
        stdout(&out).lines().last(),
        Some("1/10,9/10,10.0000000000000,20,,five:2,0")
    );
    let empty = run(&["sweep", "--q-min", "9/10", "--q-max", "9/10", "--steps", "1"]);
    assert_eq!(empty.status.code(), Some(2));
}

#[test]
fn sweep_writes_file() {
    let path = std::env::temp_dir().join(format!("gg-sweep-{}.csv", std::process::id()));
    let out = run(&[
        "sweep", "--q-min", "1/2", "--q-max", "3/4", "--steps", "5",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written.lines().count(), 6);
}

#[test]
fn verify_corollary_suite() {
    let out = run(&["verify", "--suite", "corollary"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("corollary: 12/12 pass"));
}

#[test]
fn verify_is_reproducible_for_a_seed() {
    let args = ["verify", "--suite", "identities", "--seed", "7"];
    let first = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, run(&args).stdout);
}
