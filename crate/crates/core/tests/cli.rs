use std::process::Command;

fn quintic(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_quintic")).args(args).output().unwrap()
}

#[test]
fn exit_codes() {
    let ok = quintic(&["verify", "ode", "--order", "5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("PASS"));

    let parse = quintic(&["instantons", "--max-degree", "-3"]);
    assert_eq!(parse.status.code(), Some(2));

    let weights = quintic(&["verify", "polynomiality", "--lambdas", "1,2,3,4"]);
    assert_eq!(weights.status.code(), Some(2));

    let degenerate = quintic(&["reconstruct", "--lambdas", "1,2,3,4,-10", "--q-order", "2", "--json"]);
    assert_eq!(degenerate.status.code(), Some(1));
    let body: serde_json::Value = serde_json::from_slice(&degenerate.stdout).unwrap();
    assert_eq!(body["pass"], false);
    assert!(body["error"].as_str().unwrap().contains("(λ2-λ1)/1 = (λ3-λ1)/2 = 1"));
}

#[test]
fn thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_quintic"))
        .args(["instantons", "--max-degree", "3", "--csv"])
        .env("QUINTIC_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("3,8564575000/27,317206375"));

    let bad = Command::new(env!("CARGO_BIN_EXE_quintic"))
        .args(["oracle", "lines"])
        .env("QUINTIC_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn json_rationals_round_trip() {
    let out = quintic(&["mirror-map", "--order", "4", "--json"]);
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let m = quintic::mirror::build_mirror_map(4);
    for (d, row) in body["results"].as_array().unwrap().iter().enumerate() {
        let g = quintic::exact::parse_rational(row["g_d"].as_str().unwrap()).unwrap();
        assert_eq!(g, m.g.q_coeff(d));
    }
}
