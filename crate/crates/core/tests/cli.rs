use subchord::cli::{run_with_bound, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

fn run(args: &[&str]) -> (i32, String, String) {
    run_bounded(args, 8)
}

fn run_bounded(args: &[&str], max_n: usize) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("subchord").chain(args.iter().copied());
    let code = run_with_bound(argv, max_n, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn analyze_json() {
    let (code, out, _) = run(&["analyze", "--json", "3 1 2 3 1 2"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["word"], "1 2 3 1 2 3");
    assert_eq!(v["realizable"], true);
    assert_eq!(v["counts"]["cross"], 3);
    assert_eq!(v["counts"]["triple"], 1);
    assert_eq!(v["lambda"], 0);
    assert_eq!(v["averaged"], -1);
    assert_eq!(v["prime"], true);
    assert!(v["trivializable"].is_object());
}

#[test]
fn analyze_text() {
    let (code, out, _) = run(&["analyze", "1 2 3 4 2 1 4 3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("lambda"));
    assert!(out.contains('4'));
}

#[test]
fn domain_errors() {
    let (code, _, err) = run(&["analyze", "1 2 1 2"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("NOT_REALIZABLE"), "{err}");
    let (code, _, err) = run(&["analyze", "1 2 1"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("LABEL_NOT_TWICE"), "{err}");
    let (code, _, err) = run_bounded(&["census", "-n", "6"], 5);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("BOUND_EXCEEDED"), "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "theorem9"]).0, EXIT_USAGE);
    assert_eq!(run(&["apply", "1 2 3 1 2 3"]).0, EXIT_USAGE);
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "oracle", "-n", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("PASS"));
    assert_ne!(EXIT_VERIFY, EXIT_OK);
    let (code, out, _) = run(&["verify", "flype", "-n", "5", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.is_object() || v.is_array());
}

#[test]
fn census_csv_and_json() {
    let (code, out, _) = run(&["census", "-n", "5", "--prime-reduced"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "word,n,cross,triple,h,iii,hh,lambda,H,Xtilde,averaged");
    assert_eq!(lines.len(), 1 + 4);
    assert!(lines.contains(&"1 2 3 1 4 3 2 4,4,4,0,4,0,1,4,1,1,0"));
    let (code, out, _) = run(&["census", "-n", "4", "--prime-reduced", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn moves_and_apply() {
    let (code, out, _) = run(&["moves", "--json", "1 2 3 1 2 3"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let sites = v.as_array().unwrap();
    assert!(sites.iter().any(|s| s["site"]["kind"] == "RIII_strong_pos" || s["site"]["kind"] == "RIII_strong"));
    assert_eq!(sites[0]["site"]["kind"], "RII_weak_del");
    let (code, out, _) = run(&["apply", "1 2 3 1 2 3", "--site", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "1 1");
    let (code, _, err) = run(&["apply", "1 2 3 1 2 3", "--site", "999"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("SITE_INVALID"), "{err}");
    let (code, out, _) = run(&["moves", "1 2 3 1 2 3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("wRII"));
}

#[test]
fn flype_listing() {
    let (code, out, _) = run(&["flype", "1 2 3 1 2 3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().next().unwrap().contains("identity"));
    let (code, out, _) = run(&["flype", "1 2 3 1 2 3", "--site", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "1 2 3 1 2 3");
}

#[test]
fn render_to_file_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trefoil.svg");
    let (code, _, _) = run(&["render", "1 2 3 1 2 3", "--svg", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains("<svg"));
    let (code, out, _) = run(&["render", "1 1", "--svg", "-"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.trim_end().ends_with("</svg>"));
}

#[test]
fn decompose() {
    let (code, out, _) = run(&["decompose", "--json", "1 1 2 3 4 2 3 4"]);
    assert_eq!(code, EXIT_OK);
    let v: Vec<String> = serde_json::from_str(&out).unwrap();
    assert_eq!(v.len(), 2);
}
