use std::io::Write;
use std::process::{Command, Output, Stdio};

fn specq(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_specq"))
        .args(args)
        .env_remove("SPECQ_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn specq");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn build_u() {
    let o = specq(&["build", "--family", "U", "--n", "7", "--k", "1", "--g", "3"], None);
    assert_eq!(o.status.code(), Some(0));
    // triangle 0-1-2, path 0-3-4-5, pendant 6 on 5
    assert_eq!(stdout(&o), "F{CGG\n");
}

#[test]
fn build_v_matches_u() {
    let v = specq(&["build", "--family", "V", "--n", "12", "--gamma", "2"], None);
    let u = specq(&["build", "--family", "U", "--n", "12", "--k", "6"], None);
    assert_eq!(stdout(&v), stdout(&u));
}

#[test]
fn build_json_fields() {
    let o = specq(&["build", "--family", "u", "--n", "5", "--k", "2", "--json"], None);
    let v = &json_lines(&o)[0];
    assert_eq!(v["family"], "U");
    assert_eq!(v["k"], 2);
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);
}

#[test]
fn qmin_triangle_json() {
    let o = specq(&["qmin", "--json"], Some("Bw\n"));
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert_eq!(v["qmin"].as_f64().unwrap(), 1.0);
    assert!(v["residual"].as_f64().unwrap() <= 1e-8);
    // eigenvalues 1, 1, 4: the least one is double
    assert!(v["gap"].as_f64().unwrap().abs() <= 1e-9);
}

#[test]
fn qmin_streams_and_skips_blank_lines() {
    let o = specq(&["qmin"], Some("Bw\n\nDhc\n"));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines, vec!["Bw 1", "Dhc 0.38196601125"]);
}

#[test]
fn twelve_significant_digits() {
    let o = specq(&["qmin", "--json", "Dhc"], None);
    let raw = stdout(&o);
    let q = raw.split("\"qmin\":").nth(1).unwrap().split(',').next().unwrap();
    assert_eq!(q, "0.38196601125");
}

#[test]
fn gamma_with_witness() {
    let o = specq(&["gamma", "--json", "Dhc"], None);
    let v = &json_lines(&o)[0];
    assert_eq!(v["gamma"], 2);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_final_n7_gamma2() {
    let o = specq(&["verify", "cor-final", "--n", "7", "--gamma", "2", "--json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert_eq!(v["check_id"], "cor-final");
    assert_eq!(v["verdict"], "pass");
    assert!(v["margin"].as_f64().unwrap() >= 0.0);
    let expected = stdout(&specq(&["build", "--family", "V", "--n", "7", "--gamma", "2"], None));
    assert_eq!(v["params"]["expected"].as_str().unwrap(), expected.trim());
}

#[test]
fn verify_indeterminate_exit() {
    // hypothesis |x(v1)| >= |x(v2)| fails for these roots on C_5
    let o = specq(&["verify", "lemma-relocate", "--v1", "0", "--v2", "1", "--u", "0", "Dhc", "Bo"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("lemma-relocate indeterminate"));
}

#[test]
fn verify_graph_checks_from_stdin() {
    let o = specq(&["verify", "lemma-unispan", "--json"], Some("F~~~w\nDhc\nEzKG\n"));
    assert_eq!(o.status.code(), Some(0));
    let vs = json_lines(&o);
    assert_eq!(vs.len(), 3);
    assert!(vs.iter().all(|v| v["verdict"] == "pass"));
}

#[test]
fn sweep_csv_round_trips() {
    let o = specq(&["sweep", "k", "--n", "15", "--g", "5"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(rdr.headers().unwrap(), vec!["k", "qmin", "margin"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 10);
    let q: Vec<f64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    assert!(q.windows(2).all(|w| w[1] - w[0] >= 1e-9));
    assert_eq!(&rows[0][2], "");
    for (i, r) in rows.iter().enumerate().skip(1) {
        let m: f64 = r[2].parse().unwrap();
        assert!((m - (q[i] - q[i - 1])).abs() <= 1e-10);
    }
}

#[test]
fn sweep_json_report() {
    let o = specq(&["sweep", "girth", "--n", "21", "--gamma", "3", "--json"], None);
    let v = &json_lines(&o)[0];
    assert_eq!(v["check_id"], "cor-decr-girth");
    assert!(v["csv"].as_str().unwrap().starts_with("g,qmin,margin\n3,"));
}

#[test]
fn verify_csv_for_sweeps_only() {
    let o = specq(&["verify", "cor-decr-gamma", "--n", "20", "--g", "3", "--csv"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 8);
    let o = specq(&["verify", "lemma-sign", "--n", "9", "--k", "2", "--g", "3", "--csv"], None);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn enumerate_counts() {
    let o = specq(&["enumerate", "--n", "5", "--non-bipartite"], None);
    assert_eq!(stdout(&o).lines().count(), 16);
    let o = specq(&["enumerate", "--n", "4", "--all"], None);
    assert_eq!(stdout(&o).lines().count(), 11);
}

#[test]
fn enumerate_is_thread_count_independent() {
    let run = |t: &str| stdout(&specq(&["enumerate", "--n", "6", "--threads", t], None));
    assert_eq!(run("1"), run("4"));
}

#[test]
fn large_orders_need_opt_in() {
    let o = specq(&["enumerate", "--n", "8"], None);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn extract_unicyclic_output() {
    let o = specq(&["extract-unicyclic", "--json", "F~~~w"], None);
    let v = &json_lines(&o)[0];
    assert_eq!(v["case"], "single-dominator");
    let g = v["unicyclic"].as_str().unwrap();
    let q = json_lines(&specq(&["gamma", "--json", g], None));
    assert_eq!(q[0]["gamma"], 1);
}

#[test]
fn malformed_graph6_reports_line() {
    let o = specq(&["qmin"], Some("Bw\nB!\n"));
    assert_eq!(o.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(stdout(&o), "Bw 1\n");
}

#[test]
fn usage_errors() {
    for args in [
        &["qmin", "--json", "--csv", "Bw"][..],
        &["bogus"],
        &["build", "--family", "U", "--n", "7"],
        &["build", "--family", "U", "--n", "7", "--k", "9"],
        &["verify", "cor-final", "--n", "7"],
        &["verify", "cor-final", "--n", "7", "--gamma", "3"],
        &["qmin", "--threads", "0", "Bw"],
    ] {
        let o = specq(args, Some(""));
        assert_eq!(o.status.code(), Some(64), "{args:?}");
    }
}

#[test]
fn bipartite_input_is_a_domain_error() {
    let o = specq(&["verify", "lemma-value", "Bo"], None);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "thm-main-g", "--n", "7", "--gamma", "2", "--g", "5", "--json"];
    let a = specq(&args, None);
    let b = specq(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
