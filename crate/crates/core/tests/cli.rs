//! End-to-end runs of the `idealab` binary.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    let v = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", stdout(&o)));
    (v, o.status.code().unwrap())
}

fn config(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn analyze_z6_reports_its_witnesses() {
    let (v, code) = json(&["analyze", "Z6"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "idealab.property-report/1");
    assert_eq!(v["ring_size"], 6);
    let p = &v["predicates"];
    assert_eq!(p["presimplifiable"], false);
    assert_eq!(p["bfr"], false);
    assert_eq!(p["ufr_direct"], false);
    assert_eq!(p["longest_factorization"], "unbounded");
    assert_eq!(p["max_minimal_zero_length"], 2);
    let claims: Vec<&str> = v["witnesses"].as_array().unwrap().iter().map(|w| w["claim"].as_str().unwrap()).collect();
    assert!(claims.contains(&"not_presimplifiable"), "{claims:?}");
    assert!(claims.contains(&"not_bfr"), "{claims:?}");
    assert!(claims.contains(&"minimal_zero"), "{claims:?}");
    assert!(v.get("timing").is_none());
}

#[test]
fn analyze_local_rings() {
    let (v, _) = json(&["analyze", "Z8"]);
    assert_eq!(v["predicates"]["spir"], true);
    assert_eq!(v["predicates"]["bouvier_class"], "SPIR");
    assert_eq!(v["predicates"]["longest_factorization"], 2);
    assert_eq!(v["predicates"]["max_minimal_zero_length"], 3);
    let (v, _) = json(&["analyze", "Z4"]);
    assert_eq!(v["predicates"]["bouvier_class"], "local-squarezero");
    let (v, _) = json(&["analyze", "idealize(Z4,self)"]);
    assert_eq!(v["predicates"]["bfr"], true);
    assert_eq!(v["pair"]["ufr_theorem"]["agree"], true, "{}", v["pair"]);
    assert_eq!(v["pair"]["ufr_theorem"]["ufr"], false);
    assert_eq!(v["pair"]["not_domain"], true);
}

#[test]
fn text_output_is_a_table() {
    let o = run(&["analyze", "Z8"]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("spec") && l.ends_with("Z8")));
    assert!(text.lines().any(|l| l.starts_with("longest factorization") && l.ends_with('2')));
}

#[test]
fn verify_subcommands_pass() {
    let cases: [&[&str]; 5] = [
        &["verify", "ufr-theorem", "--ring", "Z4", "--module", "self"],
        &["verify", "ufr-theorem", "--ring", "Z2", "--module", "free(2)"],
        &["verify", "bfr-proposition", "--ring", "Z4", "--module", "self"],
        &["verify", "ubounded-lemma", "--ring", "Z2 x Z3 x Z3"],
        &["verify", "idealization-structure", "--ring", "Z2[t]/(t^2)", "--module", "self"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).starts_with(&format!("{} PASS", args[1])), "{}", stdout(&o));
    }
    let o = run(&["verify", "ufr-theorem", "--ring", "Z2", "--module", "self"]);
    assert_eq!(stdout(&o).trim(), "ufr-theorem PASS (T,T,T,T)");
}

#[test]
fn example25_stages() {
    let (v, code) = json(&["example25", "--stage", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["lengths"], serde_json::json!([2, 3, 4]));
    assert_eq!(v["passed"], true);
    let o = run(&["example25", "--stage", "9"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn corpus_over_a_range() {
    let f = config("# cyclic rings\nrange Z{n} 2..=32\n");
    let (v, code) = json(&["corpus", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 31);
    assert_eq!(v["summary"]["rows"], 31);
    assert_eq!(v["summary"]["violations"], 0);

    let prime = config("range Z{n} 2..20 primes\nZ7\n");
    let (v, _) = json(&["corpus", prime.path().to_str().unwrap()]);
    let specs: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["spec"].as_str().unwrap()).collect();
    assert_eq!(specs, ["Z11", "Z13", "Z17", "Z19", "Z2", "Z3", "Z5", "Z7"]);

    let empty = config("# nothing\n\n");
    let o = run(&["corpus", empty.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn corpus_csv_has_one_row_per_spec() {
    let f = config("Z4\nZ6\nZ2 x Z2\n");
    let o = run(&["--csv", "corpus", f.path().to_str().unwrap()]);
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.headers().unwrap().len(), 21);
    assert_eq!(rdr.records().count(), 3);
}

#[test]
fn parallel_corpus_matches_serial() {
    let f = config("range Z{n} 2..=40\nidealize(Z4,self)\n");
    let path = f.path().to_str().unwrap();
    let serial = stdout(&run(&["--json", "corpus", path]));
    let parallel = stdout(&run(&["--json", "--jobs", "4", "corpus", path]));
    assert_eq!(serial, parallel);
}

#[test]
fn output_is_deterministic() {
    for args in [&["--json", "analyze", "Z12"][..], &["analyze", "Z2 x Z2[t]/(t^2)"], &["--csv", "analyze", "Z6"]] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn timing_only_on_request() {
    let (v, _) = json(&["--timing", "analyze", "Z6"]);
    assert!(v["timing"]["elapsed_ms"].is_number());
}

#[test]
fn recheck_replays_saved_reports() {
    let (v, _) = json(&["analyze", "Z8"]);
    let mut saved = tempfile::NamedTempFile::new().unwrap();
    saved.write_all(v.to_string().as_bytes()).unwrap();
    let o = run(&["recheck", saved.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    // 2 * 2 = 4 is not zero in Z8
    let mut bad = v.clone();
    for w in bad["witnesses"].as_array_mut().unwrap() {
        if w["claim"] == "minimal_zero" {
            w["factors"] = serde_json::json!([2, 2]);
        }
    }
    let mut tampered = tempfile::NamedTempFile::new().unwrap();
    tampered.write_all(bad.to_string().as_bytes()).unwrap();
    let o = run(&["recheck", tampered.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze", "Z5"]).status.code(), Some(0));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["analyze", "Z(3"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "quot(Z4,[1])"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "Z99999"]).status.code(), Some(3));
    assert_eq!(run(&["--max-ring-size", "16", "analyze", "Z32"]).status.code(), Some(3));
    assert_eq!(run(&["analyze", "block(6)"]).status.code(), Some(3));
    assert_eq!(run(&["recheck", "/nonexistent/report.json"]).status.code(), Some(1));

    let (v, code) = json(&["analyze", "Z99999"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "capacity_exceeded");
}

fn shipped(name: &str) -> String {
    format!("{}/corpus/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[test]
fn shipped_cyclic_corpus_finds_prime_powers() {
    let (v, code) = json(&["corpus", &shipped("cyclic.txt")]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 31);
    for row in rows {
        let n: u64 = row["spec"].as_str().unwrap()[1..].parse().unwrap();
        let expected = is_prime(n) || [4, 8, 9, 16, 25, 27, 32].contains(&n);
        assert_eq!(row["report"]["predicates"]["ufr_direct"], expected, "Z{n}");
        assert_eq!(row["report"]["predicates"]["ufr_bouvier"], expected, "Z{n}");
    }
}

#[test]
fn shipped_field_idealizations_are_ufrs() {
    let (v, code) = json(&["corpus", &shipped("field_idealizations.txt")]);
    assert_eq!(code, 0);
    let specs: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["spec"].as_str().unwrap()).collect();
    for p in [2, 3, 5] {
        assert!(specs.contains(&format!("idealize(Z{p},self)").as_str()), "{specs:?}");
    }
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["report"]["predicates"]["ufr_direct"], true, "{}", row["spec"]);
        assert_eq!(row["report"]["pair"]["ufr_theorem"]["agree"], true, "{}", row["spec"]);
    }
}

#[test]
fn every_shipped_corpus_is_clean() {
    let dir = format!("{}/corpus", env!("CARGO_MANIFEST_DIR"));
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let (v, code) = json(&["--jobs", "2", "corpus", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{}", path.display());
        assert_eq!(v["summary"]["errors"], 0, "{}", path.display());
        assert_eq!(v["summary"]["violations"], 0, "{}", path.display());
    }
}
