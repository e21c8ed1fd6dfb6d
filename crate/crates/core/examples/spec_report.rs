//! Parse a spec, analyze it, and replay the witnesses of the saved report.

use idealab::report::{analyze, recheck_json, AnalyzeOptions};
use idealab::ring::DEFAULT_MAX_RING_SIZE;
use idealab::spec::parse_spec;

fn main() -> idealab::Result<()> {
    let text = "idealize( Z2 x Z2 , free(1) )";
    let spec = parse_spec(text, DEFAULT_MAX_RING_SIZE)?;
    println!("{text:?} is {} (at most {} elements)", spec.canonical(), spec.size_estimate);

    let report = analyze(text, &AnalyzeOptions::default())?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    println!("{json}");

    for outcome in recheck_json(&json, DEFAULT_MAX_RING_SIZE)? {
        for c in &outcome.checks {
            println!("replay {:<24} {}", c.claim, if c.ok { "ok" } else { "FAILED" });
        }
    }
    Ok(())
}
