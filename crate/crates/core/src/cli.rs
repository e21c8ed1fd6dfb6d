//! Command-line front end. Exit codes: 0 ok, 1 usage or construction
//! error, 2 a checked statement failed, 3 a size cap was exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::block::verify_example25;
use crate::corpus::{parse_config, run_corpus, write_csv, CorpusOptions, CorpusReport};
use crate::error::Error;
use crate::factor::{check_lemma_ubounded, check_prop_bfr, check_theorem_ufr};
use crate::idealization::Idealization;
use crate::report::{analyze, recheck_json, AnalyzeOptions, ErrorObject, PropertyReport, Timing};
use crate::ring::{is_domain, DEFAULT_MAX_IDEALS, DEFAULT_MAX_RING_SIZE, TABLE_LIMIT};
use crate::spec::{build_module, parse_module, parse_spec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "idealab", version, about = "Factorization properties of finite rings and idealizations")]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV (analyze and corpus).
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    /// Largest ring (or module) that may be tabulated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RING_SIZE)]
    max_ring_size: usize,
    /// Worker threads for corpus runs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Add wall-clock timings to the output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full predicate vector of one ring, with witnesses.
    Analyze {
        spec: String,
        /// Include the maximal factorization length of every nonzero nonunit.
        #[arg(long)]
        elements: bool,
    },
    /// Check one statement on a concrete ring and module.
    Verify {
        theorem: TheoremId,
        #[arg(long)]
        ring: String,
        #[arg(long)]
        module: Option<String>,
    },
    /// Analyze every spec listed in a config file.
    Corpus { config: PathBuf },
    /// Equal products with different lengths in the block algebra.
    Example25 {
        #[arg(long)]
        stage: usize,
    },
    /// Rebuild the rings of a report and replay its witnesses.
    Recheck { report: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremId {
    UfrTheorem,
    BfrProposition,
    UboundedLemma,
    IdealizationStructure,
}

impl TheoremId {
    fn needs_module(self) -> bool {
        self != TheoremId::UboundedLemma
    }

    fn name(self) -> &'static str {
        match self {
            TheoremId::UfrTheorem => "ufr-theorem",
            TheoremId::BfrProposition => "bfr-proposition",
            TheoremId::UboundedLemma => "ubounded-lemma",
            TheoremId::IdealizationStructure => "idealization-structure",
        }
    }
}

/// What a command produced: text for humans, a JSON value, and an exit code.
struct Outcome {
    text: String,
    json: serde_json::Value,
    csv: Option<String>,
    code: i32,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let json = cli.json;
    match execute(&cli) {
        Ok(o) => {
            let body = if json {
                pretty(&o.json)
            } else if let (true, Some(csv)) = (cli.csv, &o.csv) {
                csv.clone()
            } else {
                o.text
            };
            let _ = out.write_all(body.as_bytes());
            o.code
        }
        Err(f) => {
            let (obj, code) = match &f {
                Failure::Usage(msg) => (
                    ErrorObject {
                        kind: "usage",
                        message: msg.clone(),
                    },
                    EXIT_USAGE,
                ),
                Failure::Lib(e) => (
                    ErrorObject::from(e),
                    if matches!(e, Error::CapacityExceeded { .. }) { EXIT_CAPACITY } else { EXIT_USAGE },
                ),
            };
            if json {
                let _ = out.write_all(pretty(&serde_json::json!({ "error": obj })).as_bytes());
            }
            let _ = writeln!(err, "error: {}", obj.message);
            code
        }
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    if cli.max_ring_size == 0 || cli.max_ring_size > TABLE_LIMIT {
        return Err(Failure::Usage(format!("--max-ring-size must lie in 1..={TABLE_LIMIT}")));
    }
    if cli.jobs == Some(0) {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let opts = AnalyzeOptions {
        max_ring_size: cli.max_ring_size,
        elements: false,
    };
    match &cli.command {
        Command::Analyze { spec, elements } => {
            let start = Instant::now();
            let mut rep = analyze(spec, &AnalyzeOptions { elements: *elements, ..opts })?;
            if cli.timing {
                rep.timing = Some(Timing {
                    elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
                });
            }
            let code = if rep.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
            let single = CorpusReport {
                schema: crate::corpus::CORPUS_SCHEMA,
                tool_version: crate::report::TOOL_VERSION,
                rows: vec![crate::corpus::CorpusRow {
                    spec: rep.spec.clone(),
                    report: Some(rep.clone()),
                    error: None,
                }],
                summary: Default::default(),
                timing: None,
            };
            Ok(Outcome {
                text: render_report(&rep),
                json: to_json(&rep),
                csv: Some(csv_string(&single)?),
                code,
            })
        }
        Command::Verify { theorem, ring, module } => verify(*theorem, ring, module.as_deref(), cli.max_ring_size),
        Command::Corpus { config } => {
            let text = std::fs::read_to_string(config)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", config.display())))?;
            let specs = parse_config(&text)?;
            let rep = run_corpus(
                &specs,
                &CorpusOptions {
                    analyze: opts,
                    jobs: cli.jobs,
                    timing: cli.timing,
                },
            )?;
            let code = if rep.violation_count() == 0 { EXIT_OK } else { EXIT_VIOLATION };
            Ok(Outcome {
                text: render_corpus(&rep),
                json: to_json(&rep),
                csv: Some(csv_string(&rep)?),
                code,
            })
        }
        Command::Example25 { stage } => {
            let rep = verify_example25(*stage).map_err(|e| match e {
                Error::InvalidQuery(msg) => Failure::Usage(msg),
                other => Failure::Lib(other),
            })?;
            let lengths: Vec<String> = rep.lengths.iter().map(usize::to_string).collect();
            let text = format!(
                "stage {}: dimension {}, sigma = {}\nlengths [{}] realized on (0, sigma)\nnilpotency index of the maximal ideal: {}\n{}\n",
                rep.stage,
                rep.dimension,
                rep.sigma,
                lengths.join(","),
                rep.nilpotency_index,
                if rep.passed { "PASS" } else { "FAIL" },
            );
            Ok(Outcome {
                text,
                json: to_json(&rep),
                csv: None,
                code: if rep.passed { EXIT_OK } else { EXIT_VIOLATION },
            })
        }
        Command::Recheck { report } => {
            let text = std::fs::read_to_string(report)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", report.display())))?;
            let outcomes = recheck_json(&text, cli.max_ring_size)?;
            let mut lines = String::new();
            for o in &outcomes {
                for c in &o.checks {
                    lines.push_str(&format!(
                        "{} {} {}{}\n",
                        if c.ok { "ok  " } else { "FAIL" },
                        o.spec,
                        c.claim,
                        c.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default()
                    ));
                }
            }
            let all_ok = outcomes.iter().all(|o| o.ok());
            let checks: usize = outcomes.iter().map(|o| o.checks.len()).sum();
            lines.push_str(&format!(
                "{} reports, {checks} checks, {}\n",
                outcomes.len(),
                if all_ok { "all replayed" } else { "replay FAILED" }
            ));
            Ok(Outcome {
                text: lines,
                json: serde_json::json!({ "ok": all_ok, "reports": outcomes }),
                csv: None,
                code: if all_ok { EXIT_OK } else { EXIT_VIOLATION },
            })
        }
    }
}

fn verify(theorem: TheoremId, ring: &str, module: Option<&str>, cap: usize) -> Result<Outcome, Failure> {
    let r = parse_spec(ring, cap)?.build(cap)?;
    let m = match (module, theorem.needs_module()) {
        (Some(text), true) => Some(build_module(&parse_module(text)?, &r, cap)?),
        (None, true) => return Err(Failure::Usage(format!("{} needs --module", theorem.name()))),
        (Some(_), false) => return Err(Failure::Usage(format!("{} takes no --module", theorem.name()))),
        (None, false) => None,
    };
    let flag = |b: bool| if b { "T" } else { "F" };
    let (pass, summary, json) = match theorem {
        TheoremId::UfrTheorem => {
            let rep = check_theorem_ufr(&r, m.as_ref().unwrap())?;
            let v: Vec<&str> = rep.values().iter().map(|&b| flag(b)).collect();
            (rep.agree, format!("({})", v.join(",")), to_json(&rep))
        }
        TheoremId::BfrProposition => {
            let rep = check_prop_bfr(&r, m.as_ref().unwrap())?;
            let summary = format!(
                "(a) {} -> {}; (b) {} -> {}",
                flag(rep.forward.premise),
                flag(rep.forward.conclusion),
                flag(rep.backward.premise),
                flag(rep.backward.conclusion)
            );
            (rep.holds(), summary, to_json(&rep))
        }
        TheoremId::UboundedLemma => {
            let rep = check_lemma_ubounded(&r)?;
            let bound_ok = rep.bound.is_none_or(|b| b.holds);
            let summary = match &rep.bound {
                Some(b) => format!(
                    "longest minimal zero factorization {} <= |Min| = {}",
                    b.max_minimal_length, b.minimal_primes
                ),
                None => format!(
                    "longest minimal zero factorization {}, |Min| = {}; bound not applicable (not reduced)",
                    rep.max_minimal_length, rep.minimal_primes
                ),
            };
            (rep.finiteness.holds() && bound_ok, summary, to_json(&rep))
        }
        TheoremId::IdealizationStructure => {
            let t = Idealization::with_cap(&r, m.as_ref().unwrap(), cap)?;
            let rep = t.verify_structure(DEFAULT_MAX_IDEALS)?;
            let not_domain = m.as_ref().unwrap().is_zero_module() || !is_domain(t.ring());
            let summary = format!(
                "units {}, ideal shape {}, primes {}, products {}, not a domain {}; {} non-homogeneous ideals",
                flag(rep.unit_criterion.holds),
                flag(rep.ideal_shape.holds),
                flag(rep.prime_criterion.holds),
                flag(rep.ideal_product.holds),
                flag(not_domain),
                rep.non_homogeneous_ideals
            );
            let mut json = to_json(&rep);
            json["not_domain"] = serde_json::Value::Bool(not_domain);
            (rep.all_hold() && not_domain, summary, json)
        }
    };
    let verdict = if pass { "PASS" } else { "FAIL" };
    let mut text = format!("{} {verdict} {summary}\n", theorem.name());
    if !pass {
        text.push_str(&pretty(&json));
    }
    Ok(Outcome {
        text,
        json: serde_json::json!({
            "theorem": theorem.name(),
            "ring": ring,
            "module": module,
            "pass": pass,
            "report": json,
        }),
        csv: None,
        code: if pass { EXIT_OK } else { EXIT_VIOLATION },
    })
}

fn csv_string(rep: &CorpusReport) -> Result<String, Failure> {
    let mut buf = Vec::new();
    write_csv(rep, &mut buf)?;
    Ok(String::from_utf8(buf).expect("CSV output is UTF-8"))
}

fn render_report(rep: &PropertyReport) -> String {
    let p = &rep.predicates;
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    let branches: Vec<&str> = p.bouvier_branches.iter().map(|b| b.as_str()).collect();
    let mut s = String::new();
    let mut line = |k: &str, v: String| s.push_str(&format!("{k:<24}{v}\n"));
    line("spec", rep.spec.clone());
    line("size", rep.ring_size.to_string());
    line("units", p.unit_count.to_string());
    line("reduced", p.reduced.to_string());
    line("local", p.local.to_string());
    line("field", p.field.to_string());
    line("spir", p.spir.to_string());
    line("presimplifiable", p.presimplifiable.to_string());
    line("accp", format!("{} (height {})", p.accp, p.accp_height));
    line("bfr", p.bfr.to_string());
    line("atomic", p.atomic.to_string());
    line("ufr", p.ufr_direct.to_string());
    line("bouvier", format!("{} [{}]", p.bouvier_class, branches.join(", ")));
    line("longest factorization", opt(p.longest_factorization.map(|l| l.to_string())));
    line("minimal zero length", opt(p.max_minimal_zero_length.map(|l| l.to_string())));
    line("minimal primes", opt(p.min_primes.map(|l| l.to_string())));
    for w in &rep.witnesses {
        line("witness", serde_json::to_string(w).expect("witness serializes"));
    }
    for n in &rep.notes {
        line("note", n.clone());
    }
    for v in &rep.violations {
        line("VIOLATION", v.clone());
    }
    if let Some(pair) = &rep.pair {
        if let Some(t) = &pair.ufr_theorem {
            let v: Vec<&str> = t.values().iter().map(|&b| if b { "T" } else { "F" }).collect();
            line("ufr conditions", format!("({})", v.join(",")));
        }
        line("bfr proposition", if pair.bfr_proposition.holds() { "holds" } else { "FAILS" }.into());
        if let Some(st) = &pair.structure {
            line("structure facts", if st.all_hold() { "hold" } else { "FAIL" }.into());
        }
    }
    if let Some(t) = &rep.timing {
        line("elapsed ms", format!("{:.1}", t.elapsed_ms));
    }
    s
}

fn render_corpus(rep: &CorpusReport) -> String {
    let w = rep.rows.iter().map(|r| r.spec.len()).max().unwrap_or(0).max(4);
    let mut s = String::new();
    s.push_str(&format!("{:<w$} {:>5} {:>6} {:>5} {:>5} {}\n", "spec", "size", "presim", "bfr", "ufr", "bouvier"));
    for row in &rep.rows {
        match (&row.report, &row.error) {
            (Some(r), _) => {
                let p = &r.predicates;
                s.push_str(&format!(
                    "{:<w$} {:>5} {:>6} {:>5} {:>5} {}{}\n",
                    row.spec,
                    r.ring_size,
                    p.presimplifiable,
                    p.bfr,
                    p.ufr_direct,
                    p.bouvier_class.as_str(),
                    if r.violations.is_empty() { String::new() } else { format!(" VIOLATIONS: {}", r.violations.join("; ")) }
                ));
            }
            (None, Some(e)) => s.push_str(&format!("{:<w$} error ({}): {}\n", row.spec, e.kind, e.message)),
            (None, None) => {}
        }
    }
    let sum = &rep.summary;
    let classes: Vec<String> = sum.bouvier_counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
    s.push_str(&format!(
        "rows {}, errors {}, pairs {}, ufr {}, bfr {}, bouvier [{}], violations {}\n",
        sum.rows,
        sum.errors,
        sum.pairs,
        sum.ufr,
        sum.bfr,
        classes.join(" "),
        sum.violations
    ));
    if let Some(t) = &rep.timing {
        s.push_str(&format!("elapsed ms {:.1}\n", t.elapsed_ms));
    }
    s
}
