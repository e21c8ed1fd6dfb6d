//! Corpus sweeps: analyze many specs in parallel and tally the verdicts.
//!
//! Config files hold one entry per line. A line is either a ring spec or a
//! generator clause `range <template> <a>..<b> [all|primes|prime-powers]`,
//! where the template contains `{n}` or the literal `Zn`; both ends of the
//! range are inclusive. Blank lines and `#` comments are skipped.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{analyze, AnalyzeOptions, ErrorObject, PropertyReport, Timing, TOOL_VERSION};
use crate::spec::parse_ring;

pub const CORPUS_SCHEMA: &str = "idealab.corpus-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeFilter {
    All,
    Primes,
    PrimePowers,
}

impl RangeFilter {
    fn keeps(self, n: usize) -> bool {
        match self {
            RangeFilter::All => true,
            RangeFilter::Primes => is_prime(n),
            RangeFilter::PrimePowers => prime_power(n).is_some(),
        }
    }
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `(p, k)` with `n = p^k`, `k >= 1`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Expands a config into spec strings, in file order.
pub fn parse_config(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| Error::Parse {
            pos: i + 1,
            message: format!("config line {}: {message}", i + 1),
        };
        let Some(rest) = line.strip_prefix("range ") else {
            out.push(line.to_string());
            continue;
        };
        let words: Vec<&str> = rest.split_whitespace().collect();
        let (template, bounds, filter) = match words.as_slice() {
            [t, b] => (*t, *b, RangeFilter::All),
            [t, b, f] => {
                let filter = match *f {
                    "all" => RangeFilter::All,
                    "primes" => RangeFilter::Primes,
                    "prime-powers" => RangeFilter::PrimePowers,
                    other => return Err(bad(format!("unknown filter '{other}'"))),
                };
                (*t, *b, filter)
            }
            _ => return Err(bad("expected 'range <template> <a>..<b> [filter]'".into())),
        };
        let (lo, hi) = bounds
            .split_once("..")
            .ok_or_else(|| bad(format!("bad bounds '{bounds}'")))?;
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi): (usize, usize) = match (lo.parse(), hi.parse()) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Err(bad(format!("bad bounds '{bounds}'"))),
        };
        if !template.contains("{n}") && !template.contains("Zn") {
            return Err(bad(format!("template '{template}' has no '{{n}}' or 'Zn'")));
        }
        for n in (lo..=hi).filter(|&n| filter.keeps(n)) {
            out.push(template.replace("{n}", &n.to_string()).replace("Zn", &format!("Z{n}")));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusRow {
    pub spec: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<PropertyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorObject>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CorpusSummary {
    pub rows: usize,
    pub errors: usize,
    pub pairs: usize,
    pub bouvier_counts: BTreeMap<String, usize>,
    pub ufr: usize,
    pub bfr: usize,
    pub presimplifiable: usize,
    pub non_atomic: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub rows: Vec<CorpusRow>,
    pub summary: CorpusSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl CorpusReport {
    pub fn violation_count(&self) -> usize {
        self.summary.violations
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CorpusOptions {
    pub analyze: AnalyzeOptions,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub timing: bool,
}

/// Analyzes each spec; rows are keyed and sorted by canonical spec text
/// (source text when it does not parse) and duplicates are merged.
pub fn run_corpus(specs: &[String], opts: &CorpusOptions) -> Result<CorpusReport> {
    let start = Instant::now();
    let mut keyed: BTreeMap<String, String> = BTreeMap::new();
    for s in specs {
        let key = parse_ring(s).map(|e| e.to_string()).unwrap_or_else(|_| s.clone());
        keyed.entry(key).or_insert_with(|| s.clone());
    }
    let work: Vec<(String, String)> = keyed.into_iter().collect();
    let evaluate = || -> Vec<CorpusRow> {
        work.par_iter()
            .map(|(key, source)| {
                let t = Instant::now();
                match analyze(source, &opts.analyze) {
                    Ok(mut report) => {
                        if opts.timing {
                            report.timing = Some(Timing {
                                elapsed_ms: t.elapsed().as_secs_f64() * 1e3,
                            });
                        }
                        CorpusRow {
                            spec: key.clone(),
                            report: Some(report),
                            error: None,
                        }
                    }
                    Err(e) => CorpusRow {
                        spec: key.clone(),
                        report: None,
                        error: Some(ErrorObject::from(&e)),
                    },
                }
            })
            .collect()
    };
    let rows = match opts.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::InvalidQuery(format!("cannot start worker pool: {e}")))?
            .install(evaluate),
        None => evaluate(),
    };
    let summary = summarize(&rows);
    Ok(CorpusReport {
        schema: CORPUS_SCHEMA,
        tool_version: TOOL_VERSION,
        rows,
        summary,
        timing: opts.timing.then(|| Timing {
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        }),
    })
}

fn summarize(rows: &[CorpusRow]) -> CorpusSummary {
    let mut s = CorpusSummary {
        rows: rows.len(),
        ..CorpusSummary::default()
    };
    for row in rows {
        let Some(rep) = &row.report else {
            s.errors += 1;
            continue;
        };
        let p = &rep.predicates;
        *s.bouvier_counts.entry(p.bouvier_class.to_string()).or_default() += 1;
        s.ufr += usize::from(p.ufr_direct);
        s.bfr += usize::from(p.bfr);
        s.presimplifiable += usize::from(p.presimplifiable);
        s.non_atomic += usize::from(!p.atomic);
        s.pairs += usize::from(rep.pair.is_some());
        s.violations += rep.violations.len();
    }
    s
}

pub const CSV_HEADER: [&str; 21] = [
    "spec",
    "ring_size",
    "unit_count",
    "reduced",
    "local",
    "spir",
    "field",
    "presimplifiable",
    "accp_height",
    "bfr",
    "atomic",
    "ufr_direct",
    "ufr_bouvier",
    "bouvier_class",
    "longest_factorization",
    "max_minimal_zero_length",
    "min_primes",
    "maximal_ideals",
    "pair_checks",
    "violations",
    "error",
];

/// The table projection of a corpus report.
pub fn write_csv<W: std::io::Write>(report: &CorpusReport, out: W) -> Result<()> {
    let io = |e: csv::Error| Error::InvalidQuery(format!("cannot write CSV: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(io)?;
    let opt = |v: Option<String>| v.unwrap_or_default();
    for row in &report.rows {
        let mut rec = vec![row.spec.clone()];
        match &row.report {
            Some(r) => {
                let p = &r.predicates;
                rec.extend([
                    r.ring_size.to_string(),
                    p.unit_count.to_string(),
                    p.reduced.to_string(),
                    p.local.to_string(),
                    p.spir.to_string(),
                    p.field.to_string(),
                    p.presimplifiable.to_string(),
                    p.accp_height.to_string(),
                    p.bfr.to_string(),
                    p.atomic.to_string(),
                    p.ufr_direct.to_string(),
                    p.ufr_bouvier.to_string(),
                    p.bouvier_class.to_string(),
                    opt(p.longest_factorization.map(|l| l.to_string())),
                    opt(p.max_minimal_zero_length.map(|l| l.to_string())),
                    opt(p.min_primes.map(|l| l.to_string())),
                    p.maximal_ideals.to_string(),
                    r.pair.is_some().to_string(),
                    r.violations.len().to_string(),
                    String::new(),
                ]);
            }
            None => {
                rec.extend(std::iter::repeat_n(String::new(), CSV_HEADER.len() - 2));
                rec.push(row.error.as_ref().map(|e| e.message.clone()).unwrap_or_default());
            }
        }
        w.write_record(&rec).map_err(io)?;
    }
    w.flush().map_err(|e| Error::InvalidQuery(format!("cannot write CSV: {e}")))?;
    Ok(())
}
