//! Run a small corpus in parallel and write it as CSV.

use idealab::corpus::{parse_config, run_corpus, write_csv, CorpusOptions};

fn main() -> idealab::Result<()> {
    let config = "\
# cyclic rings of prime power order
range Z{n} 2..=64 prime-powers
idealize(Z4,self)
idealize(Z2,free(2))
Z2 x Z2 x Z2
";
    let specs = parse_config(config)?;
    let opts = CorpusOptions {
        jobs: Some(4),
        ..CorpusOptions::default()
    };
    let rep = run_corpus(&specs, &opts)?;
    let s = &rep.summary;
    eprintln!("{} rows, {} UFR, {} BFR, {} violations", s.rows, s.ufr, s.bfr, rep.violation_count());
    write_csv(&rep, std::io::stdout().lock())
}
