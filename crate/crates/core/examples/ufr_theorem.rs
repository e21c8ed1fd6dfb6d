//! The four equivalent conditions for R(+)M to be a UFR, over a pair corpus.

use idealab::factor::check_theorem_ufr;
use idealab::spec::{module_from_spec, ring_from_spec};

fn main() -> idealab::Result<()> {
    let pairs = [
        ("Z2", "self"),
        ("Z3", "free(2)"),
        ("Z4", "self"),
        ("Z4", "mquot(self,[2])"),
        ("Z4", "mquot(free(2),[2])"),
        ("Z8", "mquot(self,[2])"),
        ("Z9", "mquot(self,[3])"),
        ("Z6", "self"),
        ("Z2[t]/(t^2)", "mquot(self,[2])"),
    ];
    for (rs, ms) in pairs {
        let r = ring_from_spec(rs)?;
        let m = module_from_spec(ms, &r)?;
        let rep = check_theorem_ufr(&r, &m)?;
        let flags: Vec<&str> = rep.values().iter().map(|&b| if b { "T" } else { "F" }).collect();
        println!("{rs:<12} {ms:<20} ({}) agree {}", flags.join(","), rep.agree);
    }
    Ok(())
}
