//! R(+)M is a BFR exactly when R is a BFR and M a BFM, with the forward
//! implication needing 0 to be U-bounded.

use idealab::factor::check_prop_bfr;
use idealab::spec::{module_from_spec, ring_from_spec};

fn main() -> idealab::Result<()> {
    for (rs, ms) in [("Z4", "self"), ("Z8", "self"), ("Z6", "self"), ("Z2 x Z2", "free(2)"), ("Z27", "mquot(self,[3])")] {
        let r = ring_from_spec(rs)?;
        let m = module_from_spec(ms, &r)?;
        let p = check_prop_bfr(&r, &m)?;
        println!(
            "{rs:<8} {ms:<16} R BFR {:<5} M BFM {:<5} R(+)M BFR {:<5} 0 bounded by {}  holds {}",
            p.ring_bfr,
            p.module_bfm,
            p.idealization_bfr,
            p.zero_max_minimal_length,
            p.holds()
        );
    }
    Ok(())
}
