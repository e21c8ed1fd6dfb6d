//! Build a few rings from specs and print their basic structure.

use idealab::ring::{is_local, is_reduced, is_spir, maximal_ideals, nilradical, quotient_ring};
use idealab::spec::ring_from_spec;

fn main() -> idealab::Result<()> {
    for spec in ["Z12", "Z2 x Z3", "Z2[t]/(t^2+t+1)", "Z4[t]/(t^2)", "quot(Z2[t]/(t^2)[t]/(t^2),[8])"] {
        let r = ring_from_spec(spec)?;
        let n = nilradical(&r);
        println!(
            "{:<34} size {:>3}  units {:>3}  local {:<5}  reduced {:<5}  spir {:<5}  maximal ideals {}",
            r.name(),
            r.size(),
            r.unit_count(),
            is_local(&r),
            is_reduced(&r),
            is_spir(&r),
            maximal_ideals(&r).len()
        );
        let q = quotient_ring(&r, &n)?;
        println!("    modulo the nilradical ({} elements): size {}, reduced {}", n.len(), q.size(), is_reduced(&q));
    }
    Ok(())
}
