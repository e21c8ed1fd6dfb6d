//! Minimal factorizations of zero, and the bound by the number of minimal
//! primes in reduced rings.

use idealab::factor::{check_lemma_bound, minimal_factorizations_of_zero, u_boundedness_of_zero};
use idealab::ring::is_reduced;
use idealab::spec::ring_from_spec;

fn main() -> idealab::Result<()> {
    for spec in ["Z8", "Z12", "Z2 x Z2 x Z2", "Z2 x Z3 x Z2[t]/(t^2+t+1)"] {
        let r = ring_from_spec(spec)?;
        let z = u_boundedness_of_zero(&r)?;
        println!("{spec}: longest minimal factorization of 0 has {} factors, e.g. {:?}", z.max_length, z.witness);
        let list = minimal_factorizations_of_zero(&r, 5)?;
        for f in &list.factorizations {
            println!("    {f:?}");
        }
        if !list.complete {
            println!("    ...");
        }
        if !is_reduced(&r) {
            continue;
        }
        let b = check_lemma_bound(&r)?;
        println!("    bound: {} <= {} minimal primes: {}", b.max_minimal_length, b.minimal_primes, b.holds);
    }
    Ok(())
}
