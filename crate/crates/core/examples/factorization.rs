//! Atoms, factorization lengths and the divisor graph.

use idealab::factor::{
    atom_factorizations, atoms, bouvier_class, is_bfr, is_presimplifiable, is_ufr_direct, DivisorGraph,
};
use idealab::spec::ring_from_spec;

fn main() -> idealab::Result<()> {
    for spec in ["Z8", "Z6", "Z12", "Z2[t]/(t^3)", "idealize(Z2,free(2))"] {
        let r = ring_from_spec(spec)?;
        let g = DivisorGraph::of_ring(&r);
        println!(
            "{spec}: atoms {:?}, presimplifiable {}, BFR {}, UFR {}, class {}",
            atoms(&r).to_vec(),
            is_presimplifiable(&r).presimplifiable,
            is_bfr(&r).bfr,
            is_ufr_direct(&r).ufr,
            bouvier_class(&r).as_str()
        );
        for a in r.elements().filter(|&a| a != 0 && !r.is_unit(a)).take(6) {
            // elements on a divisor cycle have no finite list of factorizations
            let facts = match atom_factorizations(&r, a) {
                Ok(f) => {
                    let shown: Vec<Vec<&str>> = f.iter().take(3).map(|w| w.iter().map(|&b| r.label(b)).collect()).collect();
                    format!("{shown:?}")
                }
                Err(e) => e.to_string(),
            };
            println!("    {:>3}: longest {:?}, atom factorizations {facts}", r.label(a), g.max_length(a));
        }
    }
    Ok(())
}
