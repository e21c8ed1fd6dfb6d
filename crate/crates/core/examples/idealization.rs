//! The idealization R(+)M and its structural checks.

use idealab::idealization::Idealization;
use idealab::ring::DEFAULT_MAX_RING_SIZE;
use idealab::spec::{module_from_spec, ring_from_spec};

fn main() -> idealab::Result<()> {
    let r = ring_from_spec("Z4")?;
    let m = module_from_spec("self", &r)?;
    let id = Idealization::new(&r, &m)?;
    let t = id.ring();
    println!("{} has {} elements, {} units", t.name(), t.size(), t.unit_count());

    // (0, 1) squares to zero, (1, 1) is a unit
    let x = id.pair(0, 1);
    let u = id.pair(1, 1);
    println!("(0,1)^2 = {:?}", id.split(t.mul(x, x)));
    println!("(1,1) unit: {}, inverse {:?}", t.is_unit(u), t.inverse(u).map(|v| id.split(v)));

    let s = id.verify_structure(DEFAULT_MAX_RING_SIZE)?;
    println!(
        "units {} / ideal shape {} / primes {} / products {} / non-homogeneous ideals {}",
        s.unit_criterion.holds,
        s.ideal_shape.holds,
        s.prime_criterion.holds,
        s.ideal_product.holds,
        s.non_homogeneous_ideals
    );
    if let Some(j) = &s.non_homogeneous_example {
        let pairs: Vec<_> = j.iter().map(|&e| id.split(e)).collect();
        println!("  e.g. {pairs:?}");
    }
    Ok(())
}
