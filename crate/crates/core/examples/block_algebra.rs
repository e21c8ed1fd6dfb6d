//! The block algebras: sigma_1 factors into nonunits of growing lengths.

use idealab::block::{verify_example25, BlockAlgebra};
use idealab::ring::RingArithmetic;

fn main() -> idealab::Result<()> {
    let alg = BlockAlgebra::new(3)?;
    let s = alg.sigma(1);
    println!("stage 3: dimension {}, sigma_1 = {}", alg.dimension(), alg.render(&s));
    let u = alg.add(&alg.one(), &s);
    let inv = alg.inverse(&u).expect("1 + sigma_1 is a unit");
    println!("(1 + sigma_1)^-1 = {}", alg.render(&inv));
    for stage in 2..=6 {
        let rep = verify_example25(stage)?;
        println!(
            "stage {stage}: dimension {:>3}, nilpotency index {}, lengths {:?}, passed {}",
            rep.dimension, rep.nilpotency_index, rep.lengths, rep.passed
        );
    }
    Ok(())
}
