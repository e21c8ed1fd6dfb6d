//! Modules over Z4 and Z2[t]/(t^2): sizes, annihilators and semisimplicity.

use idealab::module::{is_accc, is_semisimple, is_semisimple_by_definition, module_annihilator};
use idealab::ring::DEFAULT_MAX_RING_SIZE;
use idealab::spec::{module_from_spec, ring_from_spec};

fn main() -> idealab::Result<()> {
    for (rs, ms) in [
        ("Z4", "self"),
        ("Z4", "mquot(self,[2])"),
        ("Z4", "free(2)"),
        ("Z2[t]/(t^2)", "mquot(self,[2])"),
        ("Z6", "mquot(self,[2])"),
    ] {
        let r = ring_from_spec(rs)?;
        let m = module_from_spec(ms, &r)?;
        m.check_axioms().expect("module axioms");
        let ann = module_annihilator(&m);
        println!(
            "{rs:<12} {ms:<18} |M| = {:<3} ann {:?}  semisimple {} (by definition {})  cyclic chain height {}",
            m.size(),
            ann.to_vec(),
            is_semisimple(&m),
            is_semisimple_by_definition(&m, DEFAULT_MAX_RING_SIZE)?,
            is_accc(&m).chain_height
        );
    }
    Ok(())
}
