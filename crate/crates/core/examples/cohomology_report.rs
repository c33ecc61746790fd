//! Galois cohomology of the ℓ-class groups for every admissible δ.
//!
//! Defaults to `examples/data/wild.json`, where the only ramified place lies
//! above ℓ and the exceptional wild case occurs.

use genus_calc::gen::admissible_deltas;
use genus_calc::genus::{Extension, ExtensionDescriptor};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/wild.json").to_string());
    let desc = ExtensionDescriptor::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let ext = Extension::new(desc.clone()).unwrap_or_else(|r| panic!("{r}"));

    for delta in admissible_deltas(&desc) {
        let r = ext.with_delta(delta).unwrap().cohomology_report().unwrap();
        println!("delta = {delta}, delta' = {}", r.delta_prime);
        println!("  H1(Cl) = {}   H2(Cl) = {}", r.h1_cl, r.h2_cl);
        println!("  H1(C)  = {}   H2(C)  = {}", r.h1_c, r.h2_c);
        println!("  Herbrand quotient of C: {}", r.q_c);
        println!("  case {}, duality holds: {}", r.duality.case.label(), r.duality.holds);
    }
}
