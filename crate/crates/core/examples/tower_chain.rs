//! Climbs the tower K = F_0 ⊂ F_1 ⊂ … ⊂ F_m = L one cyclic step at a time.
//!
//! Each step sees the places of the previous layer with their local
//! ramification, and the chain of λ-degrees must end where the direct
//! transfer lands.

use genus_calc::genus::{Extension, ExtensionDescriptor};
use genus_calc::tower::{fixed_degree_chain, transfer_chain};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/tower.json").to_string());
    let desc = ExtensionDescriptor::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let ext = Extension::new(desc).unwrap_or_else(|r| panic!("{r}"));

    let trace = transfer_chain(&ext).unwrap();
    for step in &trace.steps {
        let places: Vec<String> = step
            .places
            .iter()
            .map(|p| format!("{} x{} j={}", p.name, p.count, p.local_j))
            .collect();
        println!(
            "F_{}: lambda = {} (degree {}), places [{}]",
            step.level,
            step.lambda,
            step.lambda_degree,
            places.join(", ")
        );
    }
    println!("chain {} vs direct {}: agrees = {}", trace.chain_value, trace.direct_value, trace.agrees);
    let w = ext.group().omega_index();
    println!("fixed degrees of the omega row: {:?}", fixed_degree_chain(&trace, w));
}
