//! The quadratic case with ℓ = 3: one tame place with decomposition in G of index 3.
//!
//! Loads `examples/data/worked.json` (or a descriptor given on the command
//! line) and prints the transfer of λ to L with the three degree formulas.

use genus_calc::genus::{Extension, ExtensionDescriptor};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/worked.json").to_string());
    let desc = ExtensionDescriptor::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let ext = match Extension::new(desc) {
        Ok(e) => e,
        Err(report) => {
            eprintln!("{report}");
            std::process::exit(2);
        }
    };

    let t = ext.transfer_t3().unwrap();
    println!("lambda_K        = {}", ext.lambda_k());
    for (i, row) in t.chi_l.rows().enumerate() {
        println!("chi_L[{}]        = {row}", ext.group().label(i));
    }
    println!("lambda_L        = {}  (degree {})", t.lambda_l, t.lambda_l_degree);
    println!("Kida            = {}", ext.kida_a1().unwrap());
    println!("Wingberg        = {}", ext.wingberg_a2().unwrap());
    let k = ext.kuzmin_a3().unwrap();
    println!("Kuzmin mismatch = {} (source of tilde lambda_K: {})", k.mismatch, k.lambda_tilde_k_source);
    for w in &t.warnings {
        println!("warning {}: {}", w.code, w.message);
    }
}
