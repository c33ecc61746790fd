//! Rewrites λ in terms of the other Iwasawa parameters: the decomposed and
//! infinitesimal parts at ℓ, and the S-ramified T-decomposed variants.

use genus_calc::genus::{Extension, ExtensionDescriptor};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/wild.json").to_string());
    let desc = ExtensionDescriptor::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let ext = Extension::new(desc).unwrap_or_else(|r| panic!("{r}"));

    let p4 = ext.translate_p4();
    println!("lambda_K                 = {}", ext.lambda_k());
    println!("decomposed at ell        = {}", p4.lambda_ell_decomposed);
    println!("infinitesimal at ell     = {}", p4.lambda_ell_infinitesimal);
    for w in &p4.warnings {
        println!("warning {}: {}", w.code, w.message);
    }

    let tame: Vec<String> = ext.places().iter().filter(|p| !p.above_ell).map(|p| p.name.clone()).collect();
    let none: [String; 0] = [];
    let t1 = ext.translate_t1(&tame, &none).unwrap();
    println!("S = {tame:?}, T = []");
    println!("  (i)   {}", t1.case_i);
    println!("  (ii)  {}", t1.case_ii);
    println!("  (iii) {}", t1.case_iii);
}
