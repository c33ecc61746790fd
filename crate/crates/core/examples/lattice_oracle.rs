//! Recovers (α, β, γ) from disguised Z_ℓ[G]-lattices through their cohomology.
//!
//! Usage: `cargo run --example lattice_oracle -- [ell] [cases]`

use genus_calc::lattice::{analyse, canonical_lattice, disguise};
use genus_calc::cli::DEFAULT_SEED;

fn main() {
    let mut args = std::env::args().skip(1);
    let ell: u64 = args.next().map_or(3, |s| s.parse().expect("ell"));
    let cases: u64 = args.next().map_or(8, |s| s.parse().expect("cases"));

    let mut recovered = 0;
    for i in 0..cases {
        let (a, b, c) = ((i % 3) as usize, (i / 3 % 3) as usize, (i / 9 % 3 + 1) as usize);
        let lattice = disguise(&canonical_lattice(ell, a, b, c).unwrap(), DEFAULT_SEED + i);
        let analysis = analyse(&lattice).unwrap();
        let d = analysis.decomposition().unwrap();
        let ok = (d.alpha, d.beta, d.gamma) == (a, b, c);
        recovered += ok as u64;
        println!(
            "rank {:>3}  H1 {:?}  H2 {:?}  -> ({}, {}, {})  character {}{}",
            lattice.rank(),
            analysis.cohomology.h1_invariant_factors,
            analysis.cohomology.h2_invariant_factors,
            d.alpha,
            d.beta,
            d.gamma,
            analysis.character().unwrap(),
            if ok { "" } else { "  MISMATCH" }
        );
    }
    println!("{recovered}/{cases} recovered");
}
