//! Characters of Δ and of the cyclic ℓ-group G.
//!
//! Builds Δ = Z/2 × Z/2 for ℓ = 5, splits a character into its real and
//! imaginary halves, mirrors it, and shows the ψ-basis on the G side.

use genus_calc::delta_chars::{induce_unit, DeltaCharacter, DeltaGroup, DeltaGroupSpec};
use genus_calc::gee_chars::{fixed_dims, induce_unit_from, reg, solve_multiplicities, CyclicGroupSpec};

fn main() {
    let group = DeltaGroup::shared(DeltaGroupSpec {
        ell: 5,
        elementary_divisors: vec![2, 2],
        tau_bar: vec![1, 0],
        omega: vec![1, 1],
        delta_prime_gens: vec![vec![0, 1]],
    })
    .expect("valid group");

    let chi = &(&DeltaCharacter::one(&group) * 2) + &DeltaCharacter::omega(&group);
    println!("chi          = {chi}");
    println!("mirror       = {}", chi.mirror());
    let (plus, minus) = chi.split_real_imag();
    println!("real / imag  = {plus} / {minus}");

    let ind = induce_unit(&group, group.delta_prime()).unwrap();
    println!("Ind_D'^D 1   = {ind} (degree {})", ind.degree());

    let g = CyclicGroupSpec::new(5, 2).unwrap();
    let from_j1 = induce_unit_from(g, 1).unwrap();
    println!("Ind_(5) 1    = {from_j1}");
    let r = reg(g);
    let dims = fixed_dims(&r);
    println!("Reg fixed dims along the chain: {dims:?}");
    let (back, genuine) = solve_multiplicities(g, &dims).unwrap();
    println!("recovered {back}, genuine: {genuine}");
}
