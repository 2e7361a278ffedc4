//! Generators of SpSI and OSI for equioriented A_n, with an invariance check.
//!
//! ```text
//! cargo run --example finite_generators
//! ```

use symquiver::families;
use symquiver::rep::{Flavor, GroupElement, StructuredRep};
use symquiver::semiinv::generators_finite;

fn main() {
    let cases = [(4, vec![1, 2, 2, 1], Flavor::Symplectic), (4, vec![2, 2, 2, 2], Flavor::Orthogonal), (5, vec![2, 2, 2, 2, 2], Flavor::Symplectic)];
    for (n, beta, flavor) in cases {
        let sq = families::finite_a(n);
        println!("A{n} {} β={beta:?}", flavor.name());
        let w = StructuredRep::random(&sq, flavor, beta.clone(), 1).unwrap();
        let g = GroupElement::random(&sq, flavor, &beta, 2);
        let gw = g.act(&sq, &w).unwrap();
        for gen in generators_finite(&sq, &beta, flavor).unwrap() {
            let (v, gv) = (gen.value(&sq, &w).unwrap(), gen.value(&sq, &gw).unwrap());
            println!("  {:<4} {:<28} W: {v:<10} gW: {gv}", gen.kind.to_string(), gen.provenance);
            println!("{}", gen.template.describe(sq.quiver()).lines().map(|l| format!("       {l}\n")).collect::<String>().trim_end());
        }
    }
}
