//! Pencil coefficients and arc generators for tame symmetric quivers.
//!
//! ```text
//! cargo run --example tame_generators
//! ```

use symquiver::families;
use symquiver::rep::{Flavor, StructuredRep};
use symquiver::semiinv::generators_tame;

fn main() {
    let kr = families::a201(0, 0).unwrap();
    for (p, flavor) in [(2, Flavor::Symplectic), (2, Flavor::Orthogonal), (3, Flavor::Orthogonal)] {
        let d = vec![p, p];
        let gens = generators_tame(&kr, &d, flavor).unwrap();
        println!("Kronecker p={p} {}: {} generators", flavor.name(), gens.len());
        let w = StructuredRep::random(&kr, flavor, d, 4).unwrap();
        for g in gens {
            println!("  {} = {}", g.provenance, g.value(&kr, &w).unwrap());
        }
    }

    let sq = families::d10(3).unwrap();
    let h = sq.quiver().null_root().unwrap();
    for flavor in [Flavor::Symplectic, Flavor::Orthogonal] {
        println!("D10(3) h={h:?} {}", flavor.name());
        for g in generators_tame(&sq, &h, flavor).unwrap() {
            println!("  {:<18} {}", g.kind.to_string(), g.provenance);
        }
    }
}
