//! Random symplectic and orthogonal representations and the group action.
//!
//! ```text
//! cargo run --example structured_reps
//! ```

use symquiver::families;
use symquiver::rep::{check_structured, Flavor, GroupElement, StructuredRep};

fn main() {
    let sq = families::finite_a(4);
    let d = vec![1, 2, 2, 1];
    for flavor in [Flavor::Symplectic, Flavor::Orthogonal] {
        let w = StructuredRep::random(&sq, flavor, d.clone(), 11).unwrap();
        let full = w.full(&sq);
        for (a, m) in sq.quiver().arrows().iter().zip(&full.mats) {
            println!("{} {}: {:?}", flavor.name(), a.name, (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
        }
        let g = GroupElement::random(&sq, flavor, &d, 12);
        let gw = g.act(&sq, &w).unwrap();
        println!("g preserves forms: {}, g.W structured: {}", g.preserves_forms(&sq, &d), check_structured(&sq, flavor, &gw.full(&sq)).is_ok());
    }
    // A₃ has a fixed middle vertex; an odd symplectic space there is refused.
    let a3 = families::finite_a(3);
    println!("odd symplectic: {:?}", StructuredRep::random(&a3, Flavor::Symplectic, vec![1, 1, 1], 0).map(|_| ()));
}
