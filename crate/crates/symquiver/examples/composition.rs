//! Contracting a vertex of a path through it, and the generators this adds.
//!
//! ```text
//! cargo run --example composition
//! ```

use symquiver::families;
use symquiver::io::QuiverFile;
use symquiver::rep::Flavor;
use symquiver::semiinv::reduce_composition;

fn main() {
    let sq = families::finite_a(6);
    for alpha in [vec![1, 3, 2, 2, 3, 1], vec![2, 2, 1, 1, 2, 2], vec![2, 2, 2, 2, 2, 2]] {
        let (nsq, na, gens) = reduce_composition(&sq, &alpha, Flavor::Symplectic).unwrap();
        println!("α = {alpha:?} -> α' = {na:?}");
        for g in &gens {
            println!("  adjoins {} {}", g.kind, g.provenance);
        }
        print!("{}", QuiverFile::from_symmetric(&nsq).serialize());
    }
}
