//! Reflection functors, Coxeter transformations and paired reflections of
//! structured representations.
//!
//! ```text
//! cargo run --example reflections
//! ```

use symquiver::families;
use symquiver::reflection::{coxeter_dim, reflect_pair_dim, reflect_pair_structured, Direction};
use symquiver::rep::{check_structured, Flavor, StructuredRep};

fn main() {
    let sq = families::a11(0, 2).unwrap();
    let qv = sq.quiver();
    let h = qv.null_root().unwrap();
    println!("{}: h = {h:?}, c(h) = {:?}", qv.name, coxeter_dim(qv, &h, Direction::Plus));
    let e = qv.unit(qv.vertices()[0]);
    let mut x = e.clone();
    for k in 0..4 {
        println!("τ^{k} e = {x:?}");
        x = coxeter_dim(qv, &x, Direction::Plus);
    }

    let a5 = families::finite_a(5);
    let sink = a5.admissible_sinks()[0];
    let beta = vec![1, 2, 2, 2, 1];
    println!("A5 pair reflection at {}: {beta:?} -> {:?}", a5.quiver().vertices()[sink], reflect_pair_dim(&a5, sink, &beta).unwrap());

    let w = StructuredRep::random(&a5, Flavor::Orthogonal, beta.clone(), 3).unwrap();
    let (sq1, w1) = reflect_pair_structured(&a5, sink, &w).unwrap();
    println!("reflected dim {:?}, still orthogonal: {}", w1.dim, check_structured(&sq1, Flavor::Orthogonal, &w1.full(&sq1)).is_ok());
}
