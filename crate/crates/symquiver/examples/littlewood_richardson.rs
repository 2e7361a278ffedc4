//! Littlewood–Richardson coefficients and the weight-space oracle.
//!
//! ```text
//! cargo run --example littlewood_richardson
//! ```

use symquiver::families;
use symquiver::linalg::q;
use symquiver::rep::Flavor;
use symquiver::schur::{lr_coefficient, lr_product, weight_space_dim};

fn main() {
    println!("c^(2,1)_(1),(1,1) = {}", lr_coefficient(&[1], &[1, 1], &[2, 1]));
    println!("c^(3,2,1)_(2,1),(2,1) = {}", lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]));
    for (nu, c) in lr_product(&[2, 1], &[1, 1], 4) {
        println!("s21 * s11 contains {nu:?} x{c}");
    }

    // One σ-fixed arrow: SpSI = K[det V(a)], so each weight space has dimension ≤ 1.
    let sq = families::finite_a(2);
    for p in [2, 4] {
        for k in 0..=3 {
            let dim = weight_space_dim(&sq, Flavor::Symplectic, &[p, p], &[q(k), q(-k)]).unwrap();
            println!("A2, p={p}, weight ({k},-{k}): {dim}");
        }
    }
    let kr = families::a201(0, 0).unwrap();
    let dim = weight_space_dim(&kr, Flavor::Symplectic, &[2, 2], &[q(1), q(-1)]).unwrap();
    println!("Kronecker, p=2, weight (1,-1): {dim}");
}
