//! Exact determinants and Pfaffians of skew-symmetric rational matrices.
//!
//! ```text
//! cargo run --example pfaffians
//! ```

use symquiver::linalg::{q, qf, RationalMatrix};

fn main() {
    let m = RationalMatrix::from_rows(&[
        vec![q(0), q(1), qf(1, 2), q(3)],
        vec![q(-1), q(0), q(4), q(5)],
        vec![qf(-1, 2), q(-4), q(0), q(6)],
        vec![q(-3), q(-5), q(-6), q(0)],
    ]);
    let pf = m.pfaffian().unwrap();
    println!("pf(M)   = {pf}");
    println!("det(M)  = {}", m.det().unwrap());
    println!("pf(M)^2 = {}", &pf * &pf);

    // pf(B M Bᵗ) = det(B) pf(M)
    let b = RationalMatrix::from_i64(4, 4, &[1, 2, 0, 1, 0, 1, 3, 0, 2, 0, 1, 1, 0, 0, 1, 2]);
    let bmb = b.mul(&m).mul(&b.transpose());
    println!("pf(BMBᵗ) = {}  det(B) pf(M) = {}", bmb.pfaffian().unwrap(), b.det().unwrap() * pf);

    // Odd size: the Pfaffian is not defined.
    let odd = RationalMatrix::zeros(3, 3);
    println!("3x3: {:?}", odd.pfaffian().unwrap_err());
}
