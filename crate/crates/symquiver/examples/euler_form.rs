//! Euler form, null root and Hom/Ext dimensions on a Euclidean quiver.
//!
//! ```text
//! cargo run --example euler_form
//! ```

use symquiver::quiver::Quiver;
use symquiver::rep::{dvw_and_homext, Representation};

fn main() {
    // Ã₃ with alternating orientation.
    let qv = Quiver::from_edges("square", &[1, 2, 3, 4], &[("a", 1, 2), ("b", 3, 2), ("c", 3, 4), ("d", 1, 4)]).unwrap();
    println!("class: {:?}", qv.classify());
    let h = qv.null_root().unwrap();
    println!("null root h = {h:?}, <h,h> = {}", qv.euler(&h, &h));

    let (a, b) = (vec![1, 1, 0, 0], vec![0, 1, 1, 1]);
    println!("<{a:?}, {b:?}> = {}", qv.euler(&a, &b));
    println!("defect of {b:?} = {}", qv.defect(&b).unwrap());

    for seed in 0..3 {
        let v = Representation::random(&qv, a.clone(), seed);
        let w = Representation::random(&qv, b.clone(), 100 + seed);
        let he = dvw_and_homext(&qv, &v, &w).unwrap();
        println!("seed {seed}: hom {} ext {} (difference {})", he.hom_dim, he.ext_dim, he.hom_dim as i64 - he.ext_dim as i64);
    }
}
