//! Classification of symmetric quivers and orientation normalization.
//!
//! ```text
//! cargo run --example symmetric_types
//! ```

use symquiver::families;
use symquiver::quiver::Quiver;
use symquiver::symmetric::SymmetricQuiver;

fn main() {
    let all = [
        families::finite_a(5),
        families::a201(2, 2).unwrap(),
        families::a202(2, 2).unwrap(),
        families::a02(2, 2).unwrap(),
        families::a11(0, 6).unwrap(),
        families::a00(4).unwrap(),
        families::d10(4).unwrap(),
        families::d01(4).unwrap(),
    ];
    for sq in &all {
        let t = sq.classify().unwrap();
        let h = sq.quiver().null_root().ok();
        println!("{:<10} {:<16} signature {:?} h {:?}", sq.quiver().name, t.tag.to_string(), t.signature, h);
    }

    // A₄ with a sink in the middle of the positive half.
    let qv = Quiver::from_edges("a4", &[1, 2, 3, 4], &[("x", 1, 2), ("y", 3, 2), ("z", 3, 4)]).unwrap();
    let sq = SymmetricQuiver::validate(qv, &[(1, 4), (2, 3)], &[("x".into(), "z".into()), ("y".into(), "y".into())]).unwrap();
    let (word, canon) = sq.normalize_orientation().unwrap();
    println!("normalizing word {word:?} -> {}", canon.classify().unwrap().tag);
    println!("δ(1,2,3,4) = {:?}", sq.delta(&[1, 2, 3, 4]));
}
