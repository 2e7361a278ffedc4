//! Reading and writing quiver, representation and generator files, the same
//! formats the `symquiver` binary uses.
//!
//! ```text
//! cargo run --example file_formats
//! ```

use symquiver::families;
use symquiver::io::{QuiverFile, RepFile};
use symquiver::rep::{Flavor, StructuredRep};
use symquiver::semiinv::{generators_tame, GeneratorDescriptor};

fn main() {
    let sq = families::a201(0, 0).unwrap();
    let qtext = QuiverFile::from_symmetric(&sq).serialize();
    print!("{qtext}");
    assert_eq!(QuiverFile::parse(&qtext).unwrap().serialize(), qtext);

    let w = StructuredRep::random(&sq, Flavor::Symplectic, vec![2, 2], 8).unwrap();
    let rf = RepFile { quiver_name: sq.quiver().name.clone(), rep: w.full(&sq) };
    let rtext = rf.serialize(sq.quiver());
    print!("{rtext}");

    for g in generators_tame(&sq, &vec![2, 2], Flavor::Symplectic).unwrap() {
        let line = g.to_json(sq.quiver()).to_string();
        println!("{line}");
        let back = GeneratorDescriptor::from_json(&sq, &serde_json::from_str(&line).unwrap()).unwrap();
        let rep = RepFile::parse(sq.quiver(), &rtext).unwrap().rep;
        println!("  value {}", back.value_full(&sq, &rep).unwrap());
    }
}
