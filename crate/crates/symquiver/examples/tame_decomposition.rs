//! τ-orbits, labelled polygons, admissible arcs and the generic
//! decomposition in plain, symplectic and orthogonal modes.
//!
//! ```text
//! cargo run --example tame_decomposition
//! ```

use symquiver::families;
use symquiver::quiver::Dim;
use symquiver::tame::{admissible_arcs, canonical_decomposition, display_decomposition, generic_decomposition, tau_orbits, Mode};

fn main() {
    let sq = families::a11(0, 6).unwrap();
    let orbits = tau_orbits(&sq).unwrap();
    for o in &orbits.orbits {
        println!("orbit {} of rank {}", o.name, o.rank());
        for (i, e) in o.elems.iter().enumerate() {
            println!("  {} = {e:?} ({:?})", o.label(i), o.part[i]);
        }
    }

    // 2h + Σ labels_i e_i with labels 2,3,0,2,0,3 on Δ.
    let labels = [2, 3, 0, 2, 0, 3];
    let mut d: Dim = orbits.h.iter().map(|x| 2 * x).collect();
    for (l, e) in labels.iter().zip(&orbits.orbits[0].elems) {
        for (x, ex) in d.iter_mut().zip(e) {
            *x += l * ex;
        }
    }
    println!("d = {d:?}");

    let dec = canonical_decomposition(&sq, &d, None).unwrap();
    println!("p = {}", dec.p);
    for lp in &dec.polygons {
        let r = lp.labels.len();
        let name = orbits.orbits[lp.orbit].name;
        println!("polygon {name}: {:?}", lp.labels);
        for a in admissible_arcs(lp) {
            println!("  arc [{},{}] index {} q {}", a.start + 1, a.end(r) + 1, a.ind, a.q);
        }
    }
    for mode in [Mode::Plain, Mode::Symplectic, Mode::Orthogonal] {
        let s = generic_decomposition(&sq, &d, mode).unwrap();
        println!("{mode:?}: {}", display_decomposition(&s));
    }
}
