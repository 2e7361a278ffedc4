//! Canonical orientations of the finite and tame symmetric families.
//!
//! Vertex ids: the positive half first, then σ-fixed vertices, then the
//! mirror images in the same order. Arrows on the positive side are named
//! `v*`, `u*`, `c*`, `a`, `b`; their σ-images carry an `s` prefix.

use crate::error::{Error, Result};
use crate::quiver::{Arrow, Quiver};
use crate::symmetric::{SymTag, SymmetricQuiver};

struct Builder {
    name: String,
    vertices: Vec<u32>,
    arrows: Vec<Arrow>,
    vpairs: Vec<(u32, u32)>,
    apairs: Vec<(String, String)>,
}

impl Builder {
    fn new(name: &str) -> Self {
        Builder { name: name.into(), vertices: vec![], arrows: vec![], vpairs: vec![], apairs: vec![] }
    }

    fn pair(&mut self, x: u32, y: u32) {
        for v in [x, y] {
            if !self.vertices.contains(&v) {
                self.vertices.push(v);
            }
        }
        self.vpairs.push((x, y));
    }

    fn arrow(&mut self, name: &str, t: u32, h: u32) {
        self.arrows.push(Arrow { name: name.into(), tail: t, head: h });
    }

    /// Arrow `name: t -> h` together with its mirror `s{name}`.
    fn mirrored(&mut self, name: &str, t: u32, h: u32, sigma: &dyn Fn(u32) -> u32) {
        self.arrow(name, t, h);
        self.arrow(&format!("s{name}"), sigma(h), sigma(t));
        self.apairs.push((name.into(), format!("s{name}")));
    }

    fn fixed(&mut self, name: &str, t: u32, h: u32) {
        self.arrow(name, t, h);
        self.apairs.push((name.into(), name.into()));
    }

    fn build(self) -> SymmetricQuiver {
        let q = Quiver::new(&self.name, &self.vertices, self.arrows).expect("family quiver is valid");
        SymmetricQuiver::validate(q, &self.vpairs, &self.apairs).expect("family involution is valid")
    }
}

fn check_even(k: usize, l: usize) -> Result<()> {
    if k % 2 == 1 || l % 2 == 1 {
        return Err(Error::UnsupportedSymmetricType(format!("k={k} l={l} must be even")));
    }
    Ok(())
}

/// Equioriented A_n, a_i: i -> i+1, σ(i) = n+1-i.
pub fn finite_a(n: usize) -> SymmetricQuiver {
    assert!(n >= 1);
    let mut b = Builder::new(&format!("A{n}"));
    let n32 = n as u32;
    for i in 1..=n32 {
        if i <= n32 + 1 - i {
            b.pair(i, n32 + 1 - i);
        }
    }
    b.vertices.sort_unstable();
    for i in 1..n32 {
        b.arrow(&format!("a{i}"), i, i + 1);
    }
    for i in 1..n32 {
        let j = n32 - i;
        if i <= j {
            b.apairs.push((format!("a{i}"), format!("a{j}")));
        }
    }
    b.build()
}

/// Ã^{2,0,1}_{k,l}: source a0, the v-side climbs to the fixed arrow a, the
/// u-side to the fixed arrow b, both fixed arrows pointing away from a0's side.
pub fn a201(k: usize, l: usize) -> Result<SymmetricQuiver> {
    check_even(k, l)?;
    Ok(two_fixed_arrows(k, l, false))
}

/// Ã^{2,0,2}_{k,l}: as Ã^{2,0,1} but with b reversed (needs k ≥ 2).
pub fn a202(k: usize, l: usize) -> Result<SymmetricQuiver> {
    check_even(k, l)?;
    if k < 2 {
        return Err(Error::UnsupportedSymmetricType("A202 needs k >= 2".into()));
    }
    Ok(two_fixed_arrows(k, l, true))
}

fn two_fixed_arrows(k: usize, l: usize, flip_b: bool) -> SymmetricQuiver {
    let (hv, hu) = ((l / 2) as u32, (k / 2) as u32);
    let m = 1 + hv + hu;
    let sigma = move |v: u32| if v <= m { v + m } else { v - m };
    let tag = if flip_b { "A202" } else { "A201" };
    let mut b = Builder::new(&format!("{tag}_{k}_{l}"));
    for v in 1..=m {
        b.pair(v, v + m);
    }
    b.vertices.sort_unstable();
    let x = |j: u32| if j == 0 { 1 } else { 1 + j };
    let y = |j: u32| if j == 0 { 1 } else { 1 + hv + j };
    for j in 1..=hv {
        b.mirrored(&format!("v{j}"), x(j - 1), x(j), &sigma);
    }
    for j in 1..=hu {
        b.mirrored(&format!("u{j}"), y(j - 1), y(j), &sigma);
    }
    b.fixed("a", x(hv), sigma(x(hv)));
    if flip_b {
        b.fixed("b", sigma(y(hu)), y(hu));
    } else {
        b.fixed("b", y(hu), sigma(y(hu)));
    }
    b.build()
}

/// Ã^{0,2}_{k,l}: the v-side passes the fixed vertex t, the u-side the fixed
/// vertex s (k, l ≥ 2).
pub fn a02(k: usize, l: usize) -> Result<SymmetricQuiver> {
    check_even(k, l)?;
    if k < 2 || l < 2 {
        return Err(Error::UnsupportedSymmetricType("A02 needs k, l >= 2".into()));
    }
    let (hv, hu) = ((l / 2) as u32, (k / 2) as u32);
    let m = 1 + (hv - 1) + (hu - 1);
    let (t, s) = (m + 1, m + 2);
    let sigma = move |v: u32| if v <= m { v + m + 2 } else if v <= m + 2 { v } else { v - m - 2 };
    let mut b = Builder::new(&format!("A02_{k}_{l}"));
    for v in 1..=m {
        b.pair(v, v + m + 2);
    }
    b.pair(t, t);
    b.pair(s, s);
    b.vertices.sort_unstable();
    let x = |j: u32| if j == 0 { 1 } else if j == hv { t } else { 1 + j };
    let y = |j: u32| if j == 0 { 1 } else if j == hu { s } else { hv + j };
    for j in 1..=hv {
        b.mirrored(&format!("v{j}"), x(j - 1), x(j), &sigma);
    }
    for j in 1..=hu {
        b.mirrored(&format!("u{j}"), y(j - 1), y(j), &sigma);
    }
    Ok(b.build())
}

/// Ã^{1,1}_{k,l}: the v-side passes the fixed vertex t (l ≥ 2), the u-side
/// ends in the fixed arrow b.
pub fn a11(k: usize, l: usize) -> Result<SymmetricQuiver> {
    check_even(k, l)?;
    if l < 2 {
        return Err(Error::UnsupportedSymmetricType("A11 needs l >= 2".into()));
    }
    let (hv, hu) = ((l / 2) as u32, (k / 2) as u32);
    let m = 1 + (hv - 1) + hu;
    let t = m + 1;
    let sigma = move |v: u32| if v <= m { v + m + 1 } else if v == t { t } else { v - m - 1 };
    let mut b = Builder::new(&format!("A11_{k}_{l}"));
    for v in 1..=m {
        b.pair(v, v + m + 1);
    }
    b.pair(t, t);
    b.vertices.sort_unstable();
    let x = |j: u32| if j == 0 { 1 } else if j == hv { t } else { 1 + j };
    let y = |j: u32| if j == 0 { 1 } else { hv + j };
    for j in 1..=hv {
        b.mirrored(&format!("v{j}"), x(j - 1), x(j), &sigma);
    }
    for j in 1..=hu {
        b.mirrored(&format!("u{j}"), y(j - 1), y(j), &sigma);
    }
    b.fixed("b", y(hu), sigma(y(hu)));
    Ok(b.build())
}

/// Ã^{0,0}_{k,k}: source 1, sink σ(1); one path v1..vk, the other its σ-image.
pub fn a00(k: usize) -> Result<SymmetricQuiver> {
    check_even(k, k)?;
    if k < 2 {
        return Err(Error::UnsupportedSymmetricType("A00 needs k >= 2".into()));
    }
    let k32 = k as u32;
    let sigma = move |v: u32| if v <= k32 { v + k32 } else { v - k32 };
    let mut b = Builder::new(&format!("A00_{k}_{k}"));
    for v in 1..=k32 {
        b.pair(v, v + k32);
    }
    b.vertices.sort_unstable();
    // x_0 = 1, x_j = 1 + j, x_k = σ(1)
    let x = |j: u32| if j == k32 { sigma(1) } else { 1 + j };
    for j in 1..=k32 {
        b.mirrored(&format!("v{j}"), x(j - 1), x(j), &sigma);
    }
    Ok(b.build())
}

/// D̃^{1,0}_n: leaves 1, 2 feed a spine ending in the fixed arrow c{n-2}.
pub fn d10(n: usize) -> Result<SymmetricQuiver> {
    if n < 3 {
        return Err(Error::UnsupportedSymmetricType("D10 needs n >= 3".into()));
    }
    let n32 = n as u32;
    let sigma = move |v: u32| if v <= n32 { v + n32 } else { v - n32 };
    let mut b = Builder::new(&format!("D10_{n}"));
    for v in 1..=n32 {
        b.pair(v, v + n32);
    }
    b.vertices.sort_unstable();
    let z = |j: u32| 2 + j;
    b.mirrored("a", 1, z(1), &sigma);
    b.mirrored("b", 2, z(1), &sigma);
    for j in 1..n32 - 2 {
        b.mirrored(&format!("c{j}"), z(j), z(j + 1), &sigma);
    }
    b.fixed(&format!("c{}", n32 - 2), z(n32 - 2), sigma(z(n32 - 2)));
    b.build_ok()
}

/// D̃^{0,1}_n: leaves 1, 2 feed a spine through the fixed vertex n.
pub fn d01(n: usize) -> Result<SymmetricQuiver> {
    if n < 3 {
        return Err(Error::UnsupportedSymmetricType("D01 needs n >= 3".into()));
    }
    let n32 = n as u32;
    let mid = n32;
    let sigma = move |v: u32| if v < mid { v + mid } else if v == mid { mid } else { v - mid };
    let mut b = Builder::new(&format!("D01_{n}"));
    for v in 1..mid {
        b.pair(v, v + mid);
    }
    b.pair(mid, mid);
    b.vertices.sort_unstable();
    let z = |j: u32| if j == n32 - 2 { mid } else { 2 + j };
    b.mirrored("a", 1, z(1), &sigma);
    b.mirrored("b", 2, z(1), &sigma);
    for j in 1..n32 - 2 {
        b.mirrored(&format!("c{j}"), z(j), z(j + 1), &sigma);
    }
    b.build_ok()
}

impl Builder {
    fn build_ok(self) -> Result<SymmetricQuiver> {
        Ok(self.build())
    }
}

pub fn canonical(tag: SymTag) -> Result<SymmetricQuiver> {
    match tag {
        SymTag::FiniteA(n) => Ok(finite_a(n)),
        SymTag::A201(k, l) => a201(k, l),
        SymTag::A202(k, l) => a202(k, l),
        SymTag::A02(k, l) => a02(k, l),
        SymTag::A11(k, l) => a11(k, l),
        SymTag::A00(k, l) if k == l => a00(k),
        SymTag::A00(k, l) => Err(Error::UnsupportedSymmetricType(format!("A00 with k={k} != l={l}"))),
        SymTag::D10(n) => d10(n),
        SymTag::D01(n) => d01(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::Part;

    #[test]
    fn families_classify_to_themselves() {
        let cases = [
            SymTag::FiniteA(1),
            SymTag::FiniteA(4),
            SymTag::FiniteA(5),
            SymTag::A201(0, 0),
            SymTag::A201(2, 4),
            SymTag::A201(0, 2),
            SymTag::A202(2, 0),
            SymTag::A202(4, 2),
            SymTag::A02(2, 2),
            SymTag::A02(4, 2),
            SymTag::A11(0, 2),
            SymTag::A11(2, 6),
            SymTag::A00(2, 2),
            SymTag::A00(4, 4),
            SymTag::D10(3),
            SymTag::D10(5),
            SymTag::D01(3),
            SymTag::D01(5),
        ];
        for tag in cases {
            let s = canonical(tag).unwrap();
            assert_eq!(s.classify().unwrap().tag, tag, "{tag}");
            let (word, _) = s.normalize_orientation().unwrap();
            assert!(word.is_empty(), "{tag}");
        }
    }

    #[test]
    fn smallest_cases_have_expected_shape() {
        let s = a02(2, 2).unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(s.vertices_in(Part::Fixed).len(), 2);
        let s = d01(3).unwrap();
        assert_eq!(s.n(), 5);
        assert_eq!(s.quiver().null_root().unwrap(), vec![1, 1, 2, 1, 1]);
        let s = d10(3).unwrap();
        assert_eq!(s.quiver().null_root().unwrap(), vec![1, 1, 2, 1, 1, 2]);
        assert_eq!(a201(0, 0).unwrap().quiver().arrows().len(), 2);
    }
}
