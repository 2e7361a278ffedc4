//! Exact rational matrices: rank, determinant, kernels, cokernels and Pfaffians.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Prints `p` for integers and `p/q` otherwise.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|c| fmt_q(&self[(r, c)])).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

/// Result of [`RationalMatrix::kit`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinalgKit {
    pub rank: usize,
    pub det: Option<Q>,
    pub kernel_basis: Vec<Vec<Q>>,
    pub cokernel_dim: usize,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Q>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        RationalMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        Self::from_vec(rows, cols, data.iter().map(|&x| q(x)).collect())
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_vec(r, c, rows.iter().flatten().cloned().collect())
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = v[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn row(&self, r: usize) -> Vec<Q> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] += a * b;
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Q::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() {
                        s += &self[(i, j)] * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Self::from_vec(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Self::from_vec(self.rows, self.cols, data)
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::from_vec(self.rows, self.cols, self.data.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(&q(-1))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        m
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut m = Self::zeros(self.rows + other.rows, self.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, 0, other);
        m
    }

    pub fn block_diag(blocks: &[Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(r, c);
        let (mut i, mut j) = (0, 0);
        for b in blocks {
            m.set_block(i, j, b);
            i += b.rows;
            j += b.cols;
        }
        m
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(p, r);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &f * &m[(r, j)];
                        if !v.is_zero() {
                            m[(i, j)] -= v;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis: one vector per pivot-free column, in ascending column order.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<Q> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Q::one());
        }
        let mut m = self.clone();
        let mut sign = Q::one();
        let mut prev = Q::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Ok(Q::zero());
                };
                m.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * m[(n - 1, n - 1)].clone())
    }

    pub fn kit(&self) -> LinalgKit {
        let rank = self.rank();
        LinalgKit {
            rank,
            det: self.det().ok(),
            kernel_basis: self.kernel(),
            cokernel_dim: self.rows - rank,
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Self::identity(n)).rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return Err(Error::Singular);
        }
        Ok(r.submatrix(0, n, n, n))
    }

    /// A basis of the column space, taken from the pivot columns of `self`.
    pub fn column_space(&self) -> Vec<Vec<Q>> {
        self.rref().1.into_iter().map(|c| self.col(c)).collect()
    }

    /// Projection onto a complement of the column space, along the column space.
    /// The complement is spanned by standard basis vectors chosen greedily by
    /// ascending index; the returned matrix has one row per chosen vector.
    pub fn cokernel_projection(&self) -> Self {
        let n = self.rows;
        let mut basis = self.column_space();
        let k = basis.len();
        let mut chosen = Vec::new();
        for i in 0..n {
            if basis.len() == n {
                break;
            }
            let mut e = vec![Q::zero(); n];
            e[i] = Q::one();
            let mut trial = basis.clone();
            trial.push(e.clone());
            if Self::from_cols(n, &trial).rank() == trial.len() {
                basis = trial;
                chosen.push(i);
            }
        }
        let inv = Self::from_cols(n, &basis).inverse().expect("basis is invertible");
        inv.submatrix(k, 0, n - k, n)
    }

    /// Solve `self * x = b`; returns one solution if it exists.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        let aug = self.hstack(&Self::from_cols(self.rows, &[b.to_vec()]));
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = m[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn pfaffian(&self) -> Result<Q> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        if self.rows % 2 == 1 {
            return Err(Error::OddDimension(self.rows));
        }
        if !self.is_skew() {
            return Err(Error::NotSkewSymmetric);
        }
        if self.rows <= 6 {
            Ok(self.pfaffian_matchings())
        } else {
            Ok(self.pfaffian_elimination())
        }
    }

    /// Signed sum over perfect matchings, by expansion along the first row.
    pub fn pfaffian_matchings(&self) -> Q {
        fn go(m: &RationalMatrix, idx: &[usize]) -> Q {
            if idx.is_empty() {
                return Q::one();
            }
            let mut s = Q::zero();
            for j in 1..idx.len() {
                let a = &m[(idx[0], idx[j])];
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> =
                    idx[1..].iter().enumerate().filter(|&(t, _)| t + 1 != j).map(|(_, &x)| x).collect();
                let term = a * go(m, &rest);
                if j % 2 == 1 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            s
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        go(self, &idx)
    }

    /// Skew elimination by congruences that keep the Pfaffian fixed.
    pub fn pfaffian_elimination(&self) -> Q {
        let n = self.rows;
        let mut a = self.clone();
        let mut pf = Q::one();
        let mut k = 0;
        while k < n {
            let Some(p) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) else {
                return Q::zero();
            };
            if p != k + 1 {
                a.swap_sym(p, k + 1);
                pf = -pf;
            }
            let piv = a[(k, k + 1)].clone();
            pf *= &piv;
            for i in k + 2..n {
                let c1 = &a[(k, i)] / &piv;
                if !c1.is_zero() {
                    a.add_sym(i, k + 1, &-c1);
                }
                let c2 = &a[(k + 1, i)] / &-piv.clone();
                if !c2.is_zero() {
                    a.add_sym(i, k, &-c2);
                }
            }
            k += 2;
        }
        pf
    }

    fn swap_sym(&mut self, a: usize, b: usize) {
        self.swap_rows(a, b);
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i += c row_j and col_i += c col_j.
    fn add_sym(&mut self, i: usize, j: usize, c: &Q) {
        for t in 0..self.cols {
            let v = c * &self[(j, t)];
            self[(i, t)] += v;
        }
        for t in 0..self.rows {
            let v = c * &self[(t, j)];
            self[(t, i)] += v;
        }
    }

    /// Largest absolute numerator, a rough size measure used in tests.
    pub fn max_abs(&self) -> Q {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
    }
}

/// Exact Lagrange interpolation: coefficients (lowest degree first) of the
/// polynomial through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[Q], ys: &[Q]) -> Vec<Q> {
    let n = xs.len();
    let mut vander = RationalMatrix::zeros(n, n);
    for i in 0..n {
        let mut p = Q::one();
        for j in 0..n {
            vander[(i, j)] = p.clone();
            p *= &xs[i];
        }
    }
    vander.solve(ys).expect("distinct nodes")
}

/// Drops trailing zero coefficients.
pub fn poly_trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Quotient and remainder of univariate polynomials (lowest degree first).
pub fn poly_divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let b = poly_trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = poly_trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![Q::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        quot[shift] = c;
        r.pop();
        r = poly_trim(r);
    }
    (poly_trim(quot), r)
}

/// Monic gcd; the gcd of two zero polynomials is the empty vector.
pub fn poly_gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (mut x, mut y) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &l;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_gcd() {
        // (x − 1)(x + 2) and (x − 1)(x − 3)
        let a = vec![q(-2), q(1), q(1)];
        let b = vec![q(3), q(-4), q(1)];
        assert_eq!(poly_gcd(&a, &b), vec![q(-1), q(1)]);
        let (quot, rem) = poly_divrem(&a, &[q(-1), q(1)]);
        assert_eq!((quot, rem), (vec![q(2), q(1)], vec![]));
    }

    #[test]
    fn kit_on_rank_one() {
        let m = RationalMatrix::from_i64(2, 2, &[1, 2, 2, 4]);
        let k = m.kit();
        assert_eq!(k.rank, 1);
        assert_eq!(k.det, Some(q(0)));
        assert_eq!(k.kernel_basis, vec![vec![q(-2), q(1)]]);
        assert_eq!(k.cokernel_dim, 1);
    }

    #[test]
    fn kit_trivial_cases() {
        let k = RationalMatrix::identity(2).kit();
        assert_eq!((k.rank, k.det, k.kernel_basis.len(), k.cokernel_dim), (2, Some(q(1)), 0, 0));
        let k = RationalMatrix::zeros(1, 1).kit();
        assert_eq!(k.kernel_basis, vec![vec![q(1)]]);
        assert_eq!(k.cokernel_dim, 1);
    }

    #[test]
    fn pfaffian_small() {
        let m = RationalMatrix::from_i64(2, 2, &[0, 5, -5, 0]);
        assert_eq!(m.pfaffian().unwrap(), q(5));
        let m = RationalMatrix::from_i64(4, 4, &[0, 1, 2, 3, -1, 0, 4, 5, -2, -4, 0, 6, -3, -5, -6, 0]);
        assert_eq!(m.pfaffian().unwrap(), q(8));
        assert_eq!(m.pfaffian_elimination(), q(8));
        assert_eq!(m.det().unwrap(), q(64));
        assert_eq!(RationalMatrix::zeros(0, 0).pfaffian().unwrap(), q(1));
    }

    #[test]
    fn pfaffian_errors() {
        assert!(matches!(RationalMatrix::zeros(3, 3).pfaffian(), Err(Error::OddDimension(3))));
        let m = RationalMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert!(matches!(m.pfaffian(), Err(Error::NotSkewSymmetric)));
    }

    #[test]
    fn cokernel_projection_kills_image() {
        let m = RationalMatrix::from_i64(3, 1, &[1, 1, 0]);
        let p = m.cokernel_projection();
        assert_eq!(p.rows(), 2);
        assert!(p.mul(&m).is_zero());
        assert_eq!(p.rank(), 2);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let xs: Vec<Q> = (0..4).map(q).collect();
        let ys: Vec<Q> = xs.iter().map(|x| q(3) - x * x + x * x * x * q(2)).collect();
        assert_eq!(interpolate(&xs, &ys), vec![q(3), q(0), q(-1), q(2)]);
    }
}
