//! Exact dense matrices and fraction-free elimination.
//!
//! Determinants and ranks go through Bareiss elimination, written once over
//! [`BareissRing`] so the same code serves rational matrices and matrices of
//! polynomials in `t`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ratpoly::{parse_rat, Rat, RatPoly};

/// An integral domain with exact division, enough for Bareiss elimination.
pub trait BareissRing: Clone + PartialEq {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / d`, where the division is known to be exact.
    fn exact_div(&self, d: &Self) -> Self;
}

impl BareissRing for Rat {
    fn ring_zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn ring_one() -> Self {
        <Rat as One>::one()
    }
    fn is_ring_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
}

impl BareissRing for RatPoly {
    fn ring_zero() -> Self {
        RatPoly::zero()
    }
    fn ring_one() -> Self {
        RatPoly::one()
    }
    fn is_ring_zero(&self) -> bool {
        RatPoly::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Self {
        RatPoly::exact_div(self, d).expect("Bareiss division is exact")
    }
}

/// Determinant of a square matrix by Bareiss elimination with row pivoting.
pub fn bareiss_det<T: BareissRing>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::ring_one();
    }
    let mut negate = false;
    let mut prev = T::ring_one();
    for k in 0..n - 1 {
        if m[k][k].is_ring_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_ring_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return T::ring_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// All leading principal minors `det A(1), ..., det A(n)`.
///
/// A single pivot-free Bareiss pass yields every leading minor as a pivot;
/// when a pivot vanishes the remaining minors are computed block by block.
pub fn bareiss_leading_minors<T: BareissRing>(a: &[Vec<T>]) -> Vec<T> {
    let n = a.len();
    let mut out = Vec::with_capacity(n);
    let mut m = a.to_vec();
    let mut prev = T::ring_one();
    for k in 0..n {
        out.push(m[k][k].clone());
        if k + 1 == n {
            break;
        }
        if m[k][k].is_ring_zero() {
            for size in k + 2..=n {
                let block: Vec<Vec<T>> = a[..size].iter().map(|r| r[..size].to_vec()).collect();
                out.push(bareiss_det(block));
            }
            return out;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    out
}

/// Rank by fraction-free elimination with full column search.
pub fn bareiss_rank<T: BareissRing>(mut m: Vec<Vec<T>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = T::ring_one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_ring_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = m[i][j].mul(&m[rank][col]).sub(&m[i][col].mul(&m[rank][j]));
                m[i][j] = v.exact_div(&prev);
            }
            m[i][col] = T::ring_zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Index subsets of `0..n`, ordered by size then lexicographically.
pub fn principal_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = (1u64..(1u64 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
}

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Integer entries, for tests and fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| crate::ratpoly::int(v)).collect()).collect(),
        )
        .expect("rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[Rat]>::to_vec).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Rat::zero(), |acc, k| acc + self.get(i, k) * rhs.get(k, j))
        }))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * k).collect() }
    }

    /// Entrywise (Hadamard/Schur) product.
    pub fn hadamard(&self, rhs: &RatMatrix) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a * b).collect(),
        })
    }

    /// Submatrix on the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn principal(&self, idx: &[usize]) -> Self {
        self.select(idx, idx)
    }

    /// Upper-left `k x k` block.
    pub fn leading(&self, k: usize) -> Self {
        let idx: Vec<usize> = (0..k).collect();
        self.principal(&idx)
    }

    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        Ok(bareiss_det(self.to_rows()))
    }

    pub fn rank(&self) -> usize {
        bareiss_rank(self.to_rows())
    }

    /// Unique solution of `A x = rhs` by Gauss-Jordan elimination.
    pub fn solve(&self, rhs: &[Rat]) -> Result<Vec<Rat>> {
        let n = self.rows;
        if !self.is_square() || rhs.len() != n {
            return Err(Error::ShapeMismatch("solve needs a square system".into()));
        }
        let mut m: Vec<Vec<Rat>> = self.to_rows();
        for (row, b) in m.iter_mut().zip(rhs) {
            row.push(b.clone());
        }
        for k in 0..n {
            let p = (k..n).find(|&i| !m[i][k].is_zero()).ok_or_else(|| Error::InvalidArgument("singular system".into()))?;
            m.swap(k, p);
            let inv = m[k][k].recip();
            for v in m[k].iter_mut() {
                *v *= &inv;
            }
            for i in 0..n {
                if i != k && !m[i][k].is_zero() {
                    let factor = m[i][k].clone();
                    for j in k..=n {
                        let d = &factor * &m[k][j];
                        m[i][j] -= d;
                    }
                }
            }
        }
        Ok(m.into_iter().map(|mut r| r.pop().expect("augmented")).collect())
    }

    pub fn leading_minors(&self) -> Vec<Rat> {
        bareiss_leading_minors(&self.to_rows())
    }

    /// `det(t I - A)`, monic of degree `n`.
    pub fn char_poly(&self) -> Result<RatPoly> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("characteristic polynomial of a non-square matrix".into()));
        }
        let m: Vec<Vec<RatPoly>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let a = RatPoly::constant(-self.get(i, j));
                        if i == j {
                            &a + &RatPoly::x()
                        } else {
                            a
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(bareiss_det(m))
    }

    /// `c^T A c`.
    pub fn quadratic_form(&self, c: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                acc += &c[i] * self.get(i, j) * &c[j];
            }
        }
        acc
    }

    pub fn diagonal(&self) -> Vec<Rat> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        use num_traits::ToPrimitive;
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).to_f64().unwrap_or(f64::NAN)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Largest absolute entry, zero for an empty matrix.
    pub fn max_abs(&self) -> Rat {
        self.data.iter().map(Signed::abs).fold(Rat::zero(), |m, v| if v > m { v } else { m })
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            self.to_rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.to_rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        RatMatrix::from_rows(parsed).map_err(serde::de::Error::custom)
    }
}
