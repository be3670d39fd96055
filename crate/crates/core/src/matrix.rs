//! Dense matrices over local bases.
//!
//! Two bases are supported through [`LocalRing`]: the coefficient ring `R`
//! itself (as `Arc<RingContext>`) and the truncated series ring `S/G_N`.
//! Over a local ring an element is a unit iff it is a unit modulo the
//! maximal ideal, so Gaussian elimination with unit pivots decides
//! invertibility exactly.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::poly::same_ring;
use crate::ring::{RingContext, RingElem};
use crate::series::{SeriesRing, TruncatedSeries};
use crate::{Error, Result};

/// A finite local ring, not necessarily commutative, with
/// exact arithmetic.
pub trait LocalRing: Clone {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Two-sided inverse, if `a` is a unit.
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Whether the non-units form an ideal.
    fn is_local(&self) -> bool;
    /// Whether `a` belongs to this ring (same context and precision).
    fn owns(&self, a: &Self::Elem) -> bool;
    fn render(&self, a: &Self::Elem) -> String;
    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.unit_inverse(a).is_some()
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

impl LocalRing for Arc<RingContext> {
    type Elem = RingElem;

    fn zero(&self) -> RingElem {
        RingContext::zero(self)
    }

    fn one(&self) -> RingElem {
        RingContext::one(self)
    }

    fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        RingContext::add(self, *a, *b)
    }

    fn neg(&self, a: &RingElem) -> RingElem {
        RingContext::neg(self, *a)
    }

    fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        RingContext::mul(self, *a, *b)
    }

    fn unit_inverse(&self, a: &RingElem) -> Option<RingElem> {
        RingContext::unit_inverse(self, *a)
    }

    fn is_local(&self) -> bool {
        RingContext::is_local(self)
    }

    fn owns(&self, a: &RingElem) -> bool {
        a.index() < self.size()
    }

    fn render(&self, a: &RingElem) -> String {
        RingContext::render(self, *a)
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> RingElem {
        RingElem::from_index(rng.gen_range(0..self.size()))
    }
}

impl LocalRing for SeriesRing {
    type Elem = TruncatedSeries;

    fn zero(&self) -> TruncatedSeries {
        SeriesRing::zero(self)
    }

    fn one(&self) -> TruncatedSeries {
        SeriesRing::one(self)
    }

    fn add(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        a.add(b).expect("entries share the series ring")
    }

    fn neg(&self, a: &TruncatedSeries) -> TruncatedSeries {
        a.neg()
    }

    fn mul(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        a.mul(b).expect("entries share the series ring")
    }

    fn unit_inverse(&self, a: &TruncatedSeries) -> Option<TruncatedSeries> {
        a.unit_inverse()
    }

    /// `S/G_N` is local exactly when `R` is: its maximal ideal is `G_1`.
    fn is_local(&self) -> bool {
        self.ctx().is_local()
    }

    fn owns(&self, a: &TruncatedSeries) -> bool {
        a.precision() == self.precision() && same_ring(a.ctx(), self.ctx())
    }

    fn render(&self, a: &TruncatedSeries) -> String {
        a.render()
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> TruncatedSeries {
        SeriesRing::random_element(self, rng)
    }
}

/// A dense row-major matrix with entries in a [`LocalRing`].
#[derive(Clone, Debug)]
pub struct Matrix<B: LocalRing> {
    base: B,
    rows: usize,
    cols: usize,
    entries: Vec<B::Elem>,
}

impl<B: LocalRing> PartialEq for Matrix<B> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl<B: LocalRing> Matrix<B> {
    /// Builds a matrix from row-major entries, checking the shape and that
    /// every entry belongs to `base`.
    pub fn new(base: B, rows: usize, cols: usize, entries: Vec<B::Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch);
        }
        if !entries.iter().all(|e| base.owns(e)) {
            return Err(Error::ContextMismatch);
        }
        Ok(Matrix { base, rows, cols, entries })
    }

    /// Builds a matrix from a list of rows of equal length.
    pub fn from_rows(base: B, rows: Vec<Vec<B::Elem>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch);
        }
        Matrix::new(base, n, m, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(base: B, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> B::Elem) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { base, rows, cols, entries }
    }

    pub fn zeros(base: B, rows: usize, cols: usize) -> Self {
        let z = base.zero();
        Matrix::from_fn(base, rows, cols, |_, _| z.clone())
    }

    pub fn identity(base: B, n: usize) -> Self {
        let (z, o) = (base.zero(), base.one());
        Matrix::from_fn(base, n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    /// The diagonal matrix with `1` where `ones[i]` holds and `0` elsewhere.
    pub fn diagonal01(base: B, ones: &[bool]) -> Self {
        let (z, o) = (base.zero(), base.one());
        Matrix::from_fn(base, ones.len(), ones.len(), |i, j| {
            if i == j && ones[i] {
                o.clone()
            } else {
                z.clone()
            }
        })
    }

    pub fn base(&self) -> &B {
        &self.base
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

    pub fn get(&self, i: usize, j: usize) -> &B::Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: B::Elem) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[B::Elem] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[B::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch);
        }
        let b = &self.base;
        Ok(Matrix::from_fn(b.clone(), self.rows, self.cols, |i, j| {
            b.add(self.get(i, j), other.get(i, j))
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch);
        }
        let b = &self.base;
        Ok(Matrix::from_fn(b.clone(), self.rows, self.cols, |i, j| {
            b.sub(self.get(i, j), other.get(i, j))
        }))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch);
        }
        let b = &self.base;
        Ok(Matrix::from_fn(b.clone(), self.rows, other.cols, |i, j| {
            (0..self.cols).fold(b.zero(), |acc, k| {
                b.add(&acc, &b.mul(self.get(i, k), other.get(k, j)))
            })
        }))
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let z = self.base.zero();
        Matrix::from_fn(
            self.base.clone(),
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => z.clone(),
            },
        )
    }

    /// The submatrix on the given row and column indices, in that order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(self.base.clone(), rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch);
        }
        Ok(Matrix::from_fn(
            self.base.clone(),
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    other.get(i, j - self.cols).clone()
                }
            },
        ))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.base.clone(), self.rows)
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self).map_or(false, |sq| sq == *self)
    }

    /// Two-sided inverse by Gauss–Jordan elimination with unit pivots.
    ///
    /// Returns `None` when some column has no unit below the current pivot
    /// row: the matrix is then singular modulo the maximal ideal, hence not
    /// invertible. Only meaningful over a local base.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let b = &self.base;
        let mut a = self.clone();
        let mut inv = Matrix::identity(b.clone(), n);
        for col in 0..n {
            let (pivot_row, pivot_inv) =
                (col..n).find_map(|r| b.unit_inverse(a.get(r, col)).map(|u| (r, u)))?;
            a.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            a.scale_row(col, &pivot_inv);
            inv.scale_row(col, &pivot_inv);
            for r in 0..n {
                if r == col || b.is_zero(a.get(r, col)) {
                    continue;
                }
                let factor = a.get(r, col).clone();
                a.add_row_multiple(r, col, &factor);
                inv.add_row_multiple(r, col, &factor);
            }
        }
        debug_assert!(self.mul(&inv).map_or(false, |p| p.is_identity()));
        Some(inv)
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.entries.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    /// Row `i` becomes `u · row i`.
    pub(crate) fn scale_row(&mut self, i: usize, u: &B::Elem) {
        for c in 0..self.cols {
            let v = self.base.mul(u, self.get(i, c));
            self.set(i, c, v);
        }
    }

    /// Row `target` becomes `row target − f · row source`.
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, f: &B::Elem) {
        for c in 0..self.cols {
            let v = self.base.sub(self.get(target, c), &self.base.mul(f, self.get(source, c)));
            self.set(target, c, v);
        }
    }

    /// Rows as bracketed, column-aligned lines.
    pub fn render(&self) -> String {
        let cells: Vec<String> = self.entries.iter().map(|e| self.base.render(e)).collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| cells[i * self.cols + j].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for i in 0..self.rows {
            out.push('[');
            for j in 0..self.cols {
                if j > 0 {
                    out.push_str("  ");
                }
                let cell = &cells[i * self.cols + j];
                let pad = widths[j] - cell.chars().count();
                out.push_str(&format!("{}{cell}", " ".repeat(pad)));
            }
            out.push_str("]\n");
        }
        out
    }
}

impl<B: LocalRing> fmt::Display for Matrix<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
