//! Projective modules as idempotent matrices, and their free ranks.
//!
//! Over a local base every finitely generated projective module is free, so
//! an idempotent `e` is conjugate to `diag(1, …, 1, 0, …, 0)`. The functions
//! here produce that conjugation explicitly together with its inverse, so each
//! answer can be re-checked by plain matrix multiplication.
//!
//! The rank `r` is the class `r·[base]` of `image(e)` in `K₀`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::matrix::{LocalRing, Matrix};
use crate::report::CheckReport;
use crate::ring::{RingContext, RingElem};
use crate::sample;
use crate::series::SeriesRing;
use crate::{Error, Result};

/// A square matrix `e` with `e² = e`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentMatrix<B: LocalRing>(Matrix<B>);

impl<B: LocalRing> IdempotentMatrix<B> {
    pub fn new(m: Matrix<B>) -> Result<Self> {
        if m.is_idempotent() {
            Ok(IdempotentMatrix(m))
        } else {
            Err(Error::NotIdempotent)
        }
    }

    pub fn matrix(&self) -> &Matrix<B> {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    /// `self ⊕ other`, again idempotent.
    pub fn direct_sum(&self, other: &Self) -> Self {
        IdempotentMatrix(self.0.direct_sum(&other.0))
    }

    /// `self ⊕ 0_k`.
    pub fn pad_zeros(&self, k: usize) -> Self {
        IdempotentMatrix(self.0.direct_sum(&Matrix::zeros(self.0.base().clone(), k, k)))
    }

    /// `self ⊕ I_k`.
    pub fn pad_identity(&self, k: usize) -> Self {
        IdempotentMatrix(self.0.direct_sum(&Matrix::identity(self.0.base().clone(), k)))
    }
}

/// Free rank of `image(e)` with an explicit conjugation
/// `U · e · U⁻¹ = diag(1^r, 0^{n−r})`.
#[derive(Clone, Debug, PartialEq)]
pub struct RankWitness<B: LocalRing> {
    pub rank: usize,
    pub conjugator: Matrix<B>,
    pub conjugator_inverse: Matrix<B>,
}

impl<B: LocalRing> RankWitness<B> {
    /// The target `diag(1^r, 0^{n−r})`.
    pub fn normal_form(&self) -> Matrix<B> {
        let n = self.conjugator.rows();
        let ones: Vec<bool> = (0..n).map(|i| i < self.rank).collect();
        Matrix::diagonal01(self.conjugator.base().clone(), &ones)
    }

    /// Re-checks `U·U⁻¹ = U⁻¹·U = I` and `U·e·U⁻¹ = diag(1^r, 0)`.
    pub fn verify(&self, e: &IdempotentMatrix<B>) -> bool {
        let u = &self.conjugator;
        let v = &self.conjugator_inverse;
        let inverse_ok = u.mul(v).map_or(false, |p| p.is_identity())
            && v.mul(u).map_or(false, |p| p.is_identity());
        let conj = u.mul(e.matrix()).and_then(|ue| ue.mul(v));
        inverse_ok && conj.map_or(false, |c| c == self.normal_form())
    }
}

/// Pivot columns of `m` under unit-pivot row reduction.
///
/// A column is a pivot column exactly when its image modulo the maximal
/// ideal is independent of the earlier columns' images.
fn unit_pivot_columns<B: LocalRing>(m: &Matrix<B>) -> Vec<usize> {
    let base = m.base();
    let mut work = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..work.cols() {
        if row == work.rows() {
            break;
        }
        let Some((r, inv)) = (row..work.rows()).find_map(|r| base.unit_inverse(work.get(r, col)).map(|u| (r, u)))
        else {
            continue;
        };
        work.swap_rows(row, r);
        work.scale_row(row, &inv);
        for below in row + 1..work.rows() {
            let f = work.get(below, col).clone();
            if !base.is_zero(&f) {
                work.add_row_multiple(below, row, &f);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Free rank of `image(e)` with a verified conjugation certificate.
///
/// The columns of `e` span `image(e)` and those of `1 − e` span `image(1 − e)`;
/// together they span the whole free module. Choosing columns of `[e | 1 − e]`
/// that are independent modulo the maximal ideal yields a basis
/// `B = [e-columns | (1−e)-columns]` with `e·B = B·diag(1^r, 0)`, so `U = B⁻¹`.
pub fn idempotent_rank<B: LocalRing>(e: &IdempotentMatrix<B>) -> Result<RankWitness<B>> {
    let base = e.matrix().base().clone();
    if !base.is_local() {
        return Err(Error::UnsupportedBase);
    }
    let n = e.size();
    let complement = Matrix::identity(base.clone(), n).sub(e.matrix())?;
    let both = e.matrix().hconcat(&complement)?;
    let pivots = unit_pivot_columns(&both);
    if pivots.len() != n {
        return Err(Error::UnsupportedBase);
    }
    let rank = pivots.iter().filter(|&&c| c < n).count();
    let rows: Vec<usize> = (0..n).collect();
    let basis = both.select(&rows, &pivots);
    let conjugator = basis.inverse().ok_or(Error::UnsupportedBase)?;
    let witness = RankWitness {
        rank,
        conjugator,
        conjugator_inverse: basis,
    };
    debug_assert!(witness.verify(e));
    Ok(witness)
}

/// An explicit stable isomorphism `W·(e1 ⊕ I_t)·W⁻¹ = e2 ⊕ I_t`, after both
/// sides are padded with zero blocks to a common size.
#[derive(Clone, Debug, PartialEq)]
pub struct StableIso<B: LocalRing> {
    pub t: usize,
    pub conjugator: Matrix<B>,
    pub conjugator_inverse: Matrix<B>,
}

impl<B: LocalRing> StableIso<B> {
    pub fn verify(&self, e1: &IdempotentMatrix<B>, e2: &IdempotentMatrix<B>) -> bool {
        let (a, b) = padded_pair(e1, e2);
        let (a, b) = (a.pad_identity(self.t), b.pad_identity(self.t));
        let w = &self.conjugator;
        let v = &self.conjugator_inverse;
        w.mul(v).map_or(false, |p| p.is_identity())
            && w.mul(a.matrix())
                .and_then(|wa| wa.mul(v))
                .map_or(false, |c| c == *b.matrix())
    }
}

fn padded_pair<B: LocalRing>(
    e1: &IdempotentMatrix<B>,
    e2: &IdempotentMatrix<B>,
) -> (IdempotentMatrix<B>, IdempotentMatrix<B>) {
    let n = e1.size().max(e2.size());
    (e1.pad_zeros(n - e1.size()), e2.pad_zeros(n - e2.size()))
}

/// Least `t ≤ t_max` with `e1 ⊕ I_t` conjugate to `e2 ⊕ I_t`, with the
/// conjugator. `None` if no such `t` exists in range.
pub fn stable_iso_witness<B: LocalRing>(
    e1: &IdempotentMatrix<B>,
    e2: &IdempotentMatrix<B>,
    t_max: usize,
) -> Result<Option<StableIso<B>>> {
    let (a, b) = padded_pair(e1, e2);
    for t in 0..=t_max {
        let (at, bt) = (a.pad_identity(t), b.pad_identity(t));
        let wa = idempotent_rank(&at)?;
        let wb = idempotent_rank(&bt)?;
        if wa.rank != wb.rank {
            continue;
        }
        let iso = StableIso {
            t,
            conjugator: wb.conjugator_inverse.mul(&wa.conjugator)?,
            conjugator_inverse: wa.conjugator_inverse.mul(&wb.conjugator)?,
        };
        debug_assert!(iso.verify(e1, e2));
        return Ok(Some(iso));
    }
    Ok(None)
}

/// Mutually inverse maps `image(e) ⊕ base^s ≅ base^{r+s}`.
///
/// `alpha : base^{r+s} → base^{n+s}` is injective with image
/// `image(e ⊕ I_s)`, and `beta : base^{n+s} → base^{r+s}` satisfies
/// `beta·alpha = I_{r+s}` and `alpha·beta = e ⊕ I_s`.
#[derive(Clone, Debug, PartialEq)]
pub struct StablyFree<B: LocalRing> {
    pub rank: usize,
    pub s: usize,
    pub free_rank: usize,
    pub alpha: Matrix<B>,
    pub beta: Matrix<B>,
}

impl<B: LocalRing> StablyFree<B> {
    pub fn verify(&self, e: &IdempotentMatrix<B>) -> bool {
        let left = self.beta.mul(&self.alpha);
        let right = self.alpha.mul(&self.beta);
        left.map_or(false, |m| m.is_identity() && m.rows() == self.free_rank)
            && right.map_or(false, |m| m == *e.pad_identity(self.s).matrix())
    }
}

pub fn stably_free_witness<B: LocalRing>(e: &IdempotentMatrix<B>, s: usize) -> Result<StablyFree<B>> {
    let w = idempotent_rank(e)?;
    let n = e.size();
    let all: Vec<usize> = (0..n).collect();
    let first: Vec<usize> = (0..w.rank).collect();
    let identity = Matrix::identity(e.matrix().base().clone(), s);
    let alpha = w.conjugator_inverse.select(&all, &first).direct_sum(&identity);
    let beta = w.conjugator.select(&first, &all).direct_sum(&identity);
    let witness = StablyFree {
        rank: w.rank,
        s,
        free_rank: w.rank + s,
        alpha,
        beta,
    };
    debug_assert!(witness.verify(e));
    Ok(witness)
}

/// An invertible matrix whose first row is a given unimodular row.
#[derive(Clone, Debug, PartialEq)]
pub struct RowCompletion<B: LocalRing> {
    pub matrix: Matrix<B>,
    pub inverse: Matrix<B>,
}

/// Completes a unimodular row to an invertible matrix.
///
/// Over a local ring a row is unimodular iff some entry is a unit. With the
/// first unit at position `j`, the remaining rows are the standard basis
/// vectors `e_i`, `i ≠ j`; the determinant is `±a_j`.
pub fn unimodular_complete<B: LocalRing>(base: &B, row: &[B::Elem]) -> Result<RowCompletion<B>> {
    if !base.is_local() {
        return Err(Error::UnsupportedBase);
    }
    if !row.iter().all(|a| base.owns(a)) {
        return Err(Error::ContextMismatch);
    }
    let j = row.iter().position(|a| base.is_unit(a)).ok_or(Error::NotUnimodular)?;
    let n = row.len();
    let others: Vec<usize> = (0..n).filter(|&i| i != j).collect();
    let (z, o) = (base.zero(), base.one());
    let matrix = Matrix::from_fn(base.clone(), n, n, |r, c| {
        if r == 0 {
            row[c].clone()
        } else if c == others[r - 1] {
            o.clone()
        } else {
            z.clone()
        }
    });
    let inverse = matrix.inverse().ok_or(Error::NotUnimodular)?;
    Ok(RowCompletion { matrix, inverse })
}

/// A random invertible matrix `P·L·D·Uₜ` (permutation, unit lower
/// triangular, unit diagonal, unit upper triangular) with its inverse.
pub(crate) fn random_invertible<B: LocalRing, G: Rng + ?Sized>(
    base: &B,
    n: usize,
    rng: &mut G,
) -> (Matrix<B>, Matrix<B>) {
    let random_unit = |rng: &mut G| loop {
        let a = base.random_element(rng);
        if base.is_unit(&a) {
            return a;
        }
    };
    let (z, o) = (base.zero(), base.one());
    let mut lower = Matrix::identity(base.clone(), n);
    let mut upper = Matrix::identity(base.clone(), n);
    for i in 0..n {
        for j in 0..n {
            if i > j {
                lower.set(i, j, base.random_element(rng));
            } else if i < j {
                upper.set(i, j, base.random_element(rng));
            } else {
                upper.set(i, j, random_unit(rng));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let p = Matrix::from_fn(base.clone(), n, n, |i, j| if perm[i] == j { o.clone() } else { z.clone() });
    let v = p.mul(&lower).and_then(|m| m.mul(&upper)).expect("square factors");
    let v_inv = v.inverse().expect("product of invertible factors");
    (v, v_inv)
}

/// A random idempotent of size `n` and known rank: `V·diag(1^r,0)·V⁻¹` with the
/// ones scattered at random positions.
pub(crate) fn random_idempotent<B: LocalRing, G: Rng + ?Sized>(
    base: &B,
    n: usize,
    rng: &mut G,
) -> (IdempotentMatrix<B>, usize) {
    let ones: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let rank = ones.iter().filter(|&&b| b).count();
    let (v, v_inv) = random_invertible(base, n, rng);
    let e = v
        .mul(&Matrix::diagonal01(base.clone(), &ones))
        .and_then(|m| m.mul(&v_inv))
        .expect("square factors");
    (IdempotentMatrix(e), rank)
}

fn describe<B: LocalRing>(m: &Matrix<B>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = m.row(i).iter().map(|a| m.base().render(a)).collect();
            cells.join(", ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

/// Certificate, conjugation invariance and additivity of the rank on seeded
/// idempotents of size up to `size_limit`.
pub fn k0_rank_check<B: LocalRing>(base: &B, size_limit: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("k0-rank");
    let mut rng = sample::rng(seed);
    let size_limit = size_limit.max(1);
    for _ in 0..samples {
        report.trials += 1;
        let n = rng.gen_range(1..=size_limit);
        let (e, rank) = random_idempotent(base, n, &mut rng);
        let w = idempotent_rank(&e)?;
        if !w.verify(&e) {
            report.fail("certificate", describe(e.matrix()));
            break;
        }
        if w.rank != rank {
            report.fail(
                "conjugation-invariance",
                format!("e={} has rank {} but was built with rank {rank}", describe(e.matrix()), w.rank),
            );
            break;
        }
        let (v, v_inv) = random_invertible(base, n, &mut rng);
        let conj = IdempotentMatrix(v.mul(e.matrix())?.mul(&v_inv)?);
        if idempotent_rank(&conj)?.rank != w.rank {
            report.fail(
                "conjugation-invariance",
                format!("e={}, V={}", describe(e.matrix()), describe(&v)),
            );
            break;
        }
        let m = rng.gen_range(1..=size_limit);
        let (f, _) = random_idempotent(base, m, &mut rng);
        let wf = idempotent_rank(&f)?;
        let sum = e.direct_sum(&f);
        let ws = idempotent_rank(&sum)?;
        if ws.rank != w.rank + wf.rank || !ws.verify(&sum) {
            report.fail(
                "additivity",
                format!("e1={}, e2={}", describe(e.matrix()), describe(f.matrix())),
            );
            break;
        }
        report.tally(rank_tally(w.rank));
    }
    Ok(report)
}

fn rank_tally(rank: usize) -> &'static str {
    match rank {
        0 => "rank-0",
        1 => "rank-1",
        2 => "rank-2",
        3 => "rank-3",
        _ => "rank-4+",
    }
}

/// Rank certificates over `S/G_N` for idempotents built by conjugating 0/1
/// diagonals, plus agreement of ranks of constant-entry idempotents computed
/// over `R` and over `S/G_N`.
pub fn serre_transfer_check(
    ctx: Arc<RingContext>,
    precision: usize,
    size_limit: usize,
    samples: usize,
    seed: u64,
) -> Result<CheckReport> {
    let series = SeriesRing::new(ctx.clone(), precision)?;
    let mut report = CheckReport::new("serre-transfer");
    let mut rng = sample::rng(seed);
    let size_limit = size_limit.max(1);
    for _ in 0..samples {
        report.trials += 1;
        let n = rng.gen_range(1..=size_limit);
        let (e, rank) = random_idempotent(&series, n, &mut rng);
        let w = idempotent_rank(&e)?;
        if !w.verify(&e) {
            report.fail("certificate", describe(e.matrix()));
            break;
        }
        if w.rank != rank {
            report.fail(
                "free-summand",
                format!("e={} has rank {} but was built with rank {rank}", describe(e.matrix()), w.rank),
            );
            break;
        }
        report.tally(rank_tally(w.rank));

        let (c, _) = random_idempotent(&ctx, n, &mut rng);
        let lifted = Matrix::from_fn(series.clone(), n, n, |i, j| series.constant(*c.matrix().get(i, j)));
        let lifted = IdempotentMatrix::new(lifted)?;
        let over_r = idempotent_rank(&c)?;
        let over_s = idempotent_rank(&lifted)?;
        if over_r.rank != over_s.rank || !over_s.verify(&lifted) {
            report.fail(
                "constant-transfer",
                format!(
                    "e={} has rank {} over R and {} over S/G_{precision}",
                    describe(c.matrix()),
                    over_r.rank,
                    over_s.rank
                ),
            );
            break;
        }
    }
    Ok(report)
}

/// Every idempotent `n × n` matrix over `R`, by brute force. Refuses when
/// `|R|^{n²}` exceeds `limit`.
pub fn enumerate_idempotents(
    ctx: &Arc<RingContext>,
    n: usize,
    limit: usize,
) -> Result<Vec<IdempotentMatrix<Arc<RingContext>>>> {
    let q = ctx.size();
    let cells = n * n;
    let total = (0..cells).try_fold(1usize, |acc, _| acc.checked_mul(q).filter(|&t| t <= limit));
    let total = total.ok_or(Error::CarrierTooLarge {
        size: (q as u64).saturating_pow(cells as u32),
        limit: limit as u64,
    })?;
    let mut out = Vec::new();
    let mut digits = vec![0usize; cells];
    for _ in 0..total {
        let entries = digits.iter().map(|&d| RingElem::from_index(d)).collect();
        let m = Matrix::new(ctx.clone(), n, n, entries)?;
        if m.is_idempotent() {
            out.push(IdempotentMatrix(m));
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z8() -> Arc<RingContext> {
        Arc::new(RingContext::from_preset("zmod:2^3").unwrap())
    }

    fn int(base: &Arc<RingContext>, rows: &[&[i64]]) -> Matrix<Arc<RingContext>> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| base.from_integer(v)).collect())
            .collect();
        Matrix::from_rows(base.clone(), rows).unwrap()
    }

    #[test]
    fn rank_of_small_idempotents() {
        let base = z8();
        for (rows, rank) in [
            (&[&[1i64, 2][..], &[0, 0]][..], 1),
            (&[&[1, 0], &[0, 0]], 1),
            (&[&[0, 0], &[0, 0]], 0),
            (&[&[1, 0], &[0, 1]], 2),
            (&[&[0, 0], &[3, 1]], 1),
        ] {
            let e = IdempotentMatrix::new(int(&base, rows)).unwrap();
            let w = idempotent_rank(&e).unwrap();
            assert_eq!(w.rank, rank);
            assert!(w.verify(&e));
        }
        assert_eq!(
            IdempotentMatrix::new(int(&base, &[&[1, 1], &[0, 1]])),
            Err(Error::NotIdempotent)
        );
    }

    #[test]
    fn idempotent_without_unit_on_the_diagonal() {
        // I - 3J with J the all-ones matrix: every diagonal entry is 6.
        let base = z8();
        let e = IdempotentMatrix::new(int(&base, &[&[6, 5, 5], &[5, 6, 5], &[5, 5, 6]])).unwrap();
        let w = idempotent_rank(&e).unwrap();
        assert_eq!(w.rank, 2);
        assert!(w.verify(&e));
    }

    #[test]
    fn stable_iso_examples() {
        let base = z8();
        let e1 = IdempotentMatrix::new(int(&base, &[&[1, 2], &[0, 0]])).unwrap();
        let e2 = IdempotentMatrix::new(int(&base, &[&[1, 0], &[0, 0]])).unwrap();
        let iso = stable_iso_witness(&e1, &e2, 3).unwrap().unwrap();
        assert_eq!(iso.t, 0);
        assert!(iso.verify(&e1, &e2));

        let one = IdempotentMatrix::new(int(&base, &[&[1]])).unwrap();
        let zero = IdempotentMatrix::new(int(&base, &[&[0]])).unwrap();
        assert!(stable_iso_witness(&one, &zero, 5).unwrap().is_none());
    }

    #[test]
    fn stably_free_example() {
        let base = z8();
        let e = IdempotentMatrix::new(int(&base, &[&[1, 2], &[0, 0]])).unwrap();
        let w = stably_free_witness(&e, 1).unwrap();
        assert_eq!((w.rank, w.s, w.free_rank), (1, 1, 2));
        assert_eq!((w.alpha.rows(), w.alpha.cols()), (3, 2));
        assert_eq!((w.beta.rows(), w.beta.cols()), (2, 3));
        assert!(w.verify(&e));
    }

    #[test]
    fn row_completion() {
        let base = z8();
        let row = [base.from_integer(2), base.from_integer(3)];
        let c = unimodular_complete(&base, &row).unwrap();
        assert_eq!(c.matrix.row(0), &row);
        assert!(c.matrix.mul(&c.inverse).unwrap().is_identity());
        let bad = [base.from_integer(2), base.from_integer(4)];
        assert_eq!(unimodular_complete(&base, &bad), Err(Error::NotUnimodular));
    }

    #[test]
    fn series_conjugated_diagonal() {
        let series = SeriesRing::new(z8(), 3).unwrap();
        let two_x = series.constant(series.ctx().from_integer(2)).mul(&series.x()).unwrap();
        let mut v = Matrix::identity(series.clone(), 2);
        v.set(0, 1, two_x);
        let v_inv = v.inverse().unwrap();
        let d = Matrix::diagonal01(series.clone(), &[true, false]);
        let e = IdempotentMatrix::new(v.mul(&d).unwrap().mul(&v_inv).unwrap()).unwrap();
        let w = idempotent_rank(&e).unwrap();
        assert_eq!(w.rank, 1);
        assert!(w.verify(&e));
    }

    #[test]
    fn z4_two_by_two_count() {
        let z4 = Arc::new(RingContext::from_preset("zmod:2^2").unwrap());
        let all = enumerate_idempotents(&z4, 2, 1 << 16).unwrap();
        let mut by_rank = [0usize; 3];
        for e in &all {
            let w = idempotent_rank(e).unwrap();
            assert!(w.verify(e));
            by_rank[w.rank] += 1;
        }
        assert_eq!(by_rank, [1, 24, 1]);
    }

    #[test]
    fn seeded_suites_pass() {
        let ctx = Arc::new(RingContext::from_preset("truncpoly:3:3:c=2").unwrap());
        assert!(k0_rank_check(&ctx, 3, 30, 7).unwrap().passed());
        let series = SeriesRing::new(ctx.clone(), 3).unwrap();
        assert!(k0_rank_check(&series, 3, 10, 7).unwrap().passed());
        let report = serre_transfer_check(ctx, 3, 3, 10, 11).unwrap();
        assert!(report.passed(), "{report}");
    }
}
