//! Truncated skew power series `S / G_N`.
//!
//! `S = R[[x; σ, δ]]` carries the filtration
//!
//! ```text
//! G_k = Π_{i ≥ 0} J^{k−i} xⁱ      (J^e = R for e ≤ 0)
//! ```
//!
//! and every `G_k` is a two-sided ideal as soon as `σ(Jᵏ) ⊆ Jᵏ` and
//! `δ(Jᵏ) ⊆ Jᵏ⁺¹`. Truncation therefore happens in the filtration, not in
//! the `x`-degree: an element of `S/G_N` is stored as `(c_0, …, c_{N−1})` with
//! `c_i` the canonical representative of its class modulo `J^{N−i}`.
//! Truncating by `x`-degree alone would not give an ideal when `δ ≠ 0`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::poly::{same_ring, MonomialTable, SkewPoly};
use crate::report::CheckReport;
use crate::ring::{RingContext, RingElem};
use crate::sample;
use crate::{Error, Result};

/// The quotient ring `S / G_N` for a fixed coefficient ring and precision.
#[derive(Clone, Debug)]
pub struct SeriesRing {
    ctx: Arc<RingContext>,
    precision: usize,
}

impl PartialEq for SeriesRing {
    fn eq(&self, other: &Self) -> bool {
        self.precision == other.precision && same_ring(&self.ctx, &other.ctx)
    }
}

impl Eq for SeriesRing {}

impl SeriesRing {
    /// Fails unless `N ≥ 1` and σ, δ preserve the radical filtration; without
    /// the latter `G_N` is not an ideal and the quotient does not exist.
    pub fn new(ctx: Arc<RingContext>, precision: usize) -> Result<Self> {
        if precision == 0 {
            return Err(Error::InvalidPrecision(precision));
        }
        if !ctx.preserves_filtration() {
            return Err(Error::IncompatibleStructure(
                "need sigma(J^k) in J^k and delta(J^k) in J^(k+1)",
            ));
        }
        Ok(SeriesRing { ctx, precision })
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    /// Builds the class of `Σ cᵢ xⁱ`; coefficients at `i ≥ N` are dropped.
    pub fn element(&self, coeffs: &[RingElem]) -> TruncatedSeries {
        let n = self.precision;
        let coeffs = (0..n)
            .map(|i| {
                let c = coeffs.get(i).copied().unwrap_or(self.ctx.zero());
                self.ctx.reduce(c, n - i)
            })
            .collect();
        TruncatedSeries {
            ring: self.clone(),
            coeffs,
        }
    }

    pub fn zero(&self) -> TruncatedSeries {
        self.element(&[])
    }

    pub fn one(&self) -> TruncatedSeries {
        self.element(&[self.ctx.one()])
    }

    pub fn constant(&self, a: RingElem) -> TruncatedSeries {
        self.element(&[a])
    }

    pub fn x(&self) -> TruncatedSeries {
        self.element(&[self.ctx.zero(), self.ctx.one()])
    }

    /// Image of a skew polynomial under `T → S → S/G_N`.
    pub fn from_poly(&self, f: &SkewPoly) -> Result<TruncatedSeries> {
        if !same_ring(f.ctx(), &self.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.element(f.coeffs()))
    }

    /// Product of the classes of two arbitrary lifts `Σ aⱼ xʲ` and `Σ bₗ xˡ`
    /// (coefficients past `N` are ignored, as they lie in `G_N`).
    ///
    /// Coefficient `m < N` of the product is
    /// `Σ_{n ≤ m} Σ_{n ≤ j < N} aⱼ · M_{j−n,n}(b_{m−n})`. Terms with `j ≥ N`
    /// would contribute `M_{j−n,n}(·) ∈ J^{j−n} ⊆ J^{N−m}` and vanish.
    pub fn mul_lifts(&self, a: &[RingElem], b: &[RingElem]) -> TruncatedSeries {
        let ctx = &self.ctx;
        let n_prec = self.precision;
        let mut out = vec![ctx.zero(); n_prec];
        for (l, &bl) in b.iter().enumerate().take(n_prec) {
            if bl == ctx.zero() {
                continue;
            }
            let table = MonomialTable::new(ctx, bl, n_prec - 1);
            for (j, &aj) in a.iter().enumerate().take(n_prec) {
                if aj == ctx.zero() {
                    continue;
                }
                for n in 0..=j {
                    let m = n + l;
                    if m >= n_prec {
                        break;
                    }
                    out[m] = ctx.add(out[m], ctx.mul(aj, table.get(j - n, n)));
                }
            }
        }
        self.element(&out)
    }

    /// A uniformly random element of `G_k / G_N`.
    pub(crate) fn random_in_filtration<G: Rng + ?Sized>(&self, rng: &mut G, k: usize) -> TruncatedSeries {
        let coeffs: Vec<RingElem> = (0..self.precision)
            .map(|i| {
                let level = k.saturating_sub(i);
                let choices: Vec<RingElem> = self.ctx.ideal_power_elements(level).collect();
                choices[rng.gen_range(0..choices.len())]
            })
            .collect();
        self.element(&coeffs)
    }

    /// A random element whose filtration degree is drawn roughly uniformly.
    pub(crate) fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> TruncatedSeries {
        let k = rng.gen_range(0..=self.precision);
        self.random_in_filtration(rng, k)
    }
}

/// An element of `S / G_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    ring: SeriesRing,
    coeffs: Vec<RingElem>,
}

impl TruncatedSeries {
    pub fn ring(&self) -> &SeriesRing {
        &self.ring
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ring.ctx
    }

    pub fn precision(&self) -> usize {
        self.ring.precision
    }

    /// Canonical representatives `c_0, …, c_{N−1}`.
    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == self.ring.ctx.zero())
    }

    fn check_ring(&self, other: &TruncatedSeries) -> Result<()> {
        if self.ring.precision != other.ring.precision {
            return Err(Error::PrecisionMismatch {
                left: self.ring.precision,
                right: other.ring.precision,
            });
        }
        if !same_ring(&self.ring.ctx, &other.ring.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_ring(other)?;
        let ctx = &self.ring.ctx;
        let sum: Vec<RingElem> = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| ctx.add(a, b))
            .collect();
        Ok(self.ring.element(&sum))
    }

    pub fn neg(&self) -> TruncatedSeries {
        let ctx = &self.ring.ctx;
        let neg: Vec<RingElem> = self.coeffs.iter().map(|&a| ctx.neg(a)).collect();
        self.ring.element(&neg)
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_ring(other)?;
        Ok(self.ring.mul_lifts(&self.coeffs, &other.coeffs))
    }

    pub fn pow(&self, mut e: u64) -> TruncatedSeries {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            base = base.mul(&base).expect("same ring");
            e >>= 1;
        }
        acc
    }

    /// Largest `k ≤ N` with `self ∈ G_k / G_N`; `N` for the zero class.
    pub fn filtration_degree(&self) -> usize {
        let ctx = &self.ring.ctx;
        let n = self.ring.precision;
        (0..n)
            .map(|i| match ctx.ideal_valuation(self.coeffs[i]) {
                crate::Valuation::Finite(v) => i + v,
                crate::Valuation::Infinite => n,
            })
            .min()
            .unwrap_or(n)
            .min(n)
    }

    /// Image under `S/G_N → S/G_{N'}` for `1 ≤ N' ≤ N`.
    pub fn reduce_precision(&self, precision: usize) -> Result<TruncatedSeries> {
        if precision == 0 || precision > self.ring.precision {
            return Err(Error::InvalidPrecision(precision));
        }
        let ring = SeriesRing {
            ctx: self.ring.ctx.clone(),
            precision,
        };
        Ok(ring.element(&self.coeffs))
    }

    /// Two-sided inverse when the constant term is a unit of `R`.
    ///
    /// Writing `f = c·(1 + n)` with `c` the constant term, `n ∈ G_1`, so
    /// `nᴺ = 0` and `(1 + n)⁻¹ = Σ_{k<N} (−n)ᵏ` is exact.
    pub fn unit_inverse(&self) -> Option<TruncatedSeries> {
        let ctx = &self.ring.ctx;
        let c = self.coeffs[0];
        let c_inv = self.ring.constant(ctx.unit_inverse(c)?);
        let rest = self.sub(&self.ring.constant(c)).expect("same ring");
        let minus_n = c_inv.mul(&rest).expect("same ring").neg();
        let mut geometric = self.ring.one();
        let mut power = self.ring.one();
        for _ in 1..self.ring.precision {
            power = power.mul(&minus_n).expect("same ring");
            geometric = geometric.add(&power).expect("same ring");
        }
        let inv = geometric.mul(&c_inv).expect("same ring");
        debug_assert!(self.mul(&inv).unwrap() == self.ring.one());
        Some(inv)
    }

    pub fn render(&self) -> String {
        let ctx = &self.ring.ctx;
        let n = self.ring.precision;
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == ctx.zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let value = if ctx.is_compound(c) {
                format!("({})", ctx.render(c))
            } else {
                ctx.render(c)
            };
            out.push_str(&value);
            out.push_str(&format!(" (mod {})", ctx.render_ideal_generator(n - i)));
            match i {
                0 => {}
                1 => out.push_str("*x"),
                i => out.push_str(&format!("*x^{i}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str(&format!(" [N={n}]"));
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Associativity and both distributive laws of `S/G_N` on seeded triples.
pub fn series_law_check(ring: &SeriesRing, samples: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("series-assoc");
    let mut rng = sample::rng(seed);
    for _ in 0..samples {
        let f = ring.random_element(&mut rng);
        let g = ring.random_element(&mut rng);
        let h = ring.random_element(&mut rng);
        report.trials += 1;
        let assoc_l = f.mul(&g).and_then(|fg| fg.mul(&h)).unwrap();
        let assoc_r = g.mul(&h).and_then(|gh| f.mul(&gh)).unwrap();
        let witness = || format!("f={f}, g={g}, h={h}");
        if assoc_l != assoc_r {
            report.fail("mul-assoc", witness());
            break;
        }
        let left = f.mul(&g.add(&h).unwrap()).unwrap();
        if left != f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap() {
            report.fail("left-distributivity", witness());
            break;
        }
        let right = f.add(&g).unwrap().mul(&h).unwrap();
        if right != f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap() {
            report.fail("right-distributivity", witness());
            break;
        }
    }
    report
}

/// Samples `s ∈ S/G_N` and `g ∈ G_k` and checks that `s·g` and `g·s` stay in
/// `G_k`; also samples `g ∈ G_k`, `h ∈ G_l` and checks `g·h ∈ G_{k+l}`.
pub fn ideal_closure_check(ring: &SeriesRing, k: usize, samples: usize, seed: u64) -> CheckReport {
    let n = ring.precision();
    assert!(k <= n, "k must not exceed the precision");
    let mut report = CheckReport::new("ideal-closure");
    let mut rng = sample::rng(seed);
    for _ in 0..samples {
        let s = ring.random_element(&mut rng);
        let g = ring.random_in_filtration(&mut rng, k);
        report.trials += 1;
        let left = s.mul(&g).unwrap();
        let right = g.mul(&s).unwrap();
        if left.filtration_degree() < k {
            report.fail("left-ideal", format!("k={k}, s={s}, g={g}"));
            return report;
        }
        if right.filtration_degree() < k {
            report.fail("right-ideal", format!("k={k}, s={s}, g={g}"));
            return report;
        }

        let l = rng.gen_range(0..=n);
        let g2 = ring.random_in_filtration(&mut rng, l);
        if g.mul(&g2).unwrap().filtration_degree() < (k + l).min(n) {
            report.fail("submultiplicative", format!("k={k}, l={l}, g={g}, h={g2}"));
            return report;
        }
    }
    report
}

/// Exhaustive check of `x·G_k ⊆ G_{k+1}` over the generators `r·xⁱ`
/// (`r ∈ J^{k−i}`) of `G_k / G_N`, together with the coefficient claims behind
/// it: `δ(r) ∈ J^{k−i+1}` and `σ(r) ∈ J^{k−i}`.
pub fn x_multiplication_check(ring: &SeriesRing, k: usize) -> CheckReport {
    let ctx = ring.ctx();
    let n = ring.precision();
    let mut report = CheckReport::new("x-multiplication");
    report.exhaustive = true;
    let x = ring.x();
    for i in 0..n {
        let level = k.saturating_sub(i);
        for r in ctx.ideal_power_elements(level) {
            report.trials += 1;
            let mut coeffs = vec![ctx.zero(); i + 1];
            coeffs[i] = r;
            let g = ring.element(&coeffs);
            let witness = || format!("k={k}, i={i}, r={}", ctx.render(r));
            if !ctx.in_ideal_power(ctx.delta(r), level + 1) {
                report.fail("delta-coefficient", witness());
                return report;
            }
            if !ctx.in_ideal_power(ctx.sigma(r), level) {
                report.fail("sigma-coefficient", witness());
                return report;
            }
            if x.mul(&g).unwrap().filtration_degree() < (k + 1).min(n) {
                report.fail("x-left-multiplication", witness());
                return report;
            }
        }
    }
    report
}
