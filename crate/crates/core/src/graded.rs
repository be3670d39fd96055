//! Principal symbols and the associated graded ring of `S` under `{G_k}`.
//!
//! As graded groups, `G_k / G_{k+1} ≅ ⊕_{i ≤ k} (J^{k−i}/J^{k−i+1}) x̄ⁱ`, so a
//! graded element is a finite map `(layer, xdeg) ↦ class in J^layer/J^{layer+1}`.
//!
//! Two products are offered:
//!
//! * [`GradedElem::mul`]: the twisted rule `(a x̄ˡ)(b x̄ᵐ) = a·σ̄ˡ(b) x̄^{l+m}` of
//!   `Gr_J(R)[x̄; σ̄]`.
//! * [`GradedElem::mul_induced`]: the product `S` actually induces on its
//!   graded ring. δ raises the radical layer by exactly one while lowering the
//!   `x`-degree by one, so its terms survive in the same total degree:
//!   `x̄ˡ·b̄ = Σ_n M̄_{l−n,n}(b̄) x̄ⁿ`. The two agree exactly when
//!   `δ(Jᵏ) ⊆ J^{k+2}` for all `k`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::{render_term, same_ring, MonomialTable};
use crate::report::CheckReport;
use crate::ring::{RingContext, RingElem};
use crate::sample;
use crate::series::{SeriesRing, TruncatedSeries};
use crate::{Error, Result};

/// A sum of homogeneous components `ā x̄ˡ` with `ā ∈ J^i/J^{i+1}`, keyed by
/// `(i, l)`. Representatives are reduced modulo `J^{i+1}` and zero
/// components are dropped.
#[derive(Clone, Debug)]
pub struct GradedElem {
    ctx: Arc<RingContext>,
    components: BTreeMap<(usize, usize), RingElem>,
}

impl PartialEq for GradedElem {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ctx, &other.ctx) && self.components == other.components
    }
}

impl Eq for GradedElem {}

impl GradedElem {
    /// Builds an element from `((layer, xdeg), representative)` triples;
    /// repeated keys are summed. Each representative must lie in `J^layer`.
    pub fn new(
        ctx: Arc<RingContext>,
        components: impl IntoIterator<Item = ((usize, usize), RingElem)>,
    ) -> Result<Self> {
        let mut out = GradedElem {
            ctx,
            components: BTreeMap::new(),
        };
        for ((layer, xdeg), a) in components {
            if !out.ctx.in_ideal_power(a, layer) {
                return Err(Error::InvalidGradedComponent { layer, xdeg });
            }
            out.accumulate(layer, xdeg, a);
        }
        out.normalize();
        Ok(out)
    }

    pub fn zero(ctx: Arc<RingContext>) -> Self {
        GradedElem {
            ctx,
            components: BTreeMap::new(),
        }
    }

    pub fn one(ctx: Arc<RingContext>) -> Self {
        let one = ctx.one();
        Self::new(ctx, [((0, 0), one)]).expect("1 lies in layer 0")
    }

    fn accumulate(&mut self, layer: usize, xdeg: usize, a: RingElem) {
        let zero = self.ctx.zero();
        let slot = self.components.entry((layer, xdeg)).or_insert(zero);
        *slot = self.ctx.add(*slot, a);
    }

    fn normalize(&mut self) {
        let ctx = self.ctx.clone();
        self.components = core::mem::take(&mut self.components)
            .into_iter()
            .map(|((layer, xdeg), a)| ((layer, xdeg), ctx.reduce(a, layer + 1)))
            .filter(|&(_, a)| a != ctx.zero())
            .collect();
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Components as `((layer, xdeg), representative)`, ordered by key.
    pub fn components(&self) -> impl Iterator<Item = ((usize, usize), RingElem)> + '_ {
        self.components.iter().map(|(&k, &a)| (k, a))
    }

    pub fn component(&self, layer: usize, xdeg: usize) -> RingElem {
        self.components
            .get(&(layer, xdeg))
            .copied()
            .unwrap_or(self.ctx.zero())
    }

    /// Total degrees `layer + xdeg` present, ascending and deduplicated.
    pub fn total_degrees(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.components.keys().map(|&(i, l)| i + l).collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    fn check_ring(&self, other: &GradedElem) -> Result<()> {
        if same_ring(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &GradedElem) -> Result<GradedElem> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (&(layer, xdeg), &a) in &other.components {
            out.accumulate(layer, xdeg, a);
        }
        out.normalize();
        Ok(out)
    }

    /// Product in `Gr_J(R)[x̄; σ̄]`.
    pub fn mul(&self, other: &GradedElem) -> Result<GradedElem> {
        self.check_ring(other)?;
        let ctx = &self.ctx;
        let mut out = GradedElem::zero(ctx.clone());
        for (&(i, l), &a) in &self.components {
            for (&(j, m), &b) in &other.components {
                out.accumulate(i + j, l + m, ctx.mul(a, ctx.sigma_pow(b, l)));
            }
        }
        out.normalize();
        Ok(out)
    }

    /// Product induced by `S` on `⊕ G_k/G_{k+1}`, keeping the δ̄ terms.
    pub fn mul_induced(&self, other: &GradedElem) -> Result<GradedElem> {
        self.check_ring(other)?;
        let ctx = &self.ctx;
        let mut out = GradedElem::zero(ctx.clone());
        for (&(i, l), &a) in &self.components {
            for (&(j, m), &b) in &other.components {
                let table = MonomialTable::new(ctx, b, l);
                for n in 0..=l {
                    // l−n letters δ push the layer up by l−n
                    let term = ctx.mul(a, table.get(l - n, n));
                    out.accumulate(i + j + (l - n), n + m, term);
                }
            }
        }
        out.normalize();
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (&(layer, xdeg), &a) in &self.components {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format!("[{}]@{layer}", render_term(&self.ctx, a, xdeg)));
        }
        out
    }
}

impl fmt::Display for GradedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl TruncatedSeries {
    /// Image of `self` in `G_k / G_{k+1}`, `k` the filtration degree.
    ///
    /// Emits `(k − i, i)` with representative `cᵢ mod J^{k−i+1}` for every `i`
    /// whose coefficient sits exactly on the `G_k` boundary.
    pub fn principal_symbol(&self) -> Result<GradedElem> {
        if self.is_zero() {
            return Err(Error::ZeroSymbol);
        }
        let ctx = self.ctx();
        let k = self.filtration_degree();
        let mut components = Vec::new();
        for (i, &c) in self.coeffs().iter().enumerate().take(k + 1) {
            if ctx.ideal_valuation(c) == crate::Valuation::Finite(k - i) {
                components.push(((k - i, i), c));
            }
        }
        GradedElem::new(ctx.clone(), components)
    }
}

/// Which graded product a symbol check compares against.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GradedProduct {
    /// `Gr_J(R)[x̄; σ̄]`.
    Twisted,
    /// The product induced by `S`, δ̄ terms included.
    Induced,
}

/// Samples pairs `f, g ∈ S/G_N` and compares the symbol of `f·g` with the
/// graded product of the symbols.
///
/// When `deg(fg) = deg f + deg g` the two must be equal; when the degree
/// jumps, the product of the symbols must vanish. Pairs with
/// `deg f + deg g ≥ N` cannot be judged in the quotient and are skipped.
pub fn graded_symbol_check(
    ring: &SeriesRing,
    product: GradedProduct,
    samples: usize,
    seed: u64,
) -> CheckReport {
    let mut report = CheckReport::new(match product {
        GradedProduct::Twisted => "graded-iso",
        GradedProduct::Induced => "graded-induced",
    });
    let n = ring.precision();
    let mut rng = sample::rng(seed);
    let mut judged = 0;
    // Draw until `samples` pairs were judged; the attempt cap only guards
    // against precisions where almost every pair overflows.
    let mut attempts = 0;
    while judged < samples && attempts < samples * 50 {
        attempts += 1;
        let f = ring.random_element(&mut rng);
        let g = ring.random_element(&mut rng);
        if f.is_zero() || g.is_zero() {
            continue;
        }
        report.trials += 1;
        let expected_deg = f.filtration_degree() + g.filtration_degree();
        if expected_deg >= n {
            report.skipped += 1;
            continue;
        }
        judged += 1;
        let fg = f.mul(&g).unwrap();
        let (sf, sg) = (f.principal_symbol().unwrap(), g.principal_symbol().unwrap());
        let graded = match product {
            GradedProduct::Twisted => sf.mul(&sg),
            GradedProduct::Induced => sf.mul_induced(&sg),
        }
        .unwrap();
        let witness = || format!("f={f}, g={g}, symbols ({sf}) * ({sg}) = {graded}");
        let actual_deg = fg.filtration_degree();
        if actual_deg < expected_deg {
            report.fail("filtration", witness());
            return report;
        }
        if actual_deg == expected_deg {
            report.tally("exact-degree");
            let symbol = fg.principal_symbol().unwrap();
            if symbol != graded {
                report.fail(
                    "symbol-multiplicative",
                    format!("{}, symbol(fg)={symbol}", witness()),
                );
                return report;
            }
        } else {
            report.tally("degree-jump");
            if !graded.is_zero() {
                report.fail("symbol-cancellation", witness());
                return report;
            }
        }
    }
    report
}

/// [`graded_symbol_check`] against `Gr_J(R)[x̄; σ̄]`.
pub fn graded_iso_check(ring: &SeriesRing, samples: usize, seed: u64) -> CheckReport {
    graded_symbol_check(ring, GradedProduct::Twisted, samples, seed)
}
