//! Skew polynomials `T = R[x; σ, δ]` with the commutation rule `x·r = σ(r)·x + δ(r)`.
//!
//! Elements are kept in left normal form `Σ aᵢ xⁱ`. The product is computed
//! from the closed formula
//!
//! ```text
//! (Σ aⱼ xʲ)(Σ bₗ xˡ) = Σₘ ( Σ_{n ≤ m} Σ_{j ≥ n} aⱼ · M_{j−n,n}(δ,σ)(b_{m−n}) ) xᵐ
//! ```
//!
//! where `M_{k,l}(δ,σ)` is the sum of all words in δ and σ with `k` factors δ
//! and `l` factors σ. A second, independent product that only uses the
//! single-step rule is kept alongside for cross-validation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::report::CheckReport;
use crate::ring::{RingContext, RingElem};
use crate::sample;
use crate::{Error, Result};

/// Degree of a skew polynomial; the zero polynomial has degree `MinusInfinity`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn plus(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::MinusInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

pub(crate) fn same_ring(a: &Arc<RingContext>, b: &Arc<RingContext>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Values `M_{k,n}(δ,σ)(a)` for all `k + n ≤ bound`, built by the recursion
/// `M_{k,n} = δ∘M_{k−1,n} + σ∘M_{k,n−1}`, `M_{0,0} = id`.
pub(crate) struct MonomialTable {
    bound: usize,
    values: Vec<RingElem>,
}

impl MonomialTable {
    pub(crate) fn new(ctx: &RingContext, a: RingElem, bound: usize) -> Self {
        let width = bound + 1;
        let mut values = vec![ctx.zero(); width * width];
        for total in 0..=bound {
            for k in 0..=total {
                let n = total - k;
                let v = if total == 0 {
                    a
                } else {
                    let from_delta = if k > 0 {
                        ctx.delta(values[(k - 1) * width + n])
                    } else {
                        ctx.zero()
                    };
                    let from_sigma = if n > 0 {
                        ctx.sigma(values[k * width + n - 1])
                    } else {
                        ctx.zero()
                    };
                    ctx.add(from_delta, from_sigma)
                };
                values[k * width + n] = v;
            }
        }
        MonomialTable { bound, values }
    }

    /// `M_{k,n}(a)`; requires `k + n ≤ bound`.
    pub(crate) fn get(&self, k: usize, n: usize) -> RingElem {
        debug_assert!(k + n <= self.bound);
        self.values[k * (self.bound + 1) + n]
    }
}

/// `M_{k,l}(δ,σ)(a)`: the sum over all words with `k` letters δ and `l`
/// letters σ, applied to `a`.
pub fn monomial_operator_apply(ctx: &RingContext, k: usize, l: usize, a: RingElem) -> RingElem {
    MonomialTable::new(ctx, a, k + l).get(k, l)
}

/// An element of `T` in left normal form `Σ aᵢ xⁱ`.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, Debug)]
pub struct SkewPoly {
    ctx: Arc<RingContext>,
    coeffs: Vec<RingElem>,
}

impl PartialEq for SkewPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ctx, &other.ctx) && self.coeffs == other.coeffs
    }
}

impl Eq for SkewPoly {}

impl SkewPoly {
    pub fn from_coeffs(ctx: Arc<RingContext>, coeffs: Vec<RingElem>) -> Self {
        let mut p = SkewPoly { ctx, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        let zero = self.ctx.zero();
        while self.coeffs.last() == Some(&zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero(ctx: Arc<RingContext>) -> Self {
        SkewPoly {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: Arc<RingContext>) -> Self {
        let one = ctx.one();
        Self::constant(ctx, one)
    }

    pub fn constant(ctx: Arc<RingContext>, a: RingElem) -> Self {
        Self::from_coeffs(ctx, vec![a])
    }

    /// The variable `x`.
    pub fn x(ctx: Arc<RingContext>) -> Self {
        let one = ctx.one();
        Self::monomial(ctx, one, 1)
    }

    /// `a·xⁱ`.
    pub fn monomial(ctx: Arc<RingContext>, a: RingElem, i: usize) -> Self {
        let mut coeffs = vec![ctx.zero(); i + 1];
        coeffs[i] = a;
        Self::from_coeffs(ctx, coeffs)
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RingElem {
        self.coeffs.get(i).copied().unwrap_or(self.ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    fn check_ring(&self, other: &SkewPoly) -> Result<()> {
        if same_ring(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.ctx.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::from_coeffs(self.ctx.clone(), coeffs))
    }

    pub fn neg(&self) -> SkewPoly {
        let coeffs = self.coeffs.iter().map(|&a| self.ctx.neg(a)).collect();
        Self::from_coeffs(self.ctx.clone(), coeffs)
    }

    pub fn sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.add(&other.neg())
    }

    /// Product via the closed `M_{k,l}` formula, with scalars kept on the
    /// left of each `M` term.
    pub fn mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(other)?;
        let ctx = &self.ctx;
        let (Some(df), Some(dg)) = (self.degree().finite(), other.degree().finite()) else {
            return Ok(Self::zero(ctx.clone()));
        };
        let mut out = vec![ctx.zero(); df + dg + 1];
        for (l, &b) in other.coeffs.iter().enumerate() {
            if b == ctx.zero() {
                continue;
            }
            let table = MonomialTable::new(ctx, b, df);
            for (j, &a) in self.coeffs.iter().enumerate() {
                if a == ctx.zero() {
                    continue;
                }
                for n in 0..=j {
                    let term = ctx.mul(a, table.get(j - n, n));
                    out[n + l] = ctx.add(out[n + l], term);
                }
            }
        }
        Ok(Self::from_coeffs(ctx.clone(), out))
    }

    /// `x·self`, by one application of `x·c = σ(c)·x + δ(c)` to every term.
    pub fn mul_x_left(&self) -> SkewPoly {
        let ctx = &self.ctx;
        let mut out = vec![ctx.zero(); self.coeffs.len() + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i + 1] = ctx.add(out[i + 1], ctx.sigma(c));
            out[i] = ctx.add(out[i], ctx.delta(c));
        }
        Self::from_coeffs(ctx.clone(), out)
    }

    /// Product computed only from the single-step commutation rule: each
    /// `xʲ·bₗ` is expanded by pushing one `x` at a time past the coefficient.
    pub fn mul_by_commutation(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(other)?;
        let ctx = &self.ctx;
        let mut acc = Self::zero(ctx.clone());
        for (l, &b) in other.coeffs.iter().enumerate() {
            let mut pushed = Self::constant(ctx.clone(), b);
            for (j, &a) in self.coeffs.iter().enumerate() {
                if j > 0 {
                    pushed = pushed.mul_x_left();
                }
                let mut coeffs = vec![ctx.zero(); l];
                coeffs.extend(pushed.coeffs.iter().map(|&c| ctx.mul(a, c)));
                acc = acc.add(&Self::from_coeffs(ctx.clone(), coeffs))?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> SkewPoly {
        let mut acc = Self::one(self.ctx.clone());
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Rewrites the polynomial as `Σ xⁱ bᵢ` by moving every coefficient to the
    /// right of the powers of `x`, one `x` at a time, using
    /// `a·x = x·σ⁻¹(a) − δ(σ⁻¹(a))`. Needs σ to be bijective.
    pub fn to_right_form(&self) -> Result<RightFormPoly> {
        if !self.ctx.sigma_is_automorphism() {
            return Err(Error::IncompatibleStructure("sigma is not invertible"));
        }
        let mut acc: BTreeMap<usize, RingElem> = BTreeMap::new();
        for (j, &a) in self.coeffs.iter().enumerate() {
            push_right(&self.ctx, a, j, 0, &mut acc);
        }
        Ok(RightFormPoly::new(self.ctx.clone(), acc.into_iter().collect()))
    }

    pub fn render(&self) -> String {
        let ctx = &self.ctx;
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == ctx.zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&render_term(ctx, a, i));
        }
        out
    }
}

/// `a·xⁱ` as text; the coefficient `1` is elided for `i > 0`.
pub(crate) fn render_term(ctx: &RingContext, a: RingElem, i: usize) -> String {
    let power = match i {
        0 => String::new(),
        1 => "x".into(),
        i => alloc::format!("x^{i}"),
    };
    if i == 0 {
        ctx.render(a)
    } else if a == ctx.one() {
        power
    } else if ctx.is_compound(a) {
        alloc::format!("({})*{power}", ctx.render(a))
    } else {
        alloc::format!("{}*{power}", ctx.render(a))
    }
}

/// Adds the right form of `xˢʰⁱᶠᵗ · a · xʲ` to `acc`.
fn push_right(
    ctx: &RingContext,
    a: RingElem,
    j: usize,
    shift: usize,
    acc: &mut BTreeMap<usize, RingElem>,
) {
    if a == ctx.zero() {
        return;
    }
    if j == 0 {
        let slot = acc.entry(shift).or_insert(ctx.zero());
        *slot = ctx.add(*slot, a);
        return;
    }
    let r = ctx.sigma_inverse(a).expect("sigma is bijective");
    // a·xʲ = x·(r·xʲ⁻¹) − δ(r)·xʲ⁻¹
    push_right(ctx, r, j - 1, shift + 1, acc);
    push_right(ctx, ctx.neg(ctx.delta(r)), j - 1, shift, acc);
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A polynomial written with coefficients on the right, `Σ xⁱ aᵢ`.
///
/// Terms are kept with strictly increasing degree and no zero coefficient.
#[derive(Clone, Debug)]
pub struct RightFormPoly {
    ctx: Arc<RingContext>,
    terms: Vec<(usize, RingElem)>,
}

impl PartialEq for RightFormPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl RightFormPoly {
    /// Collects `terms` (in any order, repeats allowed) into canonical form.
    pub fn new(ctx: Arc<RingContext>, terms: Vec<(usize, RingElem)>) -> Self {
        let mut merged: BTreeMap<usize, RingElem> = BTreeMap::new();
        for (i, a) in terms {
            let slot = merged.entry(i).or_insert(ctx.zero());
            *slot = ctx.add(*slot, a);
        }
        let terms = merged.into_iter().filter(|&(_, a)| a != ctx.zero()).collect();
        RightFormPoly { ctx, terms }
    }

    pub fn terms(&self) -> &[(usize, RingElem)] {
        &self.terms
    }

    /// Renders as `Σ xⁱ·bᵢ` in increasing degree, e.g. `2 + x*t + x^2`.
    pub fn render(&self) -> String {
        let ctx = &self.ctx;
        if self.terms.is_empty() {
            return String::from("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(i, b)| {
                let power = match i {
                    0 => return ctx.render(b),
                    1 => String::from("x"),
                    i => format!("x^{i}"),
                };
                if b == ctx.one() {
                    power
                } else if ctx.is_compound(b) {
                    format!("{power}*({})", ctx.render(b))
                } else {
                    format!("{power}*{}", ctx.render(b))
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Left normal form: the coefficient of `xʲ` is `Σ_{i ≥ j} M_{i−j,j}(aᵢ)`.
    pub fn normalize(&self) -> SkewPoly {
        let ctx = &self.ctx;
        let top = self.terms.last().map_or(0, |&(i, _)| i);
        let mut out = vec![ctx.zero(); top + 1];
        for &(i, a) in &self.terms {
            let table = MonomialTable::new(ctx, a, i);
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                *slot = ctx.add(*slot, table.get(i - j, j));
            }
        }
        SkewPoly::from_coeffs(ctx.clone(), out)
    }
}

/// Brute-force references used by the property suites.
pub mod oracle {
    use super::*;

    /// `M_{k,l}(δ,σ)(a)` by enumerating every word with `k` δ's and `l` σ's.
    /// Returns the value together with the number of words visited.
    pub fn monomial_operator_by_words(
        ctx: &RingContext,
        k: usize,
        l: usize,
        a: RingElem,
    ) -> (RingElem, usize) {
        let mut sum = ctx.zero();
        let mut count = 0;
        let mut word = Vec::with_capacity(k + l);
        enumerate(ctx, k, l, a, &mut word, &mut sum, &mut count);
        (sum, count)
    }

    fn enumerate(
        ctx: &RingContext,
        k: usize,
        l: usize,
        a: RingElem,
        word: &mut Vec<bool>,
        sum: &mut RingElem,
        count: &mut usize,
    ) {
        if k == 0 && l == 0 {
            // letters are applied right to left
            let v = word.iter().rev().fold(a, |v, &is_delta| {
                if is_delta {
                    ctx.delta(v)
                } else {
                    ctx.sigma(v)
                }
            });
            *sum = ctx.add(*sum, v);
            *count += 1;
            return;
        }
        if k > 0 {
            word.push(true);
            enumerate(ctx, k - 1, l, a, word, sum, count);
            word.pop();
        }
        if l > 0 {
            word.push(false);
            enumerate(ctx, k, l - 1, a, word, sum, count);
            word.pop();
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Compares the recursive `M_{k,l}` against word enumeration for every
/// element of the carrier and every `k + l ≤ max_total`, and checks that the
/// enumeration visits `C(k+l, k)` words.
pub fn mkl_oracle_check(ctx: &RingContext, max_total: usize) -> CheckReport {
    let mut report = CheckReport::new("mkl-oracle");
    report.exhaustive = true;
    for a in ctx.elements() {
        let table = MonomialTable::new(ctx, a, max_total);
        for total in 0..=max_total {
            for k in 0..=total {
                let l = total - k;
                report.trials += 1;
                let (by_words, count) = oracle::monomial_operator_by_words(ctx, k, l, a);
                if count != binomial(total, k) {
                    report.fail("word-count", format!("k={k}, l={l}: {count} words"));
                    return report;
                }
                if table.get(k, l) != by_words {
                    report.fail(
                        "recursion-vs-words",
                        format!(
                            "k={k}, l={l}, a={}: recursion {} but words {}",
                            ctx.render(a),
                            ctx.render(table.get(k, l)),
                            ctx.render(by_words)
                        ),
                    );
                    return report;
                }
            }
        }
    }
    report
}

/// A seeded random polynomial of degree at most `max_degree`.
pub(crate) fn random_poly<G: Rng + ?Sized>(ctx: &Arc<RingContext>, max_degree: usize, rng: &mut G) -> SkewPoly {
    let len = rng.gen_range(0..=max_degree + 1);
    let coeffs = (0..len)
        .map(|_| RingElem::from_index(rng.gen_range(0..ctx.size())))
        .collect();
    SkewPoly::from_coeffs(ctx.clone(), coeffs)
}

/// The closed-formula product against the commutation product, then
/// associativity and both distributive laws, on seeded polynomials of degree
/// at most `max_degree`.
pub fn poly_product_check(ctx: &Arc<RingContext>, max_degree: usize, samples: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("poly-assoc");
    let mut rng = sample::rng(seed);
    for _ in 0..samples {
        let f = random_poly(ctx, max_degree, &mut rng);
        let g = random_poly(ctx, max_degree, &mut rng);
        let h = random_poly(ctx, max_degree, &mut rng);
        report.trials += 1;
        let witness = || format!("f={}, g={}, h={}", f.render(), g.render(), h.render());
        let fg = f.mul(&g).expect("same ring");
        if fg != f.mul_by_commutation(&g).expect("same ring") {
            report.fail("formula-vs-commutation", witness());
            break;
        }
        let left = fg.mul(&h).expect("same ring");
        let right = f.mul(&g.mul(&h).expect("same ring")).expect("same ring");
        if left != right {
            report.fail("mul-assoc", witness());
            break;
        }
        let gh = g.add(&h).expect("same ring");
        let split = fg.add(&f.mul(&h).expect("same ring")).expect("same ring");
        if f.mul(&gh).expect("same ring") != split {
            report.fail("left-distributivity", witness());
            break;
        }
        let split = g.mul(&f).expect("same ring").add(&h.mul(&f).expect("same ring")).expect("same ring");
        if gh.mul(&f).expect("same ring") != split {
            report.fail("right-distributivity", witness());
            break;
        }
    }
    report
}


#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(spec: &str) -> Arc<RingContext> {
        Arc::new(RingContext::from_preset(spec).unwrap())
    }

    fn p(ctx: &Arc<RingContext>, coeffs: &[i64]) -> SkewPoly {
        SkewPoly::from_coeffs(
            ctx.clone(),
            coeffs.iter().map(|&c| ctx.from_integer(c)).collect(),
        )
    }

    #[test]
    fn small_monomial_operators() {
        let r = ctx("truncpoly:3:3:c=2");
        for a in r.elements() {
            assert_eq!(monomial_operator_apply(&r, 0, 0, a), a);
            assert_eq!(monomial_operator_apply(&r, 0, 2, a), r.sigma(r.sigma(a)));
            assert_eq!(monomial_operator_apply(&r, 2, 0, a), r.delta(r.delta(a)));
            assert_eq!(
                monomial_operator_apply(&r, 1, 1, a),
                r.add(r.delta(r.sigma(a)), r.sigma(r.delta(a)))
            );
        }
    }

    #[test]
    fn x_times_t() {
        let r = ctx("truncpoly:3:3:c=2");
        let t = r.indeterminate().unwrap();
        let prod = SkewPoly::x(r.clone())
            .mul(&SkewPoly::constant(r.clone(), t))
            .unwrap();
        // σ(t) = 2t, δ(t) = t²
        assert_eq!(prod.coeffs(), &[r.mul(t, t), r.add(t, t)]);
        assert_eq!(prod.render(), "t^2 + 2*t*x");
    }

    #[test]
    fn normalize_single_commutation() {
        let r = ctx("truncpoly:3:3:c=2");
        for a in r.elements() {
            let right = RightFormPoly::new(r.clone(), vec![(1, a)]);
            let left = right.normalize();
            assert_eq!(left, SkewPoly::from_coeffs(r.clone(), vec![r.delta(a), r.sigma(a)]));
            let constant = RightFormPoly::new(r.clone(), vec![(0, a)]);
            assert_eq!(constant.normalize(), SkewPoly::constant(r.clone(), a));
        }
        let t = r.indeterminate().unwrap();
        let twice = SkewPoly::constant(r.clone(), t).mul_x_left().mul_x_left();
        assert_eq!(RightFormPoly::new(r.clone(), vec![(2, t)]).normalize(), twice);
    }

    #[test]
    fn ring_identities_and_mismatch() {
        let r = ctx("zmod:2^3");
        let f = p(&r, &[1, 2, 3]);
        let one = SkewPoly::one(r.clone());
        assert_eq!(f.mul(&one).unwrap(), f);
        assert_eq!(one.mul(&f).unwrap(), f);
        assert!(f.add(&f.neg()).unwrap().is_zero());
        assert_eq!(f.add(&SkewPoly::zero(r.clone())).unwrap(), f);

        let other = ctx("zmod:3^2");
        assert_eq!(f.mul(&p(&other, &[1])), Err(Error::ContextMismatch));
    }

    #[test]
    fn degrees() {
        let r = ctx("zmod:2^3");
        assert_eq!(SkewPoly::zero(r.clone()).degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        // leading coefficients 2·σ²(4) = 8 = 0 collapse the degree
        let f = p(&r, &[1, 0, 2]);
        let g = p(&r, &[1, 4]);
        assert_eq!(f.mul(&g).unwrap().degree(), Degree::Finite(2));
        assert_eq!(p(&r, &[0, 0, 0]).degree(), Degree::MinusInfinity);
    }

    #[test]
    fn oracle_suites_pass() {
        for spec in ["zmod:2^3", "truncpoly:3:3:c=2"] {
            let r = ctx(spec);
            assert!(mkl_oracle_check(&r, 4).passed());
            assert!(poly_product_check(&r, 3, 40, 1).passed());
        }
        assert_eq!(binomial(6, 3), 20);
    }

    #[test]
    fn word_counts_are_binomial() {
        let r = ctx("zmod:2^3");
        let mut binom = [[0usize; 9]; 9];
        for n in 0..9 {
            binom[n][0] = 1;
            for k in 1..=n {
                binom[n][k] = binom[n - 1][k - 1] + if k < n { binom[n - 1][k] } else { 0 };
            }
        }
        for k in 0..=8 {
            for l in 0..=8 - k {
                let (_, count) = oracle::monomial_operator_by_words(&r, k, l, r.one());
                assert_eq!(count, binom[k + l][k]);
            }
        }
    }

    #[test]
    fn right_form_round_trip() {
        let r = ctx("truncpoly:3:3:c=2");
        let t = r.indeterminate().unwrap();
        let f = SkewPoly::from_coeffs(r.clone(), vec![t, r.one(), r.add(t, r.one()), t]);
        let right = f.to_right_form().unwrap();
        assert_eq!(right.normalize(), f);
    }

    #[test]
    fn rendering() {
        let r = ctx("truncpoly:3:3:c=2");
        let t = r.indeterminate().unwrap();
        let f = SkewPoly::from_coeffs(r.clone(), vec![r.one(), r.add(t, r.one()), r.one()]);
        assert_eq!(f.render(), "1 + (1 + t)*x + x^2");
        assert_eq!(SkewPoly::zero(r).render(), "0");
    }
}
