//! Axiom checkers for the coefficient ring and its structure maps, and the
//! σ-nilpotence bound search.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::{FiniteRing, RingContext, RingElem};
use crate::report::CheckReport;
use crate::sample;

/// Carriers at most this large are checked exhaustively.
const EXHAUSTIVE_LIMIT: usize = 256;

/// Visits pairs `(a, b)`: every pair when the carrier is small, otherwise
/// `samples` seeded draws. `visit` returns `false` to stop.
fn for_pairs(
    size: usize,
    samples: usize,
    seed: u64,
    report: &mut CheckReport,
    mut visit: impl FnMut(usize, usize) -> bool,
) {
    if size <= EXHAUSTIVE_LIMIT {
        report.exhaustive = true;
        for a in 0..size {
            for b in 0..size {
                report.trials += 1;
                if !visit(a, b) {
                    return;
                }
            }
        }
    } else {
        let mut rng = sample::rng(seed);
        for _ in 0..samples.max(1) {
            let (a, b) = (rng.gen_range(0..size), rng.gen_range(0..size));
            report.trials += 1;
            if !visit(a, b) {
                return;
            }
        }
    }
}

/// Checks the ring axioms on all triples (small carriers) or on `samples`
/// seeded triples.
pub fn ring_axiom_check<R: FiniteRing + ?Sized>(ring: &R, samples: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("ring-axioms");
    let size = ring.cardinality();
    let zero = ring.zero();
    let one = ring.one();

    let check = |a: RingElem, b: RingElem, c: RingElem, report: &mut CheckReport| -> bool {
        let laws: [(&'static str, RingElem, RingElem); 9] = [
            (
                "add-assoc",
                ring.add(ring.add(a, b), c),
                ring.add(a, ring.add(b, c)),
            ),
            ("add-comm", ring.add(a, b), ring.add(b, a)),
            ("add-identity", ring.add(a, zero), a),
            ("add-inverse", ring.add(a, ring.neg(a)), zero),
            ("right-unit", ring.mul(a, one), a),
            (
                "mul-assoc",
                ring.mul(ring.mul(a, b), c),
                ring.mul(a, ring.mul(b, c)),
            ),
            (
                "left-distributivity",
                ring.mul(a, ring.add(b, c)),
                ring.add(ring.mul(a, b), ring.mul(a, c)),
            ),
            (
                "right-distributivity",
                ring.mul(ring.add(a, b), c),
                ring.add(ring.mul(a, c), ring.mul(b, c)),
            ),
            ("left-unit", ring.mul(one, a), a),
        ];
        report.trials += 1;
        for (law, lhs, rhs) in laws {
            if lhs != rhs {
                return !report.fail(
                    law,
                    format!(
                        "a={}, b={}, c={}",
                        ring.render(a),
                        ring.render(b),
                        ring.render(c)
                    ),
                );
            }
        }
        true
    };

    if size <= EXHAUSTIVE_LIMIT {
        report.exhaustive = true;
        'outer: for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    let (a, b, c) = (ring.element(a), ring.element(b), ring.element(c));
                    if !check(a, b, c, &mut report) {
                        break 'outer;
                    }
                }
            }
        }
    } else {
        let mut rng = sample::rng(seed);
        for _ in 0..samples.max(1) {
            let a = ring.element(rng.gen_range(0..size));
            let b = ring.element(rng.gen_range(0..size));
            let c = ring.element(rng.gen_range(0..size));
            if !check(a, b, c, &mut report) {
                break;
            }
        }
    }
    report
}

/// Checks that σ is a unital ring endomorphism with `σ(I) ⊆ I`.
pub fn sigma_endomorphism_check(ctx: &RingContext, samples: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("sigma-endomorphism");
    report.trials += 1;
    if ctx.sigma(ctx.one()) != ctx.one() {
        report.fail("sigma-unital", format!("sigma(1)={}", ctx.render(ctx.sigma(ctx.one()))));
        return report;
    }
    locate_pair_failure(ctx, samples, seed, &mut report, |a, b| {
        if ctx.sigma(ctx.add(a, b)) != ctx.add(ctx.sigma(a), ctx.sigma(b)) {
            Some("sigma-additive")
        } else if ctx.sigma(ctx.mul(a, b)) != ctx.mul(ctx.sigma(a), ctx.sigma(b)) {
            Some("sigma-multiplicative")
        } else {
            None
        }
    });
    if report.passed() {
        for a in ctx.ideal_power_elements(1) {
            report.trials += 1;
            if !ctx.in_ideal_power(ctx.sigma(a), 1) {
                report.fail("sigma-preserves-radical", format!("a={}", ctx.render(a)));
                break;
            }
        }
    }
    report
}

/// Finds the first pair (in the same visiting order as [`for_pairs`]) for
/// which `law` reports a violation and records it.
fn locate_pair_failure(
    ctx: &RingContext,
    samples: usize,
    seed: u64,
    report: &mut CheckReport,
    law: impl Fn(RingElem, RingElem) -> Option<&'static str>,
) {
    let mut found = None;
    for_pairs(ctx.size(), samples, seed, report, |a, b| {
        let (a, b) = (RingElem::from_index(a), RingElem::from_index(b));
        match law(a, b) {
            Some(name) => {
                found = Some((name, a, b));
                false
            }
            None => true,
        }
    });
    if let Some((name, a, b)) = found {
        report.fail(name, format!("a={}, b={}", ctx.render(a), ctx.render(b)));
    }
}

/// Checks additivity and the σ-Leibniz rule `δ(ab) = σ(a)δ(b) + δ(a)b` on
/// pairs, then `δ(R) ⊆ I` and `δ(I) ⊆ I²` element by element.
pub fn sigma_derivation_check(ctx: &RingContext, samples: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("sigma-derivation");
    locate_pair_failure(ctx, samples, seed, &mut report, |a, b| {
        if ctx.delta(ctx.add(a, b)) != ctx.add(ctx.delta(a), ctx.delta(b)) {
            return Some("delta-additive");
        }
        let leibniz = ctx.add(
            ctx.mul(ctx.sigma(a), ctx.delta(b)),
            ctx.mul(ctx.delta(a), b),
        );
        (ctx.delta(ctx.mul(a, b)) != leibniz).then_some("sigma-leibniz")
    });
    if !report.passed() {
        return report;
    }
    for a in ctx.elements() {
        report.trials += 1;
        if !ctx.in_ideal_power(ctx.delta(a), 1) {
            report.fail("delta-into-radical", format!("a={}", ctx.render(a)));
            return report;
        }
        if ctx.in_ideal_power(a, 1) && !ctx.in_ideal_power(ctx.delta(a), 2) {
            report.fail("delta-radical-into-square", format!("a={}", ctx.render(a)));
            return report;
        }
    }
    report
}

/// Checks `δ(Iᵏ) ⊆ Iᵏ⁺¹` for every `0 ≤ k < radical_nilpotency`, on all
/// members of `Iᵏ`.
pub fn delta_filtration_check(ctx: &RingContext) -> CheckReport {
    let mut report = CheckReport::new("delta-filtration");
    report.exhaustive = true;
    for k in 0..ctx.radical_nilpotency() {
        for a in ctx.ideal_power_elements(k) {
            report.trials += 1;
            if !ctx.in_ideal_power(ctx.delta(a), k + 1) {
                report.fail(
                    "delta-raises-valuation",
                    format!("k={k}, a={}, delta(a)={}", ctx.render(a), ctx.render(ctx.delta(a))),
                );
                return report;
            }
        }
    }
    report
}

/// Least `m ≤ word_limit` such that every word in σ, δ with at least `m`
/// δ-factors and length at most `word_limit` maps all of `R` into `Iⁿ`.
///
/// Exhaustive over the carrier and over all words up to the length limit.
/// Returns `None` when no such `m` exists within the limit.
pub fn sigma_nilpotence_bound(ctx: &RingContext, n: usize, word_limit: usize) -> Option<usize> {
    assert!(n >= 1 && word_limit >= 1, "n and word_limit must be positive");
    // bad[d]: some word with exactly d δ-factors escapes Iⁿ
    let mut bad = vec![false; word_limit + 1];
    let all: Vec<RingElem> = ctx.elements().collect();
    walk_words(ctx, n, word_limit, &all, 0, 0, &mut bad);
    let m = bad.iter().rposition(|&b| b).map_or(1, |d| d + 1).max(1);
    (m <= word_limit).then_some(m)
}

fn walk_words(
    ctx: &RingContext,
    n: usize,
    word_limit: usize,
    image: &[RingElem],
    len: usize,
    delta_count: usize,
    bad: &mut [bool],
) {
    if image.iter().any(|&a| !ctx.in_ideal_power(a, n)) {
        bad[delta_count] = true;
    }
    if len == word_limit || image.iter().all(|&a| a == ctx.zero()) {
        return;
    }
    for apply_delta in [false, true] {
        let mut seen = vec![false; ctx.size()];
        let mut next = Vec::with_capacity(image.len());
        for &a in image {
            let b = if apply_delta { ctx.delta(a) } else { ctx.sigma(a) };
            if !seen[b.index()] {
                seen[b.index()] = true;
                next.push(b);
            }
        }
        walk_words(
            ctx,
            n,
            word_limit,
            &next,
            len + 1,
            delta_count + apply_delta as usize,
            bad,
        );
    }
}
