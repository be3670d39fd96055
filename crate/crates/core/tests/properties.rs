use std::sync::Arc;

use proptest::prelude::*;
use skewring::k0::{idempotent_rank, IdempotentMatrix};
use skewring::{Matrix, RingContext, RingElem, SeriesRing, SkewPoly};

const PRESETS: [&str; 2] = ["zmod:2^3", "truncpoly:3:3:c=2"];

fn ctx(spec: &str) -> Arc<RingContext> {
    Arc::new(RingContext::from_preset(spec).unwrap())
}

fn elems(ctx: &RingContext, idx: &[usize]) -> Vec<RingElem> {
    let all: Vec<RingElem> = ctx.elements().collect();
    idx.iter().map(|&i| all[i % all.len()]).collect()
}

fn poly(ctx: &Arc<RingContext>, idx: &[usize]) -> SkewPoly {
    SkewPoly::from_coeffs(ctx.clone(), elems(ctx, idx))
}

/// `x · Σ cᵢ xⁱ` from `x·c = σ(c)·x + δ(c)`, written against the raw maps.
fn x_times(ctx: &RingContext, coeffs: &[RingElem]) -> Vec<RingElem> {
    let mut out = vec![ctx.zero(); coeffs.len() + 1];
    for (i, &c) in coeffs.iter().enumerate() {
        out[i + 1] = ctx.add(out[i + 1], ctx.sigma(c));
        out[i] = ctx.add(out[i], ctx.delta(c));
    }
    out
}

/// `f · g` by distributing `aⱼ xʲ` over `g` and pushing each `x` through.
fn product_by_commutation(ctx: &RingContext, f: &[RingElem], g: &[RingElem]) -> Vec<RingElem> {
    let mut out = vec![ctx.zero(); f.len() + g.len() + 1];
    let mut xj_g = g.to_vec();
    for (j, &a) in f.iter().enumerate() {
        if j > 0 {
            xj_g = x_times(ctx, &xj_g);
        }
        for (i, &c) in xj_g.iter().enumerate() {
            out[i] = ctx.add(out[i], ctx.mul(a, c));
        }
    }
    while out.last() == Some(&ctx.zero()) {
        out.pop();
    }
    out
}

fn coeff_strategy(max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..1024, 0..=max_len)
}

fn int_matrix(base: &Arc<RingContext>, n: usize, idx: &[usize]) -> Matrix<Arc<RingContext>> {
    Matrix::new(base.clone(), n, n, elems(base, &idx[..n * n])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_product_matches_commutation(p in 0usize..2, f in coeff_strategy(5), g in coeff_strategy(5)) {
        let r = ctx(PRESETS[p]);
        let (f, g) = (poly(&r, &f), poly(&r, &g));
        let expected = product_by_commutation(&r, f.coeffs(), g.coeffs());
        let product = f.mul(&g).unwrap();
        prop_assert_eq!(product.coeffs(), &expected[..]);
    }

    #[test]
    fn poly_ring_laws(p in 0usize..2, f in coeff_strategy(4), g in coeff_strategy(4), h in coeff_strategy(4)) {
        let r = ctx(PRESETS[p]);
        let (f, g, h) = (poly(&r, &f), poly(&r, &g), poly(&r, &h));
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        let gh = g.add(&h).unwrap();
        prop_assert_eq!(
            f.mul(&gh).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            gh.mul(&f).unwrap(),
            g.mul(&f).unwrap().add(&h.mul(&f).unwrap()).unwrap()
        );
    }

    #[test]
    fn series_ring_laws(p in 0usize..2, n in 1usize..=6, f in coeff_strategy(6), g in coeff_strategy(6), h in coeff_strategy(6)) {
        let r = ctx(PRESETS[p]);
        let s = SeriesRing::new(r.clone(), n).unwrap();
        let (f, g, h) = (s.element(&elems(&r, &f)), s.element(&elems(&r, &g)), s.element(&elems(&r, &h)));
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
    }

    #[test]
    fn polynomials_map_multiplicatively(p in 0usize..2, n in 1usize..=6, f in coeff_strategy(4), g in coeff_strategy(4)) {
        let r = ctx(PRESETS[p]);
        let s = SeriesRing::new(r.clone(), n).unwrap();
        let (f, g) = (poly(&r, &f), poly(&r, &g));
        let image = s.from_poly(&f.mul(&g).unwrap()).unwrap();
        prop_assert_eq!(image, s.from_poly(&f).unwrap().mul(&s.from_poly(&g).unwrap()).unwrap());
    }

    #[test]
    fn product_ignores_choice_of_lift(
        p in 0usize..2,
        n in 1usize..=5,
        a in prop::collection::vec(0usize..1024, 5),
        b in prop::collection::vec(0usize..1024, 5),
        da in prop::collection::vec(0usize..1024, 5),
        db in prop::collection::vec(0usize..1024, 5),
    ) {
        let r = ctx(PRESETS[p]);
        let s = SeriesRing::new(r.clone(), n).unwrap();
        let (a, b) = (elems(&r, &a[..n]), elems(&r, &b[..n]));
        // shift coefficient i by an element of J^{N-i}, i.e. add an element of G_N
        let shift = |v: &[RingElem], d: &[usize]| -> Vec<RingElem> {
            v.iter()
                .enumerate()
                .map(|(i, &c)| {
                    let layer: Vec<RingElem> = r.ideal_power_elements(n - i).collect();
                    r.add(c, layer[d[i] % layer.len()])
                })
                .collect()
        };
        let (a2, b2) = (shift(&a, &da), shift(&b, &db));
        prop_assert_eq!(s.mul_lifts(&a, &b), s.mul_lifts(&a2, &b2));
    }

    #[test]
    fn rank_is_conjugation_invariant_and_additive(
        p in 0usize..2,
        n in 1usize..=3,
        ones in prop::collection::vec(any::<bool>(), 3),
        v in prop::collection::vec(0usize..1024, 9),
        m in 1usize..=2,
        ones2 in prop::collection::vec(any::<bool>(), 2),
    ) {
        let r = ctx(PRESETS[p]);
        let v = int_matrix(&r, n, &v);
        let Some(v_inv) = v.inverse() else { return Ok(()); };
        let d = Matrix::diagonal01(r.clone(), &ones[..n]);
        let e = IdempotentMatrix::new(v.mul(&d).unwrap().mul(&v_inv).unwrap()).unwrap();
        let expected = ones[..n].iter().filter(|&&b| b).count();
        let w = idempotent_rank(&e).unwrap();
        prop_assert_eq!(w.rank, expected);
        prop_assert!(w.verify(&e));

        let f = IdempotentMatrix::new(Matrix::diagonal01(r.clone(), &ones2[..m])).unwrap();
        let wf = idempotent_rank(&f).unwrap();
        let sum = e.direct_sum(&f);
        let ws = idempotent_rank(&sum).unwrap();
        prop_assert_eq!(ws.rank, w.rank + wf.rank);
        prop_assert!(ws.verify(&sum));
    }
}
