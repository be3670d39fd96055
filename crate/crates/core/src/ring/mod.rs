//! Finite coefficient rings with a distinguished nilpotent radical, an
//! endomorphism σ and a σ-derivation δ.
//!
//! Elements are encoded as small integers (`RingElem`) whose meaning depends
//! on the carrier:
//!
//! * `ℤ/pⁿ`: the residue itself.
//! * `F_p[t]/(tᵐ)`: the base-`p` digits are the coefficients of `1, t, …, tᵐ⁻¹`.
//!
//! Powers `Iᵏ` of the radical are materialized once, as membership tables,
//! together with canonical coset representatives and the `I`-adic valuation of
//! every element.

mod check;
mod preset;

pub use check::{
    delta_filtration_check, ring_axiom_check, sigma_derivation_check, sigma_endomorphism_check,
    sigma_nilpotence_bound,
};
pub use preset::Preset;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::{Error, Result};

/// Largest carrier the context will materialize.
pub const MAX_CARRIER: u64 = 4096;

const MAX_DIGITS: usize = 16;

/// Canonical encoding of one element of a finite carrier.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RingElem(u32);

impl RingElem {
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) const fn from_index(i: usize) -> Self {
        RingElem(i as u32)
    }
}

/// Valuation against the chain `R = I⁰ ⊇ I ⊇ I² ⊇ …`.
///
/// `Finite(k)` sorts below `Infinite`, so `min`/`max` behave as on the
/// extended naturals.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Valuation {
    Finite(usize),
    Infinite,
}

impl Valuation {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Valuation::Finite(v) => v >= k,
            Valuation::Infinite => true,
        }
    }

    /// Saturating sum.
    pub fn plus(self, other: Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(k) => write!(f, "{k}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// The underlying finite ring.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Carrier {
    /// `ℤ/pⁿ` with radical `(p)`.
    ZMod { p: u32, n: u32 },
    /// `F_p[t]/(tᵐ)` with radical `(t)`.
    TruncPoly { p: u32, m: u32 },
}

impl Carrier {
    fn size(&self) -> u64 {
        match *self {
            Carrier::ZMod { p, n } => (p as u64).saturating_pow(n),
            Carrier::TruncPoly { p, m } => (p as u64).saturating_pow(m),
        }
    }

    fn prime(&self) -> u32 {
        match *self {
            Carrier::ZMod { p, .. } | Carrier::TruncPoly { p, .. } => p,
        }
    }
}

/// The endomorphism σ.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SigmaMap {
    Identity,
    /// `f(t) ↦ f(c·t)` on `F_p[t]/(tᵐ)`, for a unit `c` of `F_p`.
    Dilation(u32),
}

/// The σ-derivation δ.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum DeltaMap {
    Zero,
    /// `δ(f) = u·(σ(f) − f)` with `u` the radical generator.
    TwistDifference,
    /// `δ(f) = u·f`. Not a σ-derivation; kept for exercising the checkers.
    RadicalScaling,
}

/// A finite coefficient ring `R` with radical `I = J(R)`, σ and δ.
///
/// Immutable after construction; share it through `Arc`.
#[derive(Clone, Debug)]
pub struct RingContext {
    carrier: Carrier,
    sigma: SigmaMap,
    delta: DeltaMap,
    size: usize,
    radical_gens: Vec<RingElem>,
    nilpotency: usize,
    /// `ideal_member[k][a]` iff `a ∈ Iᵏ`, for `k = 0..=nilpotency`.
    ideal_member: Vec<Vec<bool>>,
    ideal_elems: Vec<Vec<u32>>,
    coset_rep: Vec<Vec<u32>>,
    valuation: Vec<Valuation>,
    unit_count: usize,
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.sigma == other.sigma && self.delta == other.delta
    }
}

impl Eq for RingContext {}

/// The arithmetic surface needed by [`ring_axiom_check`].
pub trait FiniteRing {
    fn cardinality(&self) -> usize;
    /// The `i`-th element in enumeration order, `i < cardinality()`.
    fn element(&self, i: usize) -> RingElem;
    fn zero(&self) -> RingElem;
    fn one(&self) -> RingElem;
    fn add(&self, a: RingElem, b: RingElem) -> RingElem;
    fn neg(&self, a: RingElem) -> RingElem;
    fn mul(&self, a: RingElem, b: RingElem) -> RingElem;
    fn render(&self, a: RingElem) -> String;
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| d * d <= p).all(|d| p % d != 0)
}

impl RingContext {
    pub fn new(carrier: Carrier, sigma: SigmaMap, delta: DeltaMap) -> Result<Self> {
        let p = carrier.prime();
        if !is_prime(p) {
            return Err(Error::InvalidPreset(alloc::format!("{p} is not prime")));
        }
        match carrier {
            Carrier::ZMod { n: 0, .. } => {
                return Err(Error::InvalidPreset("exponent must be at least 1".into()))
            }
            Carrier::TruncPoly { m: 0, .. } => {
                return Err(Error::InvalidPreset("truncation length must be at least 1".into()))
            }
            _ => {}
        }
        let size = carrier.size();
        if size > MAX_CARRIER {
            return Err(Error::CarrierTooLarge {
                size,
                limit: MAX_CARRIER,
            });
        }
        match (carrier, sigma) {
            (_, SigmaMap::Identity) => {}
            (Carrier::ZMod { .. }, SigmaMap::Dilation(_)) => {
                return Err(Error::InvalidPreset(
                    "the only endomorphism of Z/p^n is the identity".into(),
                ))
            }
            (Carrier::TruncPoly { p, .. }, SigmaMap::Dilation(c)) => {
                if c % p == 0 {
                    return Err(Error::InvalidPreset(alloc::format!(
                        "c={c} is not a unit mod {p}"
                    )));
                }
            }
        }
        let sigma = match sigma {
            SigmaMap::Dilation(c) if c % p == 1 => SigmaMap::Identity,
            SigmaMap::Dilation(c) => SigmaMap::Dilation(c % p),
            s => s,
        };

        let mut ctx = RingContext {
            carrier,
            sigma,
            delta,
            size: size as usize,
            radical_gens: Vec::new(),
            nilpotency: 0,
            ideal_member: Vec::new(),
            ideal_elems: Vec::new(),
            coset_rep: Vec::new(),
            valuation: Vec::new(),
            unit_count: 0,
        };
        ctx.radical_gens = vec![ctx.uniformizer()];
        ctx.materialize_ideals();
        Ok(ctx)
    }

    fn materialize_ideals(&mut self) {
        let basis = self.additive_basis();
        // I^k is spanned additively by b·(g_1⋯g_k)·b' for additive basis elements b, b'.
        let mut products = vec![self.one()];
        loop {
            let mut gens = Vec::new();
            for &w in &products {
                for &b in &basis {
                    for &b2 in &basis {
                        gens.push(self.mul(self.mul(b, w), b2));
                    }
                }
            }
            let (member, elems) = self.additive_span(&gens);
            let is_zero = elems.len() == 1;
            self.ideal_member.push(member);
            self.ideal_elems.push(elems);
            if is_zero {
                break;
            }
            let mut next = Vec::new();
            for &w in &products {
                for &g in &self.radical_gens {
                    next.push(self.mul(w, g));
                }
            }
            products = next;
        }
        self.nilpotency = self.ideal_member.len() - 1;

        self.coset_rep = self
            .ideal_elems
            .iter()
            .map(|elems| {
                let mut rep = vec![u32::MAX; self.size];
                for a in 0..self.size {
                    if rep[a] != u32::MAX {
                        continue;
                    }
                    for &i in elems {
                        let v = self.add(RingElem(a as u32), RingElem(i)).index();
                        rep[v] = a as u32;
                    }
                }
                rep
            })
            .collect();

        self.valuation = (0..self.size)
            .map(|a| {
                if a == 0 {
                    Valuation::Infinite
                } else {
                    let k = (0..=self.nilpotency)
                        .rev()
                        .find(|&k| self.ideal_member[k][a])
                        .unwrap_or(0);
                    Valuation::Finite(k)
                }
            })
            .collect();
        self.unit_count = self.size - self.ideal_elems[1.min(self.nilpotency)].len();
    }

    /// Subgroup of `(R, +)` generated by `gens`, as a membership table plus
    /// the list of members.
    fn additive_span(&self, gens: &[RingElem]) -> (Vec<bool>, Vec<u32>) {
        let mut member = vec![false; self.size];
        member[0] = true;
        let mut elems = vec![0u32];
        for &g in gens {
            if member[g.index()] {
                continue;
            }
            let base = elems.clone();
            let mut multiple = g;
            while !member[multiple.index()] {
                for &s in &base {
                    let v = self.add(RingElem(s), multiple);
                    if !member[v.index()] {
                        member[v.index()] = true;
                        elems.push(v.0);
                    }
                }
                multiple = self.add(multiple, g);
            }
        }
        (member, elems)
    }

    fn additive_basis(&self) -> Vec<RingElem> {
        match self.carrier {
            Carrier::ZMod { .. } => vec![self.one()],
            Carrier::TruncPoly { p, m } => (0..m).map(|k| RingElem(p.pow(k))).collect(),
        }
    }

    /// `p` for `ℤ/pⁿ`, `t` for `F_p[t]/(tᵐ)` (zero when the radical is zero).
    fn uniformizer(&self) -> RingElem {
        match self.carrier {
            Carrier::ZMod { p, n } => RingElem(if n == 1 { 0 } else { p }),
            Carrier::TruncPoly { p, m } => RingElem(if m == 1 { 0 } else { p }),
        }
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn sigma_map(&self) -> SigmaMap {
        self.sigma
    }

    pub fn delta_map(&self) -> DeltaMap {
        self.delta
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn radical_generators(&self) -> &[RingElem] {
        &self.radical_gens
    }

    /// Smallest `m` with `Iᵐ = 0`.
    pub fn radical_nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElem> + '_ {
        (0..self.size).map(|i| RingElem(i as u32))
    }

    /// Members of `Iᵏ`; `k` is clamped to the nilpotency index.
    pub fn ideal_power_elements(&self, k: usize) -> impl Iterator<Item = RingElem> + '_ {
        self.ideal_elems[k.min(self.nilpotency)]
            .iter()
            .map(|&i| RingElem(i))
    }

    pub fn in_ideal_power(&self, a: RingElem, k: usize) -> bool {
        self.ideal_member[k.min(self.nilpotency)][a.index()]
    }

    /// Largest `k` with `a ∈ Iᵏ`, or `Infinite` for zero.
    pub fn ideal_valuation(&self, a: RingElem) -> Valuation {
        self.valuation[a.index()]
    }

    /// Canonical representative of `a + Iᵏ`: the least-index element of the coset.
    pub fn reduce_mod_ideal_power(&self, a: RingElem, k: usize) -> Result<RingElem> {
        if k > self.nilpotency {
            return Err(Error::InvalidIdealPower {
                k,
                max: self.nilpotency,
            });
        }
        Ok(self.reduce(a, k))
    }

    /// As [`Self::reduce_mod_ideal_power`], but clamps `k`.
    pub(crate) fn reduce(&self, a: RingElem, k: usize) -> RingElem {
        RingElem(self.coset_rep[k.min(self.nilpotency)][a.index()])
    }

    pub fn zero(&self) -> RingElem {
        RingElem(0)
    }

    pub fn one(&self) -> RingElem {
        match self.size {
            1 => RingElem(0),
            _ => RingElem(1),
        }
    }

    /// Image of an integer under `ℤ → R`.
    pub fn from_integer(&self, v: i64) -> RingElem {
        let p = self.carrier.prime() as i64;
        match self.carrier {
            Carrier::ZMod { .. } => RingElem(v.rem_euclid(self.size as i64) as u32),
            Carrier::TruncPoly { .. } => RingElem(v.rem_euclid(p) as u32),
        }
    }

    /// The polynomial variable `t`, when the carrier has one.
    pub fn indeterminate(&self) -> Option<RingElem> {
        match self.carrier {
            Carrier::TruncPoly { .. } => Some(self.uniformizer()),
            Carrier::ZMod { .. } => None,
        }
    }

    fn digits(&self, a: RingElem) -> ([u32; MAX_DIGITS], usize) {
        let (p, m) = match self.carrier {
            Carrier::TruncPoly { p, m } => (p, m as usize),
            Carrier::ZMod { .. } => unreachable!("digits only exist for truncated polynomials"),
        };
        let mut out = [0u32; MAX_DIGITS];
        let mut v = a.0;
        for d in out.iter_mut().take(m) {
            *d = v % p;
            v /= p;
        }
        (out, m)
    }

    fn from_digits(&self, digits: &[u32]) -> RingElem {
        let p = self.carrier.prime();
        RingElem(digits.iter().rev().fold(0, |acc, &d| acc * p + d))
    }

    pub fn add(&self, a: RingElem, b: RingElem) -> RingElem {
        match self.carrier {
            Carrier::ZMod { .. } => RingElem(((a.0 + b.0) as usize % self.size) as u32),
            Carrier::TruncPoly { p, .. } => {
                let (da, m) = self.digits(a);
                let (db, _) = self.digits(b);
                let mut out = [0u32; MAX_DIGITS];
                for k in 0..m {
                    out[k] = (da[k] + db[k]) % p;
                }
                self.from_digits(&out[..m])
            }
        }
    }

    pub fn neg(&self, a: RingElem) -> RingElem {
        match self.carrier {
            Carrier::ZMod { .. } => RingElem(((self.size - a.index()) % self.size) as u32),
            Carrier::TruncPoly { p, .. } => {
                let (mut da, m) = self.digits(a);
                for d in da.iter_mut().take(m) {
                    *d = (p - *d) % p;
                }
                self.from_digits(&da[..m])
            }
        }
    }

    pub fn sub(&self, a: RingElem, b: RingElem) -> RingElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: RingElem, b: RingElem) -> RingElem {
        match self.carrier {
            Carrier::ZMod { .. } => {
                RingElem(((a.0 as u64 * b.0 as u64) % self.size as u64) as u32)
            }
            Carrier::TruncPoly { p, .. } => {
                let (da, m) = self.digits(a);
                let (db, _) = self.digits(b);
                let mut out = [0u32; MAX_DIGITS];
                for i in 0..m {
                    if da[i] == 0 {
                        continue;
                    }
                    for j in 0..m - i {
                        out[i + j] = (out[i + j] + da[i] * db[j]) % p;
                    }
                }
                self.from_digits(&out[..m])
            }
        }
    }

    pub fn pow(&self, a: RingElem, mut e: u64) -> RingElem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Two-sided inverse, if `a` is a unit. The carrier is local, so the
    /// units are exactly the elements outside `I`.
    pub fn unit_inverse(&self, a: RingElem) -> Option<RingElem> {
        if self.in_ideal_power(a, 1) && self.nilpotency > 0 {
            return None;
        }
        let inv = self.pow(a, self.unit_count as u64 - 1);
        (self.mul(a, inv) == self.one() && self.mul(inv, a) == self.one()).then_some(inv)
    }

    pub fn is_unit(&self, a: RingElem) -> bool {
        self.unit_inverse(a).is_some()
    }

    /// True when the non-units are exactly `I`, i.e. `I = J(R)` and `R` is local.
    pub fn is_local(&self) -> bool {
        self.elements().all(|a| {
            let in_radical = self.in_ideal_power(a, 1);
            let unit = {
                let inv = self.pow(a, self.unit_count.max(1) as u64 - 1);
                self.mul(a, inv) == self.one() && self.mul(inv, a) == self.one()
            };
            // radical elements are nilpotent, hence never units
            in_radical != unit || self.size == 1
        })
    }

    pub fn sigma(&self, a: RingElem) -> RingElem {
        match self.sigma {
            SigmaMap::Identity => a,
            SigmaMap::Dilation(c) => {
                let p = self.carrier.prime();
                let (mut da, m) = self.digits(a);
                let mut scale = 1u32;
                for d in da.iter_mut().take(m) {
                    *d = (*d * scale) % p;
                    scale = (scale * c) % p;
                }
                self.from_digits(&da[..m])
            }
        }
    }

    pub fn sigma_pow(&self, a: RingElem, times: usize) -> RingElem {
        (0..times).fold(a, |acc, _| self.sigma(acc))
    }

    pub fn delta(&self, a: RingElem) -> RingElem {
        let u = self.uniformizer();
        match self.delta {
            DeltaMap::Zero => self.zero(),
            DeltaMap::TwistDifference => self.mul(u, self.sub(self.sigma(a), a)),
            DeltaMap::RadicalScaling => self.mul(u, a),
        }
    }

    /// True when σ is a bijection of the carrier with `σ(I) = I`.
    pub fn sigma_is_automorphism(&self) -> bool {
        let mut seen = vec![false; self.size];
        for a in self.elements() {
            seen[self.sigma(a).index()] = true;
        }
        seen.iter().all(|&s| s)
    }

    /// Preimage of `a` under σ, when σ is bijective.
    pub fn sigma_inverse(&self, a: RingElem) -> Option<RingElem> {
        match self.sigma {
            SigmaMap::Identity => Some(a),
            SigmaMap::Dilation(_) => self.elements().find(|&b| self.sigma(b) == a),
        }
    }

    /// True when `σ(Iᵏ) ⊆ Iᵏ` and `δ(Iᵏ) ⊆ Iᵏ⁺¹` for every `k`: exactly what is
    /// needed for every `G_k` to be a two-sided ideal of the series ring.
    pub fn preserves_filtration(&self) -> bool {
        (0..=self.nilpotency).all(|k| {
            self.ideal_power_elements(k).all(|a| {
                self.in_ideal_power(self.sigma(a), k) && self.in_ideal_power(self.delta(a), k + 1)
            })
        })
    }

    /// Whether `σ(I) = I` holds, not only `σ(I) ⊆ I`.
    pub fn sigma_fixes_radical(&self) -> bool {
        let mut image = vec![false; self.size];
        for a in self.ideal_power_elements(1) {
            image[self.sigma(a).index()] = true;
        }
        self.ideal_power_elements(1).all(|a| image[a.index()])
    }

    /// True when the element's rendering needs parentheses as a factor.
    pub fn is_compound(&self, a: RingElem) -> bool {
        match self.carrier {
            Carrier::ZMod { .. } => false,
            Carrier::TruncPoly { .. } => {
                let (d, m) = self.digits(a);
                d[..m].iter().filter(|&&c| c != 0).count() > 1
            }
        }
    }

    /// Generator of `Iᵏ` as printed in modulus annotations (`8`, `t^2`).
    pub fn render_ideal_generator(&self, k: usize) -> String {
        let k = k.min(self.nilpotency);
        match self.carrier {
            Carrier::ZMod { p, .. } => alloc::format!("{}", (p as u64).pow(k as u32)),
            Carrier::TruncPoly { .. } => match k {
                0 => "1".into(),
                1 => "t".into(),
                _ => alloc::format!("t^{k}"),
            },
        }
    }

    pub fn render(&self, a: RingElem) -> String {
        match self.carrier {
            Carrier::ZMod { .. } => alloc::format!("{}", a.0),
            Carrier::TruncPoly { .. } => {
                let (d, m) = self.digits(a);
                let mut out = String::new();
                for (k, &c) in d[..m].iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    if !out.is_empty() {
                        out.push_str(" + ");
                    }
                    let _ = match (k, c) {
                        (0, c) => write!(out, "{c}"),
                        (1, 1) => write!(out, "t"),
                        (1, c) => write!(out, "{c}*t"),
                        (k, 1) => write!(out, "t^{k}"),
                        (k, c) => write!(out, "{c}*t^{k}"),
                    };
                }
                if out.is_empty() {
                    out.push('0');
                }
                out
            }
        }
    }
}

impl FiniteRing for RingContext {
    fn cardinality(&self) -> usize {
        self.size
    }

    fn element(&self, i: usize) -> RingElem {
        RingElem(i as u32)
    }

    fn zero(&self) -> RingElem {
        RingContext::zero(self)
    }

    fn one(&self) -> RingElem {
        RingContext::one(self)
    }

    fn add(&self, a: RingElem, b: RingElem) -> RingElem {
        RingContext::add(self, a, b)
    }

    fn neg(&self, a: RingElem) -> RingElem {
        RingContext::neg(self, a)
    }

    fn mul(&self, a: RingElem, b: RingElem) -> RingElem {
        RingContext::mul(self, a, b)
    }

    fn render(&self, a: RingElem) -> String {
        RingContext::render(self, a)
    }
}
