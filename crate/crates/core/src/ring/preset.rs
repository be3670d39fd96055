use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use super::{Carrier, DeltaMap, RingContext, SigmaMap};
use crate::{Error, Result};

/// A parsed ring preset string.
///
/// Grammar:
///
/// ```text
/// zmod:<p>^<n>[:delta=zero|broken]
/// truncpoly:<q>:<m>:c=<unit>[:delta=zero|broken]
/// ```
///
/// `truncpoly` uses σ(f)(t) = f(c·t) and δ(f) = t·(σ(f) − f) unless the
/// modifier overrides δ. `delta=broken` installs δ(f) = u·f (u the radical
/// generator), which violates the σ-Leibniz rule and exists to exercise the
/// checkers.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Preset {
    pub carrier: Carrier,
    pub sigma: SigmaMap,
    pub delta: DeltaMap,
}

fn parse_num(field: &str, what: &str) -> Result<u32> {
    field
        .trim()
        .parse::<u32>()
        .map_err(|_| Error::InvalidPreset(format!("expected {what}, found {field:?}")))
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let kind = parts.next().unwrap_or_default();
        let mut preset = match kind {
            "zmod" => {
                let spec = parts
                    .next()
                    .ok_or_else(|| Error::InvalidPreset("zmod needs <p>^<n>".into()))?;
                let (p, n) = spec
                    .split_once('^')
                    .ok_or_else(|| Error::InvalidPreset(format!("expected <p>^<n>, found {spec:?}")))?;
                Preset {
                    carrier: Carrier::ZMod {
                        p: parse_num(p, "a prime")?,
                        n: parse_num(n, "an exponent")?,
                    },
                    sigma: SigmaMap::Identity,
                    delta: DeltaMap::Zero,
                }
            }
            "truncpoly" => {
                let q = parts
                    .next()
                    .ok_or_else(|| Error::InvalidPreset("truncpoly needs <q>".into()))?;
                let m = parts
                    .next()
                    .ok_or_else(|| Error::InvalidPreset("truncpoly needs <m>".into()))?;
                let c = parts
                    .next()
                    .and_then(|f| f.strip_prefix("c="))
                    .ok_or_else(|| Error::InvalidPreset("truncpoly needs c=<unit>".into()))?;
                let c = parse_num(c, "a unit")?;
                Preset {
                    carrier: Carrier::TruncPoly {
                        p: parse_num(q, "a prime")?,
                        m: parse_num(m, "a truncation length")?,
                    },
                    sigma: if c == 1 {
                        SigmaMap::Identity
                    } else {
                        SigmaMap::Dilation(c)
                    },
                    delta: DeltaMap::TwistDifference,
                }
            }
            other => return Err(Error::InvalidPreset(format!("unknown ring family {other:?}"))),
        };
        for modifier in parts {
            preset.delta = match modifier {
                "delta=zero" => DeltaMap::Zero,
                "delta=broken" => DeltaMap::RadicalScaling,
                other => return Err(Error::InvalidPreset(format!("unknown modifier {other:?}"))),
            };
        }
        Ok(preset)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.carrier, self.sigma) {
            (Carrier::ZMod { p, n }, _) => write!(f, "zmod:{p}^{n}")?,
            (Carrier::TruncPoly { p, m }, SigmaMap::Identity) => write!(f, "truncpoly:{p}:{m}:c=1")?,
            (Carrier::TruncPoly { p, m }, SigmaMap::Dilation(c)) => {
                write!(f, "truncpoly:{p}:{m}:c={c}")?
            }
        }
        let default_delta = match self.carrier {
            Carrier::ZMod { .. } => DeltaMap::Zero,
            Carrier::TruncPoly { .. } => DeltaMap::TwistDifference,
        };
        match self.delta {
            d if d == default_delta => Ok(()),
            DeltaMap::Zero => f.write_str(":delta=zero"),
            DeltaMap::RadicalScaling => f.write_str(":delta=broken"),
            DeltaMap::TwistDifference => Ok(()),
        }
    }
}

impl Preset {
    pub fn build(&self) -> Result<RingContext> {
        RingContext::new(self.carrier, self.sigma, self.delta)
    }
}

impl RingContext {
    /// Builds a context from a preset string such as `zmod:2^3` or
    /// `truncpoly:3:3:c=2`.
    pub fn from_preset(spec: &str) -> Result<Self> {
        spec.parse::<Preset>()?.build()
    }

    /// Canonical preset string for this context.
    pub fn preset(&self) -> String {
        Preset {
            carrier: self.carrier,
            sigma: self.sigma,
            delta: self.delta,
        }
        .to_string()
    }
}
