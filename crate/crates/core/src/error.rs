use alloc::string::String;
use core::fmt;

/// Errors raised by ring construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A ring preset string could not be understood.
    InvalidPreset(String),
    /// The requested carrier is too large to materialize.
    CarrierTooLarge { size: u64, limit: u64 },
    /// `k` is outside `0..=radical_nilpotency`.
    InvalidIdealPower { k: usize, max: usize },
    /// Operands live over different coefficient rings.
    ContextMismatch,
    /// Operands are truncated at different precisions.
    PrecisionMismatch { left: usize, right: usize },
    /// Truncation precision must be at least one.
    InvalidPrecision(usize),
    /// σ and δ do not preserve the radical filtration, so `G_N` is not an ideal.
    IncompatibleStructure(&'static str),
    ZeroSymbol,
    /// A graded component whose representative does not lie in its layer.
    InvalidGradedComponent { layer: usize, xdeg: usize },
    NotIdempotent,
    UnsupportedBase,
    NotUnimodular,
    NotInvertible,
    DimensionMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPreset(msg) => write!(f, "invalid ring preset: {msg}"),
            Error::CarrierTooLarge { size, limit } => {
                write!(f, "carrier of size {size} exceeds the limit {limit}")
            }
            Error::InvalidIdealPower { k, max } => {
                write!(f, "invalid ideal power {k} (expected 0..={max})")
            }
            Error::ContextMismatch => f.write_str("operands belong to different rings"),
            Error::PrecisionMismatch { left, right } => {
                write!(f, "precision mismatch: N={left} vs N={right}")
            }
            Error::InvalidPrecision(n) => write!(f, "invalid precision N={n} (need N >= 1)"),
            Error::IncompatibleStructure(what) => {
                write!(f, "structure maps do not preserve the filtration: {what}")
            }
            Error::InvalidGradedComponent { layer, xdeg } => {
                write!(f, "component ({layer}, {xdeg}) does not lie in its radical layer")
            }
            Error::ZeroSymbol => f.write_str("zero has no principal symbol"),
            Error::NotIdempotent => f.write_str("not idempotent"),
            Error::UnsupportedBase => f.write_str("unsupported base"),
            Error::NotUnimodular => f.write_str("not unimodular"),
            Error::NotInvertible => f.write_str("matrix is not invertible"),
            Error::DimensionMismatch => f.write_str("matrix dimensions do not match"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
