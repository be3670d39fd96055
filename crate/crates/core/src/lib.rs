//! Exact arithmetic for Ore extensions `R[x; σ, δ]` and their truncated
//! completions `S / G_N` over small finite local rings.
//!
//! The crate is `no_std` (it only needs `alloc`). Everything is pure value
//! arithmetic: contexts are immutable once built and are shared through
//! [`alloc::sync::Arc`].
//!
//! Layout:
//!
//! * [`ring`]: finite coefficient rings, the structure maps σ and δ, ideal
//!   powers of the radical, axiom checkers and the σ-nilpotence search.
//! * [`poly`]: skew polynomials in left normal form.
//! * [`series`]: truncated skew power series, the filtration `G_k` and
//!   closure checks.
//! * [`graded`]: principal symbols and the associated graded ring.
//! * [`matrix`] and [`k0`]: idempotent matrices over local bases, rank
//!   witnesses, stable isomorphisms and unimodular rows.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod graded;
pub mod k0;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod ring;
mod sample;
pub mod series;

pub use error::Error;
pub use graded::GradedElem;
pub use matrix::{LocalRing, Matrix};
pub use poly::{Degree, RightFormPoly, SkewPoly};
pub use report::{CheckReport, Counterexample};
pub use ring::{RingContext, RingElem, Valuation};
pub use series::{SeriesRing, TruncatedSeries};

pub type Result<T> = core::result::Result<T, Error>;
