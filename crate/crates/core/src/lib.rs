//! Weighted edit distance `ED_a`: insertions and deletions cost 1,
//! substitutions cost `1/a`.
//!
//! The crate provides exact bounded computation ([`exact`]), randomized
//! `(1+ε)`-gap decision procedures ([`approx`]) built on a sampled
//! approximate-LCE index ([`approx_lce`], [`sketch`]), generators for the
//! hardness constructions ([`gadgets`]), and brute-force references
//! ([`oracle`]).

pub mod approx;
pub mod approx_lce;
pub mod cost;
pub mod error;
pub mod exact;
pub mod gadgets;
pub mod lce;
pub mod oracle;
pub mod rng;
pub mod sketch;
pub mod text;

pub use cost::{cost_add, parse_rational, Rational, ScaledCost, Threshold};
pub use error::{Error, Result};
pub use rng::{sample_rate_positions, RandomSource};
pub use text::{load_text, ByteText};
