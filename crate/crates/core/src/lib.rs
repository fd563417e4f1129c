//! Exact certificates for the existence of rational curves on Calabi-Yau
//! threefolds, computed from intersection data alone: the cubic form of the
//! intersection ring, the second Chern class and a candidate divisor.
//!
//! Everything is exact rational arithmetic. A certificate records the rule
//! that fired, its witnesses and a trace of every value it relied on, so that
//! `certify::replay` can check it independently.

pub mod certify;
pub mod cli;
pub mod cubicchase;
pub mod cubicfactor;
pub mod error;
pub mod exactmath;
pub mod nsring;
pub mod quadpoints;

pub use error::{Error, Result};
