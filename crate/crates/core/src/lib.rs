//! Exact admissible invariants of polarized metrized graphs of total genus 3.

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod poly;
pub mod rational;
pub mod resistance;

pub use error::{Error, Result};
pub use graph::PmGraph;
pub use invariants::{invariant_set, InvariantSet};
pub use rational::Rational;
