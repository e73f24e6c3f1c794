//! Fixed points, subnetworks and signed interaction graphs of Boolean networks.
//!
//! A network over components `V = {v_1 < … < v_n}` is a map `f: {0,1}^n → {0,1}^n`
//! stored as a dense truth table. Points are `u32` codes where bit `k` is the
//! value of the `k`-th component in ascending label order; the textual form
//! writes the smallest label first.

pub mod dot;
pub mod dynamics;
pub mod error;
pub mod hypercube;
pub mod network;
pub mod siggraph;
pub mod subnetwork;
pub mod theorems;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use hypercube::{ComponentSet, Components, Label, Point, PointSet};
pub use network::{BooleanNetwork, EosdClass, ParityClass};

pub use siggraph::{CircularForm, Cycle, Sign, SignedDigraph};
pub use subnetwork::{CriticalityReport, SubnetworkSpec};
