//! Shared fixtures for the criterion benchmarks.

use hexdim::generators::{build_hc, HcParams};
use hexdim::graph::LabeledGraph;

pub fn hc(a: u32, b: u32, c: u32) -> LabeledGraph {
    build_hc(HcParams { a, b, c }).expect("valid parameters")
}
