//! Instance generation, rendering and batch experiments.

pub mod gen;
pub mod svg;
pub mod experiment;
