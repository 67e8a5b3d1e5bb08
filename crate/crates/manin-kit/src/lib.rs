//! Exact computations for relatively (co)closed monoidal categories.

pub mod cohomcoend;
pub mod coreps;
pub mod exactlin;
pub mod fincat;
pub mod fixture;
pub mod laws;
pub mod linrep;
pub mod posetcat;
pub mod quadalg;
pub mod report;
pub mod suites;
pub mod translate;
