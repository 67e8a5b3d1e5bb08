//! The guide in `book/` and the README as doctests. mdbook cannot resolve
//! workspace crates when testing, so each chapter becomes a module doc here
//! and `cargo test --doc` runs its listings. A failing doctest names the
//! chapter module.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-linear-algebra.md")]
pub mod exact_linear_algebra {}

#[doc = include_str!("../../../book/src/quadratic-algebras.md")]
pub mod quadratic_algebras {}

#[doc = include_str!("../../../book/src/cohom.md")]
pub mod cohom {}

#[doc = include_str!("../../../book/src/representations.md")]
pub mod representations {}

#[doc = include_str!("../../../book/src/corepresentations.md")]
pub mod corepresentations {}

#[doc = include_str!("../../../book/src/translation.md")]
pub mod translation {}

#[doc = include_str!("../../../book/src/categories.md")]
pub mod categories {}

#[doc = include_str!("../../../book/src/fixtures.md")]
pub mod fixtures {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
