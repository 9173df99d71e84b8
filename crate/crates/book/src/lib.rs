//! The chapters of the guide in `book/`, compiled so that `cargo test`
//! runs every snippet as a doc-test.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/pseudotree.md")]
pub mod pseudotree {}
#[doc = include_str!("../../../book/src/streams.md")]
pub mod streams {}
#[doc = include_str!("../../../book/src/arithmetic.md")]
pub mod arithmetic {}
#[doc = include_str!("../../../book/src/sequences.md")]
pub mod sequences {}
#[doc = include_str!("../../../book/src/ideals.md")]
pub mod ideals {}
#[doc = include_str!("../../../book/src/cauchy.md")]
pub mod cauchy {}
#[doc = include_str!("../../../book/src/riesz.md")]
pub mod riesz {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
