//! The guide under `book/src`, compiled so its snippets run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/field.md")]
pub mod field {}

#[doc = include_str!("../../../book/src/ring.md")]
pub mod ring {}

#[doc = include_str!("../../../book/src/gray.md")]
pub mod gray {}

#[doc = include_str!("../../../book/src/expressions.md")]
pub mod expressions {}

#[doc = include_str!("../../../book/src/construction.md")]
pub mod construction {}

#[doc = include_str!("../../../book/src/duals.md")]
pub mod duals {}

#[doc = include_str!("../../../book/src/distance.md")]
pub mod distance {}

#[doc = include_str!("../../../book/src/reproduction.md")]
pub mod reproduction {}

#[doc = include_str!("../../../book/src/divergences.md")]
pub mod divergences {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
