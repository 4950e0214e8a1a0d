//! Code listings of the guide in `book/`, compiled and run as doctests so
//! the prose cannot drift away from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/blowups.md")]
pub mod blowups {}
#[doc = include_str!("../../../book/src/standard-forms.md")]
pub mod standard_forms {}
#[doc = include_str!("../../../book/src/transformations.md")]
pub mod transformations {}
#[doc = include_str!("../../../book/src/invariants.md")]
pub mod invariants {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
