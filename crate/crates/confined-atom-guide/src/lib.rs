//! The confined-atom guide, compiled.
//!
//! mdbook renders the Markdown under `book/src/` at the workspace root;
//! this crate includes the same files as rustdoc module documentation so
//! that `cargo test` runs every fenced code block in the guide as a doctest. A snippet
//! that stops compiling — or an assertion that stops holding — fails the
//! workspace build, which keeps the prose in lockstep with the library.
//! (Technique borrowed from jiff's book.)
//!
//! One module per chapter, so a doctest failure names the chapter it came
//! from.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/bound-states.md")]
pub mod bound_states {}

#[doc = include_str!("../../../book/src/static-response.md")]
pub mod static_response {}

#[doc = include_str!("../../../book/src/resonances.md")]
pub mod resonances {}

#[doc = include_str!("../../../book/src/dynamic-response.md")]
pub mod dynamic_response {}

#[doc = include_str!("../../../book/src/spectral-oracle.md")]
pub mod spectral_oracle {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
