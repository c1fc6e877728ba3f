//! The long-form guide, compiled straight from the book chapters so that
//! `cargo test --doc` runs every code snippet the book shows. A failing
//! snippet here means the book has drifted from the library.

#[doc = include_str!("../../../book/src/fuzzy-numbers.md")]
pub mod fuzzy_numbers {}

#[doc = include_str!("../../../book/src/derivatives.md")]
pub mod derivatives {}

#[doc = include_str!("../../../book/src/laplace.md")]
pub mod laplace_transform {}

#[doc = include_str!("../../../book/src/solving-ivps.md")]
pub mod solving_ivps {}
