//! Slow, independent reference computations for checking `fuzzcal`.
//!
//! Everything here is deliberately built from scratch on plain `f64`
//! triples and closures: none of it calls into the main library, so a bug
//! there cannot hide behind a matching bug here. The routines favour
//! obviousness over speed — they exist to be trusted, not to be fast.

pub mod diff;
pub mod levels;
pub mod quad;

pub use diff::derivative;
pub use levels::{gh_difference_levels, hausdorff_sup, triangle_cut, LevelInterval};
pub use quad::{
    integrate_adaptive, integrate_tanh_sinh, integrate_to_infinity, QuadError, Quadrature,
};
