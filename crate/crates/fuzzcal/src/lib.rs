//! Fuzzy conformable fractional calculus over triangular fuzzy numbers.
//!
//! The crate provides, in dependency order:
//!
//! - [`number`]: triangular fuzzy numbers `(a, b, c)`, their level cuts,
//!   gH-arithmetic and the Hausdorff metric;
//! - [`calculus`]: gH-derivatives and conformable fractional derivatives of
//!   order `alpha` with differentiability-case tracking, switching-point
//!   detection, and the conformable integral;
//! - [`laplace`]: the fuzzy conformable Laplace transform — numerically and
//!   through an exact symbolic table with its inverse;
//! - [`solver`]: closed-form solutions of the linear fuzzy fractional
//!   initial value problems (growth, decay, Newton cooling) by the
//!   transform recipe, with automatic case selection.
//!
//! Everything is a pure function over immutable values; all types are
//! `Send + Sync` and safe to evaluate from any number of threads.
//!
//! ```
//! use fuzzcal::{ConformableContext, TriangularFuzzyNumber};
//! use fuzzcal::solver::{solve_growth, select_case};
//!
//! let w0 = TriangularFuzzyNumber::new(516.0, 540.0, 598.0)?;
//! let ctx = ConformableContext::new(0.2, 0.0)?;
//! let solution = solve_growth(w0, 1.0 / 30.0, ctx)?;
//! let at_one = solution.eval(1.0)?;
//! assert!((at_one.peak() - 540.0 * (1.0f64 / 6.0).exp()).abs() < 1e-9);
//! # Ok::<(), fuzzcal::Error>(())
//! ```

pub mod calculus;
mod context;
mod error;
mod function;
pub mod laplace;
mod number;
pub mod presets;
pub mod quad;
pub mod solver;

mod guide;

pub use context::ConformableContext;
pub use error::{Error, Result};
pub use function::{FormTerm, FunctionSpec, FuzzyFunction};
pub use number::{DiffCase, GHDiffResult, RCutInterval, TriangularFuzzyNumber};
