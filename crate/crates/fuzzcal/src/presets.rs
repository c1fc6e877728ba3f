//! The worked models and named function profiles used by the command-line
//! presets, the guide, and the test suite.

use crate::context::ConformableContext;
use crate::error::Result;
use crate::function::{FormTerm, FunctionSpec};
use crate::number::TriangularFuzzyNumber;
use crate::solver::LinearFCFIVP;

fn tfn(a: f64, b: f64, c: f64) -> TriangularFuzzyNumber {
    TriangularFuzzyNumber::new(a, b, c).expect("preset triples are ordered")
}

/// Bacteria growth in an old yogurt jar: initial population
/// `(516, 540, 598)`, growth rate `1/30`, order `1/5`.
pub fn yogurt_problem() -> Result<LinearFCFIVP> {
    LinearFCFIVP::growth(
        tfn(516.0, 540.0, 598.0),
        1.0 / 30.0,
        ConformableContext::new(0.2, 0.0)?,
    )
}

/// One-compartment drug elimination: injected dose `(3.97, 4.3, 5.1)` mg.
/// The model leaves the elimination rate and the order open; this preset
/// fixes `kappa = 1/4` and `alpha = 1/2`.
pub fn drug_problem() -> Result<LinearFCFIVP> {
    LinearFCFIVP::decay(tfn(3.97, 4.3, 5.1), 0.25, ConformableContext::new(0.5, 0.0)?)
}

/// A building cooling after its furnace fails at midnight: inside
/// temperature `(59.1, 70, 80.6)` F, outside `(6.8, 7, 7.85)` F,
/// `kappa = 1/20`, order `1/2`.
pub fn cooling_problem() -> Result<LinearFCFIVP> {
    LinearFCFIVP::cooling(
        tfn(59.1, 70.0, 80.6),
        tfn(6.8, 7.0, 7.85),
        1.0 / 20.0,
        ConformableContext::new(0.5, 0.0)?,
    )
}

/// The sine profile `(2.3 sin tau, 5.6 sin tau, 9.7 sin tau)` on `[0, pi]`
/// at order `1/2` — the standard example of a case switch at `pi/2`.
pub fn sines_function() -> Result<FunctionSpec> {
    FunctionSpec::new(
        0.5,
        0.0,
        vec![FormTerm::Sin {
            coeff: tfn(2.3, 5.6, 9.7),
        }],
    )?
    .with_domain(0.0, Some(std::f64::consts::PI))
}

/// The constant `(1, 2, 3)` on `[0, inf)` at order `1/2`.
pub fn constant_function() -> Result<FunctionSpec> {
    FunctionSpec::new(
        0.5,
        0.0,
        vec![FormTerm::Constant {
            coeff: tfn(1.0, 2.0, 3.0),
        }],
    )
}

/// The closed-form growth solution of [`yogurt_problem`] as a function
/// profile: `(516, 540, 598) * exp((1/30) tau^(1/5) / (1/5))`.
pub fn growth_function() -> Result<FunctionSpec> {
    FunctionSpec::new(
        0.2,
        0.0,
        vec![FormTerm::Exp {
            coeff: tfn(516.0, 540.0, 598.0),
            rate: 1.0 / 30.0,
        }],
    )
}
