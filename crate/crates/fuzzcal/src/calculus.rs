//! Derivatives and integrals of fuzzy functions.
//!
//! The gH-derivative differentiates the three components and then asks which
//! ordering they admit: kept order is case 1 (`i.gH`), flipped order is
//! case 2 (`ii.gH`), neither is a failure of gH-differentiability. The
//! fractional derivative of order `alpha` is the gH-derivative times
//! `(tau - basepoint)^(1 - alpha)`; since that factor is positive it cannot
//! change the case. A switching point is where the case changes, which is
//! exactly a sign change of the support-width derivative.

use serde::{Deserialize, Serialize};

use crate::context::ConformableContext;
use crate::error::{Error, Result};
use crate::function::FuzzyFunction;
use crate::number::{DiffCase, GHDiffResult, TriangularFuzzyNumber};
use crate::quad;

/// Absolute tolerance when comparing component derivatives for the case
/// classification. Crisp functions hit exact ties; anything within this
/// band is treated as a tie as well.
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Default finite-difference step at `tau`.
pub fn derivative_step(tau: f64) -> f64 {
    1e-6 * tau.abs().max(1.0)
}

/// Componentwise numerical derivatives: central differences in the
/// interior, second-order one-sided stencils at the domain boundary (one
/// order less accurate there).
fn component_derivatives(f: &FuzzyFunction, tau: f64, h: f64) -> Result<[f64; 3]> {
    let (lo, hi) = f.domain();
    if !(tau >= lo && tau <= hi) {
        return Err(Error::OutOfDomain { tau, lo, hi });
    }
    if tau - h >= lo && tau + h <= hi {
        let plus = f.components_at(tau + h)?;
        let minus = f.components_at(tau - h)?;
        Ok(std::array::from_fn(|i| (plus[i] - minus[i]) / (2.0 * h)))
    } else if tau + 2.0 * h <= hi {
        let f0 = f.components_at(tau)?;
        let f1 = f.components_at(tau + h)?;
        let f2 = f.components_at(tau + 2.0 * h)?;
        Ok(std::array::from_fn(|i| {
            (-3.0 * f0[i] + 4.0 * f1[i] - f2[i]) / (2.0 * h)
        }))
    } else if tau - 2.0 * h >= lo {
        let f0 = f.components_at(tau)?;
        let f1 = f.components_at(tau - h)?;
        let f2 = f.components_at(tau - 2.0 * h)?;
        Ok(std::array::from_fn(|i| {
            (3.0 * f0[i] - 4.0 * f1[i] + f2[i]) / (2.0 * h)
        }))
    } else {
        Err(Error::OutOfDomain { tau, lo, hi })
    }
}

/// Orders component derivatives into a gH-derivative. Returns the result
/// and whether the classification was ambiguous (both orderings hold, i.e.
/// the function is crisp at `tau` up to [`CLASSIFY_TOL`]).
fn classify_components(d: [f64; 3], tau: f64) -> Result<(GHDiffResult, bool)> {
    let [d1, d2, d3] = d;
    let case_i = d1 <= d2 + CLASSIFY_TOL && d2 <= d3 + CLASSIFY_TOL;
    let case_ii = d3 <= d2 + CLASSIFY_TOL && d2 <= d1 + CLASSIFY_TOL;
    let build = |a: f64, b: f64, c: f64, case: DiffCase| -> Result<GHDiffResult> {
        Ok(GHDiffResult {
            value: TriangularFuzzyNumber::from_components_repair(a, b, c, CLASSIFY_TOL)?,
            case,
        })
    };
    match (case_i, case_ii) {
        // Tie-break: a crisp derivative is reported as case 1.
        (true, true) => Ok((build(d1, d2, d3, DiffCase::CaseI)?, true)),
        (true, false) => Ok((build(d1, d2, d3, DiffCase::CaseI)?, false)),
        (false, true) => Ok((build(d3, d2, d1, DiffCase::CaseII)?, false)),
        (false, false) => Err(Error::NotGHDifferentiable(tau)),
    }
}

/// Generalized Hukuhara derivative of `f` at `tau`.
///
/// `step` overrides the finite-difference step; the default is
/// `1e-6 * max(1, |tau|)`.
pub fn gh_derivative(f: &FuzzyFunction, tau: f64, step: Option<f64>) -> Result<GHDiffResult> {
    let h = step.unwrap_or_else(|| derivative_step(tau));
    let d = component_derivatives(f, tau, h)?;
    Ok(classify_components(d, tau)?.0)
}

/// Which differentiability case holds at `tau`.
pub fn classify_case(f: &FuzzyFunction, tau: f64) -> Result<DiffCase> {
    Ok(gh_derivative(f, tau, None)?.case)
}

/// Case plus an ambiguity flag (`true` when both orderings hold, so the
/// case tag is only a convention).
pub fn classify_case_detailed(f: &FuzzyFunction, tau: f64) -> Result<(DiffCase, bool)> {
    let h = derivative_step(tau);
    let d = component_derivatives(f, tau, h)?;
    let (res, ambiguous) = classify_components(d, tau)?;
    Ok((res.case, ambiguous))
}

/// Conformable fractional gH-derivative:
/// `(tau - basepoint)^(1 - alpha)` times the gH-derivative.
///
/// The limit definition is only reproduced for `tau` strictly beyond the
/// basepoint; at `tau = basepoint` the prefactor vanishes while the first
/// derivative may blow up, so that point is rejected.
pub fn conformable_derivative(
    f: &FuzzyFunction,
    ctx: &ConformableContext,
    tau: f64,
) -> Result<GHDiffResult> {
    let factor = ctx.conformable_factor(tau)?;
    let gh = gh_derivative(f, tau, None)?;
    Ok(GHDiffResult {
        value: gh.value.scale(factor),
        case: gh.case,
    })
}

/// Where the differentiability case flips.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SwitchingPoint {
    pub location: f64,
    pub kind: SwitchKind,
}

/// Type I switches case 1 -> case 2 (width stops growing);
/// type II switches case 2 -> case 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SwitchKind {
    TypeI,
    TypeII,
}

impl std::fmt::Display for SwitchKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SwitchKind::TypeI => write!(f, "TypeI"),
            SwitchKind::TypeII => write!(f, "TypeII"),
        }
    }
}

/// Default scan resolution for [`find_switching_points`].
pub const DEFAULT_SWITCH_GRID: usize = 1024;

/// Scans `[lo, hi]` for sign changes of the support-width derivative
/// `d/dtau (w3 - w1)` on a `grid_n`-point grid, then sharpens each bracket
/// by bisection to `1e-9 * (hi - lo)`. A `+` to `-` change is type I, `-`
/// to `+` is type II. No sign change means no switching points.
pub fn find_switching_points(
    f: &FuzzyFunction,
    lo: f64,
    hi: f64,
    grid_n: usize,
) -> Result<Vec<SwitchingPoint>> {
    if !(lo < hi) {
        return Err(Error::InvalidParameter(format!(
            "switching-point interval [{lo}, {hi}] is empty"
        )));
    }
    if grid_n < 2 {
        return Err(Error::InvalidParameter(
            "switching-point grid needs at least 2 points".to_string(),
        ));
    }
    let (dom_lo, dom_hi) = f.domain();
    if lo < dom_lo || hi > dom_hi {
        return Err(Error::OutOfDomain {
            tau: if lo < dom_lo { lo } else { hi },
            lo: dom_lo,
            hi: dom_hi,
        });
    }
    let width_slope = |tau: f64| -> Result<f64> {
        let d = component_derivatives(f, tau, derivative_step(tau))?;
        Ok(d[2] - d[0])
    };
    let tau_at = |i: usize| lo + (hi - lo) * i as f64 / (grid_n - 1) as f64;

    // Grid signs, skipping exact zeros when pairing up brackets.
    let mut marks: Vec<(f64, f64)> = Vec::new(); // (tau, g)
    for i in 0..grid_n {
        let tau = tau_at(i);
        let g = width_slope(tau)?;
        if g != 0.0 {
            marks.push((tau, g));
        }
    }
    let tol = 1e-9 * (hi - lo);
    let mut found = Vec::new();
    for pair in marks.windows(2) {
        let (mut a, ga) = pair[0];
        let (mut b, _gb) = pair[1];
        if (ga > 0.0) == (pair[1].1 > 0.0) {
            continue;
        }
        let left_positive = ga > 0.0;
        while b - a > tol {
            let mid = 0.5 * (a + b);
            let gm = width_slope(mid)?;
            if gm == 0.0 {
                a = mid;
                b = mid;
                break;
            }
            if (gm > 0.0) == left_positive {
                a = mid;
            } else {
                b = mid;
            }
        }
        found.push(SwitchingPoint {
            location: 0.5 * (a + b),
            kind: if left_positive {
                SwitchKind::TypeI
            } else {
                SwitchKind::TypeII
            },
        });
    }
    Ok(found)
}

/// Conformable fractional integral
/// `int_a^tau (xi - a)^(alpha - 1) f(xi) dxi`, componentwise.
///
/// Computed after substituting the warped clock
/// `u = (xi - a)^alpha / alpha`, which removes the endpoint singularity
/// exactly: the integrand becomes `f(unwarp(u))` on `[0, warp(tau)]`.
pub fn conformable_integral(
    f: &FuzzyFunction,
    ctx: &ConformableContext,
    tau: f64,
) -> Result<TriangularFuzzyNumber> {
    if tau <= ctx.basepoint() {
        return Err(Error::AtOrBeforeBasepoint {
            tau,
            basepoint: ctx.basepoint(),
        });
    }
    let upper = ctx.warped_time(tau);
    let mut vals = [0.0f64; 3];
    for (i, v) in vals.iter_mut().enumerate() {
        let q = quad::integrate(
            |u| {
                let t = ctx.unwarped_time(u).min(tau);
                f.components_at(t).map(|c| c[i]).unwrap_or(f64::NAN)
            },
            0.0,
            upper,
            1e-10,
            1e-13,
        )?;
        *v = q.value;
    }
    let scale = vals[0].abs().max(vals[1].abs()).max(vals[2].abs()).max(1.0);
    TriangularFuzzyNumber::from_components_repair(vals[0], vals[1], vals[2], 1e-9 * scale)
}
