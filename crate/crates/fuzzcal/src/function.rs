//! Fuzzy-valued functions of one real variable.
//!
//! Two representations live here. [`FuzzyFunction`] is the general runtime
//! object — three component callables (or a sampled table with linear
//! interpolation) plus a domain. [`FunctionSpec`] is a closed vocabulary of
//! named forms (constants, conformable exponentials, sine profiles and
//! their sums) that can be parsed from JSON, printed back, and pattern
//! matched by the symbolic transform table.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::context::ConformableContext;
use crate::error::{Error, Result};
use crate::number::TriangularFuzzyNumber;

type Component = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Repr {
    Closed([Component; 3]),
    Sampled(Vec<(f64, TriangularFuzzyNumber)>),
}

/// A map `tau -> TriangularFuzzyNumber` on a domain `[lo, hi]`
/// (`hi` may be infinite for closed forms).
#[derive(Clone)]
pub struct FuzzyFunction {
    repr: Repr,
    lo: f64,
    hi: f64,
}

impl std::fmt::Debug for FuzzyFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match &self.repr {
            Repr::Closed(_) => "closed-form",
            Repr::Sampled(s) => return write!(f, "FuzzyFunction(sampled, {} knots)", s.len()),
        };
        write!(f, "FuzzyFunction({kind} on [{}, {}])", self.lo, self.hi)
    }
}

impl FuzzyFunction {
    /// Builds from three component callables with `w1 <= w2 <= w3` required
    /// on the domain. The ordering is spot-checked on a 129-point grid
    /// (over `[lo, lo + 10]` when the domain is unbounded); callers remain
    /// responsible for ordering between grid points.
    pub fn from_components(
        w1: impl Fn(f64) -> f64 + Send + Sync + 'static,
        w2: impl Fn(f64) -> f64 + Send + Sync + 'static,
        w3: impl Fn(f64) -> f64 + Send + Sync + 'static,
        lo: f64,
        hi: f64,
    ) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::InvalidFunction(format!(
                "domain [{lo}, {hi}] is empty"
            )));
        }
        let f = Self {
            repr: Repr::Closed([Arc::new(w1), Arc::new(w2), Arc::new(w3)]),
            lo,
            hi,
        };
        f.spot_check_ordering()?;
        Ok(f)
    }

    /// Builds from samples `(tau, value)` with strictly increasing `tau`;
    /// evaluation between knots is piecewise linear.
    pub fn from_samples(samples: Vec<(f64, TriangularFuzzyNumber)>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidFunction(
                "need at least two samples".to_string(),
            ));
        }
        if !samples.windows(2).all(|w| w[0].0 < w[1].0) {
            return Err(Error::InvalidFunction(
                "sample abscissas must be strictly increasing".to_string(),
            ));
        }
        let lo = samples.first().unwrap().0;
        let hi = samples.last().unwrap().0;
        Ok(Self {
            repr: Repr::Sampled(samples),
            lo,
            hi,
        })
    }

    /// The constant function with value `k` on `[0, inf)`.
    pub fn constant(k: TriangularFuzzyNumber) -> Self {
        let [a, b, c] = k.as_array();
        Self {
            repr: Repr::Closed([
                Arc::new(move |_| a),
                Arc::new(move |_| b),
                Arc::new(move |_| c),
            ]),
            lo: 0.0,
            hi: f64::INFINITY,
        }
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    fn spot_check_ordering(&self) -> Result<()> {
        let span_hi = if self.hi.is_finite() {
            self.hi
        } else {
            self.lo + 10.0
        };
        let n = 128;
        for k in 0..=n {
            let tau = self.lo + (span_hi - self.lo) * k as f64 / n as f64;
            let [a, b, c] = self.components_at(tau)?;
            let tol = 1e-12 * a.abs().max(b.abs()).max(c.abs()).max(1.0);
            TriangularFuzzyNumber::from_components_repair(a, b, c, tol).map_err(|_| {
                Error::InvalidFunction(format!(
                    "components are out of order at tau = {tau}: ({a}, {b}, {c})"
                ))
            })?;
        }
        Ok(())
    }

    /// Raw component values at `tau`, domain checked but not
    /// ordering checked.
    pub fn components_at(&self, tau: f64) -> Result<[f64; 3]> {
        if !(tau >= self.lo && tau <= self.hi) {
            return Err(Error::OutOfDomain {
                tau,
                lo: self.lo,
                hi: self.hi,
            });
        }
        match &self.repr {
            Repr::Closed([w1, w2, w3]) => Ok([w1(tau), w2(tau), w3(tau)]),
            Repr::Sampled(samples) => {
                let idx = samples.partition_point(|(t, _)| *t <= tau);
                if idx == 0 {
                    return Ok(samples[0].1.as_array());
                }
                if idx == samples.len() {
                    return Ok(samples[samples.len() - 1].1.as_array());
                }
                let (t0, v0) = samples[idx - 1];
                let (t1, v1) = samples[idx];
                let w = (tau - t0) / (t1 - t0);
                let a0 = v0.as_array();
                let a1 = v1.as_array();
                Ok([
                    a0[0] + w * (a1[0] - a0[0]),
                    a0[1] + w * (a1[1] - a0[1]),
                    a0[2] + w * (a1[2] - a0[2]),
                ])
            }
        }
    }

    /// Value at `tau` as a validated triangular number.
    pub fn eval(&self, tau: f64) -> Result<TriangularFuzzyNumber> {
        let [a, b, c] = self.components_at(tau)?;
        let tol = 1e-12 * a.abs().max(b.abs()).max(c.abs()).max(1.0);
        TriangularFuzzyNumber::from_components_repair(a, b, c, tol)
    }

    /// Support width `w3(tau) - w1(tau)`.
    pub fn diameter_at(&self, tau: f64) -> Result<f64> {
        let [a, _, c] = self.components_at(tau)?;
        Ok(c - a)
    }
}

/// One named closed-form term. The fuzzy coefficient scales all three
/// components; `exp` terms grow like `exp(rate * (tau - tau0)^alpha / alpha)`
/// in the conformable clock of the owning [`FunctionSpec`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum FormTerm {
    Constant {
        coeff: TriangularFuzzyNumber,
    },
    Exp {
        coeff: TriangularFuzzyNumber,
        rate: f64,
    },
    Sin {
        coeff: TriangularFuzzyNumber,
    },
}

impl FormTerm {
    fn components(&self, ctx: &ConformableContext, tau: f64) -> [f64; 3] {
        match self {
            FormTerm::Constant { coeff } => coeff.as_array(),
            FormTerm::Exp { coeff, rate } => {
                let factor = (rate * ctx.warped_time(tau)).exp();
                coeff.scale(factor).as_array()
            }
            FormTerm::Sin { coeff } => {
                let factor = tau.sin();
                coeff.scale(factor).as_array()
            }
        }
    }

    fn describe(&self, ctx: &ConformableContext) -> String {
        match self {
            FormTerm::Constant { coeff } => format!("{coeff}"),
            FormTerm::Exp { coeff, rate } => format!(
                "{coeff}*exp({rate}*(tau - {tau0})^{alpha}/{alpha})",
                tau0 = ctx.basepoint(),
                alpha = ctx.alpha(),
            ),
            FormTerm::Sin { coeff } => format!("{coeff}*sin(tau)"),
        }
    }
}

/// A fuzzy function given as a sum of named closed forms.
///
/// This is the JSON-facing schema for the `derive`, `switchpoints` and
/// `laplace` commands, and the carrier of closed-form solutions. `domain`
/// defaults to `[tau0, inf)`; a `null` upper end means unbounded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionSpec {
    pub alpha: f64,
    #[serde(default)]
    pub tau0: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<(f64, Option<f64>)>,
    pub terms: Vec<FormTerm>,
}

impl FunctionSpec {
    pub fn new(alpha: f64, tau0: f64, terms: Vec<FormTerm>) -> Result<Self> {
        let spec = Self {
            alpha,
            tau0,
            domain: None,
            terms,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_domain(mut self, lo: f64, hi: Option<f64>) -> Result<Self> {
        self.domain = Some((lo, hi));
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let ctx = self.context()?;
        if self.terms.is_empty() {
            return Err(Error::InvalidFunction("no terms given".to_string()));
        }
        let (lo, hi) = self.resolved_domain();
        if lo < ctx.basepoint() {
            return Err(Error::InvalidFunction(format!(
                "domain starts at {lo}, before the basepoint {}",
                ctx.basepoint()
            )));
        }
        if !(lo < hi) {
            return Err(Error::InvalidFunction(format!(
                "domain [{lo}, {hi}] is empty"
            )));
        }
        Ok(())
    }

    pub fn context(&self) -> Result<ConformableContext> {
        ConformableContext::new(self.alpha, self.tau0)
    }

    pub fn resolved_domain(&self) -> (f64, f64) {
        match self.domain {
            Some((lo, Some(hi))) => (lo, hi),
            Some((lo, None)) => (lo, f64::INFINITY),
            None => (self.tau0, f64::INFINITY),
        }
    }

    pub fn components_at(&self, tau: f64) -> Result<[f64; 3]> {
        let ctx = self.context()?;
        let mut acc = [0.0; 3];
        for term in &self.terms {
            let c = term.components(&ctx, tau);
            acc[0] += c[0];
            acc[1] += c[1];
            acc[2] += c[2];
        }
        Ok(acc)
    }

    /// Materializes the spec as a runtime [`FuzzyFunction`] (ordering
    /// spot-checked on the domain).
    pub fn to_fuzzy_function(&self) -> Result<FuzzyFunction> {
        self.validate()?;
        let ctx = self.context()?;
        let (lo, hi) = self.resolved_domain();
        let mk = |i: usize| -> Component {
            let terms = self.terms.clone();
            let ctx = ctx;
            Arc::new(move |tau: f64| terms.iter().map(|t| t.components(&ctx, tau)[i]).sum())
        };
        let f = FuzzyFunction {
            repr: Repr::Closed([mk(0), mk(1), mk(2)]),
            lo,
            hi,
        };
        f.spot_check_ordering()?;
        Ok(f)
    }

    /// Human-readable rendering, e.g.
    /// `(516, 540, 598)*exp(0.0333...*(tau - 0)^0.2/0.2)`.
    pub fn describe(&self) -> String {
        let ctx = match self.context() {
            Ok(ctx) => ctx,
            Err(_) => return "<invalid spec>".to_string(),
        };
        self.terms
            .iter()
            .map(|t| t.describe(&ctx))
            .collect::<Vec<_>>()
            .join(" (+) ")
    }
}
