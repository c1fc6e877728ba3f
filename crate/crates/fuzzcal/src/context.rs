//! The `(alpha, basepoint)` pair that parameterizes every fractional
//! operation in the crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order `alpha` in `(0, 1]` and basepoint `tau0 >= 0`.
///
/// Derivatives, integrals and transforms are all taken "of order alpha from
/// the basepoint". At `alpha = 1` everything degenerates to classical
/// first-order calculus; the test suite pins that down.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConformableContext {
    alpha: f64,
    basepoint: f64,
}

impl ConformableContext {
    pub fn new(alpha: f64, basepoint: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        if !(basepoint >= 0.0) {
            return Err(Error::NegativeBasepoint(basepoint));
        }
        Ok(Self { alpha, basepoint })
    }

    /// Classical calculus: order 1 from the given basepoint.
    pub fn classical(basepoint: f64) -> Result<Self> {
        Self::new(1.0, basepoint)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn basepoint(&self) -> f64 {
        self.basepoint
    }

    /// The warped clock `u = (tau - basepoint)^alpha / alpha`.
    ///
    /// Substituting `u` for `tau` turns the fractional transform into an
    /// ordinary Laplace integral and removes the `(tau - basepoint)^(alpha-1)`
    /// endpoint singularity from the fractional integral.
    pub fn warped_time(&self, tau: f64) -> f64 {
        (tau - self.basepoint).powf(self.alpha) / self.alpha
    }

    /// Inverse of [`warped_time`](Self::warped_time):
    /// `tau = basepoint + (alpha u)^(1/alpha)`.
    pub fn unwarped_time(&self, u: f64) -> f64 {
        self.basepoint + (self.alpha * u).powf(1.0 / self.alpha)
    }

    /// `(tau - basepoint)^(1 - alpha)`, the factor that links the
    /// fractional derivative to the first derivative. Requires
    /// `tau > basepoint`.
    pub fn conformable_factor(&self, tau: f64) -> Result<f64> {
        if tau <= self.basepoint {
            return Err(Error::AtOrBeforeBasepoint {
                tau,
                basepoint: self.basepoint,
            });
        }
        Ok((tau - self.basepoint).powf(1.0 - self.alpha))
    }
}
