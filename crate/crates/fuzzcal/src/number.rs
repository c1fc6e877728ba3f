//! Triangular fuzzy numbers and their arithmetic.
//!
//! A triangular fuzzy number `(a, b, c)` has membership rising linearly
//! from `a` to the peak `b` and falling linearly to `c`. Its cut at
//! membership level `r` is the interval `[a + r(b - a), c - r(c - b)]`, so
//! every operation below has an equivalent reading in interval arithmetic;
//! the test suite exploits that to validate the closed forms here against a
//! dense-level interval oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered triple `(left, peak, right)` with `left <= peak <= right`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct TriangularFuzzyNumber {
    left: f64,
    peak: f64,
    right: f64,
}

impl TriangularFuzzyNumber {
    /// The crisp zero `(0, 0, 0)`.
    pub const ZERO: Self = Self {
        left: 0.0,
        peak: 0.0,
        right: 0.0,
    };

    pub fn new(left: f64, peak: f64, right: f64) -> Result<Self> {
        if left <= peak && peak <= right {
            Ok(Self { left, peak, right })
        } else {
            Err(Error::NotTriangular(left, peak, right))
        }
    }

    /// A crisp number: all three vertices coincide.
    pub fn crisp(value: f64) -> Self {
        Self {
            left: value,
            peak: value,
            right: value,
        }
    }

    /// Builds from components that may carry sub-`tol` rounding violations
    /// of the ordering, clamping them away. Anything worse is a real error.
    pub(crate) fn from_components_repair(a: f64, b: f64, c: f64, tol: f64) -> Result<Self> {
        if a <= b && b <= c {
            return Ok(Self {
                left: a,
                peak: b,
                right: c,
            });
        }
        if (a - b).max(0.0) <= tol && (b - c).max(0.0) <= tol {
            let peak = b.max(a);
            return Ok(Self {
                left: a,
                peak,
                right: c.max(peak),
            });
        }
        Err(Error::NotTriangular(a, b, c))
    }

    pub fn left(&self) -> f64 {
        self.left
    }

    pub fn peak(&self) -> f64 {
        self.peak
    }

    pub fn right(&self) -> f64 {
        self.right
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.left, self.peak, self.right]
    }

    /// Width of the support, `right - left`.
    pub fn width(&self) -> f64 {
        self.right - self.left
    }

    pub fn is_crisp(&self) -> bool {
        self.left == self.right
    }

    /// Interval cut at membership level `r` in `[0, 1]`.
    pub fn r_cut(&self, r: f64) -> Result<RCutInterval> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::LevelOutOfRange(r));
        }
        Ok(RCutInterval {
            lo: self.left + r * (self.peak - self.left),
            hi: self.right - r * (self.right - self.peak),
            level: r,
        })
    }

    /// Multiplication by a real scalar; negative scalars flip the endpoints.
    pub fn scale(&self, lambda: f64) -> Self {
        if lambda >= 0.0 {
            Self {
                left: lambda * self.left,
                peak: lambda * self.peak,
                right: lambda * self.right,
            }
        } else {
            Self {
                left: lambda * self.right,
                peak: lambda * self.peak,
                right: lambda * self.left,
            }
        }
    }

    /// Generalized Hukuhara difference `self (-)gH other`.
    ///
    /// Tries the case-1 candidate (componentwise difference) and the case-2
    /// candidate (reversed componentwise difference) and returns whichever
    /// is a valid triangular number, tagged with its case. When both are
    /// valid — the operands differ by a crisp shift — case 1 wins, matching
    /// the classical Hukuhara difference. When neither is valid the
    /// difference has left the triangular space and that is reported as
    /// [`Error::NotTriangular`] instead of being silently widened.
    pub fn gh_difference(&self, other: &Self) -> Result<GHDiffResult> {
        let da = self.left - other.left;
        let db = self.peak - other.peak;
        let dc = self.right - other.right;
        if da <= db && db <= dc {
            return Ok(GHDiffResult {
                value: Self {
                    left: da,
                    peak: db,
                    right: dc,
                },
                case: DiffCase::CaseI,
            });
        }
        if dc <= db && db <= da {
            return Ok(GHDiffResult {
                value: Self {
                    left: dc,
                    peak: db,
                    right: da,
                },
                case: DiffCase::CaseII,
            });
        }
        Err(Error::NotTriangular(da, db, dc))
    }

    /// Classical Hukuhara difference: the case-1 branch of
    /// [`gh_difference`](Self::gh_difference), or an error if only the
    /// case-2 branch exists.
    pub fn hukuhara_difference(&self, other: &Self) -> Result<Self> {
        let diff = self.gh_difference(other)?;
        match diff.case {
            DiffCase::CaseI => Ok(diff.value),
            DiffCase::CaseII => Err(Error::NotTriangular(
                self.left - other.left,
                self.peak - other.peak,
                self.right - other.right,
            )),
        }
    }

    /// Hausdorff distance, the supremum over levels of the endpoint
    /// deviations. For triangular numbers the supremum is attained at the
    /// vertices, so this reduces to the maximum componentwise deviation.
    pub fn hausdorff_distance(&self, other: &Self) -> f64 {
        (self.left - other.left)
            .abs()
            .max((self.peak - other.peak).abs())
            .max((self.right - other.right).abs())
    }

    /// Distance to the crisp zero; the norm used in boundedness estimates.
    pub fn magnitude(&self) -> f64 {
        self.hausdorff_distance(&Self::ZERO)
    }
}

impl std::ops::Add for TriangularFuzzyNumber {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            left: self.left + rhs.left,
            peak: self.peak + rhs.peak,
            right: self.right + rhs.right,
        }
    }
}

impl std::ops::Neg for TriangularFuzzyNumber {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl std::fmt::Display for TriangularFuzzyNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.left, self.peak, self.right)
    }
}

impl TryFrom<[f64; 3]> for TriangularFuzzyNumber {
    type Error = Error;

    fn try_from(v: [f64; 3]) -> Result<Self> {
        Self::new(v[0], v[1], v[2])
    }
}

impl From<TriangularFuzzyNumber> for [f64; 3] {
    fn from(t: TriangularFuzzyNumber) -> [f64; 3] {
        t.as_array()
    }
}

/// A closed interval at a fixed membership level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RCutInterval {
    pub lo: f64,
    pub hi: f64,
    pub level: f64,
}

impl RCutInterval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

/// Which branch of generalized Hukuhara differentiability holds.
///
/// Case 1 keeps the component order (`i.gH`), case 2 flips it (`ii.gH`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiffCase {
    #[serde(rename = "i.gH")]
    CaseI,
    #[serde(rename = "ii.gH")]
    CaseII,
}

impl std::fmt::Display for DiffCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DiffCase::CaseI => write!(f, "i.gH"),
            DiffCase::CaseII => write!(f, "ii.gH"),
        }
    }
}

/// A gH-difference or gH-derivative together with the case that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GHDiffResult {
    pub value: TriangularFuzzyNumber,
    pub case: DiffCase,
}
