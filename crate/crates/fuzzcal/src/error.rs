use crate::number::DiffCase;

/// Everything that can go wrong across the crate.
///
/// The variants are deliberately specific: a caller that receives
/// [`Error::NotTriangular`] knows a generalized Hukuhara difference left the
/// space of triangular fuzzy numbers, which is a modelling problem, not a
/// numerical one.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    #[error("values ({0}, {1}, {2}) do not form a triangular fuzzy number")]
    NotTriangular(f64, f64, f64),

    #[error("membership level {0} lies outside [0, 1]")]
    LevelOutOfRange(f64),

    #[error("order {0} lies outside (0, 1]")]
    AlphaOutOfRange(f64),

    #[error("basepoint {0} must be non-negative")]
    NegativeBasepoint(f64),

    #[error("tau = {tau} lies outside the function domain [{lo}, {hi}]")]
    OutOfDomain { tau: f64, lo: f64, hi: f64 },

    #[error("tau = {tau} must lie strictly beyond the basepoint {basepoint}")]
    AtOrBeforeBasepoint { tau: f64, basepoint: f64 },

    #[error("not gH-differentiable at tau = {0}: component derivatives admit neither ordering")]
    NotGHDifferentiable(f64),

    #[error("quadrature stalled at error {achieved:.3e} (requested {requested:.3e})")]
    Integration { requested: f64, achieved: f64 },

    #[error("transform diverges at s = {s}: abscissa of convergence is {abscissa}")]
    DivergentTransform { s: f64, abscissa: f64 },

    #[error("no symbolic transform is known for this function form")]
    NoSymbolicForm,

    #[error("operands are differentiable in different cases; same-case operands required")]
    MixedCases,

    #[error("unsupported problem: {0}")]
    UnsupportedProblem(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid function specification: {0}")]
    InvalidFunction(String),

    #[error(
        "selected case {expected} disagrees with the sampled case {found} of the produced \
         solution at tau = {tau}"
    )]
    CaseMismatch {
        expected: DiffCase,
        found: DiffCase,
        tau: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
