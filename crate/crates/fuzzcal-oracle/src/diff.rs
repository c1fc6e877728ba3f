//! Reference differentiation by Richardson-extrapolated central differences.

/// Derivative of `g` at `x` with two-level Richardson extrapolation.
///
/// Combines central differences at steps `h` and `h/2` into an O(h^4)
/// estimate. A good default step is `1e-4 * max(1, |x|)`; smaller steps
/// trade truncation error for round-off.
pub fn derivative<F: Fn(f64) -> f64>(g: F, x: f64, h: f64) -> f64 {
    let central = |h: f64| (g(x + h) - g(x - h)) / (2.0 * h);
    let coarse = central(h);
    let fine = central(0.5 * h);
    (4.0 * fine - coarse) / 3.0
}
