//! Cross-checks of the derivative and integral machinery against
//! independent routes: the Richardson-extrapolated oracle differentiator,
//! the raw difference-quotient limit definition, and the oracle integrator.

use fuzzcal::calculus::{
    classify_case, conformable_derivative, find_switching_points, gh_derivative,
    conformable_integral,
};
use fuzzcal::{ConformableContext, DiffCase, FuzzyFunction, TriangularFuzzyNumber};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn tfn(a: f64, b: f64, c: f64) -> TriangularFuzzyNumber {
    TriangularFuzzyNumber::new(a, b, c).unwrap()
}

/// A smooth fuzzy test profile: componentwise `k_i * g(tau) + m_i` with
/// `g` smooth and positive-derivative-free of special structure.
fn smooth_profile(k: [f64; 3], m: [f64; 3], omega: f64) -> FuzzyFunction {
    FuzzyFunction::from_components(
        move |t: f64| k[0] * (omega * t).sin() + m[0],
        move |t: f64| k[1] * (omega * t).sin() + m[1],
        move |t: f64| k[2] * (omega * t).sin() + m[2],
        0.0,
        f64::INFINITY,
    )
    .unwrap()
}

#[test]
fn reduction_identity_matches_the_oracle_differentiator() {
    // Conformable derivative = (tau - a)^(1 - alpha) * first derivative,
    // with the right side differentiated by the independent Richardson
    // oracle, componentwise, at 200 random (profile, alpha, tau) samples.
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..200 {
        let spread = rng.gen_range(0.1..2.0);
        let k = [1.0, 1.0 + spread, 1.0 + 2.0 * spread];
        let m = [0.0, 0.5, 1.0];
        let omega = rng.gen_range(0.3..2.0);
        let f = smooth_profile(k, m, omega);
        let alpha = rng.gen_range(0.15..1.0);
        let tau = rng.gen_range(0.3..3.0);
        let ctx = ConformableContext::new(alpha, 0.0).unwrap();

        let got = conformable_derivative(&f, &ctx, tau).unwrap();
        let factor = tau.powf(1.0 - alpha);
        let mut expected = [0.0f64; 3];
        for (i, e) in expected.iter_mut().enumerate() {
            let ki = k[i];
            let mi = m[i];
            *e = factor
                * fuzzcal_oracle::derivative(
                    |t| ki * (omega * t).sin() + mi,
                    tau,
                    1e-4 * tau.max(1.0),
                );
        }
        expected.sort_by(f64::total_cmp);
        for (g, e) in got.value.as_array().iter().zip(expected) {
            assert!(
                (g - e).abs() <= 1e-8 * e.abs().max(1.0),
                "component {g} vs oracle {e} (alpha {alpha}, tau {tau})"
            );
        }
    }
}

#[test]
fn conformable_derivative_agrees_with_its_limit_definition() {
    // The defining quotient [w(tau + eps (tau-a)^(1-alpha)) (-)gH w(tau)]/eps
    // must approach the computed derivative as eps shrinks.
    let f = smooth_profile([2.3, 5.6, 9.7], [0.0, 0.0, 0.0], 1.0);
    let ctx = ConformableContext::new(0.5, 0.0).unwrap();
    for tau in [0.7, 1.2, 2.6] {
        let d = conformable_derivative(&f, &ctx, tau).unwrap();
        let eps = 1e-6;
        let shifted = f.eval(tau + eps * tau.powf(0.5)).unwrap();
        let quotient = shifted
            .gh_difference(&f.eval(tau).unwrap())
            .unwrap()
            .value
            .scale(1.0 / eps);
        let scale = d.value.magnitude().max(1.0);
        assert!(
            quotient.hausdorff_distance(&d.value) <= 1e-4 * scale,
            "quotient {} vs derivative {} at tau = {tau}",
            quotient,
            d.value
        );
    }
}

#[test]
fn derivative_is_additive_for_same_case_operands() {
    // Linearity holds when both operands are differentiable in the same
    // case at the point.
    let f = smooth_profile([1.0, 2.0, 3.0], [0.0, 1.0, 2.0], 1.0);
    let g = smooth_profile([0.5, 1.0, 1.5], [5.0, 6.0, 7.0], 1.0);
    let ctx = ConformableContext::new(0.4, 0.0).unwrap();
    let sum = FuzzyFunction::from_components(
        {
            let (f, g) = (f.clone(), g.clone());
            move |t: f64| f.components_at(t).unwrap()[0] + g.components_at(t).unwrap()[0]
        },
        {
            let (f, g) = (f.clone(), g.clone());
            move |t: f64| f.components_at(t).unwrap()[1] + g.components_at(t).unwrap()[1]
        },
        {
            let (f, g) = (f.clone(), g.clone());
            move |t: f64| f.components_at(t).unwrap()[2] + g.components_at(t).unwrap()[2]
        },
        0.0,
        f64::INFINITY,
    )
    .unwrap();
    for tau in [0.5, 1.0, 1.3] {
        let df = conformable_derivative(&f, &ctx, tau).unwrap();
        let dg = conformable_derivative(&g, &ctx, tau).unwrap();
        assert_eq!(df.case, dg.case, "operands must share the case at {tau}");
        let dsum = conformable_derivative(&sum, &ctx, tau).unwrap();
        let expected = df.value + dg.value;
        let scale = expected.magnitude().max(1.0);
        assert!(
            dsum.value.hausdorff_distance(&expected) <= 1e-8 * scale,
            "at tau = {tau}: {} vs {}",
            dsum.value,
            expected
        );
    }
}

#[test]
fn case_follows_the_width_slope() {
    // Case 1 exactly where the support width is (numerically) non-shrinking.
    let f = FuzzyFunction::from_components(
        |t: f64| -(2.0 + t.sin()) / 2.0,
        |_t: f64| 0.0,
        |t: f64| (2.0 + t.sin()) / 2.0,
        0.0,
        2.0 * std::f64::consts::PI,
    )
    .unwrap();
    for k in 1..40 {
        let tau = k as f64 * 0.15;
        let width_slope = fuzzcal_oracle::derivative(|t: f64| 2.0 + t.sin(), tau, 1e-4);
        if width_slope.abs() < 1e-6 {
            continue; // too close to the switch to call
        }
        let case = classify_case(&f, tau).unwrap();
        let expected = if width_slope > 0.0 {
            DiffCase::CaseI
        } else {
            DiffCase::CaseII
        };
        assert_eq!(case, expected, "at tau = {tau}, width slope {width_slope}");
    }
}

#[test]
fn differentiability_implies_continuity() {
    // Where the conformable derivative exists, values at nearby points
    // approach the value at the point as the offset shrinks.
    let f = smooth_profile([2.3, 5.6, 9.7], [0.0, 0.0, 0.0], 1.0);
    let ctx = ConformableContext::new(0.5, 0.0).unwrap();
    for tau in [0.8, 1.9] {
        conformable_derivative(&f, &ctx, tau).unwrap();
        let here = f.eval(tau).unwrap();
        let mut last = f64::INFINITY;
        for h in [1e-2, 1e-3, 1e-4] {
            let d = f.eval(tau + h).unwrap().hausdorff_distance(&here);
            assert!(d < last, "distance not shrinking at offset {h}");
            last = d;
        }
    }
}

#[test]
fn order_one_switching_and_integral_degenerate_to_classical() {
    let ctx = ConformableContext::classical(0.0).unwrap();
    // Classical integral of (t, t+1, t+2) over [0, 3].
    let f = FuzzyFunction::from_components(
        |t: f64| t,
        |t: f64| t + 1.0,
        |t: f64| t + 2.0,
        0.0,
        10.0,
    )
    .unwrap();
    let v = conformable_integral(&f, &ctx, 3.0).unwrap();
    let oracle = [
        fuzzcal_oracle::integrate_adaptive(|t| t, 0.0, 3.0, 1e-12).unwrap().value,
        fuzzcal_oracle::integrate_adaptive(|t| t + 1.0, 0.0, 3.0, 1e-12).unwrap().value,
        fuzzcal_oracle::integrate_adaptive(|t| t + 2.0, 0.0, 3.0, 1e-12).unwrap().value,
    ];
    for (got, want) in v.as_array().iter().zip(oracle) {
        assert!((got - want).abs() <= 1e-10 * want.abs().max(1.0));
    }
}

#[test]
fn fundamental_theorem_for_the_growth_solution() {
    // The conformable integral of the conformable derivative of the growth
    // solution over (0, tau] recovers w(tau) (-)gH w(0). The derivative is
    // evaluated numerically with a step proportional to xi, since the
    // closed form varies on scale xi near the basepoint.
    let kappa = 1.0 / 30.0;
    let ctx = ConformableContext::new(0.2, 0.0).unwrap();
    let w0 = [516.0, 540.0, 598.0];
    let solution = FuzzyFunction::from_components(
        move |t: f64| w0[0] * (kappa * t.powf(0.2) / 0.2).exp(),
        move |t: f64| w0[1] * (kappa * t.powf(0.2) / 0.2).exp(),
        move |t: f64| w0[2] * (kappa * t.powf(0.2) / 0.2).exp(),
        0.0,
        f64::INFINITY,
    )
    .unwrap();
    let deriv_component = move |i: usize, xi: f64| -> f64 {
        let xi = xi.max(1e-18);
        let g = gh_derivative(&solution, xi, Some(1e-4 * xi)).unwrap();
        ctx.conformable_factor(xi).unwrap() * g.value.as_array()[i]
    };
    let deriv_fn = FuzzyFunction::from_components(
        {
            let d = deriv_component;
            move |t: f64| d(0, t)
        },
        {
            let d = deriv_component;
            move |t: f64| d(1, t)
        },
        {
            let d = deriv_component;
            move |t: f64| d(2, t)
        },
        1e-18,
        f64::INFINITY,
    )
    .unwrap();

    let tau = 1.0;
    let integral = conformable_integral(&deriv_fn, &ctx, tau).unwrap();
    let expected_factor = (kappa / 0.2 * tau.powf(0.2)).exp() - 1.0; // e^(kappa u) - 1
    for (got, coeff) in integral.as_array().iter().zip(w0) {
        let want = coeff * expected_factor;
        assert!(
            (got - want).abs() <= 1e-6 * want.abs().max(1.0),
            "component {got} vs {want}"
        );
    }
}

#[test]
fn switching_scan_matches_a_brute_force_oracle() {
    // Dense brute-force sign scan of the width slope (via the oracle
    // differentiator) against the library's grid-plus-bisection search.
    let f = FuzzyFunction::from_components(
        |t: f64| -(2.0 + t.sin()) / 2.0,
        |_t: f64| 0.0,
        |t: f64| (2.0 + t.sin()) / 2.0,
        0.0,
        2.0 * std::f64::consts::PI,
    )
    .unwrap();
    let pts = find_switching_points(&f, 0.0, 2.0 * std::f64::consts::PI, 1024).unwrap();

    // Oracle: scan 20000 points, record sign flips of the width slope.
    let n = 20_000;
    let hi = 2.0 * std::f64::consts::PI;
    let mut flips = Vec::new();
    let mut last_sign = 0.0f64;
    for k in 0..=n {
        let tau = hi * k as f64 / n as f64;
        let slope = fuzzcal_oracle::derivative(|t: f64| 2.0 + t.sin(), tau, 1e-5);
        let sign = if slope > 0.0 { 1.0 } else { -1.0 };
        if last_sign != 0.0 && sign != last_sign {
            flips.push(tau);
        }
        last_sign = sign;
    }
    assert_eq!(pts.len(), flips.len());
    for (p, flip) in pts.iter().zip(flips) {
        assert!(
            (p.location - flip).abs() < 1e-3,
            "switch at {} vs oracle bracket {}",
            p.location,
            flip
        );
    }
}

#[test]
fn boundary_derivatives_use_one_sided_stencils() {
    let f = FuzzyFunction::from_components(
        |t: f64| 2.3 * t.sin(),
        |t: f64| 5.6 * t.sin(),
        |t: f64| 9.7 * t.sin(),
        0.0,
        std::f64::consts::PI,
    )
    .unwrap();
    // cos(0) = 1: derivative at the left edge of the domain.
    let d = gh_derivative(&f, 0.0, None).unwrap();
    assert_eq!(d.case, DiffCase::CaseI);
    for (got, want) in d.value.as_array().iter().zip([2.3, 5.6, 9.7]) {
        assert!((got - want).abs() < 1e-6, "got {got}, want {want}");
    }
    let crisp = f.eval(std::f64::consts::FRAC_PI_2).unwrap();
    assert_eq!(crisp, tfn(2.3, 5.6, 9.7));
}
