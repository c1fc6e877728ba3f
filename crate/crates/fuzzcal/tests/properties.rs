//! Randomized property suites for the fuzzy-number core: reconstruction
//! identities of the gH-difference, nesting of level cuts, compatibility of
//! arithmetic with cuts, metric axioms, and agreement with the dense-level
//! interval oracle. 1000 cases per property.

use fuzzcal::{DiffCase, TriangularFuzzyNumber};
use fuzzcal_oracle::levels;
use proptest::prelude::*;

fn tfn_strategy() -> impl Strategy<Value = TriangularFuzzyNumber> {
    (-1e3..1e3f64, -1e3..1e3f64, -1e3..1e3f64).prop_map(|(x, y, z)| {
        let mut v = [x, y, z];
        v.sort_by(f64::total_cmp);
        TriangularFuzzyNumber::new(v[0], v[1], v[2]).expect("sorted triple")
    })
}

fn tol_for(values: &[f64]) -> f64 {
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    1e-12 * scale
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gh_difference_of_self_is_zero(p in tfn_strategy()) {
        let d = p.gh_difference(&p).unwrap();
        prop_assert_eq!(d.case, DiffCase::CaseI);
        prop_assert_eq!(d.value, TriangularFuzzyNumber::ZERO);
    }

    #[test]
    fn gh_difference_reconstructs_the_summand(p in tfn_strategy(), q in tfn_strategy()) {
        // (p + q) (-)gH q recovers p.
        let d = (p + q).gh_difference(&q).unwrap();
        let tol = tol_for(&[p.magnitude(), q.magnitude()]);
        prop_assert!(d.value.hausdorff_distance(&p) <= tol,
            "recovered {} from p = {}", d.value, p);
    }

    #[test]
    fn gh_difference_case_reconstruction(p in tfn_strategy(), q in tfn_strategy()) {
        // Whichever case came back must satisfy its defining identity:
        // case 1: p = q + r; case 2: q = p + (-1) r.
        if let Ok(d) = p.gh_difference(&q) {
            let tol = tol_for(&[p.magnitude(), q.magnitude()]);
            match d.case {
                DiffCase::CaseI => {
                    prop_assert!((q + d.value).hausdorff_distance(&p) <= tol);
                }
                DiffCase::CaseII => {
                    prop_assert!((p + d.value.scale(-1.0)).hausdorff_distance(&q) <= tol);
                }
            }
        }
    }

    #[test]
    fn gh_difference_matches_the_level_oracle(p in tfn_strategy(), q in tfn_strategy()) {
        // Both a dense dyadic grid and a coarse prime grid, to catch
        // anything that only holds on aligned levels.
        if let Ok(d) = p.gh_difference(&q) {
            for n in [64usize, 7] {
                for li in levels::gh_difference_levels(p.as_array(), q.as_array(), n) {
                    let cut = d.value.r_cut(li.level).unwrap();
                    let tol = tol_for(&[p.magnitude(), q.magnitude()]);
                    prop_assert!((cut.lo - li.lo).abs() <= tol && (cut.hi - li.hi).abs() <= tol,
                        "level {}: [{}, {}] vs oracle [{}, {}]",
                        li.level, cut.lo, cut.hi, li.lo, li.hi);
                }
            }
        }
    }

    #[test]
    fn r_cuts_are_nested(p in tfn_strategy(), r1 in 0.0..1.0f64, r2 in 0.0..1.0f64) {
        let (lo_level, hi_level) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        let outer = p.r_cut(lo_level).unwrap();
        let inner = p.r_cut(hi_level).unwrap();
        prop_assert!(outer.contains(&inner),
            "cut at {} = [{}, {}] does not contain cut at {} = [{}, {}]",
            lo_level, outer.lo, outer.hi, hi_level, inner.lo, inner.hi);
    }

    #[test]
    fn r_cut_endpoints_are_monotone(p in tfn_strategy()) {
        let mut last = p.r_cut(0.0).unwrap();
        for k in 1..=32 {
            let cut = p.r_cut(k as f64 / 32.0).unwrap();
            prop_assert!(cut.lo >= last.lo && cut.hi <= last.hi);
            last = cut;
        }
    }

    #[test]
    fn addition_commutes_with_cuts(p in tfn_strategy(), q in tfn_strategy(), r in 0.0..1.0f64) {
        let sum_cut = (p + q).r_cut(r).unwrap();
        let pc = p.r_cut(r).unwrap();
        let qc = q.r_cut(r).unwrap();
        let tol = tol_for(&[p.magnitude(), q.magnitude()]);
        prop_assert!((sum_cut.lo - (pc.lo + qc.lo)).abs() <= tol);
        prop_assert!((sum_cut.hi - (pc.hi + qc.hi)).abs() <= tol);
    }

    #[test]
    fn scaling_commutes_with_cuts(p in tfn_strategy(), lambda in -10.0..10.0f64, r in 0.0..1.0f64) {
        let scaled_cut = p.scale(lambda).r_cut(r).unwrap();
        let pc = p.r_cut(r).unwrap();
        let (lo, hi) = if lambda >= 0.0 {
            (lambda * pc.lo, lambda * pc.hi)
        } else {
            (lambda * pc.hi, lambda * pc.lo)
        };
        let tol = tol_for(&[p.magnitude() * lambda.abs()]);
        prop_assert!((scaled_cut.lo - lo).abs() <= tol);
        prop_assert!((scaled_cut.hi - hi).abs() <= tol);
    }

    #[test]
    fn metric_axioms(p in tfn_strategy(), q in tfn_strategy(), w in tfn_strategy()) {
        prop_assert_eq!(p.hausdorff_distance(&p), 0.0);
        prop_assert!(p.hausdorff_distance(&q) >= 0.0);
        // Symmetry is exact: |a - b| = |b - a| componentwise.
        prop_assert_eq!(p.hausdorff_distance(&q), q.hausdorff_distance(&p));
        // Triangle inequality up to rounding.
        let tol = tol_for(&[p.magnitude(), q.magnitude(), w.magnitude()]);
        prop_assert!(
            p.hausdorff_distance(&q) <= p.hausdorff_distance(&w) + w.hausdorff_distance(&q) + tol
        );
    }

    #[test]
    fn identity_of_indiscernibles(p in tfn_strategy(), q in tfn_strategy()) {
        if p.hausdorff_distance(&q) == 0.0 {
            prop_assert_eq!(p, q);
        }
    }

    #[test]
    fn hausdorff_matches_the_dense_sup_oracle(p in tfn_strategy(), q in tfn_strategy()) {
        let oracle = levels::hausdorff_sup(p.as_array(), q.as_array(), 64);
        let tol = tol_for(&[p.magnitude(), q.magnitude()]);
        prop_assert!((p.hausdorff_distance(&q) - oracle).abs() <= tol);
    }

    #[test]
    fn scalar_mul_preserves_cut_width_sign(p in tfn_strategy(), lambda in -5.0..5.0f64) {
        let scaled = p.scale(lambda);
        prop_assert!(scaled.width() >= -1e-12);
        let tol = tol_for(&[p.magnitude() * lambda.abs()]);
        prop_assert!((scaled.width() - lambda.abs() * p.width()).abs() <= tol);
    }
}
