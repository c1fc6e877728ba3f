//! Level-wise interval arithmetic on raw `(a, b, c)` triples.
//!
//! A triangular fuzzy number is handled purely through its membership-level
//! cuts: at level `r` the cut of `(a, b, c)` is the interval
//! `[a + r(b - a), c - r(c - b)]`. All reference results below are obtained
//! by evaluating that formula on a dense grid of levels, which is the
//! ground truth the main library's closed-form shortcuts must reproduce.

/// One membership level together with the interval cut at that level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelInterval {
    pub level: f64,
    pub lo: f64,
    pub hi: f64,
}

/// Interval cut of the triple `t = (a, b, c)` at membership level `r`.
pub fn triangle_cut(t: [f64; 3], r: f64) -> (f64, f64) {
    (t[0] + r * (t[1] - t[0]), t[2] - r * (t[2] - t[1]))
}

/// Level-wise generalized Hukuhara difference of two triples.
///
/// At each of `levels + 1` equally spaced membership levels the cut of the
/// difference is `[min(dlo, dhi), max(dlo, dhi)]`, where `dlo` and `dhi` are
/// the differences of the lower and upper cut endpoints. This is the
/// definition realized directly, with no triangular shortcut.
pub fn gh_difference_levels(p: [f64; 3], q: [f64; 3], levels: usize) -> Vec<LevelInterval> {
    assert!(levels >= 2, "need at least two levels");
    (0..=levels)
        .map(|k| {
            let r = k as f64 / levels as f64;
            let (plo, phi) = triangle_cut(p, r);
            let (qlo, qhi) = triangle_cut(q, r);
            let dlo = plo - qlo;
            let dhi = phi - qhi;
            LevelInterval {
                level: r,
                lo: dlo.min(dhi),
                hi: dlo.max(dhi),
            }
        })
        .collect()
}

/// Hausdorff distance of two triples as a supremum over a dense level grid.
pub fn hausdorff_sup(p: [f64; 3], q: [f64; 3], levels: usize) -> f64 {
    assert!(levels >= 2, "need at least two levels");
    let mut sup: f64 = 0.0;
    for k in 0..=levels {
        let r = k as f64 / levels as f64;
        let (plo, phi) = triangle_cut(p, r);
        let (qlo, qhi) = triangle_cut(q, r);
        sup = sup.max((plo - qlo).abs()).max((phi - qhi).abs());
    }
    sup
}
