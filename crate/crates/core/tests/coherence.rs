use proptest::prelude::*;

use real_schemes::classify::{forest_levels, levels_text, run_filters, Filter};
use real_schemes::congruence::{
    ash_signature, guillou_marin_check, projective_check, theorem1_residue, ProjectiveHypotheses, ProjectiveMode,
    Verdict,
};
use real_schemes::model::{ClassSelector, CurveClass, SurfaceModel, TypeFlag};
use real_schemes::scheme::{euler_integral_sq, index_function, parse_scheme, Forest, Oval, RealScheme, Ring, Sign};
use real_schemes::zform::BrownValue;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    /// Substituting `σ(CB/conj) = (σ − χ)/2` and `W∘W = e_A/2 − 2χ(B_j)` into
    /// the mod 16 relation gives the mod 8 relation.
    #[test]
    fn guillou_marin_reduces_to_theorem1(
        half_e in -200i64..200,
        chi_rb in -200i64..200,
        t in -100i64..100,
        chi_bj in -200i64..200,
        beta in 0i64..8,
    ) {
        let e_a = 2 * half_e;
        let sigma = chi_rb + e_a - 4 * t;
        let mut model = SurfaceModel::custom(chi_rb, sigma, true);
        model.e_a = e_a;
        let b = BrownValue::new(beta);
        let quotient = ash_signature(sigma, chi_rb).unwrap();
        let gm = guillou_marin_check(quotient, e_a / 2 - 2 * chi_bj, b);
        let t1 = theorem1_residue(&model, chi_bj, b);
        prop_assert_eq!(gm.verdict, t1.verdict);
    }

    #[test]
    fn odd_numerators_are_inapplicable(chi_rb in -50i64..50, sigma in -50i64..50, chi_bj in -50i64..50) {
        let model = SurfaceModel::custom(chi_rb, sigma, true);
        let r = theorem1_residue(&model, chi_bj, BrownValue::new(0));
        if (chi_rb - sigma) % 4 != 0 {
            prop_assert_eq!(r.verdict, Verdict::HypothesisViolated);
        } else {
            prop_assert_ne!(r.verdict, Verdict::HypothesisViolated);
        }
    }

    #[test]
    fn index_jumps_by_the_sign(levels_index in 0usize..48, n in 0usize..=6, signs in any::<u32>()) {
        let all: Vec<Vec<u8>> = forest_levels(n).unwrap().collect();
        let levels = &all[levels_index % all.len()];
        let s = signed(levels, signs);
        let model = SurfaceModel::plane(2 * (n as u32 + 2)).unwrap();
        let (f, d) = index_function(&s, &model, Ring::Z, None).unwrap();
        for c in &d.circles {
            let sign = c.sign.map(Sign::value).unwrap_or(0);
            prop_assert_eq!(f.values[c.inside] - f.values[c.outside], sign);
        }
        // integrals agree whatever the base region on the oriented part
        let reversed = s.reversed();
        let (g, e) = index_function(&reversed, &model, Ring::Z, None).unwrap();
        prop_assert_eq!(euler_integral_sq(&f, &d), euler_integral_sq(&g, &e));
        for ring in [Ring::Z2, Ring::Z4, Ring::Z8] {
            let (h, dh) = index_function(&s, &model, ring, None).unwrap();
            let m = 2 * ring.modulus();
            prop_assert_eq!(euler_integral_sq(&h, &dh).value, euler_integral_sq(&f, &d).value.rem_euclid(m));
        }
    }
}

/// Scheme of the depth sequence with ovals signed by the bits of `signs`.
fn signed(levels: &[u8], signs: u32) -> RealScheme {
    fn build(levels: &[u8], pos: &mut usize, depth: u8, signs: u32) -> Forest {
        let mut ovals = Vec::new();
        while *pos < levels.len() && levels[*pos] == depth {
            let sign = if signs >> (*pos % 32) & 1 == 0 { Sign::Plus } else { Sign::Minus };
            *pos += 1;
            let interior = build(levels, pos, depth + 1, signs);
            ovals.push(Oval::with_interior(Some(sign), interior));
        }
        Forest::new(ovals)
    }
    let mut pos = 0;
    RealScheme::from_forest(build(levels, &mut pos, 1, signs)).unwrap()
}

#[test]
fn ellipsoid_filter_agrees_with_the_addendum() {
    for (d, counts) in [(3u32, 0..=5usize), (5, 13..=17)] {
        let model = SurfaceModel::ellipsoid(d).unwrap();
        for n in counts {
            for l in forest_levels(n).unwrap().take(400) {
                let s = parse_scheme(&levels_text(&l)).unwrap();
                let curve = CurveClass::for_scheme(&s, &model, ClassSelector::Auto).unwrap();
                let b = run_filters(&s, &model, &curve, &[Filter::Ellipsoid, Filter::Theorem1]);
                let v: Vec<Verdict> = b.reports.iter().map(|r| r.report.verdict).collect();
                assert_eq!(v[0], v[1], "{s} on ({d}, {d})");
            }
        }
    }
}

#[test]
fn hypothesis_flips() {
    let model = SurfaceModel::ellipsoid(3).unwrap();
    let zero = BrownValue::new(0);
    assert_eq!(theorem1_residue(&model, 5, zero).verdict, Verdict::Pass);
    let mut broken = model.clone();
    broken.characteristic_type.holds = false;
    let r = theorem1_residue(&broken, 5, zero);
    assert_eq!(r.verdict, Verdict::HypothesisViolated);
    assert_eq!(r.hypothesis("characteristic type"), Some(false));

    let s = parse_scheme("2u1<2>").unwrap();
    let curve = CurveClass::for_scheme(&s, &model, ClassSelector::M).unwrap();
    assert_eq!(run_filters(&s, &model, &curve, &[Filter::Ellipsoid]).verdict, Verdict::Fail);
    let even = SurfaceModel::ellipsoid(4).unwrap();
    let curve4 = CurveClass::for_scheme(&s, &even, ClassSelector::Auto).unwrap();
    assert_eq!(run_filters(&s, &even, &curve4, &[Filter::Ellipsoid]).verdict, Verdict::HypothesisViolated);

    let cubic = SurfaceModel::cubic_disjoint();
    let m = CurveClass::new(Some(0), TypeFlag::I, 5);
    let hyp = |c_count: u32, e_rank: u32| ProjectiveHypotheses {
        d_rank: 0,
        e_rank,
        c_count,
        in_one_component: true,
        in_one_separation_surface: true,
    };
    let g = ProjectiveMode::Generalized;
    assert_eq!(projective_check(&cubic, &hyp(0, 0), &m, 3, g).verdict, Verdict::Pass);
    assert_eq!(projective_check(&cubic, &hyp(1, 0), &m, 3, g).verdict, Verdict::HypothesisViolated);
    assert_eq!(projective_check(&cubic, &hyp(0, 1), &m, 3, g).verdict, Verdict::HypothesisViolated);
    assert_eq!(projective_check(&cubic, &hyp(0, 0), &m, 1, g).verdict, Verdict::Fail);
}
