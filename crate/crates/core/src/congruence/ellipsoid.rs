//! Congruences for curves of bidegree `(d, d)` on the ellipsoid.

use super::{Condition, CongruenceReport, ReportBuilder};
use crate::model::{CurveClass, SurfaceModel, TypeFlag};
use crate::scheme::{regions, two_coloring, ComponentBody, RealScheme};

fn on_sphere(s: &RealScheme) -> bool {
    s.components().len() == 1 && matches!(s.components()[0].body, ComponentBody::Ovals(_))
}

/// Odd `d`, with `K = (d² + 1)/2`: M-curves have `χ(B1) ≡ χ(B2) ≡ K (mod 8)`,
/// (M−1)-curves `K ± 1` with opposite signs, (M−2)-curves with `K + 4`
/// are of type I, and type I curves have `χ ≡ 1 (mod 4)`.
pub fn ellipsoid_residues(d: u32, chi1: i64, chi2: i64, curve: &CurveClass) -> CongruenceReport {
    let odd = d % 2 == 1;
    let mut r = ReportBuilder::new("ellipsoid", 8)
        .hypothesis("d odd", odd)
        .hypothesis("deficiency known", curve.deficiency.is_some());
    let (Some(j), true) = (curve.deficiency, odd) else {
        return r.finish();
    };
    let d = i64::from(d);
    let k = (d * d + 1) / 2;
    r = r.value("constant", k).value("j", i64::from(j));
    let both = [(chi1, chi2, "B1=color1"), (chi2, chi1, "B1=color2")];
    let mut candidates = Vec::new();
    for (x, y, label) in both {
        let mut conds = Vec::new();
        let mut forces = false;
        match j {
            0 => {
                conds.push(Condition::new("a: chi(B1)", x, &[k], 8));
                conds.push(Condition::new("a: chi(B2)", y, &[k], 8));
            }
            1 => {
                let fits = |e: i64| (x - k - e).rem_euclid(8) == 0 && (y - k + e).rem_euclid(8) == 0;
                let e = if fits(-1) && !fits(1) { -1 } else { 1 };
                conds.push(Condition::new("b: chi(B1)", x, &[k + e], 8));
                conds.push(Condition::new("b: chi(B2)", y, &[k - e], 8));
            }
            2 => {
                if (x - k - 4).rem_euclid(8) == 0 || (y - k - 4).rem_euclid(8) == 0 {
                    forces = true;
                } else {
                    let rest: Vec<i64> = (0..8).filter(|&v| v != (k + 4).rem_euclid(8)).collect();
                    conds.push(Condition::new("c: chi(B1)", x, &rest, 8));
                    conds.push(Condition::new("c: chi(B2)", y, &rest, 8));
                }
            }
            _ => {}
        }
        if forces || curve.type_flag == TypeFlag::I {
            conds.push(Condition::new("d: chi(B1)", x, &[1], 4));
            conds.push(Condition::new("d: chi(B2)", y, &[1], 4));
        }
        candidates.push((conds, forces, label));
    }
    let contradiction = |forces: bool| forces && curve.type_flag == TypeFlag::II;
    let good = |(c, f, _): &(Vec<Condition>, bool, &str)| !contradiction(*f) && c.iter().all(Condition::holds);
    let idx = candidates.iter().position(|c| good(c) && !c.1).or_else(|| candidates.iter().position(good)).unwrap_or(0);
    let (conds, forces, label) = candidates.swap_remove(idx);
    if conds.is_empty() && !forces {
        return r.hypothesis("a point of the theorem applies", false).finish();
    }
    r.conditions(conds).forces_type_i(forces).contradiction(contradiction(forces)).assignment(label).finish()
}

/// The ellipsoid theorem on the checkerboard coloring of `s`.
pub fn ellipsoid_check(s: &RealScheme, d: u32, curve: &CurveClass) -> CongruenceReport {
    let coloring = SurfaceModel::ellipsoid(d.max(1)).ok().and_then(|m| two_coloring(s, &m).ok());
    match (on_sphere(s), coloring) {
        (true, Some(c)) => {
            let mut r = ellipsoid_residues(d, c.chi1, c.chi2, curve);
            r.hypotheses.insert(0, super::Hypothesis { name: "scheme on a sphere".into(), ok: true });
            r
        }
        _ => ReportBuilder::new("ellipsoid", 8).hypothesis("scheme on a sphere", false).finish(),
    }
}

/// Even `d`, M-curve: if every component of `B1` has even Euler
/// characteristic and `χ(B1) ≡ 2 (mod 4)` then `χ(B2) ≡ d²` and
/// `χ(B1) ≡ 2 − d² (mod 16)`. `components` lists the Euler characteristic
/// of every connected component of each color.
pub fn fiedler_residues(d: u32, components: [&[i64]; 2], curve: &CurveClass) -> CongruenceReport {
    let d64 = i64::from(d);
    let sq = d64 * d64;
    let chi = [components[0].iter().sum::<i64>(), components[1].iter().sum::<i64>()];
    let attempt = |b1: usize, label: &str| {
        let b2 = 1 - b1;
        ReportBuilder::new("fiedler", 16)
            .hypothesis("d even", d.is_multiple_of(2))
            .hypothesis("M-curve", curve.deficiency == Some(0))
            .hypothesis("components of B1 have even chi", components[b1].iter().all(|c| c % 2 == 0))
            .hypothesis("chi(B1) = 2 mod 4", chi[b1].rem_euclid(4) == 2)
            .condition(Condition::new("chi(B2)", chi[b2], &[sq], 16))
            .condition(Condition::new("chi(B1)", chi[b1], &[2 - sq], 16))
            .assignment(label)
            .finish()
    };
    CongruenceReport::best(vec![attempt(0, "B1=color1"), attempt(1, "B1=color2")]).expect("two attempts")
}

/// Fiedler's congruence on the checkerboard coloring of `s`; on a sphere
/// every region is its own component of its color.
pub fn fiedler_check(s: &RealScheme, d: u32, curve: &CurveClass) -> CongruenceReport {
    let decomposition = SurfaceModel::ellipsoid(d.max(1)).ok().and_then(|m| regions(s, &m).ok());
    match (on_sphere(s), decomposition) {
        (true, Some(dec)) => {
            let mut per = [Vec::new(), Vec::new()];
            for r in &dec.regions {
                per[usize::from(r.color - 1)].push(r.chi);
            }
            fiedler_residues(d, [&per[0], &per[1]], curve)
        }
        _ => ReportBuilder::new("fiedler", 16).hypothesis("scheme on a sphere", false).finish(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::Verdict;
    use crate::model::ClassSelector;
    use crate::scheme::parse_scheme;

    fn check(s: &str, d: u32, class: ClassSelector) -> Verdict {
        let s = parse_scheme(s).unwrap();
        let curve = CurveClass::for_scheme(&s, &SurfaceModel::ellipsoid(d).unwrap(), class).unwrap();
        ellipsoid_check(&s, d, &curve).verdict
    }

    #[test]
    fn examples() {
        assert_eq!(check("4u1", 3, ClassSelector::M), Verdict::Pass);
        assert_eq!(check("2u1<2>", 3, ClassSelector::M), Verdict::Fail);
        assert_eq!(check("1<3>", 3, ClassSelector::MMinus1), Verdict::Pass);
        assert_eq!(check("1<1<1>>", 3, ClassSelector::MMinus2), Verdict::ForcesTypeI);
        assert_eq!(check("1", 2, ClassSelector::Auto), Verdict::HypothesisViolated);
    }

    #[test]
    fn swapping_colors_keeps_the_verdict() {
        let curve = CurveClass::new(Some(1), TypeFlag::II, 4);
        for x in -8..8 {
            for y in -8..8 {
                assert_eq!(ellipsoid_residues(3, x, y, &curve).verdict, ellipsoid_residues(3, y, x, &curve).verdict);
            }
        }
    }

    #[test]
    fn fiedler_examples() {
        let m = CurveClass::new(Some(0), TypeFlag::I, 2);
        assert_eq!(fiedler_residues(2, [&[2], &[0]], &m).verdict, Verdict::Fail);
        assert_eq!(fiedler_residues(2, [&[-2], &[4]], &m).verdict, Verdict::Pass);
        assert_eq!(fiedler_residues(2, [&[1, 1], &[1, -1]], &m).verdict, Verdict::HypothesisViolated);
    }

    #[test]
    fn fiedler_on_schemes() {
        // bidegree (2,2): M-curves have 2 ovals
        let s = parse_scheme("2").unwrap();
        let model = SurfaceModel::ellipsoid(2).unwrap();
        let curve = CurveClass::for_scheme(&s, &model, ClassSelector::M).unwrap();
        // regions: outer chi 0, two disks chi 1 each: no assignment meets the hypotheses
        assert_eq!(fiedler_check(&s, 2, &curve).verdict, Verdict::HypothesisViolated);
        let nest = parse_scheme("1<1>").unwrap();
        // outer disk 1 + inner disk 1 in color 1, annulus 0 in color 2
        assert_eq!(fiedler_check(&nest, 2, &curve).verdict, Verdict::HypothesisViolated);
    }
}
