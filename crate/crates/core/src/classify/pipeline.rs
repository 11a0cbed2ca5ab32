//! Applies named congruence filters to one scheme.

use serde::Serialize;

use super::Filter;
use crate::congruence::{
    addendum_filter, ellipsoid_check, fiedler_check, hyperboloid_chi_check, hyperboloid_orientation_check,
    plane_orientation_check, projective_check, surface_congruence, Condition, CongruenceReport, Hypothesis,
    ProjectiveHypotheses, ProjectiveMode, Verdict,
};
use crate::model::{Carrier, CurveClass, Degrees, ModelKind, SurfaceModel};
use crate::scheme::{regions, separations, ComponentBody, RealScheme, Region, RegionDecomposition, RegionKind};
use crate::zform::BrownValue;

/// One filter's report for one scheme.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterReport {
    pub filter: Filter,
    pub report: CongruenceReport,
}

/// Compact form of a report used in classification rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterVerdict {
    pub filter: Filter,
    pub theorem: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rhs: Vec<i64>,
    pub modulus: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterBundle {
    pub scheme: String,
    pub reports: Vec<FilterReport>,
    pub verdict: Verdict,
}

impl FilterBundle {
    pub fn admissible(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn rejected_by(&self) -> Vec<String> {
        self.reports.iter().filter(|r| r.report.verdict == Verdict::Fail).map(|r| r.report.theorem.clone()).collect()
    }

    pub fn verdicts(&self) -> Vec<FilterVerdict> {
        self.reports
            .iter()
            .map(|r| FilterVerdict {
                filter: r.filter,
                theorem: r.report.theorem.clone(),
                verdict: r.report.verdict,
                lhs: r.report.lhs,
                rhs: r.report.rhs.clone(),
                modulus: r.report.modulus,
                assignment: r.report.assignment.clone(),
            })
            .collect()
    }
}

/// The filters that apply to curves on `model`.
pub fn default_filters(model: &SurfaceModel) -> Vec<Filter> {
    use Filter::*;
    match model.kind {
        ModelKind::Ellipsoid => match model.degrees {
            Degrees::Bidegree(d, _) if d % 2 == 0 => vec![Harnack, Fiedler],
            _ => vec![Harnack, Ellipsoid],
        },
        ModelKind::Hyperboloid => vec![Harnack, HyperboloidChi, HyperboloidOrientation],
        ModelKind::Plane => vec![Harnack, ProjectiveClassical, Projective, PlaneOrientation],
        ModelKind::CubicM => vec![Harnack, Theorem1, ProjectiveClassical, Projective],
        ModelKind::CubicDisjoint | ModelKind::CompleteIntersection => vec![Harnack, Theorem1, Projective],
        ModelKind::PlaneDoubleCover | ModelKind::Custom => vec![Theorem1, Surface],
    }
}

/// Runs every filter in order; nothing is short-circuited.
pub fn run_filters(s: &RealScheme, model: &SurfaceModel, curve: &CurveClass, filters: &[Filter]) -> FilterBundle {
    let decomposition = regions(s, model);
    let mut reports = Vec::new();
    for &filter in filters {
        let out = match (&decomposition, filter) {
            (_, Filter::Harnack) => vec![harnack(s, model)],
            (_, Filter::Ellipsoid) => vec![ellipsoid(s, model, curve)],
            (_, Filter::Fiedler) => vec![fiedler(s, model, curve)],
            (_, Filter::HyperboloidOrientation) => vec![hyperboloid_orientation(s, model)],
            (_, Filter::PlaneOrientation) => vec![plane_orientation(s, model)],
            (_, Filter::Surface) => surface(s, model),
            (Err(e), f) => vec![inapplicable(theorem_name(f), &e.to_string())],
            (Ok(d), Filter::Theorem1) => vec![theorem1(d, model, curve)],
            (Ok(d), Filter::Projective) => vec![projective(d, model, curve, ProjectiveMode::Generalized)],
            (Ok(d), Filter::ProjectiveClassical) => vec![projective(d, model, curve, ProjectiveMode::Classical)],
            (Ok(d), Filter::HyperboloidChi) => vec![hyperboloid_chi(s, d, model, curve)],
        };
        reports.extend(out.into_iter().map(|report| FilterReport { filter, report }));
    }
    let verdict = Verdict::combine(reports.iter().map(|r| r.report.verdict));
    FilterBundle { scheme: s.to_string(), reports, verdict }
}

fn theorem_name(f: Filter) -> &'static str {
    match f {
        Filter::Theorem1 => "addendum",
        Filter::Projective => "projective-generalized",
        Filter::ProjectiveClassical => "projective-classical",
        other => other.name(),
    }
}

/// A report whose single hypothesis failed.
fn inapplicable(theorem: &str, hypothesis: &str) -> CongruenceReport {
    CongruenceReport {
        theorem: theorem.to_string(),
        hypotheses: vec![Hypothesis { name: hypothesis.to_string(), ok: false }],
        lhs: None,
        rhs: Vec::new(),
        modulus: 8,
        verdict: Verdict::HypothesisViolated,
        conditions: Vec::new(),
        assignment: None,
        values: Default::default(),
        note: None,
    }
}

fn harnack(s: &RealScheme, model: &SurfaceModel) -> CongruenceReport {
    let count = s.curve_component_count() as i64;
    let Some(m) = model.m_count else {
        return inapplicable("harnack", "M-count known");
    };
    let within = count <= i64::from(m);
    let cond = Condition::new("components <= M-count", i64::from(within), &[1], 2);
    let verdict = if within { Verdict::Pass } else { Verdict::Fail };
    CongruenceReport {
        theorem: "harnack".into(),
        hypotheses: vec![Hypothesis { name: "M-count known".into(), ok: true }],
        lhs: Some(cond.lhs),
        rhs: cond.rhs.clone(),
        modulus: 2,
        verdict,
        conditions: vec![cond],
        assignment: None,
        values: [("components".to_string(), count), ("m_count".to_string(), i64::from(m))].into(),
        note: None,
    }
}

fn ellipsoid(s: &RealScheme, model: &SurfaceModel, curve: &CurveClass) -> CongruenceReport {
    match (model.kind, &model.degrees) {
        (ModelKind::Ellipsoid, Degrees::Bidegree(d, _)) => ellipsoid_check(s, *d, curve),
        _ => inapplicable("ellipsoid", "ellipsoid model"),
    }
}

fn fiedler(s: &RealScheme, model: &SurfaceModel, curve: &CurveClass) -> CongruenceReport {
    match (model.kind, &model.degrees) {
        (ModelKind::Ellipsoid, Degrees::Bidegree(d, _)) => fiedler_check(s, *d, curve),
        _ => inapplicable("fiedler", "ellipsoid model"),
    }
}

fn hyperboloid_orientation(s: &RealScheme, model: &SurfaceModel) -> CongruenceReport {
    match (model.kind, &model.degrees) {
        (ModelKind::Hyperboloid, Degrees::Bidegree(d, r)) => hyperboloid_orientation_check(s, (*d, *r))
            .unwrap_or_else(|e| inapplicable("hyperboloid-orientation", &e.to_string())),
        _ => inapplicable("hyperboloid-orientation", "hyperboloid model"),
    }
}

fn plane_orientation(s: &RealScheme, model: &SurfaceModel) -> CongruenceReport {
    match (model.kind, &model.degrees) {
        (ModelKind::Plane, Degrees::Plane(m)) if m % 2 == 0 => {
            plane_orientation_check(s, m / 2).unwrap_or_else(|e| inapplicable("plane-orientation", &e.to_string()))
        }
        _ => inapplicable("plane-orientation", "plane model of even degree"),
    }
}

fn surface(s: &RealScheme, model: &SurfaceModel) -> Vec<CongruenceReport> {
    if s.curve_component_count() > 0 {
        return vec![inapplicable("surface", "empty curve")];
    }
    surface_congruence(model)
}

/// Possible Brown invariants of the form restricted to one region, with
/// the curve components in the radical. `None` when they depend on data
/// the scheme does not carry.
fn region_beta(region: &Region, carrier: Carrier) -> Option<Vec<i64>> {
    match (region.kind, carrier) {
        (RegionKind::Interior | RegionKind::Annulus, _) => Some(vec![0]),
        (RegionKind::Outer, Carrier::Sphere) => Some(vec![0]),
        (RegionKind::Outer, Carrier::ProjectivePlane) => Some(vec![1, 7]),
        (RegionKind::Outer, Carrier::Other { chi: 2, orientable: true }) => Some(vec![0]),
        (RegionKind::Outer, _) => None,
    }
}

fn color_betas(d: &RegionDecomposition, colors: &[u8], color: u8) -> Option<Vec<i64>> {
    let mut sums = vec![0i64];
    for (r, _) in d.regions.iter().zip(colors).filter(|(_, &c)| c == color) {
        let options = region_beta(r, d.carriers[r.component])?;
        let mut next: Vec<i64> = sums.iter().flat_map(|a| options.iter().map(move |b| (a + b).rem_euclid(8))).collect();
        next.sort_unstable();
        next.dedup();
        sums = next;
    }
    Some(sums)
}

/// The Addendum over every separation of RB compatible with the scheme and
/// every admissible value of the Brown invariants.
fn theorem1(d: &RegionDecomposition, model: &SurfaceModel, curve: &CurveClass) -> CongruenceReport {
    let Ok(seps) = separations(d) else {
        return inapplicable("addendum", "checkerboard colorable");
    };
    let q_vanishes = curve.disorienting.is_empty() && d.circles.iter().all(|c| !c.noncontractible);
    let mut reports = Vec::new();
    for (k, sep) in seps.iter().enumerate() {
        let options = |color| match color_betas(d, &sep.colors, color) {
            Some(v) => v.into_iter().map(BrownValue::new).collect(),
            None => vec![BrownValue::NonInformative],
        };
        let (b1, b2): (Vec<BrownValue>, Vec<BrownValue>) = (options(1), options(2));
        for &x in &b1 {
            for &y in &b2 {
                let mut r = addendum_filter(model, sep, curve, [x, y], q_vanishes);
                let show = |b: BrownValue| b.value().map(|v| v.to_string()).unwrap_or_else(|| "?".into());
                r.note = Some(format!("separation {k}, beta = ({}, {})", show(x), show(y)));
                reports.push(r);
            }
        }
    }
    CongruenceReport::best(reports).unwrap_or_else(|| inapplicable("addendum", "a separation exists"))
}

/// Rank contribution of one region of `B₊` to `H₁(B₊) → H₁(RB)`.
fn region_rank(region: &Region, carrier: Carrier) -> Option<u32> {
    match (region.kind, carrier) {
        (RegionKind::Interior, _) => Some(0),
        (RegionKind::Outer, Carrier::Sphere) => Some(0),
        (RegionKind::Outer, Carrier::ProjectivePlane) => Some(1),
        _ => None,
    }
}

/// The projective congruence for every choice of `B₊`: on each surface
/// component one of the two checkerboard colors.
fn projective(
    d: &RegionDecomposition,
    model: &SurfaceModel,
    curve: &CurveClass,
    mode: ProjectiveMode,
) -> CongruenceReport {
    let theorem = theorem_name(match mode {
        ProjectiveMode::Generalized => Filter::Projective,
        ProjectiveMode::Classical => Filter::ProjectiveClassical,
    });
    let n = d.components.len();
    if !d.is_colorable() || n > 12 {
        return inapplicable(theorem, "checkerboard colorable");
    }
    let e_rank = u32::from(d.circles.iter().any(|c| c.noncontractible));
    let model_component = |k: usize| model.components.iter().position(|c| c.tag == d.components[k]);
    let has_curve: Vec<bool> = (0..n).map(|k| d.circles.iter().any(|c| c.component == k)).collect();
    let c_count = (0..n)
        .filter(|&k| {
            !has_curve[k] && model_component(k).map(|i| model.components[i].noncontractible_in_ambient).unwrap_or(false)
        })
        .count() as u32;
    let separation_color =
        |k: usize| model_component(k).and_then(|i| model.empty_separation.as_ref().and_then(|s| s.get(i).copied()));
    let mut reports = Vec::new();
    'choice: for mask in 0u32..(1 << n) {
        let pick = |k: usize| if mask >> k & 1 == 0 { 1u8 } else { 2u8 };
        let (mut chi, mut rank) = (0i64, 0u32);
        let mut touched = Vec::new();
        for r in d.regions.iter().filter(|r| r.color == pick(r.component)) {
            let Some(add) = region_rank(r, d.carriers[r.component]) else {
                continue 'choice;
            };
            chi += r.chi;
            rank += add;
            if !touched.contains(&r.component) {
                touched.push(r.component);
            }
        }
        let colors: Vec<Option<u8>> = touched.iter().map(|&k| separation_color(k)).collect();
        let hyp = ProjectiveHypotheses {
            d_rank: rank,
            e_rank,
            c_count,
            in_one_component: touched.len() <= 1,
            in_one_separation_surface: colors.iter().all(|c| c.is_some() && *c == colors[0]),
        };
        let mut r = projective_check(model, &hyp, curve, chi, mode);
        let label: Vec<String> = (0..n)
            .map(|k| {
                let part = match (has_curve[k], pick(k)) {
                    (true, c) => format!("color{c}"),
                    (false, 1) => "all".into(),
                    (false, _) => "none".into(),
                };
                format!("{}:{part}", d.components[k])
            })
            .collect();
        r.assignment = Some(format!("B+ = {}", label.join(" ")));
        reports.push(r);
    }
    CongruenceReport::best(reports).unwrap_or_else(|| inapplicable(theorem, "rank of H1(B+) -> H1(RB) computable"))
}

fn hyperboloid_chi(
    s: &RealScheme,
    d: &RegionDecomposition,
    model: &SurfaceModel,
    curve: &CurveClass,
) -> CongruenceReport {
    let (ModelKind::Hyperboloid, Degrees::Bidegree(dd, rr)) = (model.kind, &model.degrees) else {
        return inapplicable("hyperboloid-chi", "hyperboloid model");
    };
    let class = match s.components() {
        [c] => match &c.body {
            ComponentBody::Noncontractible(nc) => (nc.s, nc.t),
            ComponentBody::Ovals(_) => (0, 0),
        },
        _ => (0, 0),
    };
    if !d.is_colorable() {
        return inapplicable("hyperboloid-chi", "checkerboard colorable");
    }
    let chi = |color: u8| d.regions.iter().filter(|r| r.color == color).map(|r| r.chi).sum::<i64>();
    let reports = [1u8, 2]
        .into_iter()
        .map(|c| {
            let mut r = hyperboloid_chi_check((*dd, *rr), class, curve, chi(c));
            r.assignment = Some(format!("B+=color{c}"));
            r
        })
        .collect();
    CongruenceReport::best(reports).expect("two colors")
}
