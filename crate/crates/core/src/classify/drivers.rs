//! Classification drivers: generate every candidate scheme, filter, and
//! compare the survivors with the published lists.

use std::collections::BTreeSet;

use serde::Serialize;

use super::forest::{forest_from_levels, forest_levels, levels_text, sphere_class, sphere_coloring, MAX_OVALS};
use super::pipeline::{default_filters, run_filters, FilterBundle, FilterVerdict};
use super::{reference, ClassifyError, Filter};
use crate::congruence::{ellipsoid_residues, Verdict};
use crate::model::{ClassSelector, CurveClass, SurfaceModel, TypeFlag};
use crate::parallel::{map_ordered, Execution};
use crate::scheme::{ComponentBody, ComponentScheme, Forest, RealScheme};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub scheme: String,
    pub verdicts: Vec<FilterVerdict>,
    pub admissible: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub generated: usize,
    pub admissible: usize,
    pub rejected: usize,
    pub forces_type_i: usize,
}

/// Two-sided comparison with a published list.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReferenceComparison {
    pub listed: Vec<String>,
    /// Listed schemes the filters reject.
    pub listed_rejected: Vec<String>,
    /// Admissible schemes missing from the list.
    pub unlisted_admissible: Vec<String>,
    /// Schemes named as restricted.
    pub restricted: Vec<String>,
    /// Named-restricted schemes the filters fail to reject.
    pub restricted_admitted: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub model: String,
    pub filters: Vec<Filter>,
    pub rows: Vec<ClassificationRow>,
    pub counts: Counts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<ReferenceComparison>,
}

impl ClassificationResult {
    pub fn row(&self, scheme: &str) -> Option<&ClassificationRow> {
        self.rows.iter().find(|r| r.scheme == scheme)
    }

    pub fn admissible(&self) -> impl Iterator<Item = &ClassificationRow> {
        self.rows.iter().filter(|r| r.admissible)
    }

    fn compare(&mut self, listed: Vec<String>, restricted: Vec<String>) {
        let listed_set: BTreeSet<String> = listed.iter().cloned().collect();
        let admitted = |s: &String| self.row(s).map(|r| r.admissible);
        let cmp = ReferenceComparison {
            listed_rejected: listed.iter().filter(|s| admitted(s) != Some(true)).cloned().collect(),
            unlisted_admissible: self
                .admissible()
                .filter(|r| !listed_set.contains(&r.scheme))
                .map(|r| r.scheme.clone())
                .collect(),
            restricted_admitted: restricted.iter().filter(|s| admitted(s) != Some(false)).cloned().collect(),
            listed,
            restricted,
        };
        for row in &mut self.rows {
            let note = if listed_set.contains(&row.scheme) { "in reference list" } else { "not in reference list" };
            row.notes.push(note.to_string());
        }
        self.reference = Some(cmp);
    }
}

fn row_of(bundle: FilterBundle) -> ClassificationRow {
    let admissible = bundle.admissible();
    let mut notes = Vec::new();
    if admissible {
        notes.push("admissible: passes all implemented filters".to_string());
    } else {
        notes.push(format!("rejected by {}", bundle.rejected_by().join(", ")));
    }
    if bundle.verdict == Verdict::ForcesTypeI {
        notes.push("forces type I".to_string());
    }
    ClassificationRow { scheme: bundle.scheme.clone(), verdicts: bundle.verdicts(), admissible, notes }
}

fn finish(model: &SurfaceModel, filters: Vec<Filter>, rows: Vec<ClassificationRow>) -> ClassificationResult {
    let counts = Counts {
        generated: rows.len(),
        admissible: rows.iter().filter(|r| r.admissible).count(),
        rejected: rows.iter().filter(|r| !r.admissible).count(),
        forces_type_i: rows.iter().filter(|r| r.notes.iter().any(|n| n == "forces type I")).count(),
    };
    ClassificationResult { model: model.name().to_string(), filters, rows, counts, reference: None }
}

fn classify_schemes(
    schemes: Vec<RealScheme>,
    model: &SurfaceModel,
    filters: &[Filter],
    exec: Execution,
) -> Result<Vec<ClassificationRow>, ClassifyError> {
    let curves =
        schemes.iter().map(|s| CurveClass::for_scheme(s, model, ClassSelector::Auto)).collect::<Result<Vec<_>, _>>()?;
    let pairs: Vec<(&RealScheme, &CurveClass)> = schemes.iter().zip(&curves).collect();
    Ok(map_ordered(&pairs, exec, |(s, c)| row_of(run_filters(s, model, c, filters))))
}

/// Every scheme of `M − j` ovals, `j ≤ jmax`, on a connected surface whose
/// curve components are all ovals, ordered by oval count and text.
pub fn classify_connected(
    model: &SurfaceModel,
    jmax: Option<u32>,
    filters: Option<&[Filter]>,
    exec: Execution,
) -> Result<ClassificationResult, ClassifyError> {
    if !model.is_connected() {
        return Err(ClassifyError::Unsupported("the surface must be connected".into()));
    }
    let m = model.m_count.ok_or_else(|| ClassifyError::Unsupported("the Harnack bound is unknown".into()))? as usize;
    if m > MAX_OVALS {
        return Err(ClassifyError::Guard { n: m, max: MAX_OVALS });
    }
    let lo = m.saturating_sub(jmax.map(|j| j as usize).unwrap_or(m));
    classify_range(model, lo..=m, filters, exec)
}

/// Every scheme of exactly `n` ovals on a connected surface.
pub fn classify_oval_count(
    model: &SurfaceModel,
    n: usize,
    filters: Option<&[Filter]>,
    exec: Execution,
) -> Result<ClassificationResult, ClassifyError> {
    if !model.is_connected() {
        return Err(ClassifyError::Unsupported("the surface must be connected".into()));
    }
    if let Some(m) = model.m_count.filter(|&m| n > m as usize) {
        return Err(ClassifyError::Unsupported(format!("{n} ovals exceed the Harnack bound {m}")));
    }
    classify_range(model, n..=n, filters, exec)
}

fn classify_range(
    model: &SurfaceModel,
    counts: std::ops::RangeInclusive<usize>,
    filters: Option<&[Filter]>,
    exec: Execution,
) -> Result<ClassificationResult, ClassifyError> {
    let filters = filters.map(<[Filter]>::to_vec).unwrap_or_else(|| default_filters(model));
    let mut schemes = Vec::new();
    for n in counts {
        let mut level: Vec<RealScheme> = forest_levels(n)?
            .map(|l| RealScheme::from_forest(forest_from_levels(&l)).expect("unsigned forests are valid"))
            .collect();
        level.sort_by_cached_key(|s| s.to_string());
        schemes.extend(level);
    }
    let rows = classify_schemes(schemes, model, &filters, exec)?;
    Ok(finish(model, filters, rows))
}

/// Curves of bidegree `(d, d)` on the ellipsoid; for `d = 3` the result is
/// compared with the published classification.
pub fn classify_ellipsoid(
    d: u32,
    jmax: Option<u32>,
    filters: Option<&[Filter]>,
    exec: Execution,
) -> Result<ClassificationResult, ClassifyError> {
    let model = SurfaceModel::ellipsoid(d)?;
    let mut result = classify_connected(&model, jmax, filters, exec)?;
    if d == 3 {
        result.compare(reference::ellipsoid33_listed(), reference::ellipsoid33_restricted());
    }
    Ok(result)
}

/// M-curves of degree 2 on the cubic `RP² ⊔ S²`: every distribution of the
/// five ovals over the two components.
pub fn classify_cubic_degree2(
    filters: Option<&[Filter]>,
    exec: Execution,
) -> Result<ClassificationResult, ClassifyError> {
    let model = SurfaceModel::cubic_disjoint();
    let m = model.m_count.unwrap_or(5) as usize;
    let filters = filters.map(<[Filter]>::to_vec).unwrap_or_else(|| default_filters(&model));
    let forests = |n: usize| -> Result<Vec<Forest>, ClassifyError> {
        let mut out: Vec<Forest> = forest_levels(n)?.map(|l| forest_from_levels(&l)).collect();
        out.sort_by_cached_key(|f| f.clone().canonicalize());
        Ok(out)
    };
    let mut schemes = Vec::new();
    for alpha in 0..=m {
        for on_rp2 in forests(alpha)? {
            for on_s2 in forests(m - alpha)? {
                schemes.push(RealScheme::new(vec![
                    ComponentScheme { tag: Some("rp2".into()), body: ComponentBody::Ovals(on_rp2.clone()) },
                    ComponentScheme { tag: Some("s2".into()), body: ComponentBody::Ovals(on_s2) },
                ])?);
            }
        }
    }
    let rows = classify_schemes(schemes, &model, &filters, exec)?;
    let mut result = finish(&model, filters, rows);
    result.compare(reference::cubic_listed(), Vec::new());
    Ok(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct M55Options {
    /// Maximal number of forests to generate; `None` for all of them.
    pub budget: Option<usize>,
    pub exec: Execution,
    pub chunk: usize,
}

impl Default for M55Options {
    fn default() -> Self {
        M55Options { budget: None, exec: Execution::default(), chunk: 1 << 14 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedScheme {
    pub scheme: String,
    pub survives: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct M55Result {
    pub ovals: usize,
    pub constant: i64,
    pub enumerated: usize,
    pub survivor_count: usize,
    pub rejected: usize,
    /// Survivors up to homeomorphism of the sphere.
    pub sphere_classes: usize,
    pub truncated: bool,
    pub named: Vec<NamedScheme>,
    pub reference_count: usize,
    pub survivors: Vec<String>,
}

/// M-curves of bidegree (5, 5): all 17-oval forests through the ellipsoid
/// congruence, streamed in chunks. Only survivors are kept.
pub fn classify_m55(options: M55Options) -> Result<M55Result, ClassifyError> {
    let d = 5u32;
    let model = SurfaceModel::ellipsoid(d)?;
    let n = model.m_count.unwrap_or(17) as usize;
    let curve = CurveClass::new(Some(0), TypeFlag::I, n as u32);
    let mut levels = forest_levels(n)?;
    let budget = options.budget.unwrap_or(usize::MAX);
    let chunk_size = options.chunk.max(1);
    let (mut enumerated, mut truncated) = (0usize, false);
    let mut survivors: Vec<(String, String)> = Vec::new();
    loop {
        let room = budget - enumerated;
        let chunk: Vec<Vec<u8>> = levels.by_ref().take(chunk_size.min(room)).collect();
        enumerated += chunk.len();
        let kept = map_ordered(&chunk, options.exec, |l| {
            let (c1, c2) = sphere_coloring(l);
            (ellipsoid_residues(d, c1, c2, &curve).verdict != Verdict::Fail).then(|| (levels_text(l), sphere_class(l)))
        });
        survivors.extend(kept.into_iter().flatten());
        if enumerated == budget {
            truncated = levels.next().is_some();
            break;
        }
        if chunk.len() < chunk_size.min(room) || chunk.is_empty() {
            break;
        }
    }
    survivors.sort_unstable();
    let classes: BTreeSet<&str> = survivors.iter().map(|(_, c)| c.as_str()).collect();
    let texts: Vec<String> = survivors.iter().map(|(t, _)| t.clone()).collect();
    let named = reference::m55_named()
        .into_iter()
        .map(|scheme| NamedScheme { survives: texts.binary_search(&scheme).is_ok(), scheme })
        .collect();
    Ok(M55Result {
        ovals: n,
        constant: i64::from(d * d + 1) / 2,
        enumerated,
        survivor_count: texts.len(),
        rejected: enumerated - texts.len(),
        sphere_classes: classes.len(),
        truncated,
        named,
        reference_count: reference::M55_REFERENCE_COUNT,
        survivors: texts,
    })
}
