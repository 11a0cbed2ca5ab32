use std::fs;

use serde::Serialize;
use serde_json::Value;

use real_schemes::classify::{
    classify_connected, classify_cubic_degree2, classify_ellipsoid, classify_m55, classify_oval_count, default_filters,
    enumerate_forests, run_filters, ClassificationResult, Filter, M55Options,
};
use real_schemes::congruence::{plane_orientation_check, CongruenceReport, OrientationError, Verdict};
use real_schemes::model::{Carrier, ClassSelector, CurveClass, ModelKind, SurfaceModel};
use real_schemes::parallel::Execution;
use real_schemes::scheme::{euler_integral_sq, index_function, parse_scheme, regions as decompose, two_coloring};
use real_schemes::scheme::{IntegralValue, RegionDecomposition, Ring, TwoColoring};
use real_schemes::zform::{BrownValue, Z4Form};

use crate::error::{CliError, Exit};
use crate::model_args::ModelName;
use crate::output::{render, Format};
use crate::{BrownArgs, CheckArgs, ClassifyArgs, EnumerateArgs, IntegralArgs, RegionsArgs};

type Outcome = Result<(String, Exit), CliError>;

fn filters_of(text: Option<&str>, model: &SurfaceModel) -> Result<Vec<Filter>, CliError> {
    match text {
        Some(t) => {
            let list = Filter::parse_list(t)?;
            if list.is_empty() {
                return Err(CliError::input("filter", "the filter list is empty"));
            }
            Ok(list)
        }
        None => Ok(default_filters(model)),
    }
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    scheme: String,
    model: &'a str,
    class: &'a CurveClass,
    verdict: Verdict,
    admissible: bool,
    reports: Vec<Value>,
}

pub fn check(a: &CheckArgs, format: Format) -> Outcome {
    let model = a.model.build()?;
    let scheme = parse_scheme(&a.scheme)?;
    decompose(&scheme, &model)?;
    let selector: ClassSelector = a.class.parse().map_err(|m: String| CliError::input("curve-class", m))?;
    let curve = CurveClass::for_scheme(&scheme, &model, selector)?;
    let filters = filters_of(a.filters.as_deref(), &model)?;
    let bundle = run_filters(&scheme, &model, &curve, &filters);
    let reports = bundle
        .reports
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(&r.report).expect("reports serialize");
            if let Value::Object(map) = &mut v {
                map.insert("filter".into(), Value::String(r.filter.name().into()));
            }
            v
        })
        .collect();
    let out = CheckOutput {
        scheme: bundle.scheme.clone(),
        model: model.name(),
        class: &curve,
        verdict: bundle.verdict,
        admissible: bundle.admissible(),
        reports,
    };
    let exit = if bundle.verdict.is_ok() { Exit::Ok } else { Exit::Fail };
    Ok((render(&out, format), exit))
}

pub fn enumerate(a: &EnumerateArgs, format: Format) -> Outcome {
    let schemes = enumerate_forests(a.ovals, Carrier::Sphere)?;
    let texts: Vec<String> = schemes.iter().map(ToString::to_string).collect();
    Ok((render(&texts, format), Exit::Ok))
}

#[derive(Serialize)]
struct Summary<'a> {
    model: &'a str,
    filters: &'a [Filter],
    counts: &'a real_schemes::classify::Counts,
    #[serde(skip_serializing_if = "Option::is_none")]
    reference: Option<&'a real_schemes::classify::ReferenceComparison>,
}

pub fn classify(a: &ClassifyArgs, format: Format) -> Outcome {
    let model = a.model.build()?;
    let exec = if a.sequential { Execution::Sequential } else { Execution::default() };
    let jmax = match a.class.as_str() {
        "M" => Some(0),
        "auto" => a.jmax,
        other => {
            return Err(CliError::input("curve-class", format!("classify takes --class M or auto, not '{other}'")));
        }
    };
    let filters = a.filters.as_deref().map(|t| filters_of(Some(t), &model)).transpose()?;
    let filters = filters.as_deref();
    let name = a.model.model.expect("model was built");
    let m55 = name == ModelName::Ellipsoid
        && matches!(model.degrees, real_schemes::model::Degrees::Bidegree(5, 5))
        && jmax == Some(0)
        && a.ovals.is_none()
        && filters.is_none();
    let text = if m55 {
        let mut r = classify_m55(M55Options { budget: a.budget, exec, ..Default::default() })?;
        if a.summary {
            r.survivors.clear();
        }
        render(&r, format)
    } else {
        if a.budget.is_some() {
            return Err(CliError::input("usage", "--budget applies to the (5, 5) M-curve run only"));
        }
        let result: ClassificationResult = match (name, a.ovals) {
            (ModelName::CubicDisjoint, None) => classify_cubic_degree2(filters, exec)?,
            (ModelName::CubicDisjoint, Some(_)) => {
                return Err(CliError::input("usage", "--ovals needs a connected surface"));
            }
            (_, Some(n)) => classify_oval_count(&model, n, filters, exec)?,
            (ModelName::Ellipsoid, None) => match model.degrees {
                real_schemes::model::Degrees::Bidegree(d, _) => classify_ellipsoid(d, jmax, filters, exec)?,
                _ => unreachable!("ellipsoid models carry a bidegree"),
            },
            (_, None) => classify_connected(&model, jmax, filters, exec)?,
        };
        if a.summary {
            let s = Summary {
                model: &result.model,
                filters: &result.filters,
                counts: &result.counts,
                reference: result.reference.as_ref(),
            };
            render(&s, format)
        } else {
            render(&result.rows, format)
        }
    };
    match &a.golden {
        None => Ok((text, Exit::Ok)),
        Some(path) => {
            let stored = fs::read_to_string(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
            if stored == text {
                Ok((text, Exit::Ok))
            } else {
                let line = stored.lines().zip(text.lines()).position(|(x, y)| x != y).map(|i| i + 1);
                let at = line.unwrap_or_else(|| stored.lines().count().min(text.lines().count()) + 1);
                eprintln!("output differs from {} at line {at}", path.display());
                Ok((text, Exit::Fail))
            }
        }
    }
}

#[derive(Serialize)]
struct GaussOut {
    re: i64,
    im: i64,
}

#[derive(Serialize)]
struct BrownOutput {
    dim: usize,
    value: BrownValue,
    gauss_sum: GaussOut,
    even: bool,
    nondegenerate: bool,
}

pub fn brown(a: &BrownArgs, format: Format) -> Outcome {
    let text = match (&a.form, &a.file) {
        (Some(t), _) => t.clone(),
        (None, Some(p)) => fs::read_to_string(p).map_err(|e| CliError::io(format!("{}: {e}", p.display())))?,
        (None, None) => return Err(CliError::input("usage", "give --form or --file")),
    };
    let form: Z4Form = serde_json::from_str(&text).map_err(|e| {
        let mut err = CliError::input("form", e.to_string());
        if e.line() == 1 && e.column() > 0 {
            err.position = Some(e.column() - 1);
        }
        err
    })?;
    let g = form.gauss_sum();
    let out = BrownOutput {
        dim: form.dim(),
        value: form.brown_invariant(),
        gauss_sum: GaussOut { re: g.re, im: g.im },
        even: form.is_even(),
        nondegenerate: form.is_nondegenerate(),
    };
    Ok((render(&out, format), Exit::Ok))
}

#[derive(Serialize)]
struct IntegralOutput {
    scheme: String,
    ring: &'static str,
    base: usize,
    index: Vec<i64>,
    integral: IntegralValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<CongruenceReport>,
}

pub fn integral(a: &IntegralArgs, format: Format) -> Outcome {
    let model = a.model.build()?;
    let scheme = parse_scheme(&a.scheme)?;
    let ring: Ring = a.ring.parse().map_err(|m: String| CliError::input("usage", m))?;
    let (f, d) = index_function(&scheme, &model, ring, a.base)?;
    let value = euler_integral_sq(&f, &d);
    let check = match (model.kind, &model.degrees) {
        (ModelKind::Plane, real_schemes::model::Degrees::Plane(m)) if m % 2 == 0 && a.base.is_none() => {
            match plane_orientation_check(&scheme, m / 2) {
                Ok(r) => Some(r),
                Err(OrientationError::Index(e)) => return Err(e.into()),
                Err(e) => return Err(CliError::input("orientation", e.to_string())),
            }
        }
        _ => None,
    };
    let exit = match &check {
        Some(r) if r.verdict == Verdict::Fail => Exit::Fail,
        _ => Exit::Ok,
    };
    let out = IntegralOutput {
        scheme: scheme.to_string(),
        ring: ring.name(),
        base: f.base,
        index: f.values,
        integral: value,
        check,
    };
    Ok((render(&out, format), exit))
}

#[derive(Serialize)]
struct RegionsOutput {
    scheme: String,
    #[serde(flatten)]
    decomposition: RegionDecomposition,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<TwoColoring>,
}

pub fn regions(a: &RegionsArgs, format: Format) -> Outcome {
    let model = a.model.build()?;
    let scheme = parse_scheme(&a.scheme)?;
    let decomposition = decompose(&scheme, &model)?;
    let coloring = if decomposition.is_colorable() { Some(two_coloring(&scheme, &model)?) } else { None };
    let out = RegionsOutput { scheme: scheme.to_string(), decomposition, coloring };
    Ok((render(&out, format), Exit::Ok))
}
