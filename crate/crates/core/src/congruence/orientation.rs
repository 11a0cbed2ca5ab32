//! Complex-orientation congruences on the plane and on the hyperboloid,
//! phrased through `∫ ind² dχ`.

use thiserror::Error;

use super::{single_surface_points, Condition, CongruenceReport, ReportBuilder};
use crate::model::{CurveClass, SurfaceModel};
use crate::scheme::{euler_integral_sq, index_function, ComponentBody, IndexError, RealScheme, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrientationError {
    #[error("complex orientation required: the scheme is unoriented")]
    Unoriented,
    #[error("{0}")]
    Carrier(String),
    #[error(transparent)]
    Index(#[from] IndexError),
}

fn require_oriented(s: &RealScheme) -> Result<(), OrientationError> {
    if s.curve_component_count() > 0 && !s.is_oriented() {
        return Err(OrientationError::Unoriented);
    }
    Ok(())
}

/// `∫ ind_Z² dχ ≡ k² (mod 16)` for a type I curve of degree `2k` in the
/// plane, with the nonorientable region as base. The report carries the
/// exact integral and the Brown invariant `4χ(ind⁻¹(±3 + 8Z)) mod 8`.
pub fn plane_orientation_check(s: &RealScheme, k: u32) -> Result<CongruenceReport, OrientationError> {
    require_oriented(s)?;
    if k == 0 {
        return Err(OrientationError::Carrier("k must be positive".into()));
    }
    let model = SurfaceModel::plane(2 * k).map_err(|e| OrientationError::Carrier(e.to_string()))?;
    let (f, d) = index_function(s, &model, Ring::Z, Some(0))?;
    let integral = euler_integral_sq(&f, &d).value;
    let chi_3 = f
        .values
        .iter()
        .zip(&d.regions)
        .filter(|(v, _)| matches!(v.rem_euclid(8), 3 | 5))
        .map(|(_, r)| r.chi)
        .sum::<i64>();
    let k2 = i64::from(k) * i64::from(k);
    Ok(ReportBuilder::new("plane-orientation", 16)
        .hypothesis("oriented by a complex orientation", true)
        .condition(Condition::new("integral ind^2", integral, &[k2], 16))
        .value("integral", integral)
        .value("k_squared", k2)
        .value("beta", (4 * chi_3).rem_euclid(8))
        .finish())
}

fn torus_data(s: &RealScheme) -> Result<(usize, u32, u32), OrientationError> {
    match s.components() {
        [c] => Ok(match &c.body {
            ComponentBody::Ovals(_) => (0, 0, 0),
            ComponentBody::Noncontractible(nc) => (nc.count(), nc.s, nc.t),
        }),
        _ => Err(OrientationError::Carrier("expected a scheme on the torus".into())),
    }
}

/// Congruences for `∫ ind² dχ` of a type I curve of bidegree `(d, r)`:
/// with `l' ≡ 0 (mod 8)` and `sd + tr ≡ 0 (mod 4)` the Z8 integral is
/// `dr/2 (mod 16)`; with `l' ≡ 0 (mod 4)` and `sd + tr ≡ 0 (mod 4)` the Z4
/// integral is `dr/2 (mod 8)`; with `l' ≡ 4 (mod 8)` and `sd + tr ≡ 2
/// (mod 4)` it is `dr/2 + 4 (mod 8)`.
pub fn hyperboloid_orientation_check(
    s: &RealScheme,
    bidegree: (u32, u32),
) -> Result<CongruenceReport, OrientationError> {
    require_oriented(s)?;
    let (l, st_s, st_t) = torus_data(s)?;
    let (d, r) = bidegree;
    let even = d % 2 == 0 && r % 2 == 0 && d > 0 && r > 0;
    let mut b = ReportBuilder::new("hyperboloid-orientation", 8).hypothesis("d, r even", even);
    if !even {
        return Ok(b.finish());
    }
    let key = (i64::from(st_s) * i64::from(d) + i64::from(st_t) * i64::from(r)).rem_euclid(4);
    let half = i64::from(d) * i64::from(r) / 2;
    let branch = match (l % 8, key) {
        (0, 0) => Some((Ring::Z8, half, 16, "l' = 0 mod 8, sd+tr = 0 mod 4")),
        (4, 0) => Some((Ring::Z4, half, 8, "l' = 0 mod 4, sd+tr = 0 mod 4")),
        (4, 2) => Some((Ring::Z4, half + 4, 8, "l' = 4 mod 8, sd+tr = 2 mod 4")),
        _ => None,
    };
    b = b.value("l", l as i64).value("sd+tr mod 4", key);
    let Some((ring, rhs, modulus, label)) = branch else {
        return Ok(b.hypothesis("a branch applies", false).finish());
    };
    let model = SurfaceModel::hyperboloid(d, r).map_err(|e| OrientationError::Carrier(e.to_string()))?;
    let (f, dec) = index_function(s, &model, ring, Some(0))?;
    let integral = euler_integral_sq(&f, &dec);
    b = b.hypothesis("a branch applies", true).note(label);
    Ok(b.condition(Condition::new(&format!("integral ind_{}^2", ring.name()), integral.value, &[rhs], modulus))
        .finish())
}

/// The weaker congruences of the classical method: `∫ ind_Z4² dχ ≡ dr/2
/// (mod 4)` when `l' ≡ 0 (mod 4)`, and `∫ ind_Z8² dχ ≡ dr/2 (mod 8)` when
/// `l' ≡ 0 (mod 8)`.
pub fn hyperboloid_comparisons(
    s: &RealScheme,
    bidegree: (u32, u32),
) -> Result<Vec<CongruenceReport>, OrientationError> {
    require_oriented(s)?;
    let (l, _, _) = torus_data(s)?;
    let (d, r) = bidegree;
    let even = d % 2 == 0 && r % 2 == 0 && d > 0 && r > 0;
    let half = i64::from(d) * i64::from(r) / 2;
    let mut out = Vec::new();
    for (ring, need, modulus) in [(Ring::Z4, 4, 4), (Ring::Z8, 8, 8)] {
        let name = format!("hyperboloid-classical-{}", ring.name());
        let mut b = ReportBuilder::new(&name, modulus)
            .hypothesis("d, r even", even)
            .hypothesis(&format!("l' = 0 mod {need}"), l % need == 0);
        if even && l % need == 0 {
            let model = SurfaceModel::hyperboloid(d, r).map_err(|e| OrientationError::Carrier(e.to_string()))?;
            let (f, dec) = index_function(s, &model, ring, Some(0))?;
            let integral = euler_integral_sq(&f, &dec);
            b = b.condition(Condition::new(
                &format!("integral ind_{}^2", ring.name()),
                integral.value,
                &[half],
                modulus,
            ));
        }
        out.push(b.finish());
    }
    Ok(out)
}

/// Euler characteristic of `B₊` for curves of even bidegree `(d, r)` with
/// noncontractible components of class `(s, t)`, under
/// `(d/2)t + (r/2)s + s + t ≡ 1 (mod 2)`.
pub fn hyperboloid_chi_check(
    bidegree: (u32, u32),
    class: (u32, u32),
    curve: &CurveClass,
    chi_bplus: i64,
) -> CongruenceReport {
    let (d, r) = bidegree;
    let (s, t) = (i64::from(class.0), i64::from(class.1));
    let even = d % 2 == 0 && r % 2 == 0;
    let parity = even && (i64::from(d / 2) * t + i64::from(r / 2) * s + s + t) % 2 == 1;
    let mut b = ReportBuilder::new("hyperboloid-chi", 8)
        .hypothesis("d, r even", even)
        .hypothesis("(d/2)t + (r/2)s + s + t odd", parity)
        .hypothesis("deficiency known", curve.deficiency.is_some());
    let (Some(j), true) = (curve.deficiency, parity) else {
        return b.finish();
    };
    let half = i64::from(d) * i64::from(r) / 2;
    match single_surface_points("chi(B+)", chi_bplus, half, Some(0), j, curve.type_flag, true) {
        Some(o) => {
            b = b.conditions(o.conditions).forces_type_i(o.forces_type_i).contradiction(o.contradiction);
        }
        None => b = b.hypothesis("a point of the theorem applies", false),
    }
    b.value("constant", half).finish()
}
